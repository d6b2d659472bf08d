#ifndef CREOGEN_SURFACE_HPP
#define CREOGEN_SURFACE_HPP

#include <string>
#include <vector>

#include "creogen/errors.hpp"
#include "creogen/tag_ops.hpp"

namespace creogen::surface {

// Joins linearized tokens into a sentence: free tokens are separated by
// spaces, hyphen tokens glue to their host word, and a clitic "ou" after a
// vowel-final word contracts to 'w. A hyphen token with no word to glue to
// is a dangling attachment error.
Result<std::string> render(const std::vector<tag::SurfaceToken>& tokens);

// Sentences are juxtaposed with ". "; no capitalization is invented.
std::string join_sentences(const std::vector<std::string>& sentences);

}  // namespace creogen::surface

#endif
