#ifndef CREOGEN_DOT_HPP
#define CREOGEN_DOT_HPP

#include <string>

#include "creogen/derivation.hpp"
#include "creogen/tree.hpp"

namespace creogen::viz {

// Graphviz rendering of a derived tree: category and features per node,
// tokens as boxed leaves.
std::string tree_dot(const tag::TreeNode& root, const std::string& title);

// Graphviz rendering of a derivation: one node per step, edges from the
// consumed references to the step that used them.
std::string derivation_dot(const deriv::Derivation& d,
                           const std::string& title);

}  // namespace creogen::viz

#endif
