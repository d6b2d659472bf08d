#ifndef CREOGEN_HARMONY_HPP
#define CREOGEN_HARMONY_HPP

#include <string>
#include <vector>

#include "creogen/errors.hpp"

namespace creogen::grammar {

// Orthographic segmentation units for the harmony rule. The vowel graphemes
// are a, é, è, i, o, ò, ou, u; an/en/on are nasal vowels when not followed
// by a vowel letter or a second n; y and w pattern with the consonants.
struct Seg {
  enum class Type { vowel, nasal_vowel, consonant, semivowel };
  Type type;
  std::string text;
};

std::vector<Seg> segment_word(const std::string& word);

// Postposed determiner class selected by the word ending:
//   oral vowel -> "a", nasal vowel -> "an",
//   consonant after oral vowel -> "la", after nasal vowel -> "lan".
Result<std::string> harmony_class(const std::string& lemma);

// True when the word ends in a vowel segment (used for the ou -> 'w glide).
bool ends_in_vowel(const std::string& word);

}  // namespace creogen::grammar

#endif
