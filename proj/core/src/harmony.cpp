#include "creogen/harmony.hpp"

namespace creogen::grammar {

namespace {

// Splits UTF-8 into codepoint strings, lowercasing ASCII on the way.
std::vector<std::string> codepoints(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : 4;
    if (i + len > s.size()) len = 1;
    std::string cp = s.substr(i, len);
    if (cp.size() == 1 && cp[0] >= 'A' && cp[0] <= 'Z') cp[0] += 'a' - 'A';
    out.push_back(std::move(cp));
    i += len;
  }
  return out;
}

bool is_plain_vowel(const std::string& cp) {
  return cp == "a" || cp == "é" || cp == "è" || cp == "i" || cp == "o" ||
         cp == "ò" || cp == "u";
}

// Letters that block nasalisation of a preceding a/e/o + n.
bool is_vowel_letter(const std::string& cp) {
  return is_plain_vowel(cp) || cp == "e";
}

bool is_semivowel(const std::string& cp) { return cp == "y" || cp == "w"; }

}  // namespace

std::vector<Seg> segment_word(const std::string& word) {
  std::vector<std::string> cps = codepoints(word);
  std::vector<Seg> out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const std::string& cp = cps[i];
    // ou digraph
    if (cp == "o" && i + 1 < cps.size() && cps[i + 1] == "u") {
      out.push_back({Seg::Type::vowel, "ou"});
      ++i;
      continue;
    }
    // nasal digraphs an / en / on
    if ((cp == "a" || cp == "e" || cp == "o") && i + 1 < cps.size() &&
        cps[i + 1] == "n") {
      bool blocked = i + 2 < cps.size() &&
                     (is_vowel_letter(cps[i + 2]) || cps[i + 2] == "n");
      if (!blocked) {
        out.push_back({Seg::Type::nasal_vowel, cp + "n"});
        ++i;
        continue;
      }
    }
    if (is_plain_vowel(cp)) {
      out.push_back({Seg::Type::vowel, cp});
    } else if (is_semivowel(cp)) {
      out.push_back({Seg::Type::semivowel, cp});
    } else {
      out.push_back({Seg::Type::consonant, cp});
    }
  }
  return out;
}

Result<std::string> harmony_class(const std::string& lemma) {
  std::vector<Seg> segs = segment_word(lemma);
  if (segs.empty())
    return Error{Errc::unparsable_ending, "empty lemma", {}, lemma};
  const Seg& last = segs.back();
  if (last.type == Seg::Type::vowel) return std::string("a");
  if (last.type == Seg::Type::nasal_vowel) return std::string("an");
  // Consonant or semivowel coda: nasality follows the nearest vowel.
  for (std::size_t i = segs.size(); i-- > 0;) {
    if (segs[i].type == Seg::Type::vowel) return std::string("la");
    if (segs[i].type == Seg::Type::nasal_vowel) return std::string("lan");
  }
  return Error{Errc::unparsable_ending, "no vowel in lemma", {}, lemma};
}

bool ends_in_vowel(const std::string& word) {
  std::vector<Seg> segs = segment_word(word);
  if (segs.empty()) return false;
  Seg::Type t = segs.back().type;
  return t == Seg::Type::vowel || t == Seg::Type::nasal_vowel;
}

}  // namespace creogen::grammar
