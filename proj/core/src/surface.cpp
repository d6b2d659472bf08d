#include "creogen/surface.hpp"

#include "creogen/harmony.hpp"

namespace creogen::surface {

Result<std::string> render(const std::vector<tag::SurfaceToken>& tokens) {
  std::vector<std::string> words;
  std::string prefix;  // accumulated "xx-" from hyphen_right tokens

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const tag::SurfaceToken& t = tokens[i];
    switch (t.attach) {
      case tag::Attach::free:
        words.push_back(prefix + t.text);
        prefix.clear();
        break;
      case tag::Attach::hyphen_right:
        if (i + 1 >= tokens.size())
          return Error{Errc::dangling_attachment,
                       "'" + t.text + "' has no word to its right",
                       t.address,
                       t.text};
        prefix += t.text + "-";
        break;
      case tag::Attach::hyphen_left:
        if (words.empty() || !prefix.empty())
          return Error{Errc::dangling_attachment,
                       "'" + t.text + "' has no word to its left",
                       t.address,
                       t.text};
        words.back() += "-" + t.text;
        break;
      case tag::Attach::clitic_left:
        if (!words.empty() && prefix.empty() && t.text == "ou" &&
            grammar::ends_in_vowel(words.back())) {
          words.back() += "'w";
        } else {
          words.push_back(prefix + t.text);
          prefix.clear();
        }
        break;
    }
  }
  if (!prefix.empty())
    return Error{Errc::dangling_attachment,
                 "hyphenated prefix '" + prefix + "' has no host",
                 {},
                 prefix};

  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
  std::string out;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (i) out += ". ";
    out += sentences[i];
  }
  return out;
}

}  // namespace creogen::surface
