#ifndef CREOGEN_GRAMMAR_IO_HPP
#define CREOGEN_GRAMMAR_IO_HPP

#include <string>
#include <vector>

#include "creogen/grammar.hpp"

namespace creogen::gio {

// Parses the sectioned grammar format (FEATURES / LEXICON / TREES /
// FRAMES; see docs/grammar-format.md) and runs the validation pass.
// Throws ParseError on malformed syntax, ValidationError when the parsed
// grammar is inconsistent.
grammar::Grammar load_grammar(const std::string& text,
                              const std::string& source_label = "<inline>");

// Same, reading from a file; throws std::runtime_error when unreadable.
grammar::Grammar load_grammar_file(const std::string& path);

// The consistency checks behind ValidationError, exposed for reporting:
// returns every issue found instead of stopping at the first.
std::vector<std::string> validate(const grammar::Grammar& g);

}  // namespace creogen::gio

#endif
