#ifndef CREOGEN_GENERATOR_HPP
#define CREOGEN_GENERATOR_HPP

#include <string>
#include <vector>

#include "creogen/derivation.hpp"
#include "creogen/errors.hpp"
#include "creogen/grammar.hpp"
#include "creogen/semgraph.hpp"
#include "creogen/tag_ops.hpp"

namespace creogen::gen {

struct SentenceRecord {
  std::string root_concept;            // kernel concept of this sentence
  deriv::Derivation derivation;        // replayable build recipe
  tag::TreeNode tree;                  // finalized derived tree
  std::vector<tag::SurfaceToken> tokens;
  std::string text;
};

struct GenerationResult {
  std::string fixture;                 // graph id
  std::string text;                    // sentences joined with ". "
  std::vector<SentenceRecord> sentences;
};

// Deterministic realization of a conceptual graph. The declared root (or
// the first predicate concept) becomes the main clause; leftover
// predications are juxtaposed as further sentences with anaphoric
// arguments. Every relation is consumed exactly once.
Result<GenerationResult> generate(const sem::SemGraph& g,
                                  const grammar::Grammar& gr);

}  // namespace creogen::gen

#endif
