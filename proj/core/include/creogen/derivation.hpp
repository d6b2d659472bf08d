#ifndef CREOGEN_DERIVATION_HPP
#define CREOGEN_DERIVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "creogen/errors.hpp"
#include "creogen/grammar.hpp"
#include "creogen/tag_ops.hpp"

namespace creogen::deriv {

enum class StepOp { substitute, adjoin, graft, overwrite };

const char* to_string(StepOp op);
std::optional<StepOp> step_op_from_string(const std::string& s);

// One recorded operation. References name either an earlier step's result
// ("d3"), a fresh instance of a grammar tree ("tree:gn_defini") or a
// lexicon entry ("entry:kay@12"). Each occurrence of a tree reference is a
// new instance, so variable renaming replays in the same order. overwrite
// carries "feature=value" in argument; graft carries the concept id that
// asked for the lexeme in origin.
struct DerivationStep {
  StepOp op = StepOp::substitute;
  std::string target;
  tag::GornAddress address;
  std::string argument;
  std::string origin;
};

struct Derivation {
  std::vector<DerivationStep> steps;  // step i produced reference "d<i>"
  std::string result;                 // reference of the finished tree
};

// Records operations while performing them. Failed operations leave the
// builder untouched (bindings, variable serials and the step list), so a
// recorded derivation always replays cleanly.
class DerivationBuilder {
 public:
  using Ref = std::string;

  explicit DerivationBuilder(const grammar::Grammar& g) : grammar_(g) {}

  static Ref tree_ref(const std::string& name) { return "tree:" + name; }
  Ref entry_ref(const grammar::LexicalEntry& e) const;

  Result<Ref> substitute(const Ref& target, const tag::GornAddress& addr,
                         const Ref& argument);
  Result<Ref> adjoin(const Ref& target, const tag::GornAddress& addr,
                     const Ref& auxiliary);
  Result<Ref> graft(const Ref& target, const tag::GornAddress& addr,
                    const grammar::LexicalEntry& entry,
                    const std::string& concept_id);
  // Grafts a derived tree (or a fresh instance) onto an anchor.
  Result<Ref> graft_tree(const Ref& target, const tag::GornAddress& addr,
                         const Ref& subtree);
  // Forces a feature to an atom on both faces of the addressed node.
  // Deliberately non-monotonic; used for rightmost-word agreement.
  Result<Ref> overwrite(const Ref& target, const tag::GornAddress& addr,
                        const std::string& feature, const std::string& value);

  // The tree a reference denotes, if it names a recorded result.
  const tag::TreeNode* peek(const Ref& ref) const;

  Result<tag::TreeNode> finalize(const Ref& ref) const;

  Derivation derivation(const Ref& result) const;
  const fs::Bindings& bindings() const { return env_; }
  const grammar::Grammar& grammar() const { return grammar_; }

 private:
  Result<tag::TreeNode> materialize(const Ref& ref, int& serial) const;
  Ref commit(DerivationStep step, tag::OpOut out, int serial);

  const grammar::Grammar& grammar_;
  fs::Bindings env_;
  int var_serial_ = 0;
  std::vector<DerivationStep> steps_;
  std::map<Ref, tag::TreeNode> results_;
};

// Runs a recorded derivation against a grammar from scratch and finalizes
// the resulting tree. A derivation recorded by DerivationBuilder replays
// to a bit-identical tree.
Result<tag::TreeNode> replay(const Derivation& d, const grammar::Grammar& g);

}  // namespace creogen::deriv

#endif
