#ifndef CREOGEN_TAG_OPS_HPP
#define CREOGEN_TAG_OPS_HPP

#include <string>
#include <vector>

#include "creogen/errors.hpp"
#include "creogen/fstruct.hpp"
#include "creogen/tree.hpp"

namespace creogen::tag {

struct OpOut {
  TreeNode tree;
  fs::Bindings env;
};

// Fresh copy of an elementary tree: every variable gets a per-instance
// suffix so repeated uses of the same tree cannot capture each other.
TreeNode instantiate(const ElementaryTree& t, int& var_serial);

// Fills the substitution node at addr with arg_root (an initial or fully
// grafted tree). The slot's top unifies with the argument root's top.
// Features the slot lists with a still-unbound variable are presence
// requirements: they must exist in the argument's top, because flat
// unification would silently adopt a missing feature.
Result<OpOut> substitute(TreeNode target, const GornAddress& addr,
                         const TreeNode& arg_root, fs::Bindings env);

// Splices an auxiliary tree at the internal node at addr. The node's top
// unifies with the auxiliary root's top and its bottom with the foot's
// bottom; every feature the foot's bottom lists must already be present on
// the node's bottom (this is how a foot demands e.g. sature=plus rather
// than adopting it). Adjunction is rejected at foot nodes and open slots.
Result<OpOut> adjoin(TreeNode target, const GornAddress& addr,
                     const TreeNode& aux_root, fs::Bindings env);

// Replaces the anchor of a schema tree with a lexical leaf. The anchor's
// features unify with the entry's features; category must match.
Result<OpOut> graft_entry(TreeNode schema_root, const GornAddress& anchor,
                          const std::string& category,
                          const fs::FeatureStructure& features,
                          const std::string& lemma, Attach attach,
                          const std::string& origin, fs::Bindings env);

// Replaces the anchor with an already built subtree (same category).
Result<OpOut> graft_subtree(TreeNode schema_root, const GornAddress& anchor,
                            const TreeNode& sub_root, fs::Bindings env);

// Final consistency pass: every node's top and bottom must unify, every
// remaining slot/anchor/foot is an error, token variables are concretised.
// On success each node carries its merged, resolved structure in top.
Result<TreeNode> finalize(const TreeNode& root, fs::Bindings env);

struct SurfaceToken {
  std::string text;
  Attach attach = Attach::free;
  std::string origin;    // elementary tree or lexeme that produced it
  GornAddress address;   // position in the tree it was read from

  friend bool operator==(const SurfaceToken& a, const SurfaceToken& b) {
    return a.text == b.text && a.attach == b.attach;
  }
};

// Left-to-right reading of the lex leaves; empty markers vanish. Hyphen
// attachments are kept only when the token sits right next to its host
// noun: if the neighbouring leaf hangs under another phrase (GN or Ph
// material between them) or is not noun-headed, the token falls back to a
// free word. This is what separates "timanmay-la" from "kay papa mwen an".
std::vector<SurfaceToken> linearize(const TreeNode& root);

}  // namespace creogen::tag

#endif
