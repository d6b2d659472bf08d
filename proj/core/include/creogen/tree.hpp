#ifndef CREOGEN_TREE_HPP
#define CREOGEN_TREE_HPP

#include <optional>
#include <string>
#include <vector>

#include "creogen/fstruct.hpp"

namespace creogen::tag {

// How a surface token glues to its neighbours when rendered.
enum class Attach { free, hyphen_left, hyphen_right, clitic_left };
const char* to_string(Attach a);

enum class NodeKind {
  internal,      // ordinary node
  lex,           // lexical leaf; empty token = silent marker
  substitution,  // open slot, filled by an initial tree
  foot,          // auxiliary tree foot
  anchor,        // schema tree anchor, filled by grafting
};

// Gorn address: child indices from the root; empty = the root itself.
using GornAddress = std::vector<int>;
std::string to_string(const GornAddress& a);

struct TreeNode {
  std::string category;  // empty on lex leaves
  NodeKind kind = NodeKind::internal;
  fs::FeatureStructure top;
  fs::FeatureStructure bottom;

  // lex leaves only
  std::string token;      // literal text; meaningful when token_var empty
  std::string token_var;  // token is the value bound to this variable
  Attach attach = Attach::free;

  std::string slot;    // optional label on substitution nodes
  std::string origin;  // elementary tree this node came from

  std::vector<TreeNode> children;

  bool is_leaf() const { return children.empty(); }
};

enum class Family { initial, auxiliary, schema };

struct ElementaryTree {
  std::string name;
  Family family = Family::initial;
  TreeNode root;
};

const TreeNode* node_at(const TreeNode& root, const GornAddress& a);
TreeNode* node_at(TreeNode& root, const GornAddress& a);

// Leftmost node of the given kind, depth first.
std::optional<GornAddress> find_kind(const TreeNode& root, NodeKind k);
std::vector<GornAddress> collect_kind(const TreeNode& root, NodeKind k);

// Substitution node carrying the given slot label.
std::optional<GornAddress> find_slot(const TreeNode& root,
                                     const std::string& slot);

// Index of the first direct child with the given category, if any.
std::optional<int> child_with_category(const TreeNode& root,
                                       const std::string& category);

// Lexical yield: non-empty tokens of lex leaves, left to right. Unresolved
// token variables render as "$Name"; slots and feet contribute nothing.
std::vector<std::string> yield_of(const TreeNode& root);

}  // namespace creogen::tag

#endif
