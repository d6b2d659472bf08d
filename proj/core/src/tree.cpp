#include "creogen/tree.hpp"

namespace creogen::tag {

const char* to_string(Attach a) {
  switch (a) {
    case Attach::free: return "free";
    case Attach::hyphen_left: return "hyphen_left";
    case Attach::hyphen_right: return "hyphen_right";
    case Attach::clitic_left: return "clitic_left";
  }
  return "free";
}

std::string to_string(const GornAddress& a) {
  if (a.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(a[i]);
  }
  return out;
}

const TreeNode* node_at(const TreeNode& root, const GornAddress& a) {
  const TreeNode* cur = &root;
  for (int idx : a) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= cur->children.size())
      return nullptr;
    cur = &cur->children[idx];
  }
  return cur;
}

TreeNode* node_at(TreeNode& root, const GornAddress& a) {
  return const_cast<TreeNode*>(
      node_at(static_cast<const TreeNode&>(root), a));
}

namespace {

bool find_kind_rec(const TreeNode& n, NodeKind k, GornAddress& path) {
  if (n.kind == k) return true;
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (find_kind_rec(n.children[i], k, path)) return true;
    path.pop_back();
  }
  return false;
}

void collect_kind_rec(const TreeNode& n, NodeKind k, GornAddress& path,
                      std::vector<GornAddress>& out) {
  if (n.kind == k) out.push_back(path);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_kind_rec(n.children[i], k, path, out);
    path.pop_back();
  }
}

bool find_slot_rec(const TreeNode& n, const std::string& slot,
                   GornAddress& path) {
  if (n.kind == NodeKind::substitution && n.slot == slot) return true;
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (find_slot_rec(n.children[i], slot, path)) return true;
    path.pop_back();
  }
  return false;
}

void yield_rec(const TreeNode& n, std::vector<std::string>& out) {
  if (n.kind == NodeKind::lex) {
    if (!n.token_var.empty())
      out.push_back("$" + n.token_var);
    else if (!n.token.empty())
      out.push_back(n.token);
    return;
  }
  for (const TreeNode& c : n.children) yield_rec(c, out);
}

}  // namespace

std::optional<GornAddress> find_kind(const TreeNode& root, NodeKind k) {
  GornAddress path;
  if (find_kind_rec(root, k, path)) return path;
  return std::nullopt;
}

std::vector<GornAddress> collect_kind(const TreeNode& root, NodeKind k) {
  std::vector<GornAddress> out;
  GornAddress path;
  collect_kind_rec(root, k, path, out);
  return out;
}

std::optional<GornAddress> find_slot(const TreeNode& root,
                                     const std::string& slot) {
  GornAddress path;
  if (find_slot_rec(root, slot, path)) return path;
  return std::nullopt;
}

std::optional<int> child_with_category(const TreeNode& root,
                                       const std::string& category) {
  for (std::size_t i = 0; i < root.children.size(); ++i)
    if (root.children[i].category == category) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::string> yield_of(const TreeNode& root) {
  std::vector<std::string> out;
  yield_rec(root, out);
  return out;
}

}  // namespace creogen::tag
