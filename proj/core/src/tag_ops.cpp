#include "creogen/tag_ops.hpp"

#include <algorithm>

namespace creogen::tag {

namespace {

void rename_fs(fs::FeatureStructure& fsr, const std::string& suffix) {
  for (auto& [feat, v] : fsr)
    if (v.is_var()) v.text += suffix;
}

void rename_vars(TreeNode& n, const std::string& suffix,
                 const std::string& origin) {
  rename_fs(n.top, suffix);
  rename_fs(n.bottom, suffix);
  if (!n.token_var.empty()) n.token_var += suffix;
  if (n.origin.empty()) n.origin = origin;
  for (TreeNode& c : n.children) rename_vars(c, suffix, origin);
}

Error fail(Errc code, const GornAddress& addr, std::string detail) {
  return Error{code, std::move(detail), addr, {}};
}

}  // namespace

TreeNode instantiate(const ElementaryTree& t, int& var_serial) {
  TreeNode root = t.root;
  std::string suffix = "~" + std::to_string(var_serial++);
  rename_vars(root, suffix, t.name);
  return root;
}

Result<OpOut> substitute(TreeNode target, const GornAddress& addr,
                         const TreeNode& arg_root, fs::Bindings env) {
  TreeNode* node = node_at(target, addr);
  if (!node) return fail(Errc::address_invalid, addr, "no node at address");
  if (node->kind != NodeKind::substitution)
    return fail(Errc::kind_mismatch, addr, "not a substitution node");
  if (node->category != arg_root.category)
    return fail(Errc::category_mismatch, addr,
                node->category + " vs " + arg_root.category);
  for (const auto& [feat, v] : node->top) {
    if (env.walk(v).is_var() && !arg_root.top.count(feat))
      return fail(Errc::unification_failure, addr,
                  "required feature '" + feat + "' absent from argument");
  }
  auto u = fs::unify(node->top, arg_root.top, std::move(env));
  if (!u)
    return fail(Errc::unification_failure, addr,
                "slot top does not unify with argument top");
  TreeNode replacement = arg_root;
  replacement.top = std::move(u->fs);
  *node = std::move(replacement);
  return OpOut{std::move(target), std::move(u->env)};
}

Result<OpOut> adjoin(TreeNode target, const GornAddress& addr,
                     const TreeNode& aux_root, fs::Bindings env) {
  TreeNode* node = node_at(target, addr);
  if (!node) return fail(Errc::address_invalid, addr, "no node at address");
  if (node->kind != NodeKind::internal)
    return fail(Errc::kind_mismatch, addr,
                "adjunction requires an internal node");
  if (node->category != aux_root.category)
    return fail(Errc::category_mismatch, addr,
                node->category + " vs " + aux_root.category);
  auto foot_addr = find_kind(aux_root, NodeKind::foot);
  if (!foot_addr)
    return fail(Errc::kind_mismatch, addr, "auxiliary tree has no foot");
  const TreeNode* foot = node_at(aux_root, *foot_addr);
  if (foot->category != node->category)
    return fail(Errc::category_mismatch, addr,
                "foot category " + foot->category + " vs " + node->category);

  for (const auto& [feat, v] : foot->bottom) {
    (void)v;
    if (!node->bottom.count(feat))
      return fail(Errc::unification_failure, addr,
                  "foot requires feature '" + feat +
                      "' on the target's bottom");
  }
  auto ub = fs::unify(node->bottom, foot->bottom, std::move(env));
  if (!ub)
    return fail(Errc::unification_failure, addr,
                "target bottom does not unify with foot bottom");
  auto ut = fs::unify(node->top, aux_root.top, std::move(ub->env));
  if (!ut)
    return fail(Errc::unification_failure, addr,
                "target top does not unify with auxiliary root top");

  TreeNode spliced = aux_root;
  spliced.top = std::move(ut->fs);
  TreeNode* at_foot = node_at(spliced, *foot_addr);
  TreeNode below;
  below.category = node->category;
  below.kind = NodeKind::internal;
  below.top = at_foot->top;
  below.bottom = std::move(ub->fs);
  below.origin = node->origin;
  below.children = std::move(node->children);
  *at_foot = std::move(below);
  *node = std::move(spliced);
  return OpOut{std::move(target), std::move(ut->env)};
}

Result<OpOut> graft_entry(TreeNode schema_root, const GornAddress& anchor,
                          const std::string& category,
                          const fs::FeatureStructure& features,
                          const std::string& lemma, Attach attach,
                          const std::string& origin, fs::Bindings env) {
  TreeNode* node = node_at(schema_root, anchor);
  if (!node) return fail(Errc::address_invalid, anchor, "no node at address");
  if (node->kind != NodeKind::anchor)
    return fail(Errc::kind_mismatch, anchor, "not an anchor node");
  if (node->category != category)
    return fail(Errc::category_mismatch, anchor,
                node->category + " vs " + category);
  auto u = fs::unify(node->top, features, std::move(env));
  if (!u)
    return fail(Errc::unification_failure, anchor,
                "anchor features do not unify with entry features");
  node->kind = NodeKind::internal;
  node->top = std::move(u->fs);
  TreeNode leaf;
  leaf.kind = NodeKind::lex;
  leaf.token = lemma;
  leaf.attach = attach;
  leaf.origin = origin;
  node->children.push_back(std::move(leaf));
  return OpOut{std::move(schema_root), std::move(u->env)};
}

Result<OpOut> graft_subtree(TreeNode schema_root, const GornAddress& anchor,
                            const TreeNode& sub_root, fs::Bindings env) {
  TreeNode* node = node_at(schema_root, anchor);
  if (!node) return fail(Errc::address_invalid, anchor, "no node at address");
  if (node->kind != NodeKind::anchor)
    return fail(Errc::kind_mismatch, anchor, "not an anchor node");
  if (node->category != sub_root.category)
    return fail(Errc::category_mismatch, anchor,
                node->category + " vs " + sub_root.category);
  auto ut = fs::unify(node->top, sub_root.top, std::move(env));
  if (!ut)
    return fail(Errc::unification_failure, anchor,
                "anchor top does not unify with subtree top");
  auto ub = fs::unify(node->bottom, sub_root.bottom, std::move(ut->env));
  if (!ub)
    return fail(Errc::unification_failure, anchor,
                "anchor bottom does not unify with subtree bottom");
  TreeNode replacement = sub_root;
  replacement.top = std::move(ut->fs);
  replacement.bottom = std::move(ub->fs);
  *node = std::move(replacement);
  return OpOut{std::move(schema_root), std::move(ub->env)};
}

namespace {

bool finalize_unify(TreeNode& n, GornAddress& path, fs::Bindings& env,
                    Error& err) {
  switch (n.kind) {
    case NodeKind::substitution:
      err = Error{Errc::unfilled_slot, "open substitution slot", path, {}};
      return false;
    case NodeKind::anchor:
      err = Error{Errc::unfilled_slot, "ungrafted anchor", path, {}};
      return false;
    case NodeKind::foot:
      err = Error{Errc::unfilled_slot, "stray foot node", path, {}};
      return false;
    default:
      break;
  }
  auto u = fs::unify(n.top, n.bottom, std::move(env));
  if (!u) {
    err = Error{Errc::unification_failure,
                "top and bottom do not unify", path, {}};
    return false;
  }
  n.top = std::move(u->fs);
  n.bottom.clear();
  env = std::move(u->env);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (!finalize_unify(n.children[i], path, env, err)) return false;
    path.pop_back();
  }
  return true;
}

bool finalize_resolve(TreeNode& n, GornAddress& path, const fs::Bindings& env,
                      Error& err) {
  n.top = fs::resolve(n.top, env);
  if (n.kind == NodeKind::lex && !n.token_var.empty()) {
    fs::FeatureValue v = env.walk(fs::FeatureValue::var(n.token_var));
    if (!v.is_atom()) {
      err = Error{Errc::unification_failure,
                  "token variable " + n.token_var + " is unbound", path, {}};
      return false;
    }
    n.token = v.text;
    n.token_var.clear();
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (!finalize_resolve(n.children[i], path, env, err)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

Result<TreeNode> finalize(const TreeNode& root, fs::Bindings env) {
  TreeNode out = root;
  GornAddress path;
  Error err{};
  if (!finalize_unify(out, path, env, err)) return err;
  if (!finalize_resolve(out, path, env, err)) return err;
  return out;
}

namespace {

struct LeafRef {
  const TreeNode* leaf;
  std::vector<const TreeNode*> path;  // root .. leaf inclusive
  GornAddress address;
};

void collect_leaves(const TreeNode& n, std::vector<const TreeNode*>& path,
                    GornAddress& addr, std::vector<LeafRef>& out) {
  path.push_back(&n);
  if (n.kind == NodeKind::lex &&
      (!n.token.empty() || !n.token_var.empty())) {
    out.push_back({&n, path, addr});
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    addr.push_back(static_cast<int>(i));
    collect_leaves(n.children[i], path, addr, out);
    addr.pop_back();
  }
  path.pop_back();
}

// A hyphen survives only when the neighbouring leaf is noun-headed and no
// other phrase boundary (GN or Ph) sits between them.
bool neighbour_hosts_hyphen(const LeafRef& self, const LeafRef& other) {
  std::size_t common = 0;
  while (common < self.path.size() && common < other.path.size() &&
         self.path[common] == other.path[common])
    ++common;
  if (other.path.size() < 2) return false;
  const TreeNode* parent = other.path[other.path.size() - 2];
  if (parent->category != "N") return false;
  for (std::size_t i = common; i + 1 < other.path.size(); ++i) {
    const std::string& cat = other.path[i]->category;
    if (cat == "GN" || cat == "Ph") return false;
  }
  return true;
}

}  // namespace

std::vector<SurfaceToken> linearize(const TreeNode& root) {
  std::vector<LeafRef> leaves;
  std::vector<const TreeNode*> path;
  GornAddress addr;
  collect_leaves(root, path, addr, leaves);

  std::vector<SurfaceToken> out;
  out.reserve(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const TreeNode& leaf = *leaves[i].leaf;
    SurfaceToken tok;
    tok.text = leaf.token_var.empty() ? leaf.token : "$" + leaf.token_var;
    tok.attach = leaf.attach;
    tok.origin = leaf.origin;
    tok.address = leaves[i].address;
    if (tok.attach == Attach::hyphen_left && i > 0 &&
        !neighbour_hosts_hyphen(leaves[i], leaves[i - 1]))
      tok.attach = Attach::free;
    if (tok.attach == Attach::hyphen_right && i + 1 < leaves.size() &&
        !neighbour_hosts_hyphen(leaves[i], leaves[i + 1]))
      tok.attach = Attach::free;
    out.push_back(std::move(tok));
  }
  return out;
}

}  // namespace creogen::tag
