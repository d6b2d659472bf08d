#include "creogen/dot.hpp"

#include <sstream>

namespace creogen::viz {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Returns the label already escaped; "\n" separators are DOT line breaks
// and must survive the quote escaping of the pieces around them.
std::string node_label(const tag::TreeNode& n) {
  if (n.kind == tag::NodeKind::lex) {
    if (!n.token_var.empty()) return escape("$" + n.token_var);
    return escape(n.token.empty() ? "(silent)" : n.token);
  }
  std::string label = n.category;
  switch (n.kind) {
    case tag::NodeKind::substitution: label += "\u2193"; break;
    case tag::NodeKind::foot: label += "*"; break;
    case tag::NodeKind::anchor: label += "@"; break;
    default: break;
  }
  label = escape(label);
  if (!n.top.empty()) label += "\\n" + escape(fs::to_string(n.top));
  if (!n.bottom.empty()) label += "\\n/" + escape(fs::to_string(n.bottom));
  return label;
}

void emit_tree(std::ostringstream& out, const tag::TreeNode& n,
               const std::string& id) {
  bool leaf = n.kind == tag::NodeKind::lex;
  out << "  \"" << id << "\" [label=\"" << node_label(n) << "\""
      << (leaf ? ", shape=box" : "") << "];\n";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    std::string cid = id + "." + std::to_string(i);
    emit_tree(out, n.children[i], cid);
    out << "  \"" << id << "\" -> \"" << cid << "\";\n";
  }
}

}  // namespace

std::string tree_dot(const tag::TreeNode& root, const std::string& title) {
  std::ostringstream out;
  out << "digraph tree {\n"
      << "  label=\"" << escape(title) << "\";\n"
      << "  node [fontname=\"monospace\"];\n";
  emit_tree(out, root, "n");
  out << "}\n";
  return out.str();
}

std::string derivation_dot(const deriv::Derivation& d,
                           const std::string& title) {
  std::ostringstream out;
  out << "digraph derivation {\n"
      << "  label=\"" << escape(title) << "\";\n"
      << "  rankdir=LR;\n"
      << "  node [fontname=\"monospace\", shape=box];\n";
  auto is_step = [](const std::string& ref) {
    return !ref.empty() && ref[0] == 'd';
  };
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const deriv::DerivationStep& s = d.steps[i];
    std::string id = "d" + std::to_string(i);
    out << "  \"" << id << "\" [label=\"" << id << ": "
        << deriv::to_string(s.op) << " @ " << tag::to_string(s.address)
        << "\"];\n";
    for (const std::string* ref : {&s.target, &s.argument}) {
      if (ref->empty()) continue;
      if (!is_step(*ref))
        out << "  \"" << escape(*ref) << "\" [shape=ellipse];\n";
      out << "  \"" << escape(*ref) << "\" -> \"" << id << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace creogen::viz
