#include "creogen/derivation.hpp"

namespace creogen::deriv {

const char* to_string(StepOp op) {
  switch (op) {
    case StepOp::substitute: return "substitute";
    case StepOp::adjoin: return "adjoin";
    case StepOp::graft: return "graft";
    case StepOp::overwrite: return "overwrite";
  }
  return "substitute";
}

std::optional<StepOp> step_op_from_string(const std::string& s) {
  if (s == "substitute") return StepOp::substitute;
  if (s == "adjoin") return StepOp::adjoin;
  if (s == "graft") return StepOp::graft;
  if (s == "overwrite") return StepOp::overwrite;
  return std::nullopt;
}

namespace {

bool has_prefix(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

// "entry:kay@12" -> (kay, 12)
std::optional<std::pair<std::string, int>> parse_entry_ref(
    const std::string& ref) {
  if (!has_prefix(ref, "entry:")) return std::nullopt;
  auto at = ref.rfind('@');
  if (at == std::string::npos || at < 6) return std::nullopt;
  try {
    return std::pair{ref.substr(6, at - 6), std::stoi(ref.substr(at + 1))};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

const grammar::LexicalEntry* resolve_entry(const grammar::Grammar& g,
                                           const std::string& ref) {
  auto parsed = parse_entry_ref(ref);
  if (!parsed) return nullptr;
  const auto& [lemma, idx] = *parsed;
  if (idx >= 0 && idx < static_cast<int>(g.lexicon.size()) &&
      g.lexicon[idx].lemma == lemma)
    return &g.lexicon[idx];
  return g.entry_by_lemma(lemma);
}

tag::Attach entry_attach(const grammar::LexicalEntry& e) {
  return e.elidable ? tag::Attach::clitic_left : tag::Attach::free;
}

std::optional<std::pair<std::string, std::string>> parse_assignment(
    const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) return std::nullopt;
  return std::pair{s.substr(0, eq), s.substr(eq + 1)};
}

}  // namespace

DerivationBuilder::Ref DerivationBuilder::entry_ref(
    const grammar::LexicalEntry& e) const {
  const auto& lex = grammar_.lexicon;
  for (std::size_t i = 0; i < lex.size(); ++i)
    if (&lex[i] == &e)
      return "entry:" + e.lemma + "@" + std::to_string(i);
  return "entry:" + e.lemma + "@-1";
}

Result<tag::TreeNode> DerivationBuilder::materialize(const Ref& ref,
                                                     int& serial) const {
  auto it = results_.find(ref);
  if (it != results_.end()) return it->second;
  if (has_prefix(ref, "tree:")) {
    std::string name = ref.substr(5);
    const tag::ElementaryTree* t = grammar_.tree(name);
    if (!t)
      return Error{Errc::named_tree_absent,
                   "grammar lacks tree '" + name + "'",
                   {},
                   name};
    return tag::instantiate(*t, serial);
  }
  return Error{Errc::named_tree_absent,
               "unknown derivation reference '" + ref + "'",
               {},
               ref};
}

DerivationBuilder::Ref DerivationBuilder::commit(DerivationStep step,
                                                 tag::OpOut out, int serial) {
  Ref ref = "d" + std::to_string(steps_.size());
  env_ = std::move(out.env);
  var_serial_ = serial;
  results_.emplace(ref, std::move(out.tree));
  steps_.push_back(std::move(step));
  return ref;
}

Result<DerivationBuilder::Ref> DerivationBuilder::substitute(
    const Ref& target, const tag::GornAddress& addr, const Ref& argument) {
  int serial = var_serial_;
  auto t = materialize(target, serial);
  if (!t.ok()) return t.error();
  auto a = materialize(argument, serial);
  if (!a.ok()) return a.error();
  auto r = tag::substitute(t.take(), addr, a.value(), env_);
  if (!r.ok()) return r.error();
  return commit({StepOp::substitute, target, addr, argument, ""}, r.take(),
                serial);
}

Result<DerivationBuilder::Ref> DerivationBuilder::adjoin(
    const Ref& target, const tag::GornAddress& addr, const Ref& auxiliary) {
  int serial = var_serial_;
  auto t = materialize(target, serial);
  if (!t.ok()) return t.error();
  auto a = materialize(auxiliary, serial);
  if (!a.ok()) return a.error();
  auto r = tag::adjoin(t.take(), addr, a.value(), env_);
  if (!r.ok()) return r.error();
  return commit({StepOp::adjoin, target, addr, auxiliary, ""}, r.take(),
                serial);
}

Result<DerivationBuilder::Ref> DerivationBuilder::graft(
    const Ref& target, const tag::GornAddress& addr,
    const grammar::LexicalEntry& entry, const std::string& concept_id) {
  int serial = var_serial_;
  auto t = materialize(target, serial);
  if (!t.ok()) return t.error();
  auto r = tag::graft_entry(t.take(), addr, entry.category, entry.features,
                            entry.lemma, entry_attach(entry), concept_id,
                            env_);
  if (!r.ok()) return r.error();
  return commit({StepOp::graft, target, addr, entry_ref(entry), concept_id},
                r.take(), serial);
}

Result<DerivationBuilder::Ref> DerivationBuilder::graft_tree(
    const Ref& target, const tag::GornAddress& addr, const Ref& subtree) {
  int serial = var_serial_;
  auto t = materialize(target, serial);
  if (!t.ok()) return t.error();
  auto a = materialize(subtree, serial);
  if (!a.ok()) return a.error();
  auto r = tag::graft_subtree(t.take(), addr, a.value(), env_);
  if (!r.ok()) return r.error();
  return commit({StepOp::graft, target, addr, subtree, ""}, r.take(), serial);
}

Result<DerivationBuilder::Ref> DerivationBuilder::overwrite(
    const Ref& target, const tag::GornAddress& addr,
    const std::string& feature, const std::string& value) {
  int serial = var_serial_;
  auto t = materialize(target, serial);
  if (!t.ok()) return t.error();
  tag::TreeNode tree = t.take();
  tag::TreeNode* node = tag::node_at(tree, addr);
  if (!node) return Error{Errc::address_invalid, "no node at address", addr, {}};
  node->top = fs::overwrite(std::move(node->top), feature,
                            fs::FeatureValue::atom(value));
  node->bottom = fs::overwrite(std::move(node->bottom), feature,
                               fs::FeatureValue::atom(value));
  return commit({StepOp::overwrite, target, addr, feature + "=" + value, ""},
                tag::OpOut{std::move(tree), env_}, serial);
}

const tag::TreeNode* DerivationBuilder::peek(const Ref& ref) const {
  auto it = results_.find(ref);
  return it == results_.end() ? nullptr : &it->second;
}

Result<tag::TreeNode> DerivationBuilder::finalize(const Ref& ref) const {
  const tag::TreeNode* t = peek(ref);
  if (!t)
    return Error{Errc::named_tree_absent,
                 "unknown derivation reference '" + ref + "'",
                 {},
                 ref};
  return tag::finalize(*t, env_);
}

Derivation DerivationBuilder::derivation(const Ref& result) const {
  return Derivation{steps_, result};
}

Result<tag::TreeNode> replay(const Derivation& d, const grammar::Grammar& g) {
  DerivationBuilder b(g);
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const DerivationStep& s = d.steps[i];
    Result<DerivationBuilder::Ref> r = [&]() -> Result<DerivationBuilder::Ref> {
      switch (s.op) {
        case StepOp::substitute:
          return b.substitute(s.target, s.address, s.argument);
        case StepOp::adjoin:
          return b.adjoin(s.target, s.address, s.argument);
        case StepOp::graft:
          if (has_prefix(s.argument, "entry:")) {
            const grammar::LexicalEntry* e = resolve_entry(g, s.argument);
            if (!e)
              return Error{Errc::missing_lexeme,
                           "lexicon lacks " + s.argument,
                           {},
                           s.argument};
            return b.graft(s.target, s.address, *e, s.origin);
          }
          return b.graft_tree(s.target, s.address, s.argument);
        case StepOp::overwrite: {
          auto kv = parse_assignment(s.argument);
          if (!kv)
            return Error{Errc::address_invalid,
                         "malformed overwrite argument '" + s.argument + "'",
                         s.address,
                         {}};
          return b.overwrite(s.target, s.address, kv->first, kv->second);
        }
      }
      return Error{Errc::address_invalid, "unknown step op", s.address, {}};
    }();
    if (!r.ok()) {
      Error e = r.error();
      e.detail = "step " + std::to_string(i) + ": " + e.detail;
      return e;
    }
  }
  return b.finalize(d.result);
}

}  // namespace creogen::deriv
