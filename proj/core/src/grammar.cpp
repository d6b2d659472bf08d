#include "creogen/grammar.hpp"

#include <algorithm>

namespace creogen::grammar {

const std::string* LexicalEntry::feature(const std::string& name) const {
  auto it = features.find(name);
  if (it == features.end() || !it->second.is_atom()) return nullptr;
  return &it->second.text;
}

bool LexicalEntry::predetermined() const {
  const std::string* d = feature("det");
  return d && *d == "def";
}

const std::string* FrameSpec::role_of_slot(const std::string& slot) const {
  for (const auto& [s, r] : slots)
    if (s == slot) return &r;
  return nullptr;
}

const std::string* FrameSpec::slot_of_role(const std::string& role) const {
  for (const auto& [s, r] : slots)
    if (r == role) return &s;
  return nullptr;
}

const tag::ElementaryTree* Grammar::tree(const std::string& name) const {
  auto it = trees.find(name);
  return it == trees.end() ? nullptr : &it->second;
}

const FrameSpec* Grammar::frame(const std::string& name) const {
  for (const auto& f : frames)
    if (f.name == name) return &f;
  return nullptr;
}

const LexicalEntry* Grammar::entry_by_lemma(const std::string& lemma) const {
  for (const auto& e : lexicon)
    if (e.lemma == lemma) return &e;
  return nullptr;
}

int Grammar::entry_index(const LexicalEntry* e) const {
  return static_cast<int>(e - lexicon.data());
}

std::vector<const LexicalEntry*> Grammar::entries_for_key(
    const std::string& key) const {
  std::vector<const LexicalEntry*> out;
  for (const auto& e : lexicon)
    if (std::find(e.keys.begin(), e.keys.end(), key) != e.keys.end())
      out.push_back(&e);
  return out;
}

Result<std::vector<const FrameSpec*>> Grammar::frames_of(
    const LexicalEntry& e) const {
  if (e.category != "Pred")
    return Error{Errc::not_a_predicate,
                 "entry of category " + e.category + " has no frames",
                 {},
                 e.lemma};
  std::vector<const FrameSpec*> out;
  for (auto kind : {FrameKind::complete, FrameKind::restricted})
    for (const auto& name : e.frames) {
      const FrameSpec* f = frame(name);
      if (f && f->kind == kind) out.push_back(f);
    }
  return out;
}

const CircumstantSpec* Grammar::circumstant_for_role(
    const std::string& role) const {
  for (const auto& c : circumstants)
    if (c.role == role) return &c;
  return nullptr;
}

const NominalSpec* Grammar::nominal_for_role(const std::string& role) const {
  for (const auto& n : nominal_complements)
    if (n.role == role) return &n;
  return nullptr;
}

bool Grammar::role_declared(const std::string& role) const {
  for (const auto& f : frames)
    if (f.role_of_slot(role) || f.slot_of_role(role)) return true;
  return circumstant_for_role(role) || nominal_for_role(role);
}

std::string tense_tree_name(TMASpec::Tense t) {
  return t == TMASpec::Tense::passe ? "tps_passe" : "tps_zero";
}

std::string aspect_tree_name(TMASpec::Aspect a) {
  switch (a) {
    case TMASpec::Aspect::zero: return "asp_zero";
    case TMASpec::Aspect::perfectif: return "asp_perfectif";
    case TMASpec::Aspect::imperfectif: return "asp_imperfectif";
    case TMASpec::Aspect::prospectif: return "asp_prospectif";
  }
  return "asp_perfectif";
}

const char* to_string(TMASpec::Tense t) {
  return t == TMASpec::Tense::passe ? "passe" : "zero";
}

const char* to_string(TMASpec::Aspect a) {
  switch (a) {
    case TMASpec::Aspect::zero: return "zero";
    case TMASpec::Aspect::perfectif: return "perfectif";
    case TMASpec::Aspect::imperfectif: return "imperfectif";
    case TMASpec::Aspect::prospectif: return "prospectif";
  }
  return "perfectif";
}

std::optional<TMASpec::Tense> tense_from_string(const std::string& s) {
  if (s == "zero" || s == "unmarked") return TMASpec::Tense::unmarked;
  if (s == "passe") return TMASpec::Tense::passe;
  return std::nullopt;
}

std::optional<TMASpec::Aspect> aspect_from_string(const std::string& s) {
  if (s == "zero") return TMASpec::Aspect::zero;
  if (s == "perfectif") return TMASpec::Aspect::perfectif;
  if (s == "imperfectif") return TMASpec::Aspect::imperfectif;
  if (s == "prospectif") return TMASpec::Aspect::prospectif;
  return std::nullopt;
}

namespace {

void collect_tokens(const tag::TreeNode& n, std::vector<std::string>& out) {
  if (n.kind == tag::NodeKind::lex && !n.token.empty() && n.token_var.empty())
    out.push_back(n.token);
  for (const auto& c : n.children) collect_tokens(c, out);
}

}  // namespace

Result<std::vector<std::string>> tma_markers(const Grammar& g,
                                             const TMASpec& spec,
                                             const std::string& pred_type) {
  if (pred_type == "etat" && spec.aspect != TMASpec::Aspect::zero)
    return Error{Errc::aspect_on_state,
                 std::string("aspect '") + to_string(spec.aspect) +
                     "' cannot apply to a state predicate",
                 {},
                 pred_type};
  if (pred_type != "etat" && spec.aspect == TMASpec::Aspect::zero)
    return Error{Errc::invalid_tma,
                 "the zero aspect only combines with state predicates",
                 {},
                 pred_type};
  std::vector<std::string> markers;
  for (const std::string& name :
       {tense_tree_name(spec.tense), aspect_tree_name(spec.aspect)}) {
    const tag::ElementaryTree* t = g.tree(name);
    if (!t)
      return Error{Errc::named_tree_absent,
                   "grammar lacks tree '" + name + "'",
                   {},
                   name};
    collect_tokens(t->root, markers);
  }
  return markers;
}

const char* to_string(DeterminationSpec::Degree d) {
  switch (d) {
    case DeterminationSpec::Degree::generique: return "generique";
    case DeterminationSpec::Degree::indefini: return "indefini";
    case DeterminationSpec::Degree::defini: return "defini";
    case DeterminationSpec::Degree::demonstratif: return "demonstratif";
  }
  return "generique";
}

std::optional<DeterminationSpec::Degree> degree_from_string(
    const std::string& s) {
  if (s == "generique") return DeterminationSpec::Degree::generique;
  if (s == "indefini") return DeterminationSpec::Degree::indefini;
  if (s == "defini") return DeterminationSpec::Degree::defini;
  if (s == "demonstratif") return DeterminationSpec::Degree::demonstratif;
  return std::nullopt;
}

Result<DeterminerChoice> determiner_trees(const Grammar& g,
                                          const DeterminationSpec& det,
                                          const std::string& harm) {
  using Degree = DeterminationSpec::Degree;
  DeterminerChoice choice;
  if (det.plural) {
    switch (det.degree) {
      case Degree::defini:
        choice = {"gn_defini_pluriel", {{"plural", "sé"}, {"determiner", harm}}};
        break;
      case Degree::demonstratif:
        choice = {"gn_demonstratif_pluriel",
                  {{"plural", "sé"}, {"determiner", "tala"}}};
        break;
      default:
        return Error{Errc::invalid_determination,
                     std::string("degree '") + to_string(det.degree) +
                         "' has no plural form",
                     {},
                     to_string(det.degree)};
    }
  } else {
    switch (det.degree) {
      case Degree::generique: choice = {"gn_generique", {}}; break;
      case Degree::indefini:
        choice = {"gn_indefini", {{"article", "an"}}};
        break;
      case Degree::defini:
        choice = {"gn_defini", {{"determiner", harm}}};
        break;
      case Degree::demonstratif:
        choice = {"gn_demonstratif", {{"determiner", "tala"}}};
        break;
    }
  }
  if (!g.tree(choice.tree))
    return Error{Errc::named_tree_absent,
                 "grammar lacks tree '" + choice.tree + "'",
                 {},
                 choice.tree};
  return choice;
}

}  // namespace creogen::grammar
