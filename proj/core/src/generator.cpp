#include "creogen/generator.hpp"

#include <deque>
#include <optional>
#include <set>

#include "creogen/harmony.hpp"
#include "creogen/surface.hpp"

namespace creogen::gen {

namespace {

using deriv::DerivationBuilder;
using grammar::Grammar;
using grammar::LexicalEntry;
using Ref = DerivationBuilder::Ref;

struct Planner {
  const sem::SemGraph& g;
  const Grammar& gr;
  std::vector<bool> used;              // one flag per relation
  std::set<std::string> mentioned;     // concepts already verbalized
  std::set<std::string> kernels_done;  // concepts realized as a clause

  Planner(const sem::SemGraph& graph, const Grammar& grammar)
      : g(graph), gr(grammar), used(graph.relations.size(), false) {}

  int index_of(const sem::Relation* r) const {
    return static_cast<int>(r - g.relations.data());
  }
  bool is_used(const sem::Relation* r) const { return used[index_of(r)]; }
  void consume(const sem::Relation* r) { used[index_of(r)] = true; }

  const sem::Relation* find_out(const std::string& cid,
                                const std::string& role) const {
    for (const auto* r : g.out_edges(cid))
      if (!is_used(r) && r->role == role) return r;
    return nullptr;
  }

  const LexicalEntry* first_of_cat(const std::string& key,
                                   const std::string& cat) const {
    for (const auto* e : gr.entries_for_key(key))
      if (e->category == cat) return e;
    return nullptr;
  }

  // --- template addresses --------------------------------------------

  Result<tag::GornAddress> tree_point(const std::string& tree,
                                      tag::NodeKind kind) const {
    const tag::ElementaryTree* t = gr.tree(tree);
    if (!t)
      return Error{Errc::named_tree_absent,
                   "grammar lacks tree '" + tree + "'",
                   {},
                   tree};
    auto addr = tag::find_kind(t->root, kind);
    if (!addr)
      return Error{Errc::kind_mismatch,
                   "tree '" + tree + "' lacks the expected node",
                   {},
                   tree};
    return *addr;
  }

  Result<tag::GornAddress> anchor_of(const std::string& tree) const {
    return tree_point(tree, tag::NodeKind::anchor);
  }
  Result<tag::GornAddress> slot_of(const std::string& tree) const {
    return tree_point(tree, tag::NodeKind::substitution);
  }

  Result<tag::GornAddress> labeled_slot(const std::string& tree,
                                        const std::string& label) const {
    const tag::ElementaryTree* t = gr.tree(tree);
    if (!t)
      return Error{Errc::named_tree_absent,
                   "grammar lacks tree '" + tree + "'",
                   {},
                   tree};
    auto addr = tag::find_slot(t->root, label);
    if (!addr)
      return Error{Errc::kind_mismatch,
                   "tree '" + tree + "' has no slot '" + label + "'",
                   {},
                   tree};
    return *addr;
  }

  // --- tense and aspect ----------------------------------------------

  grammar::TMASpec tma_of(const sem::ConceptNode& c,
                          const std::string& type) const {
    grammar::TMASpec spec;
    if (c.tense)
      spec.tense = *grammar::tense_from_string(*c.tense);
    if (c.aspect)
      spec.aspect = *grammar::aspect_from_string(*c.aspect);
    else
      spec.aspect = type == "etat" ? grammar::TMASpec::Aspect::zero
                                   : grammar::TMASpec::Aspect::perfectif;
    return spec;
  }

  bool tma_trivial(const sem::ConceptNode& c) const {
    return (!c.tense || *c.tense == "zero") &&
           (!c.aspect || *c.aspect == "zero");
  }

  // --- harmony agreement with the rightmost word ---------------------

  std::optional<std::string> class_of_word(const DerivationBuilder& b,
                                           const std::string& word) const {
    std::string text = word;
    if (!text.empty() && text[0] == '$') {
      fs::FeatureValue v =
          b.bindings().walk(fs::FeatureValue::var(text.substr(1)));
      if (!v.is_atom()) return std::nullopt;
      text = v.text;
    }
    if (const LexicalEntry* e = gr.entry_by_lemma(text))
      if (const std::string* stated = e->feature("harm")) return *stated;
    auto computed = grammar::harmony_class(text);
    if (computed.ok()) return computed.value();
    return std::nullopt;
  }

  // After a complement or relative attaches to the right of the head
  // noun, the postposed determiner agrees with the last word of the whole
  // phrase, not the head. Unification is monotonic, so this is forced.
  Result<Ref> reharmonize(DerivationBuilder& b, const Ref& nbar) {
    const tag::TreeNode* t = b.peek(nbar);
    if (!t) return nbar;
    std::vector<std::string> words = tag::yield_of(*t);
    if (words.empty()) return nbar;
    auto cls = class_of_word(b, words.back());
    if (!cls) return nbar;
    return b.overwrite(nbar, {}, "harm", *cls);
  }

  // --- noun phrases --------------------------------------------------

  Result<Ref> wrap_determination(DerivationBuilder& b,
                                 const sem::ConceptNode& c,
                                 const LexicalEntry& entry, const Ref& nbar) {
    if (entry.predetermined()) {
      if (c.degree)
        return Error{Errc::determiner_clash,
                     "'" + entry.lemma +
                         "' is lexically determined; it takes no degree",
                     {},
                     c.id};
      auto slot = slot_of("gn_predetermine");
      if (!slot.ok()) return slot.error();
      return b.substitute(DerivationBuilder::tree_ref("gn_predetermine"),
                          slot.value(), nbar);
    }
    if (c.quantity) {
      const LexicalEntry* q = first_of_cat(*c.quantity, "Qnt");
      if (!q)
        return Error{Errc::missing_lexeme,
                     "no quantifier realizes '" + *c.quantity + "'",
                     {},
                     c.id};
      auto anchor = anchor_of("gn_quantifie");
      if (!anchor.ok()) return anchor.error();
      auto slot = slot_of("gn_quantifie");
      if (!slot.ok()) return slot.error();
      auto gn = b.graft(DerivationBuilder::tree_ref("gn_quantifie"),
                        anchor.value(), *q, c.id);
      if (!gn.ok()) return gn.error();
      return b.substitute(gn.value(), slot.value(), nbar);
    }
    grammar::DeterminationSpec det;
    det.plural = c.plural;
    if (c.degree) det.degree = *grammar::degree_from_string(*c.degree);
    std::string harm;
    if (const tag::TreeNode* t = b.peek(nbar)) {
      auto it = t->top.find("harm");
      if (it != t->top.end()) {
        fs::FeatureValue v = b.bindings().walk(it->second);
        if (v.is_atom()) harm = v.text;
      }
    }
    auto choice = grammar::determiner_trees(gr, det, harm);
    if (!choice.ok()) return choice.error();
    auto slot = slot_of(choice.value().tree);
    if (!slot.ok()) return slot.error();
    return b.substitute(DerivationBuilder::tree_ref(choice.value().tree),
                        slot.value(), nbar);
  }

  Result<Ref> anaphoric_np(DerivationBuilder& b, const sem::ConceptNode& c) {
    const LexicalEntry* e = first_of_cat(c.key, "N");
    if (e && e->feature("pron")) return minimal_np(b, c, *e);
    if (c.plural && e) return minimal_np(b, c, *e);
    const LexicalEntry* pron = first_of_cat("anaphor", "N");
    if (!pron)
      return Error{Errc::missing_lexeme,
                   "lexicon has no entry keyed 'anaphor' for repeated "
                   "mention of '" + c.key + "'",
                   {},
                   c.id};
    // The pronoun is inherently determined; the concept's own
    // determination was spent on the first mention.
    sem::ConceptNode ghost = c;
    ghost.degree.reset();
    ghost.quantity.reset();
    ghost.plural = false;
    return minimal_np(b, ghost, *pron);
  }

  // Bare noun phrase without complements: used for repeated mentions.
  Result<Ref> minimal_np(DerivationBuilder& b, const sem::ConceptNode& c,
                         const LexicalEntry& entry) {
    std::string nbar_tree =
        entry.predetermined() ? "nbar_def" : "nbar_noun";
    auto anchor = anchor_of(nbar_tree);
    if (!anchor.ok()) return anchor.error();
    auto nb = b.graft(DerivationBuilder::tree_ref(nbar_tree), anchor.value(),
                      entry, c.id);
    if (!nb.ok()) return nb.error();
    return wrap_determination(b, c, entry, nb.value());
  }

  bool epithet_fits(const sem::ConceptNode& pred, const LexicalEntry& pe,
                    const sem::Relation* edge) const {
    if (!pe.feature("epithete")) return false;
    if (!tma_trivial(pred)) return false;
    for (const auto* r : g.out_edges(pred.id))
      if (r != edge && !is_used(r)) return false;
    return true;
  }

  const grammar::FrameSpec* relative_frame(const sem::ConceptNode& pred,
                                           const LexicalEntry& pe,
                                           const sem::Relation* edge) const {
    auto frames = gr.frames_of(pe);
    if (!frames.ok()) return nullptr;
    for (const auto* f : frames.value()) {
      if (f->kind != grammar::FrameKind::complete) continue;
      const std::string* slot = f->slot_of_role(edge->role);
      if (!slot || *slot == "subject") continue;  // no subject relatives
      bool fillable = true;
      for (const auto& [sl, role] : f->slots) {
        if (role == edge->role) continue;
        if (!find_out(pred.id, role)) fillable = false;
      }
      if (fillable) return f;
    }
    return nullptr;
  }

  Result<Ref> realize_np(DerivationBuilder& b, const sem::ConceptNode& c) {
    const LexicalEntry* entry = first_of_cat(c.key, "N");
    if (!entry)
      return Error{Errc::missing_lexeme,
                   "no nominal entry realizes key '" + c.key + "'",
                   {},
                   c.id};
    if (mentioned.count(c.id)) return anaphoric_np(b, c);

    std::string nbar_tree =
        entry->predetermined() ? "nbar_def" : "nbar_noun";
    auto anchor = anchor_of(nbar_tree);
    if (!anchor.ok()) return anchor.error();
    auto nb = b.graft(DerivationBuilder::tree_ref(nbar_tree), anchor.value(),
                      *entry, c.id);
    if (!nb.ok()) return nb.error();
    Ref nbar = nb.value();

    // complements on the right: possessor, content, ...
    for (const auto* r : g.out_edges(c.id)) {
      if (is_used(r)) continue;
      const grammar::NominalSpec* spec = gr.nominal_for_role(r->role);
      if (!spec) continue;
      consume(r);
      const sem::ConceptNode* arg = g.node(r->to);
      auto np = realize_np(b, *arg);
      if (!np.ok()) return np.error();
      auto slot = slot_of(spec->tree);
      if (!slot.ok()) return slot.error();
      auto comp = b.substitute(DerivationBuilder::tree_ref(spec->tree),
                               slot.value(), np.value());
      if (!comp.ok()) return comp.error();
      auto grown = b.adjoin(nbar, {}, comp.value());
      if (!grown.ok()) return grown.error();
      auto rehar = reharmonize(b, grown.value());
      if (!rehar.ok()) return rehar.error();
      nbar = rehar.value();
    }

    // incoming predications: epithet when trivial, else a relative with a
    // trace in a non-subject position, else left for juxtaposition
    for (const auto* r : g.in_edges(c.id)) {
      if (is_used(r)) continue;
      const sem::ConceptNode* pred = g.node(r->from);
      const LexicalEntry* pe = first_of_cat(pred->key, "Pred");
      if (!pe) continue;
      if (epithet_fits(*pred, *pe, r)) {
        consume(r);
        auto eanchor = anchor_of("aux_epithete");
        if (!eanchor.ok()) return eanchor.error();
        auto eph = b.graft(DerivationBuilder::tree_ref("aux_epithete"),
                           eanchor.value(), *pe, pred->id);
        if (!eph.ok()) return eph.error();
        auto grown = b.adjoin(nbar, {}, eph.value());
        if (!grown.ok()) return grown.error();
        nbar = grown.value();
        continue;
      }
      if (const grammar::FrameSpec* f = relative_frame(*pred, *pe, r)) {
        consume(r);
        auto ph = build_clause(b, *pred, *pe, *f, r->role);
        if (!ph.ok()) return ph.error();
        auto rslot = slot_of("aux_relative");
        if (!rslot.ok()) return rslot.error();
        auto rel = b.substitute(DerivationBuilder::tree_ref("aux_relative"),
                                rslot.value(), ph.value());
        if (!rel.ok()) return rel.error();
        auto grown = b.adjoin(nbar, {}, rel.value());
        if (!grown.ok()) return grown.error();
        auto rehar = reharmonize(b, grown.value());
        if (!rehar.ok()) return rehar.error();
        nbar = rehar.value();
        kernels_done.insert(pred->id);
      }
    }

    auto np = wrap_determination(b, c, *entry, nbar);
    if (np.ok()) mentioned.insert(c.id);
    return np;
  }

  // --- clauses -------------------------------------------------------

  // Builds the full clause for a predicate concept: lexeme grafted into
  // the aspect schema, tense layer substituted, the whole grafted into the
  // frame schema, actant slots filled, leftover roles adjoined as
  // circumstants. gap_role marks the slot a relative clause leaves empty.
  Result<Ref> build_clause(DerivationBuilder& b, const sem::ConceptNode& c,
                           const LexicalEntry& entry,
                           const grammar::FrameSpec& frame,
                           std::optional<std::string> gap_role) {
    const std::string* type = entry.feature("type");
    if (!type)
      return Error{Errc::not_a_predicate,
                   "'" + entry.lemma + "' states no predicate type",
                   {},
                   c.id};
    grammar::TMASpec tma = tma_of(c, *type);
    auto markers = grammar::tma_markers(gr, tma, *type);
    if (!markers.ok()) {
      Error e = markers.error();
      e.subject = c.id;
      return e;
    }

    std::string asp_tree = grammar::aspect_tree_name(tma.aspect);
    std::string tps_tree = grammar::tense_tree_name(tma.tense);
    auto aanchor = anchor_of(asp_tree);
    if (!aanchor.ok()) return aanchor.error();
    auto asp = b.graft(DerivationBuilder::tree_ref(asp_tree), aanchor.value(),
                       entry, c.id);
    if (!asp.ok()) return asp.error();
    auto tslot = slot_of(tps_tree);
    if (!tslot.ok()) return tslot.error();
    auto tps = b.substitute(DerivationBuilder::tree_ref(tps_tree),
                            tslot.value(), asp.value());
    if (!tps.ok()) return tps.error();
    auto panchor = anchor_of(frame.schema);
    if (!panchor.ok()) return panchor.error();
    auto ph = b.graft_tree(DerivationBuilder::tree_ref(frame.schema),
                           panchor.value(), tps.value());
    if (!ph.ok()) return ph.error();
    Ref clause = ph.value();

    for (const auto& [slot, role] : frame.slots) {
      auto addr = labeled_slot(frame.schema, slot);
      if (!addr.ok()) return addr.error();
      if (gap_role && role == *gap_role) {
        auto gap = b.substitute(clause, addr.value(),
                                DerivationBuilder::tree_ref("gn_trace"));
        if (!gap.ok()) return gap.error();
        clause = gap.value();
        continue;
      }
      const sem::Relation* r = find_out(c.id, role);
      if (!r)
        return Error{Errc::missing_actant,
                     "actant '" + role + "' of '" + entry.lemma +
                         "' is missing",
                     {},
                     c.id};
      consume(r);
      auto np = realize_np(b, *g.node(r->to));
      if (!np.ok()) return np.error();
      auto filled = b.substitute(clause, addr.value(), np.value());
      if (!filled.ok()) return filled.error();
      clause = filled.value();
    }

    // clause-level adjuncts for the remaining roles
    const tag::ElementaryTree* schema = gr.tree(frame.schema);
    for (const auto* r : g.out_edges(c.id)) {
      if (is_used(r)) continue;
      const grammar::CircumstantSpec* spec = gr.circumstant_for_role(r->role);
      if (!spec)
        return Error{Errc::no_circumstant_tree,
                     "role '" + r->role +
                         "' has no clause-level realization",
                     {},
                     c.id};
      auto site = tag::child_with_category(schema->root, "GPred");
      if (!site)
        return Error{Errc::no_circumstant_tree,
                     "schema '" + frame.schema +
                         "' offers no adjunction site",
                     {},
                     c.id};
      consume(r);
      auto np = realize_np(b, *g.node(r->to));
      if (!np.ok()) return np.error();
      Result<Ref> aux = [&]() -> Result<Ref> {
        if (!spec->verb.empty()) {
          const grammar::FrameSpec* vf = gr.frame(spec->frame);
          const LexicalEntry* ve = gr.entry_by_lemma(spec->verb);
          auto vanchor = anchor_of(vf->schema);
          if (!vanchor.ok()) return vanchor.error();
          auto grafted = b.graft(DerivationBuilder::tree_ref(vf->schema),
                                 vanchor.value(), *ve, c.id);
          if (!grafted.ok()) return grafted.error();
          Ref out = grafted.value();
          for (const auto& [slot2, role2] : vf->slots) {
            (void)role2;
            auto addr2 = labeled_slot(vf->schema, slot2);
            if (!addr2.ok()) return addr2.error();
            auto filled = b.substitute(out, addr2.value(), np.value());
            if (!filled.ok()) return filled.error();
            out = filled.value();
          }
          return out;
        }
        auto cslot = slot_of(spec->tree);
        if (!cslot.ok()) return cslot.error();
        return b.substitute(DerivationBuilder::tree_ref(spec->tree),
                            cslot.value(), np.value());
      }();
      if (!aux.ok()) return aux.error();
      auto grown = b.adjoin(clause, {*site}, aux.value());
      if (!grown.ok()) return grown.error();
      clause = grown.value();
    }
    return clause;
  }

  Result<const grammar::FrameSpec*> choose_frame(const sem::ConceptNode& c,
                                                 const LexicalEntry& entry) {
    auto frames = gr.frames_of(entry);
    if (!frames.ok()) return frames.error();
    std::vector<const grammar::FrameSpec*> complete;
    for (const auto* f : frames.value())
      if (f->kind == grammar::FrameKind::complete) complete.push_back(f);
    if (complete.empty())
      return Error{Errc::no_frame_fits,
                   "'" + entry.lemma + "' has no complete frame",
                   {},
                   c.id};
    const grammar::FrameSpec* best = nullptr;
    for (const auto* f : complete) {
      bool fillable = true;
      for (const auto& [slot, role] : f->slots) {
        (void)slot;
        if (!find_out(c.id, role)) fillable = false;
      }
      if (fillable && (!best || f->slots.size() > best->slots.size()))
        best = f;
    }
    if (best) return best;
    for (const auto& [slot, role] : complete.front()->slots) {
      (void)slot;
      if (!find_out(c.id, role))
        return Error{Errc::missing_actant,
                     "actant '" + role + "' of '" + entry.lemma +
                         "' is missing",
                     {},
                     c.id};
    }
    return Error{Errc::no_frame_fits,
                 "no frame of '" + entry.lemma + "' fits the graph",
                 {},
                 c.id};
  }

  Result<SentenceRecord> realize_sentence(const std::string& root_id) {
    DerivationBuilder b(gr);
    const sem::ConceptNode* c = g.node(root_id);
    Ref final_ref;

    const LexicalEntry* pe = first_of_cat(c->key, "Pred");
    if (pe) {
      auto frame = choose_frame(*c, *pe);
      if (!frame.ok()) return frame.error();
      auto clause = build_clause(b, *c, *pe, *frame.value(), std::nullopt);
      if (!clause.ok()) return clause.error();
      final_ref = clause.value();
    } else {
      auto np = realize_np(b, *c);
      if (!np.ok()) return np.error();
      final_ref = np.value();
    }
    kernels_done.insert(c->id);

    auto tree = b.finalize(final_ref);
    if (!tree.ok()) {
      Error e = tree.error();
      if (e.subject.empty()) e.subject = c->id;
      return e;
    }
    SentenceRecord rec;
    rec.root_concept = c->id;
    rec.derivation = b.derivation(final_ref);
    rec.tree = tree.take();
    rec.tokens = tag::linearize(rec.tree);
    auto text = surface::render(rec.tokens);
    if (!text.ok()) return text.error();
    rec.text = text.take();
    return rec;
  }
};

}  // namespace

Result<GenerationResult> generate(const sem::SemGraph& g,
                                  const grammar::Grammar& gr) {
  std::vector<Error> issues = sem::validate_graph(g, gr);
  if (!issues.empty()) return issues.front();
  auto root = sem::choose_root(g, gr);
  if (!root.ok()) return root.error();

  Planner plan(g, gr);
  GenerationResult result;
  result.fixture = g.id;

  std::deque<std::string> pending{root.value()};
  for (;;) {
    while (!pending.empty()) {
      std::string next = pending.front();
      pending.pop_front();
      auto rec = plan.realize_sentence(next);
      if (!rec.ok()) return rec.error();
      result.sentences.push_back(rec.take());
    }
    const sem::Relation* leftover = nullptr;
    for (const auto& r : g.relations)
      if (!plan.used[&r - g.relations.data()]) {
        leftover = &r;
        break;
      }
    if (!leftover) break;
    const sem::ConceptNode* p = g.node(leftover->from);
    if (plan.kernels_done.count(p->id) ||
        !plan.first_of_cat(p->key, "Pred"))
      return Error{Errc::no_frame_fits,
                   "relation '" + leftover->role +
                       "' cannot be realized by any construction",
                   {},
                   leftover->from + "->" + leftover->to};
    pending.push_back(p->id);
  }

  std::vector<std::string> texts;
  for (const auto& s : result.sentences) texts.push_back(s.text);
  result.text = surface::join_sentences(texts);
  return result;
}

}  // namespace creogen::gen
