#ifndef CREOGEN_GRAMMAR_HPP
#define CREOGEN_GRAMMAR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "creogen/errors.hpp"
#include "creogen/fstruct.hpp"
#include "creogen/tree.hpp"

namespace creogen::grammar {

struct LexicalEntry {
  std::string lemma;
  std::string category;           // "N" or "Pred"
  fs::FeatureStructure features;  // type, epithete, harm, det, ...
  std::vector<std::string> frames;
  std::vector<std::string> keys;  // concept keys this entry realizes
  std::string gloss;
  bool elidable = false;          // may contract onto a vowel-final host
  bool harm_override = false;     // stated harm deliberately beats the rule

  const std::string* feature(const std::string& name) const;
  bool predetermined() const;  // det=def at the lexical level
};

enum class FrameKind { complete, restricted };

struct FrameSpec {
  std::string name;
  FrameKind kind = FrameKind::complete;
  std::string schema;  // schema tree realizing this frame
  // slot label -> semantic role, in the schema's linear order
  std::vector<std::pair<std::string, std::string>> slots;

  const std::string* role_of_slot(const std::string& slot) const;
  const std::string* slot_of_role(const std::string& role) const;
};

// How a leftover semantic role surfaces as a clause-level adjunct: either
// through the restricted frame of a verb-preposition, or a bare auxiliary.
struct CircumstantSpec {
  std::string role;
  std::string verb;   // lemma with the restricted frame (empty for bare)
  std::string frame;  // restricted frame name
  std::string tree;   // bare auxiliary tree (empty for verb-based)
};

// Noun-phrase internal complement (e.g. possessor) realized by an
// auxiliary that attaches a GN to the right of the head noun's Nbar.
struct NominalSpec {
  std::string role;
  std::string tree;
};

struct Grammar {
  std::map<std::string, std::vector<std::string>> features;  // vocabulary
  std::vector<LexicalEntry> lexicon;                          // file order
  std::map<std::string, tag::ElementaryTree> trees;
  std::vector<std::string> tree_order;                        // file order
  std::vector<FrameSpec> frames;                              // file order
  std::vector<CircumstantSpec> circumstants;
  std::vector<NominalSpec> nominal_complements;
  std::string source;  // path or label, for diagnostics

  const tag::ElementaryTree* tree(const std::string& name) const;
  const FrameSpec* frame(const std::string& name) const;
  const LexicalEntry* entry_by_lemma(const std::string& lemma) const;
  int entry_index(const LexicalEntry* e) const;

  // All entries whose keys contain the concept key, in lexicon order.
  std::vector<const LexicalEntry*> entries_for_key(
      const std::string& key) const;

  // Subcategorization frames of an entry, complete ones first.
  Result<std::vector<const FrameSpec*>> frames_of(
      const LexicalEntry& e) const;

  const CircumstantSpec* circumstant_for_role(const std::string& role) const;
  const NominalSpec* nominal_for_role(const std::string& role) const;
  bool role_declared(const std::string& role) const;
};

// Tense/aspect combination requested for a predicate.
struct TMASpec {
  enum class Tense { unmarked, passe };
  enum class Aspect { zero, perfectif, imperfectif, prospectif };
  Tense tense = Tense::unmarked;
  Aspect aspect = Aspect::perfectif;
};

std::string tense_tree_name(TMASpec::Tense t);
std::string aspect_tree_name(TMASpec::Aspect a);
const char* to_string(TMASpec::Tense t);
const char* to_string(TMASpec::Aspect a);
std::optional<TMASpec::Tense> tense_from_string(const std::string& s);
std::optional<TMASpec::Aspect> aspect_from_string(const std::string& s);

// Preverbal marker sequence for the combination, tense marker first.
// States only accept the zero aspect; processes never take it.
Result<std::vector<std::string>> tma_markers(const Grammar& g,
                                             const TMASpec& spec,
                                             const std::string& pred_type);

// Determination degree requested for a nominal.
struct DeterminationSpec {
  enum class Degree { generique, indefini, defini, demonstratif };
  Degree degree = Degree::generique;
  bool plural = false;
};

const char* to_string(DeterminationSpec::Degree d);
std::optional<DeterminationSpec::Degree> degree_from_string(
    const std::string& s);

struct DeterminerChoice {
  std::string tree;                          // determination tree to use
  std::map<std::string, std::string> tokens; // marker tokens, for reports
};

// Tree selection for a degree/plural combination given the head's harmony
// class. The plural marker only combines with the postposed determiners.
Result<DeterminerChoice> determiner_trees(const Grammar& g,
                                          const DeterminationSpec& det,
                                          const std::string& harm);

}  // namespace creogen::grammar

#endif
