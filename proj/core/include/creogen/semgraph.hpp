#ifndef CREOGEN_SEMGRAPH_HPP
#define CREOGEN_SEMGRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "creogen/errors.hpp"
#include "creogen/grammar.hpp"

namespace creogen::sem {

// A concept to verbalize. key selects lexicon entries; the optional
// attributes pick tense/aspect (predicates) or determination (nominals).
struct ConceptNode {
  std::string id;
  std::string key;
  std::optional<std::string> tense;
  std::optional<std::string> aspect;
  std::optional<std::string> degree;
  std::optional<std::string> quantity;
  bool plural = false;

  friend bool operator==(const ConceptNode&, const ConceptNode&) = default;
};

// Directed role edge, predicate side first: "c1 -agent-> c2" states that
// the agent of concept c1 is concept c2.
struct Relation {
  std::string from;
  std::string role;
  std::string to;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct SemGraph {
  std::string id;    // fixture identifier
  std::string root;  // declared root concept, may be empty
  std::vector<ConceptNode> concepts;
  std::vector<Relation> relations;

  const ConceptNode* node(const std::string& id) const;
  std::vector<const Relation*> out_edges(const std::string& id) const;
  std::vector<const Relation*> in_edges(const std::string& id) const;

  friend bool operator==(const SemGraph&, const SemGraph&) = default;
};

// JSON reader. Throws ParseError when the text is not JSON; returns an
// error value for structural defects (duplicate ids, edges to nowhere,
// loops, a disconnected concept set).
Result<SemGraph> parse_graph(const std::string& json_text);
Result<SemGraph> load_graph_file(const std::string& path);

// Canonical serialization; parse_graph(to_json(g)) reproduces g.
std::string to_json(const SemGraph& g);

// Checks the graph against a grammar: realizable keys, known attribute
// values, roles some construction can express, aspect restrictions.
std::vector<Error> validate_graph(const SemGraph& g,
                                  const grammar::Grammar& gr);

// Declared root when present, else the first concept a Pred entry can
// realize, else the first concept.
Result<std::string> choose_root(const SemGraph& g,
                                const grammar::Grammar& gr);

}  // namespace creogen::sem

#endif
