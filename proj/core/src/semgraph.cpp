#include "creogen/semgraph.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace creogen::sem {

using nlohmann::json;

const ConceptNode* SemGraph::node(const std::string& cid) const {
  for (const auto& c : concepts)
    if (c.id == cid) return &c;
  return nullptr;
}

std::vector<const Relation*> SemGraph::out_edges(const std::string& cid) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations)
    if (r.from == cid) out.push_back(&r);
  return out;
}

std::vector<const Relation*> SemGraph::in_edges(const std::string& cid) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations)
    if (r.to == cid) out.push_back(&r);
  return out;
}

namespace {

std::optional<std::string> opt_string(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

std::optional<Error> structural_check(const SemGraph& g) {
  std::set<std::string> ids;
  for (const auto& c : g.concepts) {
    if (c.id.empty())
      return Error{Errc::duplicate_id, "concept without an id", {}, c.key};
    if (!ids.insert(c.id).second)
      return Error{Errc::duplicate_id, "concept id used twice", {}, c.id};
  }
  if (g.concepts.empty())
    return Error{Errc::disconnected_graph, "graph has no concepts", {}, g.id};
  for (const auto& r : g.relations) {
    for (const std::string* end : {&r.from, &r.to})
      if (!ids.count(*end))
        return Error{Errc::dangling_endpoint,
                     "relation '" + r.role + "' touches unknown concept",
                     {},
                     *end};
    if (r.from == r.to)
      return Error{Errc::dangling_endpoint,
                   "relation '" + r.role + "' loops on one concept",
                   {},
                   r.from};
  }
  if (!g.root.empty() && !ids.count(g.root))
    return Error{Errc::dangling_endpoint, "declared root is not a concept",
                 {}, g.root};

  // undirected reachability from the first concept
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& r : g.relations) {
    adj[r.from].push_back(r.to);
    adj[r.to].push_back(r.from);
  }
  std::set<std::string> seen{g.concepts.front().id};
  std::vector<std::string> queue{g.concepts.front().id};
  while (!queue.empty()) {
    std::string cur = queue.back();
    queue.pop_back();
    for (const auto& next : adj[cur])
      if (seen.insert(next).second) queue.push_back(next);
  }
  for (const auto& c : g.concepts)
    if (!seen.count(c.id))
      return Error{Errc::disconnected_graph,
                   "concept unreachable from the rest of the graph",
                   {},
                   c.id};
  return std::nullopt;
}

}  // namespace

Result<SemGraph> parse_graph(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  SemGraph g;
  try {
    g.id = j.value("id", "");
    g.root = j.value("root", "");
    for (const auto& jc : j.value("concepts", json::array())) {
      ConceptNode c;
      c.id = jc.value("id", "");
      c.key = jc.value("key", "");
      c.tense = opt_string(jc, "tense");
      c.aspect = opt_string(jc, "aspect");
      c.degree = opt_string(jc, "degree");
      c.quantity = opt_string(jc, "quantity");
      c.plural = jc.value("plural", false);
      g.concepts.push_back(std::move(c));
    }
    for (const auto& jr : j.value("relations", json::array())) {
      Relation r;
      r.from = jr.value("from", "");
      r.role = jr.value("role", "");
      r.to = jr.value("to", "");
      g.relations.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
  if (auto err = structural_check(g)) return *err;
  return g;
}

Result<SemGraph> load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_json(const SemGraph& g) {
  json j;
  j["id"] = g.id;
  if (!g.root.empty()) j["root"] = g.root;
  j["concepts"] = json::array();
  for (const auto& c : g.concepts) {
    json jc;
    jc["id"] = c.id;
    jc["key"] = c.key;
    if (c.tense) jc["tense"] = *c.tense;
    if (c.aspect) jc["aspect"] = *c.aspect;
    if (c.degree) jc["degree"] = *c.degree;
    if (c.quantity) jc["quantity"] = *c.quantity;
    if (c.plural) jc["plural"] = true;
    j["concepts"].push_back(std::move(jc));
  }
  j["relations"] = json::array();
  for (const auto& r : g.relations)
    j["relations"].push_back({{"from", r.from}, {"role", r.role}, {"to", r.to}});
  return j.dump(2) + "\n";
}

std::vector<Error> validate_graph(const SemGraph& g,
                                  const grammar::Grammar& gr) {
  std::vector<Error> errors;
  for (const auto& c : g.concepts) {
    auto entries = gr.entries_for_key(c.key);
    if (entries.empty()) {
      errors.push_back(Error{Errc::missing_lexeme,
                             "no entry realizes key '" + c.key + "'",
                             {},
                             c.id});
      continue;
    }
    if (c.tense && !grammar::tense_from_string(*c.tense))
      errors.push_back(Error{Errc::invalid_tma,
                             "unknown tense '" + *c.tense + "'",
                             {},
                             c.id});
    if (c.aspect && !grammar::aspect_from_string(*c.aspect))
      errors.push_back(Error{Errc::invalid_tma,
                             "unknown aspect '" + *c.aspect + "'",
                             {},
                             c.id});
    if (c.degree && !grammar::degree_from_string(*c.degree))
      errors.push_back(
          Error{Errc::invalid_determination,
                "unknown determination degree '" + *c.degree + "'",
                {},
                c.id});

    bool all_etat = true, all_proces = true, all_predetermined = true;
    for (const auto* e : entries) {
      const std::string* type = e->feature("type");
      if (!type || *type != "etat") all_etat = false;
      if (!type || *type != "proces") all_proces = false;
      if (!e->predetermined()) all_predetermined = false;
    }
    if (c.aspect && *c.aspect != "zero" && all_etat)
      errors.push_back(Error{Errc::aspect_on_state,
                             "aspect '" + *c.aspect +
                                 "' cannot apply to state '" + c.key + "'",
                             {},
                             c.id});
    if (c.aspect && *c.aspect == "zero" && all_proces)
      errors.push_back(
          Error{Errc::invalid_tma,
                "the zero aspect only combines with state predicates",
                {},
                c.id});
    if (c.degree && all_predetermined)
      errors.push_back(
          Error{Errc::determiner_clash,
                "'" + c.key + "' is lexically determined; it takes no degree",
                {},
                c.id});
    if (c.plural && c.degree &&
        (*c.degree == "generique" || *c.degree == "indefini"))
      errors.push_back(Error{Errc::invalid_determination,
                             "degree '" + *c.degree + "' has no plural form",
                             {},
                             c.id});
    if (c.quantity && gr.entries_for_key(*c.quantity).empty())
      errors.push_back(Error{Errc::missing_lexeme,
                             "no entry realizes quantity '" + *c.quantity + "'",
                             {},
                             c.id});
  }
  for (const auto& r : g.relations)
    if (!gr.role_declared(r.role))
      errors.push_back(Error{Errc::no_circumstant_tree,
                             "no construction realizes role '" + r.role + "'",
                             {},
                             r.from + "->" + r.to});
  return errors;
}

Result<std::string> choose_root(const SemGraph& g,
                                const grammar::Grammar& gr) {
  if (!g.root.empty()) {
    if (!g.node(g.root))
      return Error{Errc::dangling_endpoint, "declared root is not a concept",
                   {}, g.root};
    return g.root;
  }
  if (g.concepts.empty())
    return Error{Errc::disconnected_graph, "graph has no concepts", {}, g.id};
  for (const auto& c : g.concepts)
    for (const auto* e : gr.entries_for_key(c.key))
      if (e->category == "Pred") return c.id;
  return g.concepts.front().id;
}

}  // namespace creogen::sem
