#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "creogen/fstruct.hpp"

using namespace creogen;

namespace {

fs::FeatureValue atom(const std::string& s) { return fs::FeatureValue::atom(s); }
fs::FeatureValue var(const std::string& s) { return fs::FeatureValue::var(s); }

// Alpha-canonical rendering: atoms keep their text, each distinct unbound
// variable class becomes "_0", "_1", ... in feature order. Two structures
// are the same modulo variable naming iff their canonical maps are equal.
std::map<std::string, std::string> canon(const fs::FeatureStructure& f,
                                         const fs::Bindings& env) {
  std::map<std::string, std::string> out;
  std::map<std::string, std::string> names;
  for (const auto& [k, v] : f) {
    fs::FeatureValue w = env.walk(v);
    if (w.is_atom()) {
      out[k] = w.text;
    } else {
      auto [it, fresh] =
          names.try_emplace(w.text, "_" + std::to_string(names.size()));
      out[k] = it->second;
    }
  }
  return out;
}

// Independent reference unifier: plain union-find over variable names with
// an optional atom per class. Used as the oracle the production
// implementation must agree with.
struct RefUnify {
  std::map<std::string, std::string> parent;
  std::map<std::string, std::string> value;  // class root -> atom

  std::string find(std::string v) {
    while (true) {
      auto it = parent.find(v);
      if (it == parent.end() || it->second == v) return v;
      v = it->second;
    }
  }

  bool merge(const fs::FeatureValue& x, const fs::FeatureValue& y) {
    if (x.is_atom() && y.is_atom()) return x.text == y.text;
    if (x.is_var() && y.is_var()) {
      std::string rx = find(x.text), ry = find(y.text);
      if (rx == ry) return true;
      auto ax = value.find(rx), ay = value.find(ry);
      if (ax != value.end() && ay != value.end() && ax->second != ay->second)
        return false;
      parent[rx] = ry;
      if (ax != value.end() && ay == value.end()) value[ry] = ax->second;
      return true;
    }
    const fs::FeatureValue& v = x.is_var() ? x : y;
    const fs::FeatureValue& a = x.is_var() ? y : x;
    std::string r = find(v.text);
    auto it = value.find(r);
    if (it != value.end()) return it->second == a.text;
    value[r] = a.text;
    return true;
  }

  std::string render(const fs::FeatureValue& v,
                     std::map<std::string, std::string>& names) {
    if (v.is_atom()) return v.text;
    std::string r = find(v.text);
    auto it = value.find(r);
    if (it != value.end()) return it->second;
    auto [nit, fresh] = names.try_emplace(r, "_" + std::to_string(names.size()));
    return nit->second;
  }
};

// Oracle verdict for unify(a, b) under pre-seeded bindings.
std::optional<std::map<std::string, std::string>> ref_unify(
    const fs::FeatureStructure& a, const fs::FeatureStructure& b,
    const std::vector<std::pair<std::string, fs::FeatureValue>>& seeds) {
  RefUnify solver;
  for (const auto& [name, val] : seeds)
    if (!solver.merge(var(name), val)) return std::nullopt;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it != b.end() && !solver.merge(v, it->second)) return std::nullopt;
  }
  // Render in lexicographic feature order so the fresh-class numbering
  // lines up with canon() on the production side.
  fs::FeatureStructure merged = a;
  merged.insert(b.begin(), b.end());
  std::map<std::string, std::string> out;
  std::map<std::string, std::string> names;
  for (const auto& [k, v] : merged) out[k] = solver.render(v, names);
  return out;
}

struct RandomCase {
  fs::FeatureStructure a, b, c;
  std::vector<std::pair<std::string, fs::FeatureValue>> seeds;
  fs::Bindings env;
};

RandomCase random_case(std::mt19937& rng) {
  const std::vector<std::string> feats = {"f", "g", "h", "k"};
  const std::vector<std::string> atoms = {"x", "y", "z"};
  const std::vector<std::string> vars = {"A", "B", "C"};
  auto pick = [&](const std::vector<std::string>& pool) {
    return pool[rng() % pool.size()];
  };
  auto value = [&]() {
    return rng() % 2 ? atom(pick(atoms)) : var(pick(vars));
  };
  auto structure = [&]() {
    fs::FeatureStructure f;
    std::size_t n = rng() % (feats.size() + 1);
    for (std::size_t i = 0; i < n; ++i) f[pick(feats)] = value();
    return f;
  };
  RandomCase rc;
  rc.a = structure();
  rc.b = structure();
  rc.c = structure();
  // Occasionally pre-bind a variable so chains through the environment are
  // exercised, not just fresh unification.
  if (rng() % 3 == 0) {
    std::string v = pick(vars);
    fs::FeatureValue val = rng() % 2 ? atom(pick(atoms)) : var(pick(vars));
    if (!(val.is_var() && val.text == v)) {
      rc.seeds.emplace_back(v, val);
      rc.env.bind(v, val);
    }
  }
  return rc;
}

}  // namespace

TEST_CASE("unify merges disjoint features") {
  fs::FeatureStructure a = {{"det", atom("def")}};
  fs::FeatureStructure b = {{"harm", atom("la")}};
  auto u = fs::unify(a, b, {});
  REQUIRE(u.has_value());
  CHECK(u->fs.size() == 2);
  CHECK(u->fs.at("det") == atom("def"));
  CHECK(u->fs.at("harm") == atom("la"));
}

TEST_CASE("unify rejects clashing atoms") {
  fs::FeatureStructure a = {{"det", atom("def")}};
  fs::FeatureStructure b = {{"det", atom("indef")}};
  CHECK_FALSE(fs::unify(a, b, {}).has_value());
}

TEST_CASE("unify binds variables to atoms") {
  fs::FeatureStructure a = {{"harm", var("A")}};
  fs::FeatureStructure b = {{"harm", atom("an")}};
  auto u = fs::unify(a, b, {});
  REQUIRE(u.has_value());
  CHECK(u->fs.at("harm") == atom("an"));
  CHECK(u->env.walk(var("A")) == atom("an"));
}

TEST_CASE("variable bindings propagate through shared variables") {
  // {f=A, g=A} with {f=x} forces g to x as well.
  fs::FeatureStructure a = {{"f", var("A")}, {"g", var("A")}};
  fs::FeatureStructure b = {{"f", atom("x")}};
  auto u = fs::unify(a, b, {});
  REQUIRE(u.has_value());
  auto resolved = fs::resolve(u->fs, u->env);
  CHECK(resolved.at("g") == atom("x"));
}

TEST_CASE("var-var union makes later bindings reach both variables") {
  fs::FeatureStructure a = {{"f", var("A")}};
  fs::FeatureStructure b = {{"f", var("B")}};
  auto u = fs::unify(a, b, {});
  REQUIRE(u.has_value());
  // A and B are now one class; grounding B also grounds A.
  fs::FeatureStructure c = {{"g", var("B")}};
  fs::FeatureStructure d = {{"g", atom("y")}};
  auto u2 = fs::unify(c, d, u->env);
  REQUIRE(u2.has_value());
  CHECK(u2->env.walk(var("A")) == atom("y"));
  // And the whole class now clashes with any other atom.
  fs::FeatureStructure e = {{"h", var("A")}};
  fs::FeatureStructure f2 = {{"h", atom("x")}};
  CHECK_FALSE(fs::unify(e, f2, u2->env).has_value());
}

TEST_CASE("walk follows chains and bind drops self bindings") {
  fs::Bindings env;
  env.bind("A", var("B"));
  env.bind("B", atom("x"));
  CHECK(env.walk(var("A")) == atom("x"));
  env.bind("C", var("C"));
  CHECK(env.lookup("C") == nullptr);
}

TEST_CASE("overwrite and remove_feature") {
  fs::FeatureStructure f = {{"harm", atom("la")}};
  f = fs::overwrite(f, "harm", atom("an"));
  CHECK(f.at("harm") == atom("an"));
  f = fs::remove_feature(f, "harm");
  CHECK(f.empty());
  CHECK(fs::remove_feature(f, "absent").empty());
}

TEST_CASE("to_string renders features in lexicographic order") {
  fs::FeatureStructure f = {{"harm", atom("la")}, {"det", var("D")}};
  CHECK(fs::to_string(f) == "{det=D, harm=la}");
  CHECK(fs::to_string(fs::FeatureStructure{}) == "{}");
}

TEST_CASE("randomized unification agrees with the reference solver") {
  std::mt19937 rng(0xC0FFEE);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    RandomCase rc = random_case(rng);
    auto got = fs::unify(rc.a, rc.b, rc.env);
    auto want = ref_unify(rc.a, rc.b, rc.seeds);
    REQUIRE(got.has_value() == want.has_value());
    if (got) {
      CHECK(canon(got->fs, got->env) == *want);
      ++checked;
    }
  }
  // The generator must produce a healthy mix of successes and failures.
  CHECK(checked > 400);
  CHECK(checked < 1500);
}

TEST_CASE("unification laws hold on randomized inputs") {
  std::mt19937 rng(0xBEEF);
  for (int i = 0; i < 1500; ++i) {
    RandomCase rc = random_case(rng);

    // Commutativity: success and result agree modulo variable naming.
    auto ab = fs::unify(rc.a, rc.b, rc.env);
    auto ba = fs::unify(rc.b, rc.a, rc.env);
    REQUIRE(ab.has_value() == ba.has_value());
    if (ab) CHECK(canon(ab->fs, ab->env) == canon(ba->fs, ba->env));

    // Idempotence: a structure unifies with itself and gains nothing.
    auto aa = fs::unify(rc.a, rc.a, rc.env);
    REQUIRE(aa.has_value());
    CHECK(canon(aa->fs, aa->env) == canon(rc.a, aa->env));

    // Identity: the empty structure changes nothing.
    auto ae = fs::unify(rc.a, {}, rc.env);
    REQUIRE(ae.has_value());
    CHECK(canon(ae->fs, ae->env) == canon(rc.a, ae->env));

    // Associativity: merging three structures is order-independent.
    auto left = ab ? fs::unify(ab->fs, rc.c, ab->env) : std::nullopt;
    auto bc = fs::unify(rc.b, rc.c, rc.env);
    auto right = bc ? fs::unify(rc.a, bc->fs, bc->env) : std::nullopt;
    REQUIRE(left.has_value() == right.has_value());
    if (left) CHECK(canon(left->fs, left->env) == canon(right->fs, right->env));

    // Absorption: re-unifying with an input is a fixed point.
    if (ab) {
      auto again = fs::unify(ab->fs, rc.a, ab->env);
      REQUIRE(again.has_value());
      CHECK(canon(again->fs, again->env) == canon(ab->fs, ab->env));
    }
  }
}
