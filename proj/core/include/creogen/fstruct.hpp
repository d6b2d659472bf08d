#ifndef CREOGEN_FSTRUCT_HPP
#define CREOGEN_FSTRUCT_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace creogen::fs {

// A value is either a ground atom or a named variable. Variable names start
// with an uppercase letter (the convention the grammar files use).
struct FeatureValue {
  enum class Kind { atom, var };
  Kind kind = Kind::atom;
  std::string text;

  static FeatureValue atom(std::string s) {
    return {Kind::atom, std::move(s)};
  }
  static FeatureValue var(std::string s) { return {Kind::var, std::move(s)}; }

  bool is_atom() const { return kind == Kind::atom; }
  bool is_var() const { return kind == Kind::var; }

  friend auto operator<=>(const FeatureValue&, const FeatureValue&) = default;
};

// Flat (depth one) feature structure: feature name -> value. std::map keeps
// features in lexicographic order, which fixes the rendering order.
using FeatureStructure = std::map<std::string, FeatureValue>;

// Variable bindings, threaded explicitly through every operation.
class Bindings {
 public:
  const FeatureValue* lookup(const std::string& name) const;

  // Binds name -> v. Self bindings are dropped, so chains stay finite.
  void bind(const std::string& name, FeatureValue v);

  // Follows var chains until an atom or an unbound var.
  FeatureValue walk(FeatureValue v) const;

  bool empty() const { return table_.empty(); }
  std::size_t size() const { return table_.size(); }
  const std::map<std::string, FeatureValue>& table() const { return table_; }

 private:
  std::map<std::string, FeatureValue> table_;
};

struct Unified {
  FeatureStructure fs;
  Bindings env;
};

// Non-destructive unification. The result carries the union of the feature
// sets; a clash of distinct atoms yields nullopt (failure is a value).
std::optional<Unified> unify(const FeatureStructure& a,
                             const FeatureStructure& b, Bindings env);

// Sets feature f to v regardless of prior content.
FeatureStructure overwrite(FeatureStructure fsr, const std::string& f,
                           FeatureValue v);

// Drops feature f if present.
FeatureStructure remove_feature(FeatureStructure fsr, const std::string& f);

// Replaces every variable by its binding, walking chains to the end.
FeatureStructure resolve(const FeatureStructure& fsr, const Bindings& env);

std::string to_string(const FeatureValue& v);
// Renders "{f=atom, g=Var}" with features in lexicographic order.
std::string to_string(const FeatureStructure& fsr);

}  // namespace creogen::fs

#endif
