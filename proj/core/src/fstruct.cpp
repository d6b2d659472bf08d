#include "creogen/fstruct.hpp"

#include <cassert>

namespace creogen::fs {

const FeatureValue* Bindings::lookup(const std::string& name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

void Bindings::bind(const std::string& name, FeatureValue v) {
  if (v.is_var() && v.text == name) return;
  table_.insert_or_assign(name, std::move(v));
}

FeatureValue Bindings::walk(FeatureValue v) const {
  // Chains are finite by construction (we only ever bind a walked,
  // unbound variable), but guard against pathological input anyway.
  for (int steps = 0; v.is_var() && steps < 4096; ++steps) {
    const FeatureValue* next = lookup(v.text);
    if (!next) break;
    v = *next;
  }
  return v;
}

std::optional<Unified> unify(const FeatureStructure& a,
                             const FeatureStructure& b, Bindings env) {
  FeatureStructure out = a;
  for (const auto& [feat, raw] : b) {
    auto it = out.find(feat);
    if (it == out.end()) {
      out.emplace(feat, raw);
      continue;
    }
    FeatureValue x = env.walk(it->second);
    FeatureValue y = env.walk(raw);
    if (x.is_atom() && y.is_atom()) {
      if (x.text != y.text) return std::nullopt;
      it->second = x;
    } else if (x.is_var() && y.is_var()) {
      if (x.text != y.text) env.bind(x.text, y);
      it->second = y;
    } else if (x.is_var()) {
      env.bind(x.text, y);
      it->second = y;
    } else {
      env.bind(y.text, x);
      it->second = x;
    }
  }
  return Unified{std::move(out), std::move(env)};
}

FeatureStructure overwrite(FeatureStructure fsr, const std::string& f,
                           FeatureValue v) {
  fsr.insert_or_assign(f, std::move(v));
  return fsr;
}

FeatureStructure remove_feature(FeatureStructure fsr, const std::string& f) {
  fsr.erase(f);
  return fsr;
}

FeatureStructure resolve(const FeatureStructure& fsr, const Bindings& env) {
  FeatureStructure out;
  for (const auto& [feat, v] : fsr) out.emplace(feat, env.walk(v));
  return out;
}

std::string to_string(const FeatureValue& v) { return v.text; }

std::string to_string(const FeatureStructure& fsr) {
  std::string out = "{";
  bool first = true;
  for (const auto& [feat, v] : fsr) {
    if (!first) out += ", ";
    first = false;
    out += feat;
    out += '=';
    out += v.text;
  }
  out += '}';
  return out;
}

}  // namespace creogen::fs
