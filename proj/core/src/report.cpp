#include "creogen/report.hpp"

#include <json.hpp>

namespace creogen::report {

using nlohmann::json;

std::string generation_json(const gen::GenerationResult& r) {
  json j;
  j["fixture"] = r.fixture;
  j["status"] = "ok";
  j["text"] = r.text;
  j["sentences"] = json::array();
  for (const auto& s : r.sentences) {
    json js;
    js["root"] = s.root_concept;
    js["text"] = s.text;
    js["tokens"] = json::array();
    for (const auto& t : s.tokens)
      js["tokens"].push_back({{"text", t.text},
                              {"attach", tag::to_string(t.attach)},
                              {"origin", t.origin},
                              {"address", tag::to_string(t.address)}});
    js["derivation"] = json::array();
    for (const auto& step : s.derivation.steps) {
      json jd;
      jd["op"] = deriv::to_string(step.op);
      jd["target"] = step.target;
      jd["address"] = tag::to_string(step.address);
      jd["argument"] = step.argument;
      if (!step.origin.empty()) jd["origin"] = step.origin;
      js["derivation"].push_back(std::move(jd));
    }
    js["result"] = s.derivation.result;
    j["sentences"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string error_json(const std::string& fixture,
                       const std::vector<Error>& errors) {
  json j;
  j["fixture"] = fixture;
  j["status"] = "error";
  j["errors"] = json::array();
  for (const auto& e : errors) {
    json je;
    je["code"] = errc_name(e.code);
    je["detail"] = e.detail;
    if (!e.subject.empty()) je["subject"] = e.subject;
    if (!e.address.empty()) je["address"] = tag::to_string(e.address);
    j["errors"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

}  // namespace creogen::report
