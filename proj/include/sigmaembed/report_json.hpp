#ifndef SIGMAEMBED_REPORT_JSON_HPP
#define SIGMAEMBED_REPORT_JSON_HPP

#include <json.hpp>

#include "harness.hpp"

namespace sigmaembed {

using Json = nlohmann::ordered_json;

inline Status status_from_string(const std::string& s) {
  if (s == "hypothesis_fails") return Status::HypothesisFails;
  if (s == "vacuous") return Status::Vacuous;
  if (s == "holds") return Status::Holds;
  if (s == "counterexample") return Status::Counterexample;
  throw ValidationError("unknown status: " + s);
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["nonvacuous"] = v.nonvacuous;
  j["detail"] = v.detail;
  Json w = Json::array();
  for (auto& [k, val] : v.witnesses) w.push_back({{"role", k}, {"value", val}});
  j["witnesses"] = w;
  j["seconds"] = v.seconds;
  return j;
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.status = status_from_string(j.at("status").get<std::string>());
  v.nonvacuous = j.at("nonvacuous").get<bool>();
  v.detail = j.at("detail").get<std::string>();
  for (auto& w : j.at("witnesses"))
    v.witnesses.emplace_back(w.at("role").get<std::string>(),
                             w.at("value").get<std::string>());
  v.seconds = j.at("seconds").get<double>();
  return v;
}

inline Json to_json(const SweepReport& r) {
  Json j;
  j["schema"] = 1;
  j["target"] = r.target;
  j["max_order"] = r.max_order;
  Json cases = Json::array();
  for (const SweepCase& c : r.cases)
    cases.push_back({{"group", c.group},
                     {"sigma", c.sigma},
                     {"subject", c.subject},
                     {"verdict", to_json(c.verdict)}});
  j["cases"] = cases;
  j["counts"] = {{"hypothesis_fails", r.count(Status::HypothesisFails)},
                 {"vacuous", r.count(Status::Vacuous)},
                 {"holds", r.count(Status::Holds)},
                 {"nonvacuous_holds", r.nonvacuous_holds()},
                 {"counterexamples", r.count(Status::Counterexample)}};
  j["notes"] = r.notes;
  j["seconds"] = r.seconds;
  return j;
}

inline SweepReport sweep_report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != 1)
    throw ValidationError("unsupported report schema");
  SweepReport r;
  r.target = j.at("target").get<std::string>();
  r.max_order = j.at("max_order").get<uint64_t>();
  for (auto& c : j.at("cases"))
    r.cases.push_back({c.at("group").get<std::string>(),
                       c.at("sigma").get<std::string>(),
                       c.at("subject").get<std::string>(),
                       verdict_from_json(c.at("verdict"))});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.seconds = j.at("seconds").get<double>();
  return r;
}

inline Json to_json(const LemmaReport& r) {
  Json j;
  j["schema"] = 1;
  j["group"] = r.group_name;
  j["sigma"] = r.sigma;
  Json lemmas = Json::array();
  for (const LemmaResult& l : r.lemmas)
    lemmas.push_back({{"name", l.name},
                      {"cases", l.cases},
                      {"violations", l.violations},
                      {"budget_exhausted", l.budget_exhausted}});
  j["lemmas"] = lemmas;
  j["seconds"] = r.seconds;
  return j;
}

}  // namespace sigmaembed

#endif
