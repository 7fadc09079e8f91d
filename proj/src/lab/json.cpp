#include <algorithm>

#include "gplab/lab.hpp"

namespace gplab {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const NatSet& a, std::size_t max_members) {
  Json j;
  j["window"] = a.hi();
  j["size"] = a.size();
  Json m = Json::array();
  std::size_t n = 0;
  for (Index v : a) {
    if (n++ == max_members) break;
    m.push_back(v);
  }
  j["members"] = std::move(m);
  if (a.size() > max_members) j["truncated"] = true;
  return j;
}

Json to_json(const GpWitness& w) {
  return {{"n", w.n}, {"m", w.m}, {"length", w.length}, {"elements", w.elements()}};
}

Json to_json(const GeoArithWitness& w) {
  return {{"a", w.a}, {"c", w.c}, {"d", w.d}, {"length", w.length}, {"elements", w.elements()}};
}

Json to_json(const ApWitness& w) {
  return {{"start", w.start}, {"step", w.step}, {"length", w.length}};
}

Json to_json(const FsSpec& fs) {
  Json j;
  j["generators"] = fs.generators;
  if (!fs.generators.empty()) j["sums"] = fs_expand(fs).to_vector();
  return j;
}

Json to_json(const TranslateWitness& w) {
  return {{"N", w.n_mod}, {"t", w.t},          {"gcd", w.g}, {"K", w.k},
          {"F_prime", w.f_prime}, {"f0", w.f0}, {"a", w.a},  {"b", w.b},
          {"c", w.c}};
}

Json to_json(const DensityProfile& p) {
  Json j;
  j["kind"] = DensityProfile::kind;
  j["coset"] = p.coset.str();
  j["s_bound"] = p.s_bound;
  j["window"] = p.window.hi;
  j["summary"] = to_json(p.summary);
  Json e = Json::array();
  for (const auto& en : p.entries)
    e.push_back({{"grid", en.grid.str()},
                 {"size", en.test_set.size()},
                 {"best_dilation", en.best_dilation},
                 {"ratio", to_json(en.ratio)}});
  j["entries"] = std::move(e);
  return j;
}

Json to_json(const ComponentDecomposition& c) {
  Json j{{"n", c.n}, {"d", c.d}, {"finite_period", c.finite_period}};
  if (!c.labels.empty()) j["labels"] = c.labels;
  return j;
}

Json to_json(const DiagonalOrbitReport& r) {
  Json sizes = Json::array();
  for (const auto& c : r.components) sizes.push_back(c.size());
  return {{"k", r.k},
          {"m", r.m},
          {"M", r.lcm_m},
          {"expected_components", r.expected_components},
          {"closure_size", r.closure.size()},
          {"component_sizes", std::move(sizes)},
          {"disjoint", r.disjoint},
          {"covers", r.covers},
          {"count_matches", r.count_matches},
          {"cyclic", r.cyclic},
          {"invariant", r.invariant},
          {"transitive", r.transitive},
          {"closure_minimal", r.closure_minimal}};
}

Json to_json(const ThicknessCell& c) {
  Json j{{"U", c.u}, {"n", c.n}, {"cond1", c.cond1}, {"cond4", c.cond4}, {"cond5", c.cond5}};
  if (c.cond4_counter_x) j["cond4_counter_x"] = *c.cond4_counter_x;
  return j;
}

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"t", row.t},
                    {"gcd", row.g},
                    {"K", row.k},
                    {"bound", to_json(row.bound)},
                    {"observed", to_json(row.observed)},
                    {"grids", row.grids},
                    {"below", row.below},
                    {"worst_grid", row.worst_grid},
                    {"worst_dilation", row.worst_dilation}});
  return {{"N", r.n_mod}, {"r", r.r}, {"rows", std::move(rows)}};
}

Json to_json(const CoverReport& r) {
  return {{"generators", r.generators.generators},
          {"F0", r.f0},
          {"margin", r.margin},
          {"covered", r.covered},
          {"uncovered", r.uncovered},
          {"translates", r.translates},
          {"bound", r.bound}};
}

Json to_json(const RankReport& r) {
  Json j{{"window", r.window.hi}, {"cap", r.cap}};
  j["rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const ThickSweep& s) {
  Json d = Json::object();
  for (auto [dil, count] : s.dilations) d[std::to_string(dil)] = count;
  Json j{{"subsets", s.subsets},     {"residue_sets", s.signatures}, {"failures", s.failures},
         {"dilations", std::move(d)}, {"sampled", s.sampled},         {"sample_failures", s.sample_failures}};
  if (s.first_failure) j["first_failure"] = *s.first_failure;
  return j;
}

Verdict SuiteReport::overall() const noexcept {
  Verdict v = Verdict::Pass;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::Fail) return Verdict::Fail;
    if (c.verdict == Verdict::Inconclusive) v = Verdict::Inconclusive;
  }
  return v;
}

Json to_json(const SuiteReport& r, bool with_timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"id", c.id},
           {"params", c.params},
           {"verdict", std::string(to_string(c.verdict))},
           {"witness", c.witness}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (with_timing) j["seconds"] = c.seconds;
    checks.push_back(std::move(j));
  }
  Json j{{"suite", r.suite},
         {"verdict", std::string(to_string(r.overall()))},
         {"environment", r.environment},
         {"checks", std::move(checks)}};
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

Json make_report(const std::vector<SuiteReport>& suites, bool with_timing) {
  Json s = Json::array();
  for (const auto& r : suites) s.push_back(to_json(r, with_timing));
  return {{"schema", std::string(kReportSchema)}, {"suites", std::move(s)}};
}

std::vector<std::string> validate_report(const Json& doc) {
  std::vector<std::string> errs;
  auto need = [&](const Json& j, const char* key, auto pred, const std::string& where) {
    if (!j.is_object() || !j.contains(key) || !pred(j.at(key))) {
      errs.push_back(where + ": missing or malformed '" + key + "'");
      return false;
    }
    return true;
  };
  auto is_str = [](const Json& v) { return v.is_string(); };
  auto is_arr = [](const Json& v) { return v.is_array(); };
  auto is_obj = [](const Json& v) { return v.is_object(); };
  auto is_verdict = [](const Json& v) {
    return v.is_string() && (v == "pass" || v == "fail" || v == "inconclusive");
  };
  if (!need(doc, "schema", is_str, "report")) return errs;
  if (doc["schema"] != kReportSchema) errs.push_back("report: unknown schema " + doc["schema"].dump());
  if (!need(doc, "suites", is_arr, "report")) return errs;
  for (std::size_t i = 0; i < doc["suites"].size(); ++i) {
    const Json& s = doc["suites"][i];
    std::string where = "suites[" + std::to_string(i) + "]";
    need(s, "suite", is_str, where);
    need(s, "verdict", is_verdict, where);
    need(s, "environment", is_obj, where);
    if (!need(s, "checks", is_arr, where)) continue;
    for (std::size_t k = 0; k < s["checks"].size(); ++k) {
      const Json& c = s["checks"][k];
      std::string cw = where + ".checks[" + std::to_string(k) + "]";
      need(c, "id", is_str, cw);
      need(c, "params", is_obj, cw);
      need(c, "verdict", is_verdict, cw);
      need(c, "witness", is_obj, cw);
    }
  }
  return errs;
}

}  // namespace gplab
