#include "graphreg/report_json.hpp"

namespace graphreg {

using nlohmann::json;

json to_json(const RegularityReport& r) {
  json j;
  j["subject"] = r.subject;
  j["holds"] = r.holds;
  if (r.constant_count)
    j["constant"] = *r.constant_count;
  else
    j["constant"] = nullptr;
  if (r.witness) {
    j["witness"] = {{"kappa1", r.witness->kappa1},
                    {"kappa2", r.witness->kappa2},
                    {"counts", {r.witness->count1, r.witness->count2}}};
  } else {
    j["witness"] = nullptr;
  }
  j["levels"] = json::array();
  for (const auto& lv : r.levels) {
    json l = {{"m", lv.m},
              {"n", lv.n},
              {"mode", lv.mode},
              {"types_tested", lv.types_tested},
              {"holds", lv.holds}};
    if (!lv.failing_type.empty()) l["failing_type"] = lv.failing_type;
    j["levels"].push_back(l);
  }
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json to_json(const TypeTransversal& tv, bool include_members) {
  json j;
  j["order"] = {tv.m, tv.n};
  j["filters"] = tv.filters;
  j["count"] = tv.members.size();
  if (include_members) {
    j["members"] = json::array();
    for (const auto& t : tv.members) j["members"].push_back(type_to_text(t));
  }
  return j;
}

json to_json(const AxiomsReport& r) {
  json j;
  j["pls"] = r.pls;
  if (r.pls) {
    j["s"] = r.s;
    j["t"] = r.t;
  } else {
    j["violation_pls"] = r.pls_violation;
  }
  j["gq"] = r.gq;
  if (!r.gq && !r.gq_violation.empty()) j["violation_gq"] = r.gq_violation;
  j["pq"] = r.pq;
  if (r.pq)
    j["mu"] = r.mu;
  else if (!r.pq_violation.empty())
    j["violation_pq"] = r.pq_violation;
  return j;
}

json to_json(const CameronEvaluation& ev) {
  json j;
  j["lhs_printed"] = ev.lhs ? json(ev.lhs->str()) : json(nullptr);
  j["rhs"] = ev.rhs.str();
  j["printed_denominator_zero"] = ev.printed_denominator_zero;
  j["printed_denominator_nonpositive"] = ev.printed_denominator_nonpositive;
  j["printed_holds"] = ev.lhs ? json(ev.printed_holds) : json(nullptr);
  j["equality"] = ev.equality;
  j["c"] = ev.c ? json(ev.c->str()) : json(nullptr);
  j["c_division_by_zero"] = ev.c_division_by_zero;
  j["triads_per_pair"] = ev.triads_per_pair.str();
  return j;
}

json to_json(const SrgParams& p) {
  return {{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json histogram_json(const std::map<long long, long long>& hist) {
  json j = json::array();
  for (const auto& [centers, triads] : hist)
    j.push_back({{"centers", centers}, {"triads", triads}});
  return j;
}

json type_to_json(const GraphType& t) {
  json edges = json::array();
  for (auto [u, v] : edges_of(t.theta)) edges.push_back({u, v});
  return {{"n", t.theta.order()}, {"theta", edges}, {"base", t.base}};
}

GraphType type_from_json(const json& j) {
  GraphType t;
  t.theta = Graph(j.at("n").get<int>());
  for (const auto& e : j.at("theta"))
    t.theta.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  t.base = j.at("base").get<std::vector<int>>();
  t.validate();
  return t;
}

}  // namespace graphreg
