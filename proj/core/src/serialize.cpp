#include "permpoly/serialize.hpp"

#include <json.hpp>

namespace permpoly {

using nlohmann::json;

AnalysisReport analyze(const SparsePoly& f) {
  AnalysisReport report;
  report.perm = completeness_level(f);
  if (report.perm.is_permutation) report.cycles = cycle_type(value_table(f));
  return report;
}

std::string to_json(const AnalysisReport& report) {
  json j;
  j["is_permutation"] = report.perm.is_permutation;
  j["level"] = report.perm.level;
  if (report.cycles) {
    json ct = json::array();
    for (const auto& [len, count] : report.cycles->lengths)
      ct.push_back(json::array({len, count}));
    j["cycle_type"] = ct;
    j["order"] = report.cycles->order;
    j["fixed_points"] = report.cycles->fixed_points;
  } else {
    j["cycle_type"] = nullptr;
    j["order"] = nullptr;
    j["fixed_points"] = nullptr;
  }
  json w;
  w["collision"] = report.perm.collision_witness
                       ? json::array({report.perm.collision_witness->a,
                                      report.perm.collision_witness->b})
                       : json(nullptr);
  if (report.perm.level_failure) {
    w["level_failure"] = {
        {"k", report.perm.level_failure->k},
        {"pair", json::array({report.perm.level_failure->collision.a,
                              report.perm.level_failure->collision.b})}};
  } else {
    w["level_failure"] = nullptr;
  }
  j["witnesses"] = w;
  return j.dump();
}

std::string to_json(const GroupCheckReport& report) {
  json j;
  j["law"] = report.law;
  j["base_field"] = report.base_q;
  j["pairs_checked"] = report.checked_pairs;
  j["holds"] = report.holds();
  if (report.counterexample) {
    json ce;
    ce["c"] = report.counterexample->c;
    ce["d"] = report.counterexample->d ? json(*report.counterexample->d) : json(nullptr);
    ce["at"] = report.counterexample->at;
    j["counterexample"] = ce;
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump();
}

}  // namespace permpoly
