#include "jrdeg/reports.hpp"

namespace jrdeg {

nlohmann::json to_json(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}};
}

nlohmann::json to_json(const CohesiveWitness& w) {
  return {{"level", w.level},
          {"candidates", w.shared_candidates},
          {"voters", w.voters},
          {"represented", w.represented_count}};
}

nlohmann::json to_json(const DegreeReport& rep) {
  nlohmann::json j;
  j["jr_degree"] = rep.jr_degree ? nlohmann::json(*rep.jr_degree) : nlohmann::json(nullptr);
  j["ejr_degree"] = rep.ejr_degree ? nlohmann::json(*rep.ejr_degree) : nlohmann::json(nullptr);
  j["jr_witness"] = rep.jr_witness ? to_json(*rep.jr_witness) : nlohmann::json(nullptr);
  j["ejr_witness"] = rep.ejr_witness ? to_json(*rep.ejr_witness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const LsPavTrace& trace) {
  nlohmann::json swaps = nlohmann::json::array();
  for (const LsPavSwap& s : trace.swaps)
    swaps.push_back({{"removed", s.removed}, {"added", s.added}, {"delta", to_json(s.delta)}});
  return {{"initial", trace.initial.members},
          {"swap_count", trace.swaps.size()},
          {"swaps", swaps},
          {"final", trace.final_committee.members}};
}

nlohmann::json to_json(const SolveResult& res) {
  nlohmann::json j = to_json(res.degrees);
  j["rule"] = res.rule;
  j["committee"] = res.committee.members;
  j["c_max_proven"] = res.c_max_proven;
  j["enumerated"] = res.enumerated;
  j["search_limit"] =
      res.search_limit ? nlohmann::json(*res.search_limit) : nlohmann::json(nullptr);
  j["search_limit_raised"] = res.search_limit ? nlohmann::json(res.search_limit_raised)
                                              : nlohmann::json(nullptr);
  j["trace"] = res.trace ? to_json(*res.trace) : nlohmann::json(nullptr);
  return j;
}

}  // namespace jrdeg
