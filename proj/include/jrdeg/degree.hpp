#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "jrdeg/instance.hpp"
#include "jrdeg/rational.hpp"

namespace jrdeg {

// A cohesive group attaining a degree minimum: `voters` is a group of exactly
// cohesive_threshold(level) voters who all approve every candidate in
// `shared_candidates` (|shared_candidates| = level); represented_count of them
// approve at least `level` committee members.
struct CohesiveWitness {
  int level = 0;
  std::vector<int> shared_candidates;
  std::vector<int> voters;
  int represented_count = 0;
};

// Degrees are nullopt ("undefined") when the instance has no cohesive group
// of any level; otherwise the witness for a computed degree is present.
struct DegreeReport {
  std::optional<int> jr_degree;
  std::optional<int> ejr_degree;
  std::optional<CohesiveWitness> jr_witness;
  std::optional<CohesiveWitness> ejr_witness;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// min over candidates c with enough approvers of
//   t1 - min(t1, #unrepresented approvers of c),  t1 = ceil(n/k).
// Ties: the smallest candidate id wins; witness voters list unrepresented
// ids first (ascending), then represented ids (ascending).
DegreeReport jr_degree(const ApprovalInstance& inst, const Committee& w);

// min over levels l and candidate l-sets T with |N(T)| >= ceil(l*n/k) of
//   t_l - min(t_l, #{i in N(T) : sat_i < l}).
// Tie order: value, then smaller level, then lexicographically smaller T.
// The subset search prunes T whenever N(T) is already too small for |T|,
// which is safe because N(T) only shrinks and thresholds only grow.
DegreeReport ejr_degree(const ApprovalInstance& inst, const Committee& w,
                        std::uint64_t node_budget = kDefaultNodeBudget);

// jr_degree and ejr_degree merged into one report.
DegreeReport compute_degrees(const ApprovalInstance& inst, const Committee& w,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Reference oracle: enumerates every voter subset directly (2^n), no T-set
// shortcut. Value-only (no witness). Requires n <= voter_cap and m <= 64.
DegreeReport ejr_degree_naive(const ApprovalInstance& inst, const Committee& w,
                              int voter_cap = 16);

// Degree >= 1, or vacuously true when no cohesive group exists.
bool satisfies_jr(const ApprovalInstance& inst, const Committee& w);
bool satisfies_ejr(const ApprovalInstance& inst, const Committee& w,
                   std::uint64_t node_budget = kDefaultNodeBudget);

// f(l) = min over eligible candidate l-sets T of the average satisfaction of
// the t_l least satisfied voters of N(T); defined for levels with a cohesive
// group. Exact rationals.
struct ProportionalityProfile {
  std::map<int, Rational> by_level;
};

ProportionalityProfile proportionality_profile(const ApprovalInstance& inst, const Committee& w,
                                               std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace jrdeg
