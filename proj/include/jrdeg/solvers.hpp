#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "jrdeg/degree.hpp"
#include "jrdeg/instance.hpp"
#include "jrdeg/rules.hpp"

namespace jrdeg {

struct SolverOptions {
  std::uint64_t budget = 10'000'000;  // max committees per enumeration
  int threads = 1;
  // Drop all but the min(multiplicity, k) smallest-id candidates of every
  // identical-approver-set class before enumerating. Committees and degrees
  // are unaffected (no committee or witness set needs more than k clones).
  bool collapse_duplicates = false;
};

struct ExistsResult {
  std::optional<Committee> committee;  // lexicographically first hit
  // Lex positions up to and including the deciding committee (the full count
  // when there is no hit); identical for every thread count.
  std::uint64_t enumerated = 0;
};

struct MaxDegreeResult {
  std::optional<int> degree;  // nullopt when the instance has no cohesive group
  Committee committee;        // smallest lex rank among maximizers
  std::uint64_t enumerated = 0;
};

// First committee (lex order) whose JR/EJR degree is >= c, if any. Instances
// without a cohesive group have only undefined degrees: no hit. Throws
// BudgetExceeded when C(m,k) exceeds opts.budget.
ExistsResult exists_committee_with_jr_degree(const ApprovalInstance& inst, int c,
                                             const SolverOptions& opts = {});
ExistsResult exists_committee_with_ejr_degree(const ApprovalInstance& inst, int c,
                                              const SolverOptions& opts = {});

MaxDegreeResult brute_force_max_jr(const ApprovalInstance& inst, const SolverOptions& opts = {});
MaxDegreeResult brute_force_max_ejr(const ApprovalInstance& inst, const SolverOptions& opts = {});

// C(m, k), saturating at cap + 1 to signal "more than cap".
std::uint64_t committee_count(int m, int k, std::uint64_t cap);

struct SolveResult {
  std::string rule;
  Committee committee;
  DegreeReport degrees;
  bool c_max_proven = false;
  std::uint64_t enumerated = 0;
  // Top of the degree range the iterative search sweeps: ceil(n/k), the
  // largest degree any committee can reach. Set by mdjr/mdejr only.
  // search_limit_raised records when the ceiling exceeds floor(n/k), i.e. the
  // sweep runs one level beyond the bound a floor-based reading would use.
  std::optional<int> search_limit;
  bool search_limit_raised = false;
  std::optional<LsPavTrace> trace;
};

// Start from greedy_av, then raise a target degree c from ceil(n/k^2) while a
// committee of JR degree >= c exists, keeping the last hit. The loop runs to
// ceil(n/k) (the largest possible degree), so the final committee attains the
// maximum JR degree; c_max_proven reports that.
SolveResult mdjr_rule(const ApprovalInstance& inst, const SolverOptions& opts = {});

// Same scheme for EJR: start from (n/(k(k+1)))-LS-PAV, raise c from
// ceil(n/(k(k+1)^2)).
SolveResult mdejr_rule(const ApprovalInstance& inst, const SolverOptions& opts = {});

}  // namespace jrdeg
