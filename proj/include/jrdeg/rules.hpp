#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jrdeg/instance.hpp"
#include "jrdeg/rational.hpp"

namespace jrdeg {

// sum over voters of H(|A_i cap W|), H(s) = 1 + 1/2 + ... + 1/s. Exact.
Rational pav_score(const ApprovalInstance& inst, const Committee& w);

// PAV score change of swapping c_minus (in W) for c_plus (not in W), computed
// from the marginal formula:
//   sum_{i: c+ in A_i, c- not in A_i} 1/(sat_i + 1)
//   - sum_{i: c+ not in A_i, c- in A_i} 1/sat_i.
Rational swap_delta(const ApprovalInstance& inst, const Committee& w, int c_plus, int c_minus);

// k rounds of "add the candidate approved by the most not-yet-covered
// voters", smallest id on ties.
Committee greedy_av(const ApprovalInstance& inst);

struct LsPavSwap {
  int removed = 0;
  int added = 0;
  Rational delta;
};

struct LsPavTrace {
  Committee initial;
  std::vector<LsPavSwap> swaps;
  Committee final_committee;
};

struct LsPavResult {
  Committee committee;
  LsPavTrace trace;
};

// Local search: repeatedly apply the first swap (lexicographic in
// (c_plus, c_minus)) whose delta reaches lambda, starting from `initial`
// (default {1..k}). lambda must be >= 0; at lambda = 0 only strictly
// improving swaps are taken, otherwise zero-delta swaps would cycle.
LsPavResult ls_pav(const ApprovalInstance& inst, const Rational& lambda,
                   std::optional<Committee> initial = std::nullopt);

// Seeded uniform size-k candidate subset (partial Fisher-Yates over a fixed
// 64-bit stream): same seed, same committee, on every platform. Meant as an
// alternative ls_pav starting point for experiments.
Committee random_committee(const ApprovalInstance& inst, std::uint64_t seed);

// Exact PAV: enumerate all committees, maximize the score, first committee in
// lexicographic order on ties. Throws BudgetExceeded if C(m,k) > budget.
Committee pav_exact(const ApprovalInstance& inst, std::uint64_t budget = 10'000'000);

}  // namespace jrdeg
