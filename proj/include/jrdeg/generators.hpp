#pragma once

#include <cstdint>

#include "jrdeg/cnf.hpp"
#include "jrdeg/instance.hpp"
#include "jrdeg/rational.hpp"
#include "jrdeg/setcover.hpp"

namespace jrdeg {

// splitmix64 (Steele, Lea, Flood): tiny, deterministic, identical everywhere.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// 4 voters, 4 candidates, k = 1: voter i approves candidates 1..i. The
// singleton committees {c1}..{c4} have degrees 4, 3, 2, 1.
ApprovalInstance gen_tiny();

// 9 voters, 6 candidates, k = 3. Committee {c1,c2,c3} covers everyone
// (degree 3); {c4,c5,c6} gives three voters nothing (degree 2) but serves
// its supporters better on average.
ApprovalInstance gen_prop_example();

// Overlapping-block family, P >= 2: L+2 blocks of P^2 voters arranged in a
// ring, consecutive blocks sharing 1 voter (P at the two seams), block i
// approving its own pair {c_{2i-1}, c_{2i}}; k = 2L leaves one block's pair
// out of every committee.
ApprovalInstance gen_appendix_b(int P);

// PAV counterexample family, p >= 1: n = (3p+1)^2 voters, k = 3p+1. PAV
// prefers a committee of EJR degree 3p over the optimum 3p+1.
ApprovalInstance gen_pav_failure(int p);

// Committee election from a sparse CNF (every variable pair sharing at most
// one clause; checked). k = vars+1; satisfiable formulas give maximum JR
// degree clauses+vars, unsatisfiable ones at most clauses.
ApprovalInstance sparse_sat_to_voting(const CnfFormula& f);

// Element voters plus an equal-sized bloc of approve-everything voters;
// k = budget. A cover of size budget exists iff some committee reaches JR
// degree ceil(2u/budget). Requires budget >= 2, budget <= #subsets, and
// every element covered by some subset.
ApprovalInstance set_cover_to_mdjr(const SetCoverInstance& sc);

// Normalization stage of the EJR-hardness reduction: appends empty subsets
// until budget < #subsets, pads the universe to a multiple of 9 (dummies
// added to every subset), and, only when some pair violates
// 75*|Si cap Sj| <= u, adds a 74u-element disjoint subset and one extra
// budget unit.
SetCoverInstance preprocess_for_mdejr(const SetCoverInstance& sc);

// Full EJR-hardness reduction (preprocess_for_mdejr, then the committee
// construction with shared candidate c*, decoys d1..d3, and six decoy voter
// blocks). Requires budget >= 2 and every element covered.
ApprovalInstance set_cover_to_mdejr(const SetCoverInstance& sc);

// Independent approvals: voter i approves candidate c with probability
// exactly p (a rational in [0,1]), decided by rejection sampling on
// splitmix64 draws in row-major (voter, candidate) order.
ApprovalInstance gen_random(int n, int m, int k, const Rational& p, std::uint64_t seed);

}  // namespace jrdeg
