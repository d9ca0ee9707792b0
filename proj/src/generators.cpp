#include "jrdeg/generators.hpp"

#include <algorithm>
#include <cstdlib>

namespace jrdeg {

ApprovalInstance gen_tiny() {
  std::vector<std::vector<int>> ballots;
  for (int i = 1; i <= 4; ++i) {
    std::vector<int> b;
    for (int c = 1; c <= i; ++c) b.push_back(c);
    ballots.push_back(std::move(b));
  }
  return ApprovalInstance(4, 4, 1, std::move(ballots));
}

ApprovalInstance gen_prop_example() {
  // approver lists: c1 {1..5}, c2 {4..8}, c3 {7,8,9,1,2}, c4=c5=c6 {1,2,4,5,7,8}
  std::vector<std::vector<int>> approvers = {
      {1, 2, 3, 4, 5}, {4, 5, 6, 7, 8}, {1, 2, 7, 8, 9},
      {1, 2, 4, 5, 7, 8}, {1, 2, 4, 5, 7, 8}, {1, 2, 4, 5, 7, 8}};
  std::vector<std::vector<int>> ballots(9);
  for (int c = 0; c < 6; ++c)
    for (int v : approvers[c]) ballots[v - 1].push_back(c + 1);
  return ApprovalInstance(9, 6, 3, std::move(ballots));
}

ApprovalInstance gen_appendix_b(int P) {
  if (P < 2) throw ValidationError("gen_appendix_b: P must be >= 2");
  long long L = 2LL * P * P - 2 * P;
  long long k = 2 * L;
  long long m = 2 * (L + 2);
  long long psq = static_cast<long long>(P) * P;
  long long n = (L + 2) * psq - 2 * P - L;
  if (n > 2'000'000 || m > 100'000)
    throw ValidationError("gen_appendix_b: P too large for desk-scale instances");

  std::vector<std::vector<int>> ballots(static_cast<std::size_t>(n));
  auto add_block = [&](long long block, long long from, long long to) {  // voters 1-based
    for (long long v = from; v <= to; ++v) {
      ballots[v - 1].push_back(static_cast<int>(2 * block - 1));
      ballots[v - 1].push_back(static_cast<int>(2 * block));
    }
  };
  for (long long i = 1; i <= L + 1; ++i) {
    long long start = (i - 1) * (psq - 1) + 1;
    add_block(i, start, start + psq - 1);
  }
  add_block(L + 2, (L + 1) * psq - L - P + 1, n);
  add_block(L + 2, 1, P);
  return ApprovalInstance(static_cast<int>(n), static_cast<int>(m), static_cast<int>(k),
                          std::move(ballots));
}

ApprovalInstance gen_pav_failure(int p) {
  if (p < 1) throw ValidationError("gen_pav_failure: p must be >= 1");
  long long n = static_cast<long long>(3 * p + 1) * (3 * p + 1);
  int m = 3 * p + 2;
  int k = 3 * p + 1;
  if (n > 2'000'000) throw ValidationError("gen_pav_failure: p too large for desk-scale instances");
  int d1 = 3 * p + 1, d2 = 3 * p + 2;

  std::vector<std::vector<int>> ballots;
  ballots.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= 3 * p; ++i) ballots.push_back({i, d1, d2});
  for (int i = 0; i < 3 * p + 2; ++i) ballots.push_back({d1, d2});
  for (int i = 1; i <= p; ++i) ballots.push_back({3 * i - 2, 3 * i - 1, 3 * i});
  std::vector<int> all_c;
  for (int c = 1; c <= 3 * p; ++c) all_c.push_back(c);
  for (long long i = 0; i < 9LL * p * p - p - 1; ++i) ballots.push_back(all_c);
  return ApprovalInstance(static_cast<int>(n), m, k, std::move(ballots));
}

ApprovalInstance sparse_sat_to_voting(const CnfFormula& f) {
  int vars = f.num_vars;
  int cls = static_cast<int>(f.clauses.size());
  if (vars < 1 || cls < 1)
    throw ValidationError("sparse_sat_to_voting: need at least one variable and one clause");
  if (!is_sparse(f))
    throw ValidationError("sparse_sat_to_voting: some variable pair shares two clauses");

  // candidates: literal candidates 2j-1 (x_j), 2j (not x_j); t_j = 2*vars + j;
  // s_i = 3*vars + i; d = 3*vars + cls + 1
  int m = 3 * vars + cls + 1;
  int k = vars + 1;
  long long n = static_cast<long long>(cls + vars) * (vars + 1);
  int d = 3 * vars + cls + 1;

  std::vector<std::vector<int>> ballots;
  ballots.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= vars; ++j)
    for (int rep = 0; rep < vars; ++rep) ballots.push_back({2 * j - 1, 2 * j, 2 * vars + j});
  for (int i = 1; i <= cls; ++i) {
    std::vector<int> b;
    for (int lit : f.clauses[i - 1]) b.push_back(lit > 0 ? 2 * lit - 1 : -2 * lit);
    b.push_back(3 * vars + i);
    for (int rep = 0; rep < vars; ++rep) ballots.push_back(b);
  }
  std::vector<int> d_ballot;
  for (int j = 1; j <= vars; ++j) d_ballot.push_back(2 * vars + j);
  for (int i = 1; i <= cls; ++i) d_ballot.push_back(3 * vars + i);
  d_ballot.push_back(d);
  for (int i = 0; i < cls; ++i) ballots.push_back(d_ballot);
  for (int j = 0; j < vars; ++j) ballots.push_back({d});
  return ApprovalInstance(static_cast<int>(n), m, k, std::move(ballots));
}

ApprovalInstance set_cover_to_mdjr(const SetCoverInstance& sc) {
  int u = sc.universe_size;
  int s = static_cast<int>(sc.subsets.size());
  if (sc.budget < 2) throw ValidationError("set_cover_to_mdjr: budget must be >= 2");
  if (sc.budget > s) throw ValidationError("set_cover_to_mdjr: budget exceeds the subset count");

  std::vector<std::vector<int>> ballots(static_cast<std::size_t>(2 * u));
  for (int j = 1; j <= s; ++j)
    for (int e : sc.subsets[j - 1]) ballots[e - 1].push_back(j);
  for (int i = 0; i < u; ++i)
    if (ballots[i].empty())
      throw ValidationError("set_cover_to_mdjr: element " + std::to_string(i + 1) +
                            " lies in no subset");
  std::vector<int> full;
  for (int j = 1; j <= s; ++j) full.push_back(j);
  for (int i = u; i < 2 * u; ++i) ballots[i] = full;
  return ApprovalInstance(2 * u, s, sc.budget, std::move(ballots));
}

SetCoverInstance preprocess_for_mdejr(const SetCoverInstance& sc) {
  if (sc.budget < 2) throw ValidationError("set_cover_to_mdejr: budget must be >= 2");
  int u = sc.universe_size;
  std::vector<std::vector<int>> subsets = sc.subsets;
  int budget = sc.budget;
  {
    std::vector<bool> covered(u + 1, false);
    for (const auto& s : subsets)
      for (int e : s) covered[e] = true;
    for (int e = 1; e <= u; ++e)
      if (!covered[e])
        throw ValidationError("set_cover_to_mdejr: element " + std::to_string(e) +
                              " lies in no subset");
  }

  // budget < #subsets, by adding useless empty subsets
  while (static_cast<int>(subsets.size()) <= budget) subsets.emplace_back();

  // universe size to a multiple of 9; dummies join every subset
  int pad = (9 - u % 9) % 9;
  for (int t = 1; t <= pad; ++t)
    for (auto& s : subsets) s.push_back(u + t);
  u += pad;

  // pairwise intersections at most u/75, via one disjoint 74u-element subset
  bool violated = false;
  for (std::size_t i = 0; i < subsets.size() && !violated; ++i)
    for (std::size_t j = i + 1; j < subsets.size() && !violated; ++j) {
      std::vector<int> inter;
      std::set_intersection(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                            subsets[j].end(), std::back_inserter(inter));
      violated = 75LL * static_cast<long long>(inter.size()) > u;
    }
  if (violated) {
    std::vector<int> fresh;
    for (int t = 1; t <= 74 * u; ++t) fresh.push_back(u + t);
    subsets.push_back(std::move(fresh));
    u *= 75;
    budget += 1;
  }
  return SetCoverInstance(u, std::move(subsets), budget);
}

ApprovalInstance set_cover_to_mdejr(const SetCoverInstance& sc) {
  SetCoverInstance pp = preprocess_for_mdejr(sc);
  long long u = pp.universe_size;  // multiple of 9
  int s = static_cast<int>(pp.subsets.size());
  long long uprime = 4 * u / 3;
  int k = pp.budget + 3;
  long long n = uprime * k;
  int m = s + 4;
  int cstar = s + 1, d1 = s + 2, d2 = s + 3, d3 = s + 4;
  if (n > 2'000'000)
    throw ValidationError("set_cover_to_mdejr: preprocessed instance too large");

  std::vector<std::vector<int>> ballots;
  ballots.reserve(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> element_ballot(static_cast<std::size_t>(u));
  for (int j = 1; j <= s; ++j)
    for (int e : pp.subsets[j - 1]) element_ballot[e - 1].push_back(j);
  for (long long i = 0; i < u; ++i) {
    element_ballot[i].push_back(cstar);
    ballots.push_back(std::move(element_ballot[i]));
  }
  for (long long i = 0; i < u / 3; ++i) ballots.push_back({cstar});
  std::vector<int> all_subsets;
  for (int j = 1; j <= s; ++j) all_subsets.push_back(j);
  for (long long i = 0; i < static_cast<long long>(pp.budget) * uprime; ++i)
    ballots.push_back(all_subsets);
  long long block = uprime / 3;
  std::vector<std::vector<int>> w_ballots = {{d1, d3}, {d1}, {d1, d2}, {d2}, {d2, d3}, {d3}};
  for (const auto& wb : w_ballots)
    for (long long i = 0; i < block; ++i) ballots.push_back(wb);
  return ApprovalInstance(static_cast<int>(n), m, k, std::move(ballots));
}

ApprovalInstance gen_random(int n, int m, int k, const Rational& p, std::uint64_t seed) {
  if (p < Rational(0) || p > Rational(1))
    throw ValidationError("gen_random: probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::uint64_t den = static_cast<std::uint64_t>(p.den());
  std::uint64_t num = static_cast<std::uint64_t>(p.num());
  std::uint64_t reject_below = den == 1 ? 0 : (0 - den) % den;  // 2^64 mod den

  std::vector<std::vector<int>> ballots(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (int c = 1; c <= m; ++c) {
      std::uint64_t draw = rng.next();
      while (draw < reject_below) draw = rng.next();
      if (draw % den < num) ballots[v].push_back(c);
    }
  return ApprovalInstance(n, m, k, std::move(ballots));
}

}  // namespace jrdeg
