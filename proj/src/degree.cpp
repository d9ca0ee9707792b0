#include "jrdeg/degree.hpp"

#include <algorithm>
#include <numeric>

namespace jrdeg {

namespace {

std::vector<int> committee_satisfactions(const ApprovalInstance& inst, const Committee& w) {
  Bits wm = committee_mask(inst, w);
  std::vector<int> sat(inst.n);
  for (int v = 0; v < inst.n; ++v) sat[v] = Bits::and_count(inst.ballot_mask[v], wm);
  return sat;
}

// unrep[l-1] = voters with satisfaction < l, l = 1..k
std::vector<Bits> unrep_masks(const ApprovalInstance& inst, const std::vector<int>& sat) {
  std::vector<Bits> unrep(inst.k, Bits(inst.n));
  for (int v = 0; v < inst.n; ++v)
    for (int l = sat[v] + 1; l <= inst.k; ++l) unrep[l - 1].set(v);
  return unrep;
}

CohesiveWitness make_witness(const ApprovalInstance& inst, const std::vector<int>& sat, int level,
                             const std::vector<int>& shared, const Bits& group_mask) {
  CohesiveWitness wit;
  wit.level = level;
  wit.shared_candidates = shared;
  long long t = cohesive_threshold(inst, level);
  group_mask.for_each([&](int v) {
    if (static_cast<long long>(wit.voters.size()) < t && sat[v] < level)
      wit.voters.push_back(v + 1);
  });
  int unrep_taken = static_cast<int>(wit.voters.size());
  group_mask.for_each([&](int v) {
    if (static_cast<long long>(wit.voters.size()) < t && sat[v] >= level)
      wit.voters.push_back(v + 1);
  });
  wit.represented_count = static_cast<int>(t) - unrep_taken;
  return wit;
}

}  // namespace

DegreeReport jr_degree(const ApprovalInstance& inst, const Committee& w) {
  validate_committee(inst, w);
  std::vector<int> sat = committee_satisfactions(inst, w);
  Bits unrep1(inst.n);
  for (int v = 0; v < inst.n; ++v)
    if (sat[v] == 0) unrep1.set(v);

  long long t1 = cohesive_threshold(inst, 1);
  int best_val = -1, best_cand = -1;
  for (int c = 0; c < inst.m; ++c) {
    if (inst.approver_mask[c].count() < t1) continue;
    int u = Bits::and_count(inst.approver_mask[c], unrep1);
    int val = static_cast<int>(t1 - std::min(t1, static_cast<long long>(u)));
    if (best_cand < 0 || val < best_val) {
      best_val = val;
      best_cand = c;
    }
  }

  DegreeReport rep;
  if (best_cand < 0) return rep;  // no cohesive group anywhere
  rep.jr_degree = best_val;
  rep.jr_witness =
      make_witness(inst, sat, 1, {best_cand + 1}, inst.approver_mask[best_cand]);
  return rep;
}

namespace {

struct EjrBest {
  bool found = false;
  int val = 0;
  int level = 0;
  std::vector<int> T;  // 0-based
  Bits mask;

  bool improves(int v, int lvl, const std::vector<int>& t) const {
    if (!found) return true;
    if (v != val) return v < val;
    if (lvl != level) return lvl < level;
    return std::lexicographical_compare(t.begin(), t.end(), T.begin(), T.end());
  }
};

// Shared DFS over candidate sets T of size 1..k in lex order, maintaining
// N(T) along the path. `visit` is called for every eligible node.
template <class Visit>
void cohesive_set_dfs(const ApprovalInstance& inst, std::uint64_t node_budget, Visit visit) {
  std::vector<Bits> path(inst.k + 1, Bits(inst.n));
  path[0].fill_all();
  std::vector<int> chosen;
  chosen.reserve(inst.k);
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, int next_cand) -> void {
    int depth = static_cast<int>(chosen.size());
    if (depth == inst.k) return;
    for (int c = next_cand; c < inst.m; ++c) {
      if (++nodes > node_budget)
        throw BudgetExceeded("cohesive-set search exceeded node budget of " +
                             std::to_string(node_budget));
      Bits::and_into(path[depth], inst.approver_mask[c], path[depth + 1]);
      int cnt = path[depth + 1].count();
      int level = depth + 1;
      // eligibility |N(T)| >= ceil(level*n/k)  <=>  k*|N(T)| >= level*n
      if (static_cast<long long>(inst.k) * cnt < static_cast<long long>(level) * inst.n)
        continue;  // supersets only shrink N(T): prune
      chosen.push_back(c);
      visit(level, chosen, path[depth + 1], cnt);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

DegreeReport ejr_degree(const ApprovalInstance& inst, const Committee& w,
                        std::uint64_t node_budget) {
  validate_committee(inst, w);
  std::vector<int> sat = committee_satisfactions(inst, w);
  std::vector<Bits> unrep = unrep_masks(inst, sat);

  EjrBest best;
  cohesive_set_dfs(inst, node_budget,
                   [&](int level, const std::vector<int>& T, const Bits& group, int) {
                     long long t = cohesive_threshold(inst, level);
                     int u = Bits::and_count(group, unrep[level - 1]);
                     int val = static_cast<int>(t - std::min(t, static_cast<long long>(u)));
                     if (best.improves(val, level, T)) {
                       best.found = true;
                       best.val = val;
                       best.level = level;
                       best.T = T;
                       best.mask = group;
                     }
                   });

  DegreeReport rep;
  if (!best.found) return rep;
  rep.ejr_degree = best.val;
  std::vector<int> shared(best.T.size());
  for (std::size_t i = 0; i < best.T.size(); ++i) shared[i] = best.T[i] + 1;
  rep.ejr_witness = make_witness(inst, sat, best.level, shared, best.mask);
  return rep;
}

DegreeReport compute_degrees(const ApprovalInstance& inst, const Committee& w,
                             std::uint64_t node_budget) {
  DegreeReport rep = jr_degree(inst, w);
  DegreeReport er = ejr_degree(inst, w, node_budget);
  rep.ejr_degree = er.ejr_degree;
  rep.ejr_witness = std::move(er.ejr_witness);
  return rep;
}

DegreeReport ejr_degree_naive(const ApprovalInstance& inst, const Committee& w, int voter_cap) {
  validate_committee(inst, w);
  if (inst.n > voter_cap)
    throw ValidationError("ejr_degree_naive: " + std::to_string(inst.n) +
                          " voters exceed the cap of " + std::to_string(voter_cap));
  if (inst.m > 64) throw ValidationError("ejr_degree_naive: more than 64 candidates");

  std::vector<int> sat = committee_satisfactions(inst, w);
  std::vector<std::uint64_t> ballot64(inst.n, 0);
  for (int v = 0; v < inst.n; ++v)
    for (int c : inst.ballots[v]) ballot64[v] |= std::uint64_t{1} << (c - 1);

  bool found = false;
  int best = 0;
  // cnt_ge[l] = members of the current subset with satisfaction >= l
  std::vector<int> cnt_ge(inst.k + 1, 0);

  auto rec = [&](auto&& self, int v, int size, std::uint64_t common) -> void {
    if (v == inst.n) {
      if (size == 0) return;
      int levels = std::min(std::popcount(common), inst.k);
      for (int l = 1; l <= levels; ++l) {
        if (static_cast<long long>(inst.k) * size < static_cast<long long>(l) * inst.n) continue;
        long long t = cohesive_threshold(inst, l);
        long long u = size - cnt_ge[l];
        int val = static_cast<int>(t - std::min(t, u));
        if (!found || val < best) {
          found = true;
          best = val;
        }
      }
      return;
    }
    self(self, v + 1, size, common);  // exclude voter v
    std::uint64_t with = size == 0 ? ballot64[v] : (common & ballot64[v]);
    if (with == 0) return;  // no common candidate: no superset is cohesive
    int s = std::min(sat[v], inst.k);
    for (int l = 1; l <= s; ++l) ++cnt_ge[l];
    self(self, v + 1, size + 1, with);
    for (int l = 1; l <= s; ++l) --cnt_ge[l];
  };
  rec(rec, 0, 0, ~std::uint64_t{0});

  DegreeReport rep;
  if (found) rep.ejr_degree = best;
  return rep;
}

bool satisfies_jr(const ApprovalInstance& inst, const Committee& w) {
  DegreeReport rep = jr_degree(inst, w);
  return !rep.jr_degree.has_value() || *rep.jr_degree >= 1;
}

bool satisfies_ejr(const ApprovalInstance& inst, const Committee& w, std::uint64_t node_budget) {
  DegreeReport rep = ejr_degree(inst, w, node_budget);
  return !rep.ejr_degree.has_value() || *rep.ejr_degree >= 1;
}

ProportionalityProfile proportionality_profile(const ApprovalInstance& inst, const Committee& w,
                                               std::uint64_t node_budget) {
  validate_committee(inst, w);
  std::vector<int> sat = committee_satisfactions(inst, w);

  ProportionalityProfile prof;
  std::vector<int> scratch;
  scratch.reserve(inst.n);
  cohesive_set_dfs(inst, node_budget,
                   [&](int level, const std::vector<int>&, const Bits& group, int) {
                     long long t = cohesive_threshold(inst, level);
                     scratch.clear();
                     group.for_each([&](int v) { scratch.push_back(sat[v]); });
                     auto mid = scratch.begin() + static_cast<std::ptrdiff_t>(t);
                     std::nth_element(scratch.begin(), mid, scratch.end());
                     long long sum = std::accumulate(scratch.begin(), mid, 0LL);
                     Rational val(sum, t);
                     auto it = prof.by_level.find(level);
                     if (it == prof.by_level.end())
                       prof.by_level.emplace(level, val);
                     else if (val < it->second)
                       it->second = val;
                   });
  return prof;
}

}  // namespace jrdeg
