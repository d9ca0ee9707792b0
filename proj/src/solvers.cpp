#include "jrdeg/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <map>
#include <thread>

namespace jrdeg {

namespace {

constexpr std::uint64_t kNoRank = ~std::uint64_t{0};

std::uint64_t committee_count_capped(int m, int k, std::uint64_t cap) {
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

// binomial table with saturating adds; entries above `cap` are stored as cap,
// so every entry below cap is exact. bin[a][b] = C(a, b).
std::vector<std::vector<std::uint64_t>> binomial_table(int m, int k, std::uint64_t cap) {
  std::vector<std::vector<std::uint64_t>> bin(m + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int a = 0; a <= m; ++a) {
    bin[a][0] = 1;
    for (int b = 1; b <= std::min(a, k); ++b) {
      std::uint64_t x = bin[a - 1][b - 1];
      std::uint64_t y = a - 1 >= b ? bin[a - 1][b] : 0;
      bin[a][b] = x > cap - y ? cap : x + y;
    }
  }
  return bin;
}

// lex rank -> ascending 0-based k-subset of [0, m)
std::vector<int> unrank_combination(int m, int k, std::uint64_t rank,
                                    const std::vector<std::vector<std::uint64_t>>& bin) {
  std::vector<int> idx(k);
  int c = 0;
  for (int i = 0; i < k; ++i) {
    for (;;) {
      int rest = m - c - 1;
      std::uint64_t block = (k - i - 1) <= rest ? bin[rest][k - i - 1] : 0;
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    idx[i] = c++;
  }
  return idx;
}

bool next_combination(std::vector<int>& idx, int m) {
  int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

Committee to_committee(const std::vector<int>& idx0) {
  Committee w;
  w.members.reserve(idx0.size());
  for (int c : idx0) w.members.push_back(c + 1);
  return w;
}

// Value-only degree evaluation with early abort, scratch reused across
// committees. Semantics of the `abort_below` argument: the returned value is
// exact when >= abort_below; any return < abort_below only promises that the
// true degree is below abort_below.
struct DegreeChecker {
  const ApprovalInstance& inst;
  long long t1;
  std::vector<int> eligible1;          // 0-based candidates with |N(c)| >= t1
  std::vector<long long> thresholds;   // t_l, 1-based index

  Bits covered;
  Bits cand_mask;
  std::vector<int> sat;
  std::vector<Bits> unrep;
  std::vector<Bits> path;
  std::vector<int> chosen;

  explicit DegreeChecker(const ApprovalInstance& in)
      : inst(in),
        t1(cohesive_threshold(in, 1)),
        thresholds(in.k + 1, 0),
        covered(in.n),
        cand_mask(in.m),
        sat(in.n, 0),
        unrep(in.k, Bits(in.n)),
        path(in.k + 1, Bits(in.n)) {
    for (int c = 0; c < inst.m; ++c)
      if (inst.approver_mask[c].count() >= t1) eligible1.push_back(c);
    for (int l = 1; l <= inst.k; ++l) thresholds[l] = cohesive_threshold(inst, l);
    chosen.reserve(inst.k);
  }

  bool defined() const { return !eligible1.empty(); }

  void load_jr(const std::vector<int>& idx0) {
    covered.clear();
    for (int c : idx0) covered |= inst.approver_mask[c];
  }

  int jr_value(int abort_below) {
    int best = INT_MAX;
    for (int c : eligible1) {
      int u = Bits::andnot_count(inst.approver_mask[c], covered);
      int val = static_cast<int>(t1 - std::min(t1, static_cast<long long>(u)));
      if (val < abort_below) return val;
      best = std::min(best, val);
    }
    return best;
  }

  void load_ejr(const std::vector<int>& idx0) {
    cand_mask.clear();
    for (int c : idx0) cand_mask.set(c);
    for (int v = 0; v < inst.n; ++v) sat[v] = Bits::and_count(inst.ballot_mask[v], cand_mask);
    for (auto& u : unrep) u.clear();
    for (int v = 0; v < inst.n; ++v)
      for (int l = sat[v] + 1; l <= inst.k; ++l) unrep[l - 1].set(v);
  }

  int ejr_value(int abort_below, std::uint64_t node_budget) {
    path[0].fill_all();
    chosen.clear();
    int best = INT_MAX;
    std::uint64_t nodes = 0;
    bool aborted = false;
    int abort_val = 0;

    auto rec = [&](auto&& self, int next_cand) -> void {
      int depth = static_cast<int>(chosen.size());
      if (depth == inst.k) return;
      for (int c = next_cand; c < inst.m && !aborted; ++c) {
        if (++nodes > node_budget)
          throw BudgetExceeded("degree check exceeded node budget of " +
                               std::to_string(node_budget));
        Bits::and_into(path[depth], inst.approver_mask[c], path[depth + 1]);
        int cnt = path[depth + 1].count();
        int level = depth + 1;
        if (static_cast<long long>(inst.k) * cnt < static_cast<long long>(level) * inst.n)
          continue;
        long long t = thresholds[level];
        int u = Bits::and_count(path[depth + 1], unrep[level - 1]);
        int val = static_cast<int>(t - std::min(t, static_cast<long long>(u)));
        if (val < abort_below) {
          aborted = true;
          abort_val = val;
          return;
        }
        best = std::min(best, val);
        chosen.push_back(c);
        self(self, c + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    return aborted ? abort_val : best;
  }
};

enum class Axiom { kJr, kEjr };

// evaluate one committee: exact degree when >= abort_below
int committee_value(DegreeChecker& chk, Axiom ax, const std::vector<int>& idx0, int abort_below) {
  if (ax == Axiom::kJr) {
    chk.load_jr(idx0);
    return chk.jr_value(abort_below);
  }
  chk.load_ejr(idx0);
  return chk.ejr_value(abort_below, kDefaultNodeBudget);
}

struct CollapsePlan {
  ApprovalInstance reduced;
  std::vector<int> kept;  // old 0-based id per new 0-based id
};

std::optional<CollapsePlan> make_collapse_plan(const ApprovalInstance& inst) {
  std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
  for (int c = 0; c < inst.m; ++c) classes[inst.approver_mask[c].w].push_back(c);
  std::vector<int> kept;
  for (auto& [_, ids] : classes) {
    int take = std::min<int>(static_cast<int>(ids.size()), inst.k);
    kept.insert(kept.end(), ids.begin(), ids.begin() + take);
  }
  if (static_cast<int>(kept.size()) == inst.m) return std::nullopt;
  std::sort(kept.begin(), kept.end());
  std::vector<int> new_id(inst.m, 0);  // old 0-based -> new 1-based, 0 = dropped
  for (std::size_t j = 0; j < kept.size(); ++j) new_id[kept[j]] = static_cast<int>(j) + 1;
  std::vector<std::vector<int>> ballots(inst.n);
  for (int v = 0; v < inst.n; ++v)
    for (int c : inst.ballots[v])
      if (new_id[c - 1]) ballots[v].push_back(new_id[c - 1]);
  return CollapsePlan{
      ApprovalInstance(inst.n, static_cast<int>(kept.size()), inst.k, std::move(ballots)),
      std::move(kept)};
}

Committee remap_committee(const Committee& w, const std::vector<int>& kept) {
  Committee out;
  out.members.reserve(w.members.size());
  for (int c : w.members) out.members.push_back(kept[c - 1] + 1);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

// Runs fn(worker_id, start_rank, end_rank) over a contiguous split of
// [0, total) on opts.threads threads; the first worker exception rethrows.
template <class Fn>
void run_chunks(std::uint64_t total, int threads, Fn fn) {
  int nt = std::max(1, threads);
  if (nt == 1 || total < 2 * static_cast<std::uint64_t>(nt)) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(nt);
  std::uint64_t chunk = total / nt, rem = total % nt;
  std::uint64_t start = 0;
  for (int t = 0; t < nt; ++t) {
    std::uint64_t len = chunk + (static_cast<std::uint64_t>(t) < rem ? 1 : 0);
    pool.emplace_back([&, t, start, len]() {
      try {
        fn(t, start, start + len);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
    start += len;
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::uint64_t checked_total(const ApprovalInstance& inst, std::uint64_t budget) {
  std::uint64_t total = committee_count_capped(inst.m, inst.k, budget);
  if (total > budget)
    throw BudgetExceeded("C(m,k) exceeds the committee budget of " + std::to_string(budget));
  return total;
}

ExistsResult exists_with_degree(const ApprovalInstance& inst, int c, Axiom ax,
                                const SolverOptions& opts) {
  if (c < 1) throw ValidationError("exists_committee: target degree must be >= 1");
  if (opts.collapse_duplicates) {
    if (auto plan = make_collapse_plan(inst)) {
      SolverOptions inner = opts;
      inner.collapse_duplicates = false;
      ExistsResult r = exists_with_degree(plan->reduced, c, ax, inner);
      if (r.committee) r.committee = remap_committee(*r.committee, plan->kept);
      return r;
    }
  }
  if (!has_cohesive_group(inst)) return {std::nullopt, 0};
  std::uint64_t total = checked_total(inst, opts.budget);
  if (c > ceil_div(inst.n, inst.k)) return {std::nullopt, 0};  // degrees never exceed ceil(n/k)

  auto bin = binomial_table(inst.m, inst.k, kNoRank - 1);
  std::atomic<std::uint64_t> best_rank{kNoRank};

  run_chunks(total, opts.threads, [&](int, std::uint64_t start, std::uint64_t end) {
    DegreeChecker chk(inst);
    std::vector<int> idx = unrank_combination(inst.m, inst.k, start, bin);
    for (std::uint64_t r = start; r < end; ++r) {
      if (r >= best_rank.load(std::memory_order_relaxed)) break;
      if (committee_value(chk, ax, idx, c) >= c) {
        std::uint64_t prev = best_rank.load();
        while (r < prev && !best_rank.compare_exchange_weak(prev, r)) {
        }
        break;
      }
      next_combination(idx, inst.m);
    }
  });

  std::uint64_t hit = best_rank.load();
  if (hit == kNoRank) return {std::nullopt, total};
  return {to_committee(unrank_combination(inst.m, inst.k, hit, bin)), hit + 1};
}

MaxDegreeResult brute_force_max(const ApprovalInstance& inst, Axiom ax,
                                const SolverOptions& opts) {
  if (opts.collapse_duplicates) {
    if (auto plan = make_collapse_plan(inst)) {
      SolverOptions inner = opts;
      inner.collapse_duplicates = false;
      MaxDegreeResult r = brute_force_max(plan->reduced, ax, inner);
      r.committee = remap_committee(r.committee, plan->kept);
      return r;
    }
  }
  if (!has_cohesive_group(inst)) {
    Committee first;
    for (int c = 1; c <= inst.k; ++c) first.members.push_back(c);
    return {std::nullopt, first, 0};
  }
  std::uint64_t total = checked_total(inst, opts.budget);
  auto bin = binomial_table(inst.m, inst.k, kNoRank - 1);

  struct Local {
    int deg = -1;
    std::uint64_t rank = kNoRank;
  };
  std::vector<Local> locals(std::max(1, opts.threads));

  run_chunks(total, opts.threads, [&](int tid, std::uint64_t start, std::uint64_t end) {
    DegreeChecker chk(inst);
    Local loc;
    std::vector<int> idx = unrank_combination(inst.m, inst.k, start, bin);
    for (std::uint64_t r = start; r < end; ++r) {
      int val = committee_value(chk, ax, idx, loc.deg + 1);
      if (val > loc.deg) {
        loc.deg = val;
        loc.rank = r;
      }
      next_combination(idx, inst.m);
    }
    locals[tid] = loc;
  });

  Local best;
  for (const Local& loc : locals)
    if (loc.deg > best.deg || (loc.deg == best.deg && loc.rank < best.rank)) best = loc;
  return {best.deg, to_committee(unrank_combination(inst.m, inst.k, best.rank, bin)), total};
}

}  // namespace

ExistsResult exists_committee_with_jr_degree(const ApprovalInstance& inst, int c,
                                             const SolverOptions& opts) {
  return exists_with_degree(inst, c, Axiom::kJr, opts);
}

ExistsResult exists_committee_with_ejr_degree(const ApprovalInstance& inst, int c,
                                              const SolverOptions& opts) {
  return exists_with_degree(inst, c, Axiom::kEjr, opts);
}

std::uint64_t committee_count(int m, int k, std::uint64_t cap) {
  return committee_count_capped(m, k, cap);
}

MaxDegreeResult brute_force_max_jr(const ApprovalInstance& inst, const SolverOptions& opts) {
  return brute_force_max(inst, Axiom::kJr, opts);
}

MaxDegreeResult brute_force_max_ejr(const ApprovalInstance& inst, const SolverOptions& opts) {
  return brute_force_max(inst, Axiom::kEjr, opts);
}

namespace {

SolveResult iterative_deepening(const ApprovalInstance& inst, Axiom ax, const SolverOptions& opts,
                                Committee start, long long c0, std::optional<LsPavTrace> trace,
                                const std::string& name) {
  SolveResult res;
  res.rule = name;
  res.committee = std::move(start);
  res.trace = std::move(trace);
  res.search_limit = static_cast<int>(ceil_div(inst.n, inst.k));
  res.search_limit_raised = inst.n % inst.k != 0;

  if (!has_cohesive_group(inst)) {
    res.degrees = compute_degrees(inst, res.committee);
    res.c_max_proven = true;  // vacuously: no degree target exists
    return res;
  }

  long long cap = ceil_div(inst.n, inst.k);
  bool first = true;
  for (long long c = c0; c <= cap; ++c) {
    ExistsResult ex = ax == Axiom::kJr
                          ? exists_committee_with_jr_degree(inst, static_cast<int>(c), opts)
                          : exists_committee_with_ejr_degree(inst, static_cast<int>(c), opts);
    res.enumerated += ex.enumerated;
    if (!ex.committee) {
      if (first)
        throw std::logic_error(name + ": the starting guarantee c0 = " + std::to_string(c0) +
                               " found no committee; guarantee violated");
      break;
    }
    res.committee = *ex.committee;
    first = false;
  }
  res.degrees = compute_degrees(inst, res.committee);
  res.c_max_proven = true;
  return res;
}

}  // namespace

SolveResult mdjr_rule(const ApprovalInstance& inst, const SolverOptions& opts) {
  Committee start = greedy_av(inst);
  long long c0 = std::max<long long>(
      1, ceil_div(inst.n, static_cast<long long>(inst.k) * inst.k));
  return iterative_deepening(inst, Axiom::kJr, opts, std::move(start), c0, std::nullopt, "mdjr");
}

SolveResult mdejr_rule(const ApprovalInstance& inst, const SolverOptions& opts) {
  Rational lambda(inst.n, static_cast<long long>(inst.k) * (inst.k + 1));
  LsPavResult ls = ls_pav(inst, lambda);
  long long c0 = std::max<long long>(
      1, ceil_div(inst.n, static_cast<long long>(inst.k) * (inst.k + 1) * (inst.k + 1)));
  return iterative_deepening(inst, Axiom::kEjr, opts, std::move(ls.committee), c0,
                             std::move(ls.trace), "mdejr");
}

}  // namespace jrdeg
