#include "jrdeg/rules.hpp"

#include <algorithm>

#include "jrdeg/generators.hpp"

namespace jrdeg {

namespace {

// H(0..k) as exact rationals
std::vector<Rational> harmonic_table(int k) {
  std::vector<Rational> h(k + 1, Rational(0));
  for (int j = 1; j <= k; ++j) h[j] = h[j - 1] + Rational(1, j);
  return h;
}

std::vector<int> satisfactions(const ApprovalInstance& inst, const Bits& wmask) {
  std::vector<int> sat(inst.n);
  for (int v = 0; v < inst.n; ++v) sat[v] = Bits::and_count(inst.ballot_mask[v], wmask);
  return sat;
}

// score contribution bucketed by satisfaction value so the number of rational
// additions is k, not n
Rational bucketed_score(const std::vector<int>& sat, const std::vector<Rational>& h, int k) {
  std::vector<long long> cnt(k + 1, 0);
  for (int s : sat) ++cnt[s];
  Rational total(0);
  for (int s = 1; s <= k; ++s)
    if (cnt[s]) total += Rational(cnt[s]) * h[s];
  return total;
}

Rational delta_from_sat(const ApprovalInstance& inst, const std::vector<int>& sat, int c_plus,
                        int c_minus) {
  const Bits& ap = inst.approver_mask[c_plus - 1];
  const Bits& am = inst.approver_mask[c_minus - 1];
  std::vector<long long> gain_cnt(inst.k + 1, 0), loss_cnt(inst.k + 1, 0);
  for (std::size_t wi = 0; wi < ap.w.size(); ++wi) {
    std::uint64_t gain = ap.w[wi] & ~am.w[wi];
    while (gain) {
      int v = static_cast<int>(wi * 64) + std::countr_zero(gain);
      ++gain_cnt[sat[v]];
      gain &= gain - 1;
    }
    std::uint64_t loss = am.w[wi] & ~ap.w[wi];
    while (loss) {
      int v = static_cast<int>(wi * 64) + std::countr_zero(loss);
      ++loss_cnt[sat[v]];
      loss &= loss - 1;
    }
  }
  Rational d(0);
  for (int s = 0; s <= inst.k; ++s)
    if (gain_cnt[s]) d += Rational(gain_cnt[s], s + 1);
  for (int s = 1; s <= inst.k; ++s)
    if (loss_cnt[s]) d -= Rational(loss_cnt[s], s);
  return d;
}

}  // namespace

Rational pav_score(const ApprovalInstance& inst, const Committee& w) {
  validate_committee(inst, w);
  Bits wm = committee_mask(inst, w);
  return bucketed_score(satisfactions(inst, wm), harmonic_table(inst.k), inst.k);
}

Rational swap_delta(const ApprovalInstance& inst, const Committee& w, int c_plus, int c_minus) {
  validate_committee(inst, w);
  bool plus_in = std::find(w.members.begin(), w.members.end(), c_plus) != w.members.end();
  bool minus_in = std::find(w.members.begin(), w.members.end(), c_minus) != w.members.end();
  if (c_plus < 1 || c_plus > inst.m || plus_in)
    throw ValidationError("swap_delta: c_plus must be a non-member candidate");
  if (!minus_in) throw ValidationError("swap_delta: c_minus must be a committee member");
  Bits wm = committee_mask(inst, w);
  return delta_from_sat(inst, satisfactions(inst, wm), c_plus, c_minus);
}

Committee greedy_av(const ApprovalInstance& inst) {
  Bits live(inst.n);
  live.fill_all();
  std::vector<bool> in_w(inst.m + 1, false);
  Committee w;
  for (int round = 0; round < inst.k; ++round) {
    int best = -1, best_cnt = -1;
    for (int c = 1; c <= inst.m; ++c) {
      if (in_w[c]) continue;
      int cnt = Bits::and_count(inst.approver_mask[c - 1], live);
      if (cnt > best_cnt) {
        best_cnt = cnt;
        best = c;
      }
    }
    in_w[best] = true;
    w.members.push_back(best);
    live.subtract(inst.approver_mask[best - 1]);
  }
  std::sort(w.members.begin(), w.members.end());
  return w;
}

LsPavResult ls_pav(const ApprovalInstance& inst, const Rational& lambda,
                   std::optional<Committee> initial) {
  if (lambda < Rational(0)) throw ValidationError("ls_pav: lambda must be >= 0");
  Committee w;
  if (initial) {
    validate_committee(inst, *initial);
    w = *initial;
    std::sort(w.members.begin(), w.members.end());
  } else {
    for (int c = 1; c <= inst.k; ++c) w.members.push_back(c);
  }

  LsPavTrace trace;
  trace.initial = w;
  std::vector<bool> in_w(inst.m + 1, false);
  for (int c : w.members) in_w[c] = true;
  Bits wm = committee_mask(inst, w);
  std::vector<int> sat = satisfactions(inst, wm);

  bool strict_only = lambda == Rational(0);
  for (;;) {
    bool swapped = false;
    for (int cp = 1; cp <= inst.m && !swapped; ++cp) {
      if (in_w[cp]) continue;
      for (std::size_t j = 0; j < w.members.size() && !swapped; ++j) {
        int cm = w.members[j];
        Rational d = delta_from_sat(inst, sat, cp, cm);
        if (d < lambda || (strict_only && d == Rational(0))) continue;
        inst.approver_mask[cp - 1].for_each([&](int v) { ++sat[v]; });
        inst.approver_mask[cm - 1].for_each([&](int v) { --sat[v]; });
        in_w[cm] = false;
        in_w[cp] = true;
        w.members.erase(w.members.begin() + static_cast<std::ptrdiff_t>(j));
        w.members.insert(std::lower_bound(w.members.begin(), w.members.end(), cp), cp);
        trace.swaps.push_back({cm, cp, d});
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  trace.final_committee = w;
  return {w, trace};
}

Committee random_committee(const ApprovalInstance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> pool(inst.m);
  for (int c = 1; c <= inst.m; ++c) pool[c - 1] = c;
  Committee w;
  for (int i = 0; i < inst.k; ++i) {
    // modulo bias is irrelevant here (m << 2^64), and this stays portable
    std::size_t j = i + static_cast<std::size_t>(rng.next() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
    w.members.push_back(pool[i]);
  }
  std::sort(w.members.begin(), w.members.end());
  return w;
}

namespace {

// C(m,k) capped: returns cap+1 when the count exceeds cap
std::uint64_t committee_count_capped(int m, int k, std::uint64_t cap) {
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

Committee pav_exact(const ApprovalInstance& inst, std::uint64_t budget) {
  std::uint64_t total = committee_count_capped(inst.m, inst.k, budget);
  if (total > budget)
    throw BudgetExceeded("pav_exact: C(m,k) exceeds the committee budget of " +
                         std::to_string(budget));
  std::vector<Rational> h = harmonic_table(inst.k);

  std::vector<int> idx(inst.k);  // 0-based candidate indices, ascending
  for (int i = 0; i < inst.k; ++i) idx[i] = i;
  Bits wm(inst.m);
  std::vector<int> sat;
  bool have_best = false;
  Rational best_score(0);
  Committee best;

  for (;;) {
    wm.clear();
    for (int c : idx) wm.set(c);
    sat = satisfactions(inst, wm);
    Rational score = bucketed_score(sat, h, inst.k);
    if (!have_best || score > best_score) {
      have_best = true;
      best_score = score;
      best.members.assign(idx.begin(), idx.end());
      for (int& c : best.members) ++c;
    }
    // next combination in lex order
    int i = inst.k - 1;
    while (i >= 0 && idx[i] == inst.m - inst.k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < inst.k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace jrdeg
