#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "jrdeg/degree.hpp"
#include "jrdeg/generators.hpp"

using namespace jrdeg;

namespace {

// Direct restatement of the level-1 definition, kept separate from the library
// scan on purpose.
std::optional<int> jr_oracle(const ApprovalInstance& inst, const Committee& w) {
  std::vector<int> sat(inst.n + 1);
  for (int v = 1; v <= inst.n; ++v) sat[v] = satisfaction(inst, v, w);
  long long t = ceil_div(inst.n, inst.k);
  std::optional<int> best;
  for (int c = 1; c <= inst.m; ++c) {
    auto group = approvers(inst, c);
    if (static_cast<long long>(group.size()) < t) continue;
    long long unrep = 0;
    for (int v : group)
      if (sat[v] < 1) ++unrep;
    int value = static_cast<int>(t - std::min(t, unrep));
    if (!best || value < *best) best = value;
  }
  return best;
}

template <typename F>
void for_each_combination(int m, int l, F&& fn) {
  std::vector<int> comb(l);
  std::iota(comb.begin(), comb.end(), 1);
  while (true) {
    fn(comb);
    int i = l - 1;
    while (i >= 0 && comb[i] == m - (l - 1 - i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < l; ++j) comb[j] = comb[j - 1] + 1;
  }
}

std::vector<int> common_approvers(const ApprovalInstance& inst, const std::vector<int>& t_set) {
  std::vector<int> group;
  for (int v = 1; v <= inst.n; ++v) {
    bool all = true;
    for (int c : t_set)
      if (!inst.ballot_mask[v - 1].test(c - 1)) {
        all = false;
        break;
      }
    if (all) group.push_back(v);
  }
  return group;
}

// Full enumeration over candidate subsets, every level. Affordable for small m.
std::optional<int> ejr_oracle(const ApprovalInstance& inst, const Committee& w) {
  std::vector<int> sat(inst.n + 1);
  for (int v = 1; v <= inst.n; ++v) sat[v] = satisfaction(inst, v, w);
  std::optional<int> best;
  for (int l = 1; l <= inst.k; ++l) {
    long long t = cohesive_threshold(inst, l);
    for_each_combination(inst.m, l, [&](const std::vector<int>& t_set) {
      auto group = common_approvers(inst, t_set);
      if (static_cast<long long>(inst.k) * static_cast<long long>(group.size()) <
          static_cast<long long>(l) * inst.n)
        return;
      long long unrep = 0;
      for (int v : group)
        if (sat[v] < l) ++unrep;
      int value = static_cast<int>(t - std::min(t, unrep));
      if (!best || value < *best) best = value;
    });
  }
  return best;
}

std::map<int, Rational> profile_oracle(const ApprovalInstance& inst, const Committee& w) {
  std::vector<int> sat(inst.n + 1);
  for (int v = 1; v <= inst.n; ++v) sat[v] = satisfaction(inst, v, w);
  std::map<int, Rational> out;
  for (int l = 1; l <= inst.k; ++l) {
    long long t = cohesive_threshold(inst, l);
    std::optional<Rational> best;
    for_each_combination(inst.m, l, [&](const std::vector<int>& t_set) {
      auto group = common_approvers(inst, t_set);
      if (static_cast<long long>(group.size()) < t) return;
      std::vector<int> sats;
      for (int v : group) sats.push_back(sat[v]);
      std::sort(sats.begin(), sats.end());
      long long sum = std::accumulate(sats.begin(), sats.begin() + t, 0LL);
      Rational avg(sum, t);
      if (!best || avg < *best) best = avg;
    });
    if (best) out[l] = *best;
  }
  return out;
}

void check_witness(const ApprovalInstance& inst, const Committee& w,
                   const CohesiveWitness& wit, int degree, int expect_level = 0) {
  CHECK(static_cast<int>(wit.shared_candidates.size()) == wit.level);
  if (expect_level) CHECK(wit.level == expect_level);
  CHECK(wit.represented_count == degree);
  long long t = cohesive_threshold(inst, wit.level);
  CHECK(static_cast<long long>(wit.voters.size()) == t);
  auto group = common_approvers(inst, wit.shared_candidates);
  CHECK(static_cast<long long>(inst.k) * static_cast<long long>(group.size()) >=
        static_cast<long long>(wit.level) * inst.n);
  std::vector<int> sorted = wit.voters;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(std::includes(group.begin(), group.end(), sorted.begin(), sorted.end()));
  long long unrep = 0;
  for (int v : wit.voters)
    if (satisfaction(inst, v, w) < wit.level) ++unrep;
  CHECK(t - unrep == wit.represented_count);
}

}  // namespace

TEST_CASE("chain instance: degrees fall as the committee serves fewer voters") {
  auto inst = gen_tiny();  // voter i approves candidates 1..i, k=1
  int expected[] = {4, 3, 2, 1};
  for (int c = 1; c <= 4; ++c) {
    auto rep = compute_degrees(inst, Committee{{c}});
    CHECK(rep.jr_degree == expected[c - 1]);
    CHECK(rep.ejr_degree == expected[c - 1]);
    check_witness(inst, Committee{{c}}, *rep.jr_witness, expected[c - 1], 1);
    check_witness(inst, Committee{{c}}, *rep.ejr_witness, expected[c - 1]);
  }
  // All witnesses point at the one big cohesive group, candidate 1's approvers.
  auto rep = ejr_degree(inst, Committee{{4}});
  CHECK(rep.ejr_witness->shared_candidates == std::vector<int>{1});
  CHECK(rep.ejr_witness->voters == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("two-block instance: frozen degrees and witnesses") {
  auto inst = gen_prop_example();  // n=9 m=6 k=3

  auto good = compute_degrees(inst, Committee{{1, 2, 3}});
  CHECK(good.jr_degree == 3);
  CHECK(good.ejr_degree == 3);
  CHECK(good.ejr_witness->level == 1);
  CHECK(good.ejr_witness->shared_candidates == std::vector<int>{1});

  auto bad = compute_degrees(inst, Committee{{4, 5, 6}});
  CHECK(bad.jr_degree == 2);
  CHECK(bad.ejr_degree == 2);
  // Lex-first minimizer: candidate 1's group, with voter 3 left out in front.
  CHECK(bad.ejr_witness->shared_candidates == std::vector<int>{1});
  CHECK(bad.ejr_witness->voters == std::vector<int>{3, 1, 2});
  CHECK(bad.ejr_witness->represented_count == 2);
  check_witness(inst, Committee{{4, 5, 6}}, *bad.ejr_witness, 2);
}

TEST_CASE("undefined when no group clears the size threshold") {
  // n=5, k=2: a cohesive group needs 3 voters; nobody gets past 2.
  ApprovalInstance inst(5, 4, 2, {{1}, {1}, {2}, {3}, {4}});
  CHECK_FALSE(has_cohesive_group(inst));
  auto rep = compute_degrees(inst, Committee{{3, 4}});
  CHECK_FALSE(rep.jr_degree.has_value());
  CHECK_FALSE(rep.ejr_degree.has_value());
  CHECK_FALSE(rep.jr_witness.has_value());
  CHECK_FALSE(rep.ejr_witness.has_value());
  CHECK(satisfies_jr(inst, Committee{{3, 4}}));
  CHECK(satisfies_ejr(inst, Committee{{3, 4}}));
  CHECK_FALSE(ejr_degree_naive(inst, Committee{{3, 4}}).ejr_degree.has_value());

  // One more approval tips it over the threshold.
  ApprovalInstance inst2(5, 4, 2, {{1}, {1}, {1, 2}, {3}, {4}});
  CHECK(has_cohesive_group(inst2));
  CHECK(compute_degrees(inst2, Committee{{3, 4}}).jr_degree == 0);
}

TEST_CASE("degree zero means the axiom fails, degree >= 1 means it holds") {
  auto inst = gen_tiny();
  CHECK(satisfies_jr(inst, Committee{{1}}));
  CHECK(satisfies_ejr(inst, Committee{{1}}));
  // Committee {4} leaves voters 1..3 unserved but voter 4 is in the group, so
  // degree 1 > 0 still squeaks by.
  CHECK(satisfies_jr(inst, Committee{{4}}));

  ApprovalInstance split(4, 3, 1, {{1}, {1}, {1}, {1}});
  CHECK(compute_degrees(split, Committee{{2}}).jr_degree == 0);
  CHECK_FALSE(satisfies_jr(split, Committee{{2}}));
  CHECK_FALSE(satisfies_ejr(split, Committee{{2}}));
}

TEST_CASE("random instances: scan, naive and subset oracle all agree") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int n = 6 + static_cast<int>(seed % 9);   // 6..14
    int m = 4 + static_cast<int>(seed % 4);   // 4..7
    int k = 2 + static_cast<int>(seed % 3);   // 2..4
    Rational p(1 + seed % 3, 4);              // 1/4, 1/2, 3/4
    auto inst = gen_random(n, m, k, p, seed);
    std::vector<Committee> committees;
    std::vector<int> low(k), high(k);
    std::iota(low.begin(), low.end(), 1);
    std::iota(high.begin(), high.end(), m - k + 1);
    committees.push_back(Committee{low});
    committees.push_back(Committee{high});
    for (const auto& w : committees) {
      auto rep = compute_degrees(inst, w);
      auto naive = ejr_degree_naive(inst, w);
      CHECK(rep.jr_degree == jr_oracle(inst, w));
      CHECK(rep.ejr_degree == ejr_oracle(inst, w));
      CHECK(rep.ejr_degree == naive.ejr_degree);
      if (rep.jr_degree) {
        ++checked;
        CHECK(*rep.ejr_degree <= *rep.jr_degree);
        CHECK(*rep.jr_degree <= ceil_div(inst.n, inst.k));
        check_witness(inst, w, *rep.jr_witness, *rep.jr_degree, 1);
        check_witness(inst, w, *rep.ejr_witness, *rep.ejr_degree);
        CHECK(jr_degree(inst, w).jr_degree == rep.jr_degree);
        CHECK(ejr_degree(inst, w).ejr_degree == rep.ejr_degree);
      }
    }
  }
  CHECK(checked > 30);  // the sweep must actually exercise defined cases
}

TEST_CASE("higher-level deficits pull the EJR degree below the JR degree") {
  // Six voters agree on {1,2} but the committee grants them only one of the
  // two seats they warrant; singleton groups are all fine.
  ApprovalInstance inst(6, 4, 2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}});
  auto rep = compute_degrees(inst, Committee{{1, 3}});
  CHECK(rep.jr_degree == 3);       // threshold 3, everyone sees candidate 1
  CHECK(rep.ejr_degree == 0);      // the 2-cohesive group has nobody at sat >= 2
  CHECK(rep.ejr_witness->level == 2);
  CHECK(rep.ejr_witness->shared_candidates == std::vector<int>{1, 2});
  CHECK(ejr_degree_naive(inst, Committee{{1, 3}}).ejr_degree == 0);
  CHECK(satisfies_jr(inst, Committee{{1, 3}}));
  CHECK_FALSE(satisfies_ejr(inst, Committee{{1, 3}}));
}

TEST_CASE("proportionality profile: frozen values") {
  auto tiny = gen_tiny();
  Rational f1[] = {Rational(1), Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  for (int c = 1; c <= 4; ++c) {
    auto prof = proportionality_profile(tiny, Committee{{c}});
    REQUIRE(prof.by_level.count(1) == 1);
    CHECK(prof.by_level.at(1) == f1[c - 1]);
    CHECK(prof.by_level.size() == 1);
  }

  auto inst = gen_prop_example();
  auto good = proportionality_profile(inst, Committee{{1, 2, 3}});
  CHECK(good.by_level.at(1) == Rational(5, 3));
  CHECK(good.by_level.at(2) == Rational(2));
  CHECK(good.by_level.count(3) == 0);  // no 3-cohesive group exists
  auto bad = proportionality_profile(inst, Committee{{4, 5, 6}});
  CHECK(bad.by_level.at(1) == Rational(2));
  CHECK(bad.by_level.at(2) == Rational(3));
}

TEST_CASE("proportionality profile matches subset enumeration on randoms") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    auto inst = gen_random(8 + static_cast<int>(seed % 5), 5, 3, Rational(1, 2), seed);
    Committee w{{1, 2, 3}};
    auto prof = proportionality_profile(inst, w);
    auto oracle = profile_oracle(inst, w);
    CHECK(prof.by_level == oracle);
  }
}

TEST_CASE("node budget aborts the subset scan") {
  auto inst = gen_random(30, 18, 9, Rational(4, 5), 5);
  CHECK_THROWS_AS(ejr_degree(inst, Committee{{1, 2, 3, 4, 5, 6, 7, 8, 9}}, 3),
                  BudgetExceeded);
  CHECK_THROWS_AS(proportionality_profile(inst, Committee{{1, 2, 3, 4, 5, 6, 7, 8, 9}}, 3),
                  BudgetExceeded);
}

TEST_CASE("naive evaluator refuses oversized voter sets") {
  auto inst = gen_random(18, 6, 3, Rational(1, 2), 9);
  CHECK_THROWS_AS(ejr_degree_naive(inst, Committee{{1, 2, 3}}), ValidationError);
  CHECK_NOTHROW(ejr_degree_naive(inst, Committee{{1, 2, 3}}, 18));
}

TEST_CASE("duplicate ballots stack into higher-level groups correctly") {
  // Nine copies of {1,2,3} and three spoilers; k=3, n=12, thresholds 4/8/12.
  std::vector<std::vector<int>> ballots(9, std::vector<int>{1, 2, 3});
  ballots.push_back({4});
  ballots.push_back({4});
  ballots.push_back({5});
  ApprovalInstance inst(12, 5, 3, std::move(ballots));
  auto rep = compute_degrees(inst, Committee{{1, 4, 5}});
  // Level 2 group {1,2} has 9 >= 8 members, none with sat >= 2.
  CHECK(rep.ejr_degree == 0);
  CHECK(rep.ejr_witness->level == 2);
  CHECK(rep.jr_degree == 4);
  CHECK(ejr_degree_naive(inst, Committee{{1, 4, 5}}, 12).ejr_degree == 0);
  auto full = compute_degrees(inst, Committee{{1, 2, 3}});
  CHECK(full.ejr_degree == 4);  // capped by the level-1 threshold
}

TEST_CASE("swapping a void candidate for a universally approved one never lowers the degree") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto base = gen_random(6 + seed % 5, 5, 3, Rational(1, 2), 500 + seed);
    // two extra candidates: m+1 approved by everyone, m+2 by no one
    std::vector<std::vector<int>> ballots;
    for (int v = 1; v <= base.n; ++v) {
      auto b = base.ballots[v - 1];
      b.push_back(base.m + 1);
      ballots.push_back(std::move(b));
    }
    ApprovalInstance inst(base.n, base.m + 2, base.k, std::move(ballots));
    Committee with_void{{1, 2, inst.m}};         // includes the void candidate
    Committee with_star{{1, 2, inst.m - 1}};     // void swapped for the star
    auto before = jr_degree(inst, with_void);
    auto after = jr_degree(inst, with_star);
    REQUIRE(before.jr_degree.has_value());  // the star candidate keeps groups defined
    REQUIRE(after.jr_degree.has_value());
    CHECK(*after.jr_degree >= *before.jr_degree);
  }
}

TEST_CASE("full ballots saturate every degree at the level-1 threshold") {
  auto inst = gen_random(11, 5, 3, Rational(1, 1), 3);
  auto rep = compute_degrees(inst, Committee{{2, 4, 5}});
  CHECK(rep.jr_degree == ceil_div(11, 3));
  CHECK(rep.ejr_degree == ceil_div(11, 3));
}
