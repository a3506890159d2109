#include <gtest/gtest.h>

#include <algorithm>
#include <bitset>
#include <numeric>

#include "hecke/combinat.hpp"
#include "printers.hpp"

using namespace hecke;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Repeatedly strips an arbitrary e-rim hook straight off the diagram.
Partition core_by_rim_hooks(Partition p, int e) {
  for (;;) {
    bool removed = false;
    for (int i = 0; i < p.length() && !removed; ++i)
      for (int j = 0; j < p.part(i) && !removed; ++j) {
        if (hook_length(p, i, j) != e) continue;
        int leg = 0;
        while (p.part(i + leg + 1) > j) ++leg;
        std::vector<int> parts = p.parts();
        for (int r = i; r < i + leg; ++r) parts[static_cast<std::size_t>(r)] = p.part(r + 1) - 1;
        parts[static_cast<std::size_t>(i + leg)] = j;
        std::erase(parts, 0);
        p = Partition(parts);
        removed = true;
      }
    if (!removed) return p;
  }
}

std::uint64_t hook_formula(const Partition& p) {
  std::uint64_t prod = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) prod *= static_cast<std::uint64_t>(hook_length(p, i, j));
  return factorial(p.size()) / prod;
}

int inversions(const std::vector<int>& w) {
  int k = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b) k += w[a] > w[b];
  return k;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,1,1"), P({3, 1, 1}));
  EXPECT_EQ(Partition::parse("").size(), 0);
  EXPECT_EQ(P({4, 2}).to_string(), "4,2");
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
  EXPECT_THROW(P({2, 0}), std::invalid_argument);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]) << n;
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(P({3, 1})), P({2, 1, 1}));
  EXPECT_EQ(conjugate(P({1})), P({1}));
  EXPECT_EQ(conjugate(P({4})), P({1, 1, 1, 1}));
}

TEST(Conjugate, InvolutionUpToTen) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).size(), n);
      EXPECT_EQ(conjugate(p).length(), p.part(0));
    }
}

TEST(MultiPartition, ParseOffsetsAndEmptyComponents) {
  const auto m = MultiPartition::parse("2,1||1");
  EXPECT_EQ(m.level(), 3);
  EXPECT_EQ(m.size(), 4);
  EXPECT_EQ(m.offsets(), (std::vector<int>{0, 3, 3}));
  EXPECT_TRUE(m.component(1).empty());
  EXPECT_EQ(m.to_string(), "2,1||1");
  EXPECT_EQ(MultiPartition::parse("|1").offsets(), (std::vector<int>{0, 0}));
}

TEST(MultiPartition, CountsMatchGeneratingFunction) {
  // Coefficients of prod_k (1 - x^k)^{-r}.
  for (int r = 1; r <= 3; ++r) {
    std::vector<std::uint64_t> c(7, 0);
    c[0] = 1;
    for (int rep = 0; rep < r; ++rep)
      for (int k = 1; k <= 6; ++k)
        for (int m = k; m <= 6; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(multipartitions_of(n, r).size(), c[static_cast<std::size_t>(n)]) << n << " " << r;
  }
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(P({3, 1}), P({2, 2})));
  EXPECT_TRUE(dominates(P({2, 2}), P({2, 2})));
  EXPECT_FALSE(dominates(P({2, 2}), P({3, 1})));
  EXPECT_FALSE(strictly_dominates(P({2, 2}), P({2, 2})));
  EXPECT_TRUE(dominates(MultiPartition::parse("1|1"), MultiPartition::parse("|1,1")));
  EXPECT_TRUE(dominates(MultiPartition::parse("1|"), MultiPartition::parse("|1")));
  EXPECT_THROW((void)dominates(P({2}), P({1})), std::invalid_argument);
  EXPECT_THROW((void)dominates(MultiPartition::parse("1|"), MultiPartition::parse("1||")), std::invalid_argument);
}

TEST(Dominance, PartialOrderExhaustive) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 0; n <= 6; ++n) {
      const auto all = multipartitions_of(n, r);
      const std::size_t N = all.size();
      ASSERT_LE(N, 2048u);
      std::vector<std::bitset<2048>> below(N);
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) below[a][b] = dominates(all[a], all[b]);
      for (std::size_t a = 0; a < N; ++a) {
        ASSERT_TRUE(below[a][a]);
        for (std::size_t b = 0; b < N; ++b) {
          if (!below[a][b]) continue;
          if (a != b) ASSERT_FALSE(below[b][a]) << all[a].to_string() << " " << all[b].to_string();
          ASSERT_EQ((below[b] & ~below[a]).count(), 0u) << all[a].to_string() << " " << all[b].to_string();
        }
      }
    }
}

TEST(ERestricted, Examples) {
  EXPECT_TRUE(is_e_restricted(P({2, 2, 2}), 3));
  EXPECT_TRUE(is_e_restricted(P({7, 1}), std::nullopt));
  EXPECT_FALSE(is_e_restricted(P({3}), 2));
  EXPECT_TRUE(is_e_restricted(P({1, 1, 1}), 2));
  EXPECT_FALSE(is_e_restricted(P({3, 1}), 2));
}

TEST(ECore, Examples) {
  EXPECT_EQ(e_core(P({3, 1}), 4), Partition());
  EXPECT_EQ(e_core(P({3, 1}), 5), P({3, 1}));
  // Hook lengths of (2,1,1) are 4,2,1,1: nothing of length 3 can be removed.
  EXPECT_EQ(e_core(P({2, 1, 1}), 3), P({2, 1, 1}));
  EXPECT_EQ(e_core(P({2, 1, 1}), 2), Partition());
  EXPECT_EQ(e_core(P({3, 2}), 2), P({1}));
  EXPECT_EQ(e_core(P({3, 2, 1}), 2), P({3, 2, 1}));
}

TEST(ECore, AgreesWithRimHookRemoval) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions_of(n))
      for (int e = 2; e <= 6; ++e) {
        const auto core = e_core(p, e);
        EXPECT_EQ(core, core_by_rim_hooks(p, e)) << p.to_string() << " e=" << e;
        EXPECT_EQ((n - core.size()) % e, 0);
      }
}

TEST(HookData, Examples) {
  const auto h = hook_data(P({3, 1, 1}));
  EXPECT_EQ(h.largest_hook, 5);
  EXPECT_EQ(h.top_multiplicity, 1);
  EXPECT_EQ(h.smallest_main_hook, 5);
  EXPECT_EQ(h.main_hooks, (std::vector<int>{5}));

  const auto r = hook_data(P({2, 2, 2}));
  EXPECT_EQ(r.largest_hook, 4);
  EXPECT_EQ(r.top_multiplicity, 3);
  EXPECT_EQ(r.smallest_main_hook, 3);
  EXPECT_EQ(r.main_hooks, (std::vector<int>{3, 4}));

  const auto s = hook_data(P({3, 3, 1}));
  EXPECT_EQ(s.largest_hook, 5);
  EXPECT_EQ(s.top_multiplicity, 2);
  EXPECT_EQ(s.smallest_main_hook, 4);
  EXPECT_EQ(s.main_hooks, (std::vector<int>{4, 5}));

  EXPECT_THROW(hook_data(Partition()), std::invalid_argument);
}

TEST(HookData, HooksHaveSingleMainHook) {
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      std::vector<int> parts{n - k};
      parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
      const auto h = hook_data(P(parts));
      EXPECT_EQ(h.largest_hook, n);
      EXPECT_EQ(h.smallest_main_hook, n);
      EXPECT_EQ(h.main_hooks, (std::vector<int>{n}));
    }
}

TEST(HookData, MainHooksAreRestrictions) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : partitions_of(n)) {
      if (p.length() == 1) continue;
      const auto h = hook_data(p);
      EXPECT_EQ(h.largest_hook, p.part(0) + p.length() - 1);
      for (int k : h.main_hooks) EXPECT_TRUE(is_e_restricted(p, k)) << p.to_string() << " k=" << k;
    }
}

TEST(Tableaux, Examples) {
  EXPECT_EQ(tableaux(P({2, 1}), TableauFlavor::Standard).size(), 2u);
  EXPECT_EQ(tableaux(P({5}), TableauFlavor::Standard).size(), 1u);
  EXPECT_EQ(tableaux(P({2, 2}), TableauFlavor::Standard).size(), 2u);
  EXPECT_EQ(tableaux(P({2, 1}), TableauFlavor::RowStandard).size(), 3u);
  EXPECT_EQ(tableaux(MultiPartition::parse("1|1"), TableauFlavor::Standard).size(), 2u);
}

TEST(Tableaux, HookLengthFormula) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(tableaux(p, TableauFlavor::Standard).size(), hook_formula(p)) << p.to_string();
}

TEST(Tableaux, CanonicalOrderAndValidity) {
  for (const auto& shape : multipartitions_of(4, 2)) {
    const auto ts = tableaux(shape, TableauFlavor::Standard);
    EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
    EXPECT_EQ(ts.front(), initial_tableau(shape));
    for (const auto& t : ts) {
      EXPECT_TRUE(t.is_standard());
      auto w = t.reading_word();
      std::sort(w.begin(), w.end());
      std::vector<int> id(w.size());
      std::iota(id.begin(), id.end(), 1);
      EXPECT_EQ(w, id);
    }
  }
}

TEST(Tableau, PrintAndSwap) {
  const Tableau t(P({2, 1}), {1, 3, 2});
  EXPECT_EQ(t.to_string(), "1 3/2");
  EXPECT_EQ(t.swapped(2).reading_word(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(t.content(3), 1);
  EXPECT_EQ(t.content(2), -1);
}

TEST(Permutation, WordsAndRanks) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint32_t k = 0; k < factorial(n); ++k) {
      const auto w = Permutation::unrank(n, k);
      EXPECT_EQ(w.rank(), k);
      const auto word = w.reduced_word();
      EXPECT_EQ(static_cast<int>(word.size()), w.length());
      EXPECT_EQ(Permutation::from_word(n, word), w);
      EXPECT_EQ(w.length(), inversions(w.images()));
      EXPECT_TRUE((w * w.inverse()).is_identity());
    }
  EXPECT_THROW(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(DOf, Examples) {
  const auto shape = MultiPartition(P({2, 1}));
  EXPECT_TRUE(d_of(initial_tableau(shape)).is_identity());
  const Tableau t(shape, {1, 3, 2});
  const std::vector<int> s2{2};
  EXPECT_EQ(d_of(t), Permutation::from_word(3, s2));
}

TEST(DOf, CarriesInitialTableauAndHasInversionLength) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      const auto shape = MultiPartition(p);
      const auto init = initial_tableau(shape);
      for (const auto& t : tableaux(shape, TableauFlavor::RowStandard)) {
        const auto d = d_of(t);
        for (int k = 1; k <= n; ++k) EXPECT_EQ(t.node_of(d(k)), init.node_of(k));
        EXPECT_EQ(d.length(), inversions(t.reading_word()));
        for (int i : young_subgroup_generators(shape)) EXPECT_FALSE(d.generator_times(i).length() < d.length());
      }
    }
}

TEST(YoungSubgroup, Examples) {
  EXPECT_EQ(young_subgroup_generators(P({2, 1})), (std::set<int>{1}));
  EXPECT_TRUE(young_subgroup_generators(P({1, 1, 1, 1})).empty());
  EXPECT_EQ(young_subgroup_generators(P({3})), (std::set<int>{1, 2}));
  EXPECT_EQ(young_subgroup_generators(MultiPartition::parse("2|2")), (std::set<int>{1, 3}));
}
