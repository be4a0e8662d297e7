#include "orderdim/dimension.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace orderdim {
namespace {

using ::orderdim::testing::for_each_natural_poset;
using ::orderdim::testing::letters;
using ::orderdim::testing::naive_realizes;
using ::orderdim::testing::random_poset;

// Brute force: extensions are the permutations that respect lt.
std::vector<std::vector<std::size_t>> naive_extensions(const FinitePoset& p) {
  std::vector<std::size_t> perm(p.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> out;
  do {
    std::vector<std::size_t> pos(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) pos[perm[k]] = k;
    bool ok = true;
    for (std::size_t a = 0; a < p.size() && ok; ++a)
      for (std::size_t b = 0; b < p.size() && ok; ++b)
        if (p.less(a, b) && pos[a] > pos[b]) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Least n such that some multiset of n extensions realizes p.
std::size_t naive_dimension(const FinitePoset& p) {
  std::vector<LinearOrder> ext;
  for (auto& s : naive_extensions(p)) ext.emplace_back(s);
  for (std::size_t n = 1;; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      RealizerTuple t;
      for (auto i : idx) t.push_back(ext[i]);
      if (naive_realizes(p, t)) return n;
      std::size_t k = n;
      while (k > 0 && idx[k - 1] == ext.size() - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < n; ++j) idx[j] = idx[k - 1];
    }
  }
}

TEST(LinearExtensionsTest, SmallCounts) {
  EXPECT_EQ(all_linear_extensions(FinitePoset::antichain({"a", "b"})).size(), 2u);
  EXPECT_EQ(all_linear_extensions(FinitePoset::chain({"a", "b", "c"})).size(), 1u);
  // Two crossed 2-chains interleave in C(4,2) ways.
  EXPECT_EQ(all_linear_extensions(crown(2)).size(), naive_extensions(crown(2)).size());
  EXPECT_EQ(all_linear_extensions(crown(2)).size(), 6u);
}

TEST(LinearExtensionsTest, MatchesPermutationFilter) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_poset(1 + trial % 7, 0.35, rng);
    auto fast = all_linear_extensions(p);
    auto slow = naive_extensions(p);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) EXPECT_EQ(fast[k].sequence(), slow[k]);
  }
}

TEST(LinearExtensionsTest, Limits) {
  Budget b;
  b.max_elements = 4;
  try {
    all_linear_extensions(FinitePoset::antichain(letters(5)), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimitExceeded);
  }
  b = Budget{};
  b.max_extensions = 100;
  EXPECT_THROW(all_linear_extensions(FinitePoset::antichain(letters(5)), b), Error);
  std::size_t seen = 0;
  for_each_linear_extension(FinitePoset::antichain(letters(5)), [&](const LinearOrder&) {
    return ++seen < 3;
  });
  EXPECT_EQ(seen, 3u);
}

TEST(FindRealizersTest, Examples) {
  auto chain = FinitePoset::chain(letters(4));
  auto one = find_realizers(chain, 1);
  ASSERT_TRUE(one);
  EXPECT_EQ((*one)[0].sequence(), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_FALSE(find_realizers(crown(3), 2));
  auto three = find_realizers(crown(3), 3);
  ASSERT_TRUE(three);
  EXPECT_TRUE(naive_realizes(crown(3), *three));
}

TEST(FindRealizersTest, PaddingMonotone) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 80; ++trial) {
    auto p = random_poset(3 + trial % 5, 0.3, rng);
    for (std::size_t n = 1; n <= 3; ++n)
      if (find_realizers(p, n)) {
        EXPECT_TRUE(find_realizers(p, n + 1));
      }
  }
}

TEST(DimensionTest, Crowns) {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto r = dimension(crown(n));
    EXPECT_EQ(r.dim, n);
    EXPECT_TRUE(is_realizer(crown(n), r.witness));
  }
}

TEST(DimensionTest, ChainsAndAntichains) {
  EXPECT_EQ(dimension(FinitePoset::chain(letters(5))).dim, 1u);
  EXPECT_EQ(dimension(FinitePoset::chain({"x"})).dim, 1u);
  EXPECT_EQ(dimension(FinitePoset::antichain({"a", "b"})).dim, 2u);
}

TEST(DimensionTest, OneIffChainOnAllSmallPosets) {
  for (std::size_t m = 1; m <= 5; ++m)
    for_each_natural_poset(m, [](const FinitePoset& p) {
      ASSERT_EQ(dimension(p).dim == 1, p.is_chain());
    });
}

TEST(DimensionTest, AgreesWithMultisetOracleUpToSixElements) {
  std::size_t histogram[4] = {0, 0, 0, 0};
  for (std::size_t m = 1; m <= 6; ++m)
    for_each_natural_poset(m, [&](const FinitePoset& p) {
      auto r = dimension(p);
      ASSERT_EQ(r.dim, naive_dimension(p));
      ASSERT_TRUE(naive_realizes(p, r.witness));
      ++histogram[r.dim];
    });
  // The only 6-element posets of dimension 3 are labellings of crown(3).
  EXPECT_GT(histogram[3], 0u);
}

TEST(DimensionTest, HiraguchiOnRandomPosets) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poset(4 + trial % 5, 0.2 + 0.1 * (trial % 4), rng);
    EXPECT_LE(dimension(p).dim, hiraguchi_bound(p));
  }
}

TEST(DimensionTest, SearchBudget) {
  Budget b;
  b.max_search_nodes = 5;
  try {
    dimension(crown(4), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimitExceeded);
  }
}

TEST(DimensionTest, EnvironmentOverride) {
  setenv("ORDERDIM_BUDGET", "17", 1);
  auto b = Budget::from_env();
  EXPECT_EQ(b.max_extensions, 17u);
  EXPECT_EQ(b.max_search_nodes, 17u);
  setenv("ORDERDIM_BUDGET", "zero", 1);
  EXPECT_THROW(Budget::from_env(), Error);
  unsetenv("ORDERDIM_BUDGET");
  EXPECT_EQ(Budget::from_env().max_extensions, 1000000u);
}

TEST(EnumerateRealizersTest, MatchesOrderedTupleOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_poset(2 + trial % 4, 0.3, rng);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ext = all_linear_extensions(p);
      std::set<RealizerTuple> oracle;
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        RealizerTuple t;
        for (auto i : idx) t.push_back(ext[i]);
        if (naive_realizes(p, t)) oracle.insert(t);
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == ext.size() - 1) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
      }
      auto found = enumerate_realizer_tuples(p, n);
      std::set<RealizerTuple> distinct(found.begin(), found.end());
      EXPECT_EQ(distinct.size(), found.size());
      EXPECT_EQ(distinct, oracle);
    }
  }
  auto anti = enumerate_realizer_tuples(FinitePoset::antichain({"a", "b"}), 2);
  EXPECT_EQ(anti.size(), 2u);
}

TEST(OreEmbeddingTest, RankCoordinates) {
  auto anti = FinitePoset::antichain({"a", "b"});
  auto coords = ore_embedding(anti, {LinearOrder({0, 1}), LinearOrder({1, 0})});
  EXPECT_EQ(coords[0], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(coords[1], (std::vector<std::size_t>{2, 1}));
  auto chain = FinitePoset::chain({"a", "b"});
  EXPECT_EQ(ore_embedding(chain, {LinearOrder({0, 1})})[1], std::vector<std::size_t>{2});
  EXPECT_THROW(ore_embedding(anti, {LinearOrder({0, 1})}), Error);
}

TEST(OreEmbeddingTest, CrownThreeProjectionsRecoverOrders) {
  auto c = crown(3);
  auto r = dimension(c);
  auto coords = ore_embedding(c, r.witness);
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = 0; b < c.size(); ++b) {
      bool dom = a != b;
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(coords[a][i] < coords[b][i], r.witness[i].before(a, b));
        dom = dom && coords[a][i] < coords[b][i];
      }
      EXPECT_EQ(dom, c.less(a, b));
    }
}

}  // namespace
}  // namespace orderdim
