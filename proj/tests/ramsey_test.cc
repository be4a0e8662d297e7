#include "orderdim/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_support.hpp"

namespace orderdim {
namespace {

using ::orderdim::oracles::from_sequences;
using ::orderdim::oracles::grid_embeds;
using ::orderdim::oracles::for_each_structure;
using ::orderdim::oracles::count_rigid_embeddings;
using ::orderdim::oracles::oracle_rectangle_free;
using ::orderdim::oracles::oracle_arrows;
using ::orderdim::testing::letters;

const OrderedStructure kPoint = from_sequences({{0}, {0}});
const OrderedStructure kChain = from_sequences({{0, 1}, {0, 1}});
const OrderedStructure kAnti = from_sequences({{0, 1}, {1, 0}});

TEST(GridTest, LexOrdersRealizeProductOrder) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      GridStruct g(m, n);
      ASSERT_EQ(g.size(), static_cast<std::size_t>(std::pow(m, n)));
      for (std::size_t a = 0; a < g.size(); ++a) {
        ASSERT_EQ(g.index_of(g.point(a)), a);
        for (std::size_t b = 0; b < g.size(); ++b) {
          bool le = a != b;
          for (std::size_t i = 0; i < n; ++i) le = le && g.point(a)[i] <= g.point(b)[i];
          ASSERT_EQ(g.structure().poset().less(a, b), le);
        }
      }
    }
}

TEST(RigidEmbedTest, Examples) {
  EXPECT_EQ(rigid_embed(kChain), (std::vector<GridPoint>{{1, 1}, {2, 2}}));
  EXPECT_EQ(rigid_embed(kAnti), (std::vector<GridPoint>{{1, 2}, {2, 1}}));
  auto diamond = from_sequences({{0, 1, 2, 3}, {0, 2, 1, 3}});
  EXPECT_EQ(rigid_embed(diamond), (std::vector<GridPoint>{{1, 1}, {2, 3}, {3, 2}, {4, 4}}));
}

TEST(RigidEmbedTest, UniqueInTwoDimensions) {
  for (std::size_t m = 1; m <= 5; ++m)
    for_each_structure(m, 2, [&](const OrderedStructure& s) {
      std::vector<GridPoint> found;
      ASSERT_EQ(count_rigid_embeddings(s, &found), 1u);
      ASSERT_EQ(found, rigid_embed(s));
    });
}

TEST(RigidEmbedTest, UniqueInThreeDimensions) {
  for (std::size_t m = 1; m <= 4; ++m)
    for_each_structure(m, 3, [&](const OrderedStructure& s) {
      std::vector<GridPoint> found;
      ASSERT_EQ(count_rigid_embeddings(s, &found), 1u);
      ASSERT_EQ(found, rigid_embed(s));
    });
}

// All injective maps, checked with grid_embeds.
std::size_t brute_copies(const GridStruct& g, const OrderedStructure& a) {
  std::size_t count = 0;
  std::vector<std::size_t> map(a.size());
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (e == a.size()) {
      std::vector<GridPoint> pts;
      for (auto x : map) pts.push_back(g.point(x));
      count += grid_embeds(a, pts);
      return;
    }
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (std::find(map.begin(), map.begin() + e, x) != map.begin() + e) continue;
      map[e] = x;
      self(self, e + 1);
    }
  };
  rec(rec, 0);
  return count;
}

TEST(CopiesTest, SmallCases) {
  GridStruct g2(2, 2);
  EXPECT_EQ(enumerate_copies(g2, kPoint).size(), 4u);
  // Every product-comparable pair of the 2x2 grid is an aligned chain.
  EXPECT_EQ(enumerate_copies(g2, kChain).size(), brute_copies(g2, kChain));
  EXPECT_EQ(enumerate_copies(g2, kChain).size(), 5u);
  EXPECT_EQ(enumerate_copies(kChain, kChain).size(), 1u);
  EXPECT_EQ(enumerate_copies(kChain, kChain).front(), (Copy{0, 1}));
  auto diamond = from_sequences({{0, 1, 2, 3}, {0, 2, 1, 3}});
  EXPECT_EQ(enumerate_copies(diamond, diamond).size(), 1u);
}

TEST(CopiesTest, AgreeWithInjectiveMaps) {
  for (std::size_t r = 2; r <= 3; ++r) {
    GridStruct g(r, 2);
    for (std::size_t m = 1; m <= 3; ++m)
      for_each_structure(m, 2, [&](const OrderedStructure& a) {
        auto copies = enumerate_copies(g, a);
        ASSERT_EQ(copies.size(), brute_copies(g, a));
        std::set<std::vector<std::size_t>> sets;
        for (const auto& c : copies) {
          std::vector<GridPoint> pts;
          for (auto x : c) pts.push_back(g.point(x));
          ASSERT_TRUE(grid_embeds(a, pts));
          auto s = c;
          std::sort(s.begin(), s.end());
          sets.insert(s);
        }
        ASSERT_EQ(sets.size(), copies.size());
      });
  }
}

TEST(SubgridTest, CanonicalOrder) {
  auto gs = subgrids(3, 2, 2);
  ASSERT_EQ(gs.size(), 9u);
  EXPECT_EQ(gs[0].axes, (std::vector<std::vector<std::size_t>>{{1, 2}, {1, 2}}));
  EXPECT_EQ(gs[1].axes, (std::vector<std::vector<std::size_t>>{{1, 2}, {1, 3}}));
  EXPECT_EQ(gs[8].axes, (std::vector<std::vector<std::size_t>>{{2, 3}, {2, 3}}));
  EXPECT_EQ(subgrids(4, 3, 2).size(), 216u);
  EXPECT_TRUE(gs[0].contains(subgrids(3, 2, 1)[0]));
}

TEST(InducedColoringTest, ConstantAndParity) {
  GridStruct g(3, 2);
  auto copies = enumerate_copies(g, kChain);
  Coloring constant{2, std::vector<std::size_t>(copies.size(), 1)};
  EXPECT_EQ(induced_coloring(g, kChain, copies, constant).colors,
            std::vector<std::size_t>(9, 1));
  // Color 1 iff the copy's first point has an even first coordinate.
  Coloring parity{2, {}};
  for (const auto& c : copies) parity.colors.push_back(g.point(c[0])[0] % 2 == 0 ? 1 : 0);
  auto hat = induced_coloring(g, kChain, copies, parity);
  auto gs = subgrids(3, 2, 2);
  ASSERT_EQ(hat.colors.size(), 9u);
  for (std::size_t i = 0; i < 9; ++i) {
    // The rigid chain in a subgrid starts at its least corner.
    const std::size_t x = gs[i].axes[0][0];
    EXPECT_EQ(hat.colors[i], x % 2 == 0 ? 1u : 0u);
  }
  EXPECT_EQ(hat.colors, (std::vector<std::size_t>{0, 0, 0, 0, 0, 0, 1, 1, 1}));
}

// Exhaustive scan by bitmasks over axis subsets.
bool oracle_has_mono(std::size_t r, std::size_t n, std::size_t l, const Coloring& col,
                     std::size_t m) {
  auto small = subgrids(r, n, l);
  for (const auto& big : subgrids(r, n, m)) {
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < small.size(); ++i)
      if (big.contains(small[i])) seen.insert(col.colors[i]);
    if (seen.size() == 1) return true;
  }
  return false;
}

TEST(MonoSubgridTest, AgreesWithScan) {
  std::mt19937_64 rng(5);
  // Pigeonhole.
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    Coloring c{2, {mask & 1u, mask >> 1 & 1u, mask >> 2 & 1u}};
    EXPECT_TRUE(find_mono_subgrid(3, 1, 1, c, 2));
  }
  Coloring constant{3, std::vector<std::size_t>(subgrids(4, 2, 2).size(), 2)};
  auto full = find_mono_subgrid(4, 2, 2, constant, 3);
  ASSERT_TRUE(full);
  EXPECT_EQ(full->axes, (std::vector<std::vector<std::size_t>>{{1, 2, 3}, {1, 2, 3}}));
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 2;
    const std::size_t r = 3 + trial % 3;
    const std::size_t l = 1 + trial % 2;
    const std::size_t m = l + 1;
    Coloring c{2, {}};
    for (std::size_t i = 0; i < subgrids(r, n, l).size(); ++i) c.colors.push_back(rng() % 2);
    auto found = find_mono_subgrid(r, n, l, c, m);
    ASSERT_EQ(found.has_value(), oracle_has_mono(r, n, l, c, m));
  }
}

// 2-colorings of the pairs of {1..r} with no monochromatic triangle.
bool oracle_triangle_free(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) edges.emplace_back(a, b);
  auto idx = [&](std::size_t a, std::size_t b) {
    return std::find(edges.begin(), edges.end(), std::pair{a, b}) - edges.begin();
  };
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < r && ok; ++a)
      for (std::size_t b = a + 1; b < r && ok; ++b)
        for (std::size_t c = b + 1; c < r && ok; ++c) {
          auto x = mask >> idx(a, b) & 1u, y = mask >> idx(a, c) & 1u, z = mask >> idx(b, c) & 1u;
          ok = !(x == y && y == z);
        }
    if (ok) return true;
  }
  return false;
}

TEST(ProductRamseyTest, Pigeonhole) {
  EXPECT_EQ(product_ramsey_number(2, 1, 2, 1, 6), 3u);
  EXPECT_EQ(product_ramsey_number(3, 1, 2, 1, 6), 4u);
  EXPECT_EQ(product_ramsey_number(2, 1, 3, 1, 6), 5u);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t l = 1; l <= m; ++l)
      for (std::size_t n = 1; n <= 2; ++n) EXPECT_EQ(product_ramsey_number(1, l, m, n, 6), m);
}

TEST(ProductRamseyTest, GridPointsTwoByTwo) {
  EXPECT_GT(oracle_rectangle_free(4), 0u);
  EXPECT_EQ(oracle_rectangle_free(5), 0u);
  EXPECT_EQ(product_ramsey_number(2, 1, 2, 2, 6), 5u);
  RamseySearchOptions plain;
  plain.symmetry_pruning = false;
  EXPECT_EQ(product_ramsey_number(2, 1, 2, 2, 6, plain), 5u);
  auto bad = bad_subgrid_coloring(2, 1, 2, 2, 4);
  ASSERT_TRUE(bad);
  EXPECT_FALSE(find_mono_subgrid(4, 2, 1, *bad, 2));
}

TEST(ProductRamseyTest, PairsOfALine) {
  EXPECT_TRUE(oracle_triangle_free(5));
  EXPECT_FALSE(oracle_triangle_free(6));
  EXPECT_EQ(product_ramsey_number(2, 2, 3, 1, 7), 6u);
  EXPECT_FALSE(product_ramsey_number(2, 2, 3, 1, 5));
}

TEST(ProductRamseyTest, BudgetAndArguments) {
  RamseySearchOptions tiny;
  tiny.budget.max_search_nodes = 10;
  try {
    product_ramsey_number(2, 1, 2, 2, 6, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLimitExceeded);
  }
  EXPECT_THROW(product_ramsey_number(0, 1, 2, 1, 3), Error);
  EXPECT_THROW(product_ramsey_number(2, 3, 2, 1, 3), Error);
}

TEST(WitnessCheckTest, TrivialCases) {
  for (const auto* s : {&kPoint, &kChain, &kAnti})
    for (auto path : {WitnessPath::kExhaustive, WitnessPath::kProof})
      EXPECT_TRUE(ramsey_witness_check(*s, *s, 2, s->size(), path));
}

TEST(WitnessCheckTest, PointIntoChain) {
  EXPECT_TRUE(ramsey_witness_check(kPoint, kChain, 2, 5, WitnessPath::kExhaustive));
  EXPECT_TRUE(ramsey_witness_check(kPoint, kChain, 2, 5, WitnessPath::kProof));
  EXPECT_TRUE(ramsey_witness_outcome(kPoint, kChain, 2, 5, WitnessPath::kProof)
                  .decided_by_reduction);
  // Below the product threshold the reduction is inconclusive.
  auto below = ramsey_witness_outcome(kPoint, kChain, 2, 4, WitnessPath::kProof);
  EXPECT_FALSE(below.decided_by_reduction);
  EXPECT_TRUE(below.verdict);
  EXPECT_FALSE(ramsey_witness_check(kPoint, kAnti, 2, 1, WitnessPath::kExhaustive));
}

TEST(WitnessCheckTest, PathsAgreeWithOracle) {
  std::vector<OrderedStructure> small{kPoint, kChain, kAnti};
  for_each_structure(3, 2, [&](const OrderedStructure& s) { small.push_back(s); });
  std::size_t tried = 0;
  for (const auto& a : small)
    for (const auto& b : small) {
      if (a.size() >= b.size() && !(a.size() == b.size() && isomorphic(a, b))) continue;
      for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t r = b.size(); r <= 3; ++r) {
          if (enumerate_copies(GridStruct(r, 2), a).size() <= 16)
            ASSERT_EQ(ramsey_witness_check(a, b, k, r, WitnessPath::kExhaustive),
                      oracle_arrows(a, b, k, r));
          ASSERT_EQ(ramsey_witness_check(a, b, k, r, WitnessPath::kProof),
                    ramsey_witness_check(a, b, k, r, WitnessPath::kExhaustive));
          ++tried;
        }
    }
  EXPECT_GE(tried, 20u);
}

TEST(WitnessCheckTest, CopiesInRigidBAreRigid) {
  std::vector<OrderedStructure> small{kChain, kAnti};
  for_each_structure(3, 2, [&](const OrderedStructure& s) { small.push_back(s); });
  for_each_structure(4, 2, [&](const OrderedStructure& s) { small.push_back(s); });
  for (const auto& b : small)
    for (const auto& a : small) {
      if (a.size() >= b.size()) continue;
      for (const auto& q : enumerate_copies(b, a)) {
        const auto bpts = rigid_embed(b);
        Subgrid l;
        for (std::size_t i = 0; i < 2; ++i) {
          std::vector<std::size_t> vals;
          for (auto x : q) vals.push_back(bpts[x][i]);
          std::sort(vals.begin(), vals.end());
          l.axes.push_back(vals);
        }
        const auto apts = rigid_copy_in(a, l);
        for (std::size_t x = 0; x < a.size(); ++x) ASSERT_EQ(apts[x], bpts[q[x]]);
      }
    }
}

}  // namespace
}  // namespace orderdim
