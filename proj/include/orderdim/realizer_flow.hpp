#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orderdim/dimension.hpp"
#include "orderdim/geometry.hpp"
#include "orderdim/homogeneity.hpp"
#include "orderdim/poset.hpp"
#include "orderdim/ramsey.hpp"

namespace orderdim {

// sigma[i] = j: the j-th order of a tuple plays the i-th coordinate order.
// 0-based.
using Permutation = std::vector<std::size_t>;

struct ClassifiedTuple {
  RealizerTuple tuple;
  std::optional<Permutation> sigma;
};

struct RealizerSet {
  std::vector<ClassifiedTuple> tuples;

  std::size_t classified_count() const;
};

// Every ordered tuple of s.dim() linear extensions realizing the order of s.
// Tuples are left unclassified; see classify_all.
RealizerSet enumerate_realizers(const OrderedStructure& s,
                                const Budget& budget = Budget::from_env());

// All sigma with t[sigma[i]] equal to the i-th coordinate order of c, in
// lexicographic order. kNotARealizer when t does not realize c.
std::vector<Permutation> classifying_permutations(const PointCloud& c, const RealizerTuple& t);
// The first of those, if any.
std::optional<Permutation> classify_realizer(const PointCloud& c, const RealizerTuple& t);

// Realizers of the induced structure of c, each with its classification.
RealizerSet enumerate_cloud_realizers(const PointCloud& c,
                                      const Budget& budget = Budget::from_env());

// Some sigma with a_i < b_i => a before b in t[sigma[i]] for all grid points
// a, b. kNotARealizer when t does not realize the grid's product order.
std::optional<Permutation> grid_permutation(const GridStruct& g, const RealizerTuple& t);

// Transitive closure of the superset's order together with `partial`, an
// order on the elements listed in `subset` (partial's element k is
// subset[k]). kCycleFound with the cycle's labels when the union has one.
FinitePoset extend_realizer_closure(const FinitePoset& superset,
                                    const std::vector<std::size_t>& subset,
                                    const LinearOrder& partial);

// extend_realizer_closure then szpilrajn_extend, order by order.
RealizerTuple extend_realizer(const FinitePoset& superset, const std::vector<std::size_t>& subset,
                              const RealizerTuple& t);

// Product order on arbitrary (possibly colinear) points, labels p0, p1, ...
FinitePoset product_poset(const std::vector<Point>& points);

// Bijections g (g[x] is the image of x) with x < y iff g[x] < g[y], in
// lexicographic order. kLimitExceeded past budget.max_search_nodes.
std::vector<std::vector<std::size_t>> poset_automorphisms(
    const FinitePoset& p, const Budget& budget = Budget::from_env());
std::vector<std::vector<std::size_t>> cloud_automorphisms(
    const PointCloud& c, const Budget& budget = Budget::from_env());

// a <^g b iff g^-1(a) < g^-1(b), order by order. kNotOrderPreserving when g
// is not an automorphism of p; the result is checked to realize p.
RealizerTuple logic_action(const FinitePoset& p, const std::vector<std::size_t>& g,
                           const RealizerTuple& t);

// (g o h)[x] = g[h[x]].
std::vector<std::size_t> compose(const std::vector<std::size_t>& g,
                                 const std::vector<std::size_t>& h);

// A cloud closed under permuting coordinates: whole S_n-orbits of points off
// the diagonals, ceil(count / n!) of them, the k-th orbit seeded from the
// k-th ball. Only n = 2 is possible: for n >= 3 a transposition fixes an
// axis, so every orbit has two points sharing a coordinate
// (kColinearityUnavoidable).
PointCloud symmetric_sample(std::size_t n, std::size_t count, std::uint64_t seed);

// The index map of the coordinate permutation p -> (p[sigma[0]], ...,
// p[sigma[n-1]]) when it maps c onto itself.
std::optional<std::vector<std::size_t>> coordinate_permutation_map(const PointCloud& c,
                                                                   const Permutation& sigma);

struct Factorization {
  std::vector<std::size_t> g;
  Permutation sigma;
  std::vector<std::size_t> h;  // preserves every coordinate order
};

struct DecompositionReport {
  std::size_t group_order = 0;             // |G|
  std::size_t order_preserving = 0;        // |H|
  std::size_t coordinate_symmetries = 0;   // sigma acting on c
  std::vector<Factorization> factorizations;
  std::vector<std::vector<std::size_t>> failures;  // g with no factorization
  bool unique = true;                      // at most one factorization per g
  // |G| = |H| * n!, asserted when every sigma acts on c.
  std::optional<bool> order_law;
};

DecompositionReport semidirect_decomposition(const PointCloud& c,
                                             const Budget& budget = Budget::from_env());

}  // namespace orderdim
