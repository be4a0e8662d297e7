#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orderdim/dimension.hpp"
#include "orderdim/poset.hpp"

namespace orderdim {

using GridPoint = std::vector<std::size_t>;  // 1-based coordinates

// The m^n grid with the product order and its n lexicographic orders, the
// i-th comparing coordinates cyclically from axis i. Points are indexed in
// lexicographic order, axis 0 most significant.
class GridStruct {
 public:
  GridStruct(std::size_t m, std::size_t n);

  std::size_t side() const { return m_; }
  std::size_t dim() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const GridPoint& point(std::size_t i) const { return points_[i]; }
  const std::vector<GridPoint>& points() const { return points_; }
  std::size_t index_of(const GridPoint& p) const;
  const OrderedStructure& structure() const { return structure_; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<GridPoint> points_;
  OrderedStructure structure_;
};

// Product of n chosen subsets of {1..m}, each sorted.
struct Subgrid {
  std::vector<std::vector<std::size_t>> axes;

  std::size_t side() const { return axes.empty() ? 0 : axes.front().size(); }
  // Grid point of the subgrid whose i-th coordinate is the local[i]-th
  // (1-based) value of axes[i].
  GridPoint global(const GridPoint& local) const;
  bool contains(const Subgrid& other) const;
  friend bool operator==(const Subgrid&, const Subgrid&) = default;
};

// Every l^n-subgrid of r^n, axis 0 most significant, the subsets of one
// axis in lexicographic order of their sorted values.
std::vector<Subgrid> subgrids(std::size_t r, std::size_t n, std::size_t l);

// p -> (rk_1(p), ..., rk_n(p)) into m^n, m = |s|.
std::vector<GridPoint> rigid_embed(const OrderedStructure& s);

// The rigid copy of s inside the subgrid g (|s| = side of g).
std::vector<GridPoint> rigid_copy_in(const OrderedStructure& s, const Subgrid& g);

// copy[k] is the element of the host playing element k of the pattern.
using Copy = std::vector<std::size_t>;

// Induced substructures of b isomorphic to a, ordered by their sorted index
// sets. The isomorphism is forced by matching ranks in the first order.
std::vector<Copy> enumerate_copies(const OrderedStructure& b, const OrderedStructure& a);
std::vector<Copy> enumerate_copies(const GridStruct& b, const OrderedStructure& a);

// Colors are 0..k-1; colors[i] belongs to the i-th target in canonical order
// (copies as listed by enumerate_copies, subgrids as listed by subgrids).
struct Coloring {
  std::size_t k = 0;
  std::vector<std::size_t> colors;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Coloring of the l^n-subgrids of the grid (l = |a|) by the color of the
// rigid copy of a inside each one. `copies` must be enumerate_copies(grid, a).
Coloring induced_coloring(const GridStruct& grid, const OrderedStructure& a,
                          const std::vector<Copy>& copies, const Coloring& c);

// First m^n-subgrid of r^n whose l^n-subgrids all share a color.
std::optional<Subgrid> find_mono_subgrid(std::size_t r, std::size_t n, std::size_t l,
                                         const Coloring& col, std::size_t m,
                                         const Budget& budget = Budget::from_env());

struct RamseySearchOptions {
  // Colors are interchangeable: a new color is only tried once all lower
  // ones have appeared. Off for oracle runs.
  bool symmetry_pruning = true;
  Budget budget = Budget::from_env();
};

// A k-coloring of `items` with no edge monochromatic, by backtracking. Edges
// are lists of item indices.
std::optional<Coloring> find_edge_avoiding_coloring(
    std::size_t items, const std::vector<std::vector<std::size_t>>& edges, std::size_t k,
    const RamseySearchOptions& options = {});

// Some k-coloring of the l^n-subgrids of r^n with no monochromatic
// m^n-subgrid, or nullopt when every coloring has one.
std::optional<Coloring> bad_subgrid_coloring(std::size_t k, std::size_t l, std::size_t m,
                                             std::size_t n, std::size_t r,
                                             const RamseySearchOptions& options = {});

// Least r <= r_max forcing a monochromatic m^n-subgrid.
std::optional<std::size_t> product_ramsey_number(std::size_t k, std::size_t l, std::size_t m,
                                                 std::size_t n, std::size_t r_max,
                                                 const RamseySearchOptions& options = {});

enum class WitnessPath { kExhaustive, kProof };

struct WitnessOutcome {
  bool verdict = false;
  // kProof only: every k-coloring of the l^n-subgrids had a monochromatic
  // m^n-subgrid, so no coloring of copies had to be examined.
  bool decided_by_reduction = false;
};

// Whether r^n with its lex orders arrows b for k-colorings of copies of a.
// kExhaustive searches the colorings of the copies of a directly. kProof
// first checks that each rigid b in an m^n-subgrid has only rigid copies of
// a, then that every k-coloring of the l^n-subgrids has a monochromatic
// m^n-subgrid; when either fails it falls back to the direct search.
WitnessOutcome ramsey_witness_outcome(const OrderedStructure& a, const OrderedStructure& b,
                                      std::size_t k, std::size_t r, WitnessPath path,
                                      const RamseySearchOptions& options = {});

bool ramsey_witness_check(const OrderedStructure& a, const OrderedStructure& b, std::size_t k,
                          std::size_t r, WitnessPath path,
                          const RamseySearchOptions& options = {});

}  // namespace orderdim
