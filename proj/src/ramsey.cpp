#include "orderdim/ramsey.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace orderdim {

namespace {

OrderedStructure grid_structure(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::kInvalidArgument, "grid needs m, n >= 1");
  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= m; ++v) labels.push_back(std::to_string(v));
  const std::vector<FinitePoset> chains(n, FinitePoset::chain(labels));
  RealizerTuple lex;
  for (std::size_t i = 0; i < n; ++i) lex.push_back(lex_order(chains, i));
  return OrderedStructure(product_order(chains), std::move(lex));
}

// l-subsets of {values}, lexicographic.
std::vector<std::vector<std::size_t>> subsets_of(const std::vector<std::size_t>& values,
                                                 std::size_t l) {
  std::vector<std::vector<std::size_t>> out;
  if (l > values.size()) return out;
  std::vector<std::size_t> idx(l);
  for (std::size_t i = 0; i < l; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> s;
    for (auto i : idx) s.push_back(values[i]);
    out.push_back(std::move(s));
    std::size_t j = l;
    while (j > 0 && idx[j - 1] == values.size() - l + j - 1) --j;
    if (j == 0) break;
    ++idx[j - 1];
    for (std::size_t t = j; t < l; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::vector<Subgrid> subgrids_from(const std::vector<std::vector<std::size_t>>& axes,
                                   std::size_t l) {
  std::vector<Subgrid> out{Subgrid{}};
  for (const auto& axis : axes) {
    const auto choices = subsets_of(axis, l);
    std::vector<Subgrid> next;
    for (const auto& g : out)
      for (const auto& s : choices) {
        Subgrid h = g;
        h.axes.push_back(s);
        next.push_back(std::move(h));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<std::size_t> range1(std::size_t r) {
  std::vector<std::size_t> v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = i + 1;
  return v;
}

// For every m^n-subgrid, the indices of its l^n-subgrids.
std::vector<std::vector<std::size_t>> subgrid_edges(std::size_t r, std::size_t n, std::size_t l,
                                                    std::size_t m) {
  std::map<std::vector<std::vector<std::size_t>>, std::size_t> rank;
  const auto small = subgrids(r, n, l);
  for (std::size_t i = 0; i < small.size(); ++i) rank[small[i].axes] = i;
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& big : subgrids(r, n, m)) {
    std::vector<std::size_t> e;
    for (const auto& g : subgrids_from(big.axes, l)) e.push_back(rank.at(g.axes));
    edges.push_back(std::move(e));
  }
  return edges;
}

std::vector<std::size_t> sorted_image(const Copy& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return s;
}

void require_colors(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "need at least one color");
}

}  // namespace

GridStruct::GridStruct(std::size_t m, std::size_t n)
    : m_(m), n_(n), structure_(grid_structure(m, n)) {
  points_.push_back({});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<GridPoint> next;
    for (const auto& p : points_)
      for (std::size_t v = 1; v <= m; ++v) {
        GridPoint q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    points_ = std::move(next);
  }
}

std::size_t GridStruct::index_of(const GridPoint& p) const {
  if (p.size() != n_) throw Error(ErrorKind::kShapeMismatch, "grid point of wrong arity");
  std::size_t idx = 0;
  for (auto v : p) {
    if (v < 1 || v > m_) throw Error(ErrorKind::kInvalidArgument, "grid point out of range");
    idx = idx * m_ + (v - 1);
  }
  return idx;
}

GridPoint Subgrid::global(const GridPoint& local) const {
  GridPoint g;
  for (std::size_t i = 0; i < axes.size(); ++i) g.push_back(axes[i].at(local.at(i) - 1));
  return g;
}

bool Subgrid::contains(const Subgrid& other) const {
  if (other.axes.size() != axes.size()) return false;
  for (std::size_t i = 0; i < axes.size(); ++i)
    if (!std::includes(axes[i].begin(), axes[i].end(), other.axes[i].begin(),
                       other.axes[i].end()))
      return false;
  return true;
}

std::vector<Subgrid> subgrids(std::size_t r, std::size_t n, std::size_t l) {
  return subgrids_from(std::vector<std::vector<std::size_t>>(n, range1(r)), l);
}

std::vector<GridPoint> rigid_embed(const OrderedStructure& s) {
  return ore_embedding(s.poset(), s.realizers());
}

std::vector<GridPoint> rigid_copy_in(const OrderedStructure& s, const Subgrid& g) {
  if (g.axes.size() != s.dim() || g.side() != s.size())
    throw Error(ErrorKind::kShapeMismatch, "subgrid does not match the structure");
  std::vector<GridPoint> out;
  for (const auto& p : rigid_embed(s)) out.push_back(g.global(p));
  return out;
}

std::vector<Copy> enumerate_copies(const OrderedStructure& b, const OrderedStructure& a) {
  std::vector<Copy> out;
  if (a.dim() != b.dim() || a.size() > b.size()) return out;
  const auto& first = a.realizers().front().sequence();
  const auto& border = b.realizers().front();
  for (const auto& subset : subsets_of(range1(b.size()), a.size())) {
    std::vector<std::size_t> ranked;
    for (auto v : subset) ranked.push_back(v - 1);
    std::sort(ranked.begin(), ranked.end(),
              [&](std::size_t x, std::size_t y) { return border.before(x, y); });
    Copy map(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) map[first[r]] = ranked[r];
    if (preserves_structure(a, b, map)) out.push_back(std::move(map));
  }
  return out;
}

std::vector<Copy> enumerate_copies(const GridStruct& b, const OrderedStructure& a) {
  return enumerate_copies(b.structure(), a);
}

Coloring induced_coloring(const GridStruct& grid, const OrderedStructure& a,
                          const std::vector<Copy>& copies, const Coloring& c) {
  if (c.colors.size() != copies.size())
    throw Error(ErrorKind::kShapeMismatch, "coloring does not cover the copies");
  std::map<std::vector<std::size_t>, std::size_t> by_set;
  for (std::size_t i = 0; i < copies.size(); ++i) by_set[sorted_image(copies[i])] = i;
  Coloring out{c.k, {}};
  for (const auto& g : subgrids(grid.side(), grid.dim(), a.size())) {
    Copy img;
    for (const auto& p : rigid_copy_in(a, g)) img.push_back(grid.index_of(p));
    out.colors.push_back(c.colors[by_set.at(sorted_image(img))]);
  }
  return out;
}

std::optional<Subgrid> find_mono_subgrid(std::size_t r, std::size_t n, std::size_t l,
                                         const Coloring& col, std::size_t m,
                                         const Budget& budget) {
  if (l > m || m > r) throw Error(ErrorKind::kInvalidArgument, "need l <= m <= r");
  const auto edges = subgrid_edges(r, n, l, m);
  if (!edges.empty() && col.colors.size() != subgrids(r, n, l).size())
    throw Error(ErrorKind::kShapeMismatch, "coloring does not cover the subgrids");
  const auto big = subgrids(r, n, m);
  std::uint64_t steps = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    steps += edges[i].size();
    if (steps > budget.max_search_nodes)
      throw Error(ErrorKind::kLimitExceeded, "monochromatic subgrid search over budget");
    const auto c0 = col.colors[edges[i].front()];
    if (std::all_of(edges[i].begin(), edges[i].end(),
                    [&](std::size_t e) { return col.colors[e] == c0; }))
      return big[i];
  }
  return std::nullopt;
}

std::optional<Coloring> find_edge_avoiding_coloring(
    std::size_t items, const std::vector<std::vector<std::size_t>>& edges, std::size_t k,
    const RamseySearchOptions& options) {
  require_colors(k);
  std::vector<std::vector<const std::vector<std::size_t>*>> closing(items);
  for (const auto& e : edges) {
    if (e.empty()) return std::nullopt;  // vacuously monochromatic
    closing.at(*std::max_element(e.begin(), e.end())).push_back(&e);
  }
  Coloring col{k, std::vector<std::size_t>(items, 0)};
  std::uint64_t nodes = 0;
  auto mono = [&](const std::vector<std::size_t>& e) {
    const auto c0 = col.colors[e.front()];
    return std::all_of(e.begin(), e.end(), [&](std::size_t x) { return col.colors[x] == c0; });
  };
  auto dfs = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (++nodes > options.budget.max_search_nodes)
      throw Error(ErrorKind::kLimitExceeded, "coloring search over budget");
    if (i == items) return true;
    const std::size_t top = options.symmetry_pruning ? std::min(k, used + 1) : k;
    for (std::size_t c = 0; c < top; ++c) {
      col.colors[i] = c;
      if (std::none_of(closing[i].begin(), closing[i].end(),
                       [&](const auto* e) { return mono(*e); }) &&
          self(self, i + 1, std::max(used, c + 1)))
        return true;
    }
    return false;
  };
  if (dfs(dfs, 0, 0)) return col;
  return std::nullopt;
}

std::optional<Coloring> bad_subgrid_coloring(std::size_t k, std::size_t l, std::size_t m,
                                             std::size_t n, std::size_t r,
                                             const RamseySearchOptions& options) {
  if (l > m) throw Error(ErrorKind::kInvalidArgument, "need l <= m");
  const std::size_t items = subgrids(r, n, l).size();
  return find_edge_avoiding_coloring(items, subgrid_edges(r, n, l, m), k, options);
}

std::optional<std::size_t> product_ramsey_number(std::size_t k, std::size_t l, std::size_t m,
                                                 std::size_t n, std::size_t r_max,
                                                 const RamseySearchOptions& options) {
  require_colors(k);
  if (l == 0 || l > m || n == 0)
    throw Error(ErrorKind::kInvalidArgument, "need 1 <= l <= m and n >= 1");
  for (std::size_t r = m; r <= r_max; ++r)
    if (!bad_subgrid_coloring(k, l, m, n, r, options)) return r;
  return std::nullopt;
}

namespace {

bool arrows_exhaustive(const OrderedStructure& a, const OrderedStructure& b,
                       const std::vector<Copy>& inside, std::size_t k, std::size_t r,
                       const RamseySearchOptions& options) {
  const GridStruct grid(r, a.dim());
  const auto acopies = enumerate_copies(grid, a);
  std::map<std::vector<std::size_t>, std::size_t> by_set;
  for (std::size_t i = 0; i < acopies.size(); ++i) by_set[sorted_image(acopies[i])] = i;
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& bc : enumerate_copies(grid, b)) {
    std::vector<std::size_t> e;
    for (const auto& q : inside) {
      Copy img;
      for (auto x : q) img.push_back(bc[x]);
      e.push_back(by_set.at(sorted_image(img)));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    edges.push_back(std::move(e));
  }
  return !find_edge_avoiding_coloring(acopies.size(), edges, k, options);
}

// Each copy of a inside the rigid b of every m^n-subgrid is the rigid copy
// of a in some l^n-subgrid.
bool copies_sit_rigidly(const OrderedStructure& a, const OrderedStructure& b,
                        const std::vector<Copy>& inside, std::size_t r) {
  const std::size_t n = a.dim();
  const std::size_t l = a.size();
  for (const auto& big : subgrids(r, n, b.size())) {
    const auto bpts = rigid_copy_in(b, big);
    for (const auto& q : inside) {
      Subgrid small;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> vals;
        for (auto x : q) vals.push_back(bpts[x][i]);
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        if (vals.size() != l) return false;
        small.axes.push_back(std::move(vals));
      }
      const auto apts = rigid_copy_in(a, small);
      for (std::size_t x = 0; x < l; ++x)
        if (apts[x] != bpts[q[x]]) return false;
    }
  }
  return true;
}

}  // namespace

WitnessOutcome ramsey_witness_outcome(const OrderedStructure& a, const OrderedStructure& b,
                                      std::size_t k, std::size_t r, WitnessPath path,
                                      const RamseySearchOptions& options) {
  require_colors(k);
  if (a.dim() != b.dim()) throw Error(ErrorKind::kShapeMismatch, "structures differ in arity");
  const auto inside = enumerate_copies(b, a);
  if (r < b.size()) return {false, false};
  if (inside.empty()) return {true, false};
  if (path == WitnessPath::kProof && copies_sit_rigidly(a, b, inside, r) &&
      !bad_subgrid_coloring(k, a.size(), b.size(), a.dim(), r, options))
    return {true, true};
  return {arrows_exhaustive(a, b, inside, k, r, options), false};
}

bool ramsey_witness_check(const OrderedStructure& a, const OrderedStructure& b, std::size_t k,
                          std::size_t r, WitnessPath path, const RamseySearchOptions& options) {
  return ramsey_witness_outcome(a, b, k, r, path, options).verdict;
}

}  // namespace orderdim
