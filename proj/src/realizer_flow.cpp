#include "orderdim/realizer_flow.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace orderdim {

namespace {

std::vector<std::string> point_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(PointCloud::label(i));
  return out;
}

Permutation identity(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& g) {
  std::vector<std::size_t> inv(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) inv[g[x]] = x;
  return inv;
}

bool is_permutation_of_size(const std::vector<std::size_t>& g, std::size_t m) {
  if (g.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (auto x : g) {
    if (x >= m || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool preserves_order(const FinitePoset& p, const std::vector<std::size_t>& g) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b) != p.less(g[a], g[b])) return false;
  return true;
}

LinearOrder coordinate_order(const PointCloud& c, std::size_t axis) {
  std::vector<Rational> keys;
  for (const auto& p : c.points()) keys.push_back(p[axis]);
  return LinearOrder::by_key(keys);
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::size_t RealizerSet::classified_count() const {
  return static_cast<std::size_t>(std::count_if(
      tuples.begin(), tuples.end(), [](const ClassifiedTuple& t) { return t.sigma.has_value(); }));
}

RealizerSet enumerate_realizers(const OrderedStructure& s, const Budget& budget) {
  RealizerSet out;
  for (auto& t : enumerate_realizer_tuples(s.poset(), s.dim(), budget))
    out.tuples.push_back({std::move(t), std::nullopt});
  return out;
}

std::vector<Permutation> classifying_permutations(const PointCloud& c, const RealizerTuple& t) {
  const std::size_t n = c.dim();
  if (t.size() != n) throw Error(ErrorKind::kShapeMismatch, "tuple length differs from dimension");
  if (!is_realizer(induced_structure(c).poset(), t))
    throw Error(ErrorKind::kNotARealizer, "the tuple does not realize the product order");
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto coord = coordinate_order(c, i);
    for (std::size_t j = 0; j < n; ++j) same[i][j] = t[j] == coord;
  }
  std::vector<Permutation> out;
  Permutation sigma = identity(n);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = same[i][sigma[i]];
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::optional<Permutation> classify_realizer(const PointCloud& c, const RealizerTuple& t) {
  auto all = classifying_permutations(c, t);
  if (all.empty()) return std::nullopt;
  return all.front();
}

RealizerSet enumerate_cloud_realizers(const PointCloud& c, const Budget& budget) {
  auto set = enumerate_realizers(induced_structure(c), budget);
  for (auto& ct : set.tuples) ct.sigma = classify_realizer(c, ct.tuple);
  return set;
}

std::optional<Permutation> grid_permutation(const GridStruct& g, const RealizerTuple& t) {
  const std::size_t n = g.dim();
  if (t.size() != n) throw Error(ErrorKind::kShapeMismatch, "tuple length differs from dimension");
  if (!is_realizer(g.structure().poset(), t))
    throw Error(ErrorKind::kNotARealizer, "the tuple does not realize the product order");
  Permutation sigma = identity(n);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < g.size() && ok; ++a)
      for (std::size_t b = 0; b < g.size() && ok; ++b)
        for (std::size_t i = 0; i < n && ok; ++i)
          if (g.point(a)[i] < g.point(b)[i]) ok = t[sigma[i]].before(a, b);
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

FinitePoset extend_realizer_closure(const FinitePoset& superset,
                                    const std::vector<std::size_t>& subset,
                                    const LinearOrder& partial) {
  if (partial.size() != subset.size())
    throw Error(ErrorKind::kShapeMismatch, "the order and the subset differ in size");
  std::vector<bool> seen(superset.size(), false);
  for (auto x : subset) {
    if (x >= superset.size() || seen[x])
      throw Error(ErrorKind::kInvalidArgument, "subset indices must be distinct and in range");
    seen[x] = true;
  }
  Relation r = superset.relation();
  const auto& seq = partial.sequence();
  for (std::size_t k = 1; k < seq.size(); ++k) r.set(subset[seq[k - 1]], subset[seq[k]]);
  if (auto cycle = r.find_cycle()) {
    std::vector<std::string> witness;
    for (auto x : *cycle) witness.push_back(superset.label(x));
    throw Error(ErrorKind::kCycleFound, "the order and the superset's order form a cycle",
                std::move(witness));
  }
  r.close_transitively();
  return FinitePoset::validate(superset.labels(), std::move(r));
}

RealizerTuple extend_realizer(const FinitePoset& superset, const std::vector<std::size_t>& subset,
                              const RealizerTuple& t) {
  RealizerTuple out;
  for (const auto& o : t) out.push_back(szpilrajn_extend(extend_realizer_closure(superset, subset, o)));
  return out;
}

FinitePoset product_poset(const std::vector<Point>& points) {
  const std::size_t m = points.size();
  Relation r(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (points[a].dim() != points.front().dim())
      throw Error(ErrorKind::kShapeMismatch, "points differ in arity");
    for (std::size_t b = 0; b < m; ++b)
      if (product_less(points[a], points[b])) r.set(a, b);
  }
  return FinitePoset::validate(point_labels(m), std::move(r));
}

std::vector<std::vector<std::size_t>> poset_automorphisms(const FinitePoset& p,
                                                          const Budget& budget) {
  const std::size_t m = p.size();
  std::vector<std::size_t> below(m, 0), above(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (p.less(a, b)) ++above[a], ++below[b];
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> g(m);
  std::vector<bool> used(m, false);
  std::uint64_t nodes = 0;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (++nodes > budget.max_search_nodes)
      throw Error(ErrorKind::kLimitExceeded, "automorphism search over budget");
    if (x == m) {
      out.push_back(g);
      return;
    }
    for (std::size_t y = 0; y < m; ++y) {
      if (used[y] || below[y] != below[x] || above[y] != above[x]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z)
        ok = p.less(z, x) == p.less(g[z], y) && p.less(x, z) == p.less(y, g[z]);
      if (!ok) continue;
      g[x] = y;
      used[y] = true;
      self(self, x + 1);
      used[y] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<std::size_t>> cloud_automorphisms(const PointCloud& c,
                                                          const Budget& budget) {
  return poset_automorphisms(product_poset(c.points()), budget);
}

RealizerTuple logic_action(const FinitePoset& p, const std::vector<std::size_t>& g,
                           const RealizerTuple& t) {
  if (!is_permutation_of_size(g, p.size()))
    throw Error(ErrorKind::kInvalidArgument, "g is not a bijection of the elements");
  if (!preserves_order(p, g))
    throw Error(ErrorKind::kNotOrderPreserving, "g does not preserve the order");
  RealizerTuple out;
  for (const auto& o : t) {
    std::vector<std::size_t> seq;
    for (auto x : o.sequence()) seq.push_back(g.at(x));
    out.emplace_back(std::move(seq));
  }
  if (!is_realizer(p, out))
    throw Error(ErrorKind::kNotARealizer, "transported tuple does not realize the order");
  return out;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& g,
                                 const std::vector<std::size_t>& h) {
  std::vector<std::size_t> out;
  for (auto x : h) out.push_back(g.at(x));
  return out;
}

PointCloud symmetric_sample(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "dimension must be at least 2");
  PointCloud cloud(n);
  if (count == 0) return cloud;
  if (n >= 3)
    throw Error(ErrorKind::kColinearityUnavoidable,
                "a transposition fixes an axis, so its orbit pairs share a coordinate");
  const std::size_t orbits = (count + 1) / 2;
  BallSequence balls(n);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < orbits; ++k) {
    const Ball ball = balls.next();
    while (true) {
      Point p = draw_in_ball(cloud, ball, rng);
      Point q{{p[1], p[0]}};
      if (p[0] == p[1] || !cloud.with_point(p).admits(q)) continue;
      cloud.add(std::move(p));
      cloud.add(std::move(q));
      break;
    }
  }
  return cloud;
}

std::optional<std::vector<std::size_t>> coordinate_permutation_map(const PointCloud& c,
                                                                   const Permutation& sigma) {
  if (!is_permutation_of_size(sigma, c.dim()))
    throw Error(ErrorKind::kInvalidArgument, "sigma is not a permutation of the axes");
  std::vector<std::size_t> map;
  for (const auto& p : c.points()) {
    Point q;
    for (auto j : sigma) q.coords.push_back(p[j]);
    const auto it = std::find(c.points().begin(), c.points().end(), q);
    if (it == c.points().end()) return std::nullopt;
    map.push_back(static_cast<std::size_t>(it - c.points().begin()));
  }
  return map;
}

DecompositionReport semidirect_decomposition(const PointCloud& c, const Budget& budget) {
  const std::size_t n = c.dim();
  DecompositionReport rep;
  const auto group = cloud_automorphisms(c, budget);
  rep.group_order = group.size();

  std::vector<std::pair<Permutation, std::vector<std::size_t>>> symmetries;
  Permutation sigma = identity(n);
  do {
    if (auto map = coordinate_permutation_map(c, sigma)) symmetries.emplace_back(sigma, *map);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  rep.coordinate_symmetries = symmetries.size();

  std::vector<LinearOrder> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(coordinate_order(c, i));
  auto keeps_coordinates = [&](const std::vector<std::size_t>& h) {
    for (const auto& o : coords)
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
          if (o.before(a, b) != o.before(h[a], h[b])) return false;
    return true;
  };

  for (const auto& g : group) {
    if (keeps_coordinates(g)) ++rep.order_preserving;
    std::size_t found = 0;
    for (const auto& [s, map] : symmetries) {
      auto h = compose(inverse(map), g);
      if (!keeps_coordinates(h)) continue;
      if (found++ == 0) rep.factorizations.push_back({g, s, std::move(h)});
    }
    if (found == 0) rep.failures.push_back(g);
    if (found > 1) rep.unique = false;
  }
  if (rep.coordinate_symmetries == factorial(n))
    rep.order_law = rep.group_order == rep.order_preserving * factorial(n);
  return rep;
}

}  // namespace orderdim
