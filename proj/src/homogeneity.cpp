#include "orderdim/homogeneity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "orderdim/dimension.hpp"
#include "orderdim/error.hpp"

namespace orderdim {

namespace {

std::vector<std::string> point_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < m; ++k) out.push_back(PointCloud::label(k));
  return out;
}

Relation relation_of(const LinearOrder& o) {
  Relation r(o.size());
  for (std::size_t a = 0; a < o.size(); ++a)
    for (std::size_t b = 0; b < o.size(); ++b)
      if (a != b && o.before(a, b)) r.set(a, b);
  return r;
}

bool transitive(const Relation& r) {
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) {
      if (!r(a, b)) continue;
      for (std::size_t c = 0; c < r.size(); ++c)
        if (r(b, c) && !r(a, c)) return false;
    }
  return true;
}

Point uniform_point(std::size_t n, const Rational& first, const Rational& rest) {
  Point p;
  p.coords.push_back(first);
  for (std::size_t i = 1; i < n; ++i) p.coords.push_back(rest);
  return p;
}

void require_dimension(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "dimension must be at least 2");
}

// Lex gap vector of u among the points: how many precede u in each lex order.
std::vector<std::size_t> lex_gaps(const std::vector<Point>& pts, const Point& u) {
  std::vector<std::size_t> gaps(u.dim(), 0);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (const auto& p : pts) gaps[i] += lex_less(p, u, i);
  return gaps;
}

// Gap vectors reachable by a new point, one representative per order type of
// the candidate against the coordinate values on each axis.
std::set<std::vector<std::size_t>> lex_fillable_cells(const std::vector<Point>& pts) {
  std::set<std::vector<std::size_t>> cells;
  if (pts.empty()) return cells;
  const std::size_t n = pts.front().dim();
  std::vector<std::vector<Rational>> options(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<Rational> vals;
    for (const auto& p : pts) vals.insert(p[i]);
    std::optional<Rational> prev;
    for (const auto& v : vals) {
      options[i].push_back(prev ? Rational((*prev + v) / 2) : Rational(v - 1));
      options[i].push_back(v);
      prev = v;
    }
    options[i].push_back(*prev + 1);
    total *= options[i].size();
    if (total > 2000000)
      throw Error(ErrorKind::kLimitExceeded, "too many order types to test lex cells");
  }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    Point u;
    for (std::size_t i = 0; i < n; ++i) u.coords.push_back(options[i][idx[i]]);
    if (std::find(pts.begin(), pts.end(), u) == pts.end()) cells.insert(lex_gaps(pts, u));
    std::size_t k = n;
    while (k > 0 && idx[k - 1] + 1 == options[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return cells;
}

std::size_t locate_or_add(PointCloud& c, const Point& p) {
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c.point(k) == p) return k;
  return c.add(p);
}

Certificate blank_certificate(CertificateKind kind, std::size_t n) {
  Certificate c;
  c.kind = kind;
  c.n = n;
  return c;
}

bool all_checks(const Certificate& cert) {
  return std::all_of(cert.checks.begin(), cert.checks.end(),
                     [](const auto& c) { return c.second; });
}

}  // namespace

bool lex_less(const Point& u, const Point& v, std::size_t axis) {
  const std::size_t n = u.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (axis + k) % n;
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return false;
}

RelationalStructure RelationalStructure::from_structure(const OrderedStructure& s) {
  RelationalStructure r;
  r.labels = s.poset().labels();
  r.lt = s.poset().relation();
  for (const auto& o : s.realizers()) r.orders.push_back(relation_of(o));
  return r;
}

RelationalStructure RelationalStructure::from_cloud(const PointCloud& c) {
  RelationalStructure r = from_structure(induced_structure(c));
  r.points = c.points();
  return r;
}

RelationalStructure RelationalStructure::from_points_lex(const std::vector<Point>& pts) {
  if (pts.empty()) throw Error(ErrorKind::kInvalidArgument, "no points");
  const std::size_t m = pts.size();
  const std::size_t n = pts.front().dim();
  RelationalStructure r;
  r.labels = point_labels(m);
  r.lt = Relation(m);
  r.orders.assign(n, Relation(m));
  r.points = pts;
  r.lexicographic = true;
  for (std::size_t a = 0; a < m; ++a) {
    if (pts[a].dim() != n) throw Error(ErrorKind::kShapeMismatch, "points differ in arity");
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      if (pts[a] == pts[b])
        throw Error(ErrorKind::kInvalidArgument, "repeated point " + to_string(pts[a]),
                    {r.labels[a], r.labels[b]});
      if (product_less(pts[a], pts[b])) r.lt.set(a, b);
      for (std::size_t i = 0; i < n; ++i)
        if (lex_less(pts[a], pts[b], i)) r.orders[i].set(a, b);
    }
  }
  return r;
}

AxiomReport check_dpo_fragment(const RelationalStructure& s) {
  const std::size_t m = s.size();
  AxiomReport rep;
  rep.poset_ok = s.lt.is_irreflexive() && transitive(s.lt);
  rep.linears_ok = true;
  for (const auto& o : s.orders) {
    bool total = true;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (!o(a, b) && !o(b, a)) total = false;
    rep.linears_ok = rep.linears_ok && o.is_irreflexive() && transitive(o) && total;
  }
  rep.realization_ok = true;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      bool all = true;
      for (const auto& o : s.orders) all = all && o(a, b);
      if (all != s.lt(a, b)) rep.realization_ok = false;
    }
  if (!rep.linears_ok || s.orders.empty()) return rep;

  const std::size_t n = s.orders.size();
  std::vector<std::vector<std::size_t>> seq(n, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = 0; e < m; ++e) {
      std::size_t below = 0;
      for (std::size_t f = 0; f < m; ++f) below += s.orders[i](f, e);
      seq[i][below] = e;
    }
  std::set<std::vector<std::size_t>> fillable;
  if (s.lexicographic) fillable = lex_fillable_cells(s.points);
  const bool boxes = !s.points.empty() && !s.lexicographic;

  std::vector<std::size_t> gaps(n, 0);
  while (true) {
    DensityDefect d;
    d.gaps = gaps;
    for (std::size_t i = 0; i < n; ++i) {
      d.below.push_back(gaps[i] > 0 ? std::optional(seq[i][gaps[i] - 1]) : std::nullopt);
      d.above.push_back(gaps[i] < m ? std::optional(seq[i][gaps[i]]) : std::nullopt);
    }
    if (boxes) {
      Region r = Region::whole(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (d.below[i]) r.intervals[i].lo = s.points[*d.below[i]][i];
        if (d.above[i]) r.intervals[i].hi = s.points[*d.above[i]][i];
      }
      d.region = std::move(r);
    }
    if (s.lexicographic) d.fillable = fillable.count(gaps) != 0;
    rep.density_defects.push_back(std::move(d));
    std::size_t k = n;
    while (k > 0 && gaps[k - 1] == m) gaps[--k] = 0;
    if (k == 0) break;
    ++gaps[k - 1];
  }
  return rep;
}

AxiomReport check_dpo_fragment(const OrderedStructure& s) {
  return check_dpo_fragment(RelationalStructure::from_structure(s));
}

AxiomReport check_dpo_fragment(const PointCloud& c) {
  return check_dpo_fragment(RelationalStructure::from_cloud(c));
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kAPFailure: return "APFailure";
    case CertificateKind::kNotUltrahomogeneous: return "NotUltrahomogeneous";
    case CertificateKind::kQnLexNotUltrahomogeneous: return "QnLexNotUltrahomogeneous";
    case CertificateKind::kTwoHomogeneityExtension: return "TwoHomogeneityExtension";
  }
  return "Unknown";
}

std::optional<std::vector<std::size_t>> find_induced_copy(const FinitePoset& host,
                                                          const FinitePoset& pattern) {
  const std::size_t k = pattern.size();
  std::vector<std::size_t> map;
  std::vector<bool> used(host.size(), false);
  std::function<bool()> rec = [&]() {
    if (map.size() == k) return true;
    const std::size_t p = map.size();
    for (std::size_t h = 0; h < host.size(); ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q)
        ok = pattern.less(q, p) == host.less(map[q], h) && pattern.less(p, q) == host.less(h, map[q]);
      if (!ok) continue;
      used[h] = true;
      map.push_back(h);
      if (rec()) return true;
      map.pop_back();
      used[h] = false;
    }
    return false;
  };
  if (rec()) return map;
  return std::nullopt;
}

std::vector<Amalgam> amalgam_completions(std::size_t n, std::size_t* candidates) {
  require_dimension(n);
  const std::size_t na = n + 1;
  // a_1..a_{n+1}, g(b_2)..g(b_{n+1}), h(b_1).
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= na; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t j = 2; j <= na; ++j) labels.push_back("g(b" + std::to_string(j) + ")");
  labels.push_back("h(b1)");
  const std::size_t hb1 = 2 * n + 1;
  auto gb = [&](std::size_t j) { return na + j - 2; };  // j = 2..n+1

  Relation base(2 * n + 2);
  for (std::size_t i = 1; i <= na; ++i) {
    for (std::size_t j = 2; j <= na; ++j)
      if (i != j) base.set(i - 1, gb(j));
    if (i != 1) base.set(i - 1, hb1);
  }

  std::vector<Amalgam> out;
  std::size_t tried = 0;
  // Three ways to relate h(b_1) with each g(b_j).
  std::size_t combos = 1;
  for (std::size_t j = 0; j < n; ++j) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    ++tried;
    Relation r = base;
    std::size_t c = code;
    for (std::size_t j = 2; j <= na; ++j, c /= 3) {
      if (c % 3 == 1) r.set(hb1, gb(j));
      if (c % 3 == 2) r.set(gb(j), hb1);
    }
    if (!r.is_irreflexive() || !transitive(r)) continue;
    std::vector<std::size_t> idx{hb1};
    for (std::size_t j = 2; j <= na; ++j) idx.push_back(gb(j));
    out.push_back({FinitePoset::validate(labels, r), idx});
  }
  // h(b_1) merged with g(b_j): the two must relate to the a's identically.
  for (std::size_t j = 2; j <= na; ++j) {
    ++tried;
    bool agree = true;
    for (std::size_t i = 0; i < na; ++i)
      agree = agree && base(i, hb1) == base(i, gb(j)) && base(hb1, i) == base(gb(j), i);
    if (!agree) continue;
    std::vector<std::size_t> keep;
    for (std::size_t e = 0; e < hb1; ++e) keep.push_back(e);
    Relation r = base.restricted(keep);
    if (!transitive(r)) continue;
    std::vector<std::string> merged(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(hb1));
    merged[gb(j)] = "h(b1)=g(b" + std::to_string(j) + ")";
    std::vector<std::size_t> idx{gb(j)};
    for (std::size_t k = 2; k <= na; ++k) idx.push_back(gb(k));
    out.push_back({FinitePoset::validate(merged, r), idx});
  }
  if (candidates) *candidates = tried;
  return out;
}

Certificate ap_failure_certificate(std::size_t n) {
  require_dimension(n);
  Certificate cert = blank_certificate(CertificateKind::kAPFailure, n);
  std::size_t candidates = 0;
  const auto completions = amalgam_completions(n, &candidates);
  const FinitePoset target = crown(n + 1);
  const bool run_dimension = n <= 3;

  std::size_t with_crown = 0;
  std::size_t low_dim = 0;
  bool fact_a = true;
  bool fact_below = true;
  bool fact_above = true;
  for (const auto& d : completions) {
    if (find_induced_copy(d.order, target)) ++with_crown;
    if (run_dimension && dimension(d.order).dim <= n) ++low_dim;
    const std::size_t h = d.b_index[0];
    for (std::size_t i = 0; i <= n; ++i) fact_a = fact_a && d.order.less(i, h) == (i != 0);
    for (std::size_t j = 1; j < d.b_index.size(); ++j) {
      const std::size_t g = d.b_index[j];
      fact_below = fact_below && g != h && !d.order.less(g, h);
      fact_above = fact_above && !d.order.less(h, g);
    }
  }
  cert.counts["candidates"] = static_cast<long long>(candidates);
  cert.counts["completions"] = static_cast<long long>(completions.size());
  cert.counts["completions_with_crown"] = static_cast<long long>(with_crown);
  if (run_dimension) cert.counts["completions_dim_at_most_n"] = static_cast<long long>(low_dim);

  cert.checks.emplace_back("amalgams exist as partial orders", !completions.empty());
  cert.checks.emplace_back("every completion contains an induced crown(n+1)",
                           with_crown == completions.size());
  if (run_dimension) {
    cert.checks.emplace_back("no completion has dimension <= n", low_dim == 0);
    cert.checks.emplace_back("crown(n+1) has dimension n+1", dimension(target).dim == n + 1);
    // Inside crown(n+1): a_i at i-1, b_j at n+j.
    std::vector<std::size_t> a_part;
    for (std::size_t e = 0; e <= n; ++e) a_part.push_back(e);
    std::vector<std::size_t> b_part = a_part;
    for (std::size_t e = n + 2; e < 2 * n + 2; ++e) b_part.push_back(e);
    std::vector<std::size_t> c_part = a_part;
    c_part.push_back(n + 1);
    const FinitePoset b = target.induced(b_part);
    cert.checks.emplace_back("A and C are 2-dimensional",
                             dimension(target.induced(a_part)).dim == 2 &&
                                 dimension(target.induced(c_part)).dim == 2);
    cert.checks.emplace_back("B has dimension n", dimension(b).dim == n);
  }
  cert.checks.emplace_back("g(a_i) < h(b_1) iff i != 1", fact_a);
  cert.checks.emplace_back("no g(b_j) <= h(b_1)", fact_below);
  cert.checks.emplace_back("no h(b_1) < g(b_j)", fact_above);
  cert.verdict = all_checks(cert);
  return cert;
}

NonhomConfiguration nonhom_configuration(std::size_t n) {
  require_dimension(n);
  NonhomConfiguration cfg;
  cfg.a = uniform_point(n, 1, 4);
  cfg.b = uniform_point(n, 2, 2);
  cfg.c = uniform_point(n, 3, 1);
  PointCloud cloud = PointCloud::from_points(n, {cfg.a, cfg.b, cfg.c});
  Region r = Region::whole(n);
  for (std::size_t i = 0; i < n; ++i) r.intervals[i].lo = std::max(cfg.b[i], cfg.c[i]);
  r.intervals[1].hi = cfg.a[1];
  cfg.x = pick_in_region(cloud, r);
  return cfg;
}

Certificate nonhom_witness(std::size_t n) {
  const auto cfg = nonhom_configuration(n);
  Certificate cert = blank_certificate(CertificateKind::kNotUltrahomogeneous, n);
  cert.points = {{"a", cfg.a}, {"b", cfg.b}, {"c", cfg.c}, {"x", cfg.x}};
  const auto& [a, b, c, x] = cfg;

  bool generic = true;
  try {
    PointCloud::from_points(n, {a, b, c, x});
  } catch (const Error&) {
    generic = false;
  }
  auto incomparable = [](const Point& u, const Point& v) {
    return !product_less(u, v) && !product_less(v, u);
  };
  cert.checks.emplace_back("a, b, c, x share no coordinate", generic);
  cert.checks.emplace_back("{a, b, c} is an antichain",
                           incomparable(a, b) && incomparable(a, c) && incomparable(b, c));
  cert.checks.emplace_back("b < x and c < x", product_less(b, x) && product_less(c, x));
  cert.checks.emplace_back("a and x are incomparable", incomparable(a, x));

  // Image y of x under an extension of the swap: a < y, c < y, b not < y.
  // a < y and c < y bound y_i from below by max(a_i, c_i), which is >= b_i
  // on every axis, so b < y follows.
  long long forcing_axes = 0;
  for (std::size_t i = 0; i < n; ++i) forcing_axes += std::max(a[i], c[i]) >= b[i];
  cert.counts["axes_forcing_b_below_y"] = forcing_axes;
  cert.checks.emplace_back("a < y and c < y force b < y",
                           forcing_axes == static_cast<long long>(n));

  PointCloud cloud = PointCloud::from_points(n, {a, b, c, x});
  Region above = Region::whole(n);
  for (std::size_t i = 0; i < n; ++i) above.intervals[i].lo = std::max(a[i], c[i]);
  const Point y = pick_in_region(cloud, above);
  cert.points.emplace_back("control_y", y);
  cert.checks.emplace_back("without not(b < y) the constraints are satisfiable",
                           product_less(a, y) && product_less(c, y));
  cert.verdict = all_checks(cert);
  return cert;
}

QnLexConfiguration qn_lex_configuration(std::size_t n) {
  require_dimension(n);
  QnLexConfiguration cfg;
  cfg.a = uniform_point(n, 1, 1);
  cfg.x = uniform_point(n, Rational(3, 2), Rational(3, 2));
  cfg.b = uniform_point(n, 2, 4);
  cfg.c = uniform_point(n, 4, 2);
  cfg.a2 = uniform_point(n, 1, 1);
  cfg.b2 = uniform_point(n, 1, 4);
  cfg.c2 = uniform_point(n, 4, 1);
  return cfg;
}

std::optional<Point> lex_forced_point(const std::vector<LexConstraint>& constraints,
                                      std::size_t n) {
  std::vector<std::optional<Rational>> forced(n);
  for (const auto& con : constraints)
    for (std::size_t k = 0; k < n; ++k) {
      // lo <= u <= hi on the k-th compared coordinate; equal ends pin it and
      // pass the comparison on to the next coordinate.
      const std::size_t i = (con.axis + k) % n;
      if (con.lo[i] != con.hi[i]) break;
      forced[i] = con.lo[i];
    }
  Point p;
  for (auto& v : forced) {
    if (!v) return std::nullopt;
    p.coords.push_back(*v);
  }
  return p;
}

namespace {

// The relations of u to the named points under < and every lex order.
std::vector<bool> lex_profile(const Point& u, const std::vector<Point>& others) {
  std::vector<bool> out;
  for (const auto& v : others) {
    out.push_back(product_less(u, v));
    out.push_back(product_less(v, u));
    for (std::size_t i = 0; i < u.dim(); ++i) {
      out.push_back(lex_less(u, v, i));
      out.push_back(lex_less(v, u, i));
    }
  }
  return out;
}

// Lex constraints locating x among the three points, read off the triple.
std::vector<LexConstraint> lex_cell(const std::vector<Point>& from, const Point& x,
                                    const std::vector<Point>& to) {
  std::vector<LexConstraint> out;
  const std::size_t n = x.dim();
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> lo;
    std::optional<std::size_t> hi;
    for (std::size_t k = 0; k < from.size(); ++k) {
      if (lex_less(from[k], x, i) && (!lo || lex_less(from[*lo], from[k], i))) lo = k;
      if (lex_less(x, from[k], i) && (!hi || lex_less(from[k], from[*hi], i))) hi = k;
    }
    if (lo && hi) out.push_back({i, to[*lo], to[*hi]});
  }
  return out;
}

}  // namespace

Certificate qn_lex_nonhom_witness(std::size_t n) {
  const auto cfg = qn_lex_configuration(n);
  Certificate cert = blank_certificate(CertificateKind::kQnLexNotUltrahomogeneous, n);
  cert.points = {{"a", cfg.a},   {"b", cfg.b},   {"c", cfg.c},  {"x", cfg.x},
                 {"a'", cfg.a2}, {"b'", cfg.b2}, {"c'", cfg.c2}};
  const std::vector<Point> src{cfg.a, cfg.b, cfg.c};
  const std::vector<Point> dst{cfg.a2, cfg.b2, cfg.c2};

  bool iso = true;
  for (std::size_t k = 0; k < 3; ++k)
    iso = iso && lex_profile(src[k], src) == lex_profile(dst[k], dst);
  cert.checks.emplace_back("a->a', b->b', c->c' preserves < and every lex order", iso);

  bool between = lex_less(cfg.a, cfg.x, 0) && lex_less(cfg.x, cfg.b, 0);
  for (std::size_t i = 1; i < n; ++i)
    between = between && lex_less(cfg.a, cfg.x, i) && lex_less(cfg.x, cfg.c, i);
  cert.checks.emplace_back("a <lex1 x <lex1 b and a <lexi x <lexi c", between);

  bool colinear = cfg.a2[0] == cfg.b2[0];
  for (std::size_t i = 1; i < n; ++i) colinear = colinear && cfg.a2[i] == cfg.c2[i];
  cert.checks.emplace_back("a'_1 = b'_1 and a'_i = c'_i", colinear);

  const auto cell = lex_cell(src, cfg.x, dst);
  cert.counts["lex_constraints"] = static_cast<long long>(cell.size());
  const auto forced = lex_forced_point(cell, n);
  cert.checks.emplace_back("propagation forces x' = a'", forced && *forced == cfg.a2);
  bool contradiction = forced.has_value();
  if (forced)
    for (const auto& con : cell)
      contradiction = contradiction && !(lex_less(con.lo, *forced, con.axis) &&
                                         lex_less(*forced, con.hi, con.axis));
  cert.checks.emplace_back("the forced point violates a strict lex constraint", contradiction);

  // The same cell seen as a region of the colinear triple is empty.
  auto report = check_dpo_fragment(RelationalStructure::from_points_lex(dst));
  const auto gaps = lex_gaps(dst, cfg.a2);  // a' is least in every lex order
  std::vector<std::size_t> cell_gaps(n, gaps[0] + 1);
  bool empty_cell = false;
  for (const auto& d : report.density_defects)
    if (d.gaps == cell_gaps) empty_cell = !d.fillable;
  cert.checks.emplace_back("the region of a', b', c' holding x' is empty", empty_cell);

  // Control: a non-colinear image triple leaves room for x.
  const std::vector<Point> generic{uniform_point(n, 0, 0), uniform_point(n, 5, 7),
                                   uniform_point(n, 6, 3)};
  bool generic_iso = true;
  for (std::size_t k = 0; k < 3; ++k)
    generic_iso = generic_iso && lex_profile(src[k], src) == lex_profile(generic[k], generic);
  Region r = Region::whole(n);
  for (const auto& con : lex_cell(src, cfg.x, generic)) {
    r.intervals[con.axis].lo = con.lo[con.axis];
    r.intervals[con.axis].hi = con.hi[con.axis];
  }
  PointCloud cloud(n);
  const Point x2 = pick_in_region(cloud, r);
  std::vector<Point> src_x = src;
  src_x.push_back(cfg.x);
  std::vector<Point> gen_x = generic;
  gen_x.push_back(x2);
  bool control = generic_iso;
  for (std::size_t k = 0; k < 4; ++k)
    control = control && lex_profile(src_x[k], src_x) == lex_profile(gen_x[k], gen_x);
  cert.points.emplace_back("control_x", x2);
  cert.checks.emplace_back("a non-colinear image triple admits x", control);
  cert.verdict = all_checks(cert);
  return cert;
}

std::size_t FlipPattern::count() const {
  return static_cast<std::size_t>(std::count(flipped.begin(), flipped.end(), true));
}

FlipPattern flip_pattern(const Point& a, const Point& b, const Point& a2, const Point& b2) {
  FlipPattern f;
  for (std::size_t i = 0; i < a.dim(); ++i) f.flipped.push_back((a[i] < b[i]) != (a2[i] < b2[i]));
  return f;
}

bool TwoHomogeneityExtension::preserves_order() const {
  std::set<std::size_t> dom;
  std::set<std::size_t> ran;
  for (auto [x, y] : pairs) {
    dom.insert(x);
    ran.insert(y);
  }
  if (dom.size() != pairs.size() || ran.size() != pairs.size()) return false;
  for (auto [x1, y1] : pairs)
    for (auto [x2, y2] : pairs)
      if (product_less(cloud.point(x1), cloud.point(x2)) !=
          product_less(cloud.point(y1), cloud.point(y2)))
        return false;
  return true;
}

TwoHomogeneityExtension two_homogeneity_extend(const PointCloud& c,
                                               std::pair<Point, Point> pair1,
                                               std::pair<Point, Point> pair2,
                                               std::size_t steps) {
  const auto& [a, b] = pair1;
  const auto& [a2, b2] = pair2;
  const std::size_t n = c.dim();
  if (a == b || a2 == b2)
    throw Error(ErrorKind::kInvalidArgument, "pairs must consist of distinct points");
  if (product_less(a, b) != product_less(a2, b2) || product_less(b, a) != product_less(b2, a2))
    throw Error(ErrorKind::kNotOrderPreserving,
                "the pair map does not preserve <",
                {to_string(a), to_string(b), to_string(a2), to_string(b2)});

  TwoHomogeneityExtension ext{c, {}, flip_pattern(a, b, a2, b2), {}};
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  bool found = false;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = (a[j] < b[j]) == (a2[perm[j]] < b2[perm[j]]);
    if (ok) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!found)
    throw Error(ErrorKind::kNotExtendable,
                "no coordinate permutation carries the sign pattern of the first pair "
                "to that of the second",
                {to_string(a), to_string(b), to_string(a2), to_string(b2)});
  ext.axis_map = perm;

  PointCloud& cloud = ext.cloud;
  const std::size_t ia = locate_or_add(cloud, a);
  const std::size_t ib = locate_or_add(cloud, b);
  const std::size_t ia2 = locate_or_add(cloud, a2);
  const std::size_t ib2 = locate_or_add(cloud, b2);
  ext.pairs = {{ia, ia2}, {ib, ib2}};

  auto in_domain = [&](std::size_t k) {
    return std::any_of(ext.pairs.begin(), ext.pairs.end(), [&](auto& p) { return p.first == k; });
  };
  auto in_range = [&](std::size_t k) {
    return std::any_of(ext.pairs.begin(), ext.pairs.end(), [&](auto& p) { return p.second == k; });
  };

  for (std::size_t s = 1; s <= steps; ++s) {
    const bool forth = s % 2 == 1;
    std::size_t x = 0;
    while (x < cloud.size() && (forth ? in_domain(x) : in_range(x))) ++x;
    if (x == cloud.size()) cloud.add(pick_in_region(cloud, Region::whole(n)));
    const Point& px = cloud.point(x);
    // Cell on the other side: domain axis j pairs with range axis perm[j].
    Region cell = Region::whole(n);
    for (auto [u, v] : ext.pairs)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t here = forth ? j : perm[j];
        const std::size_t there = forth ? perm[j] : j;
        const Rational& bound = cloud.point(forth ? v : u)[there];
        auto& iv = cell.intervals[there];
        if (cloud.point(forth ? u : v)[here] < px[here]) {
          if (!iv.lo || *iv.lo < bound) iv.lo = bound;
        } else if (!iv.hi || bound < *iv.hi) {
          iv.hi = bound;
        }
      }
    std::size_t y = 0;
    while (y < cloud.size() && ((forth ? in_range(y) : in_domain(y)) || !cell.contains(cloud.point(y))))
      ++y;
    if (y == cloud.size()) cloud.add(pick_in_region(cloud, cell));
    ext.pairs.emplace_back(forth ? x : y, forth ? y : x);
  }
  return ext;
}

Certificate two_homogeneity_certificate(std::size_t n, std::uint64_t seed, std::size_t steps) {
  require_dimension(n);
  Certificate cert = blank_certificate(CertificateKind::kTwoHomogeneityExtension, n);
  const PointCloud cloud = sample_dn(n, 8, seed);
  const Point& a = cloud.point(0);
  const Point& b = cloud.point(1);
  auto signs = [](const Point& u, const Point& v) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < u.dim(); ++i) k += u[i] < v[i];
    return k;
  };
  std::optional<std::pair<std::size_t, std::size_t>> choice;
  for (int want_flip = 1; want_flip >= 0 && !choice; --want_flip)
    for (std::size_t x = 0; x < cloud.size() && !choice; ++x)
      for (std::size_t y = 0; y < cloud.size() && !choice; ++y) {
        if (x == y || (x == 0 && y == 1)) continue;
        const Point& u = cloud.point(x);
        const Point& v = cloud.point(y);
        if (signs(a, b) != signs(u, v)) continue;
        if ((flip_pattern(a, b, u, v).count() > 0) != (want_flip == 1)) continue;
        choice = {x, y};
      }
  cert.counts["seed"] = static_cast<long long>(seed);
  cert.counts["steps"] = static_cast<long long>(steps);
  cert.checks.emplace_back("a second pair with a matching sign count exists", choice.has_value());
  if (choice) {
    const Point& a2 = cloud.point(choice->first);
    const Point& b2 = cloud.point(choice->second);
    cert.points = {{"a", a}, {"b", b}, {"a'", a2}, {"b'", b2}};
    const auto ext = two_homogeneity_extend(cloud, {a, b}, {a2, b2}, steps);
    cert.counts["flipped_axes"] = static_cast<long long>(ext.flips.count());
    cert.counts["pairs"] = static_cast<long long>(ext.pairs.size());
    cert.checks.emplace_back("the pair map preserves <",
                             product_less(a, b) == product_less(a2, b2) &&
                                 product_less(b, a) == product_less(b2, a2));
    cert.checks.emplace_back("the extension preserves < on its domain", ext.preserves_order());
    cert.checks.emplace_back("the extension covers the requested steps",
                             ext.pairs.size() == steps + 2);
  }
  cert.verdict = all_checks(cert);
  return cert;
}

bool replay(const Certificate& cert) {
  Certificate again;
  switch (cert.kind) {
    case CertificateKind::kAPFailure: again = ap_failure_certificate(cert.n); break;
    case CertificateKind::kNotUltrahomogeneous: again = nonhom_witness(cert.n); break;
    case CertificateKind::kQnLexNotUltrahomogeneous: again = qn_lex_nonhom_witness(cert.n); break;
    case CertificateKind::kTwoHomogeneityExtension: {
      auto seed = cert.counts.find("seed");
      auto steps = cert.counts.find("steps");
      if (seed == cert.counts.end() || steps == cert.counts.end()) return false;
      again = two_homogeneity_certificate(cert.n, static_cast<std::uint64_t>(seed->second),
                                          static_cast<std::size_t>(steps->second));
      break;
    }
  }
  return again == cert && again.verdict;
}

}  // namespace orderdim
