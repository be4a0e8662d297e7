#include "orderdim/geometry.hpp"

#include <algorithm>

#include "orderdim/error.hpp"

namespace orderdim {

Point make_point(std::initializer_list<std::string_view> coords) {
  Point p;
  for (auto c : coords) p.coords.push_back(parse_rational(c));
  return p;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += format_rational(p[i]);
  }
  return s + ")";
}

bool product_less(const Point& a, const Point& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b[i] < a[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

PointCloud::PointCloud(std::size_t dim) : dim_(dim), used_(dim) {
  if (dim < 2) throw Error(ErrorKind::kInvalidArgument, "point clouds need dimension >= 2");
}

PointCloud PointCloud::from_points(std::size_t dim, std::vector<Point> points) {
  PointCloud c(dim);
  for (auto& p : points) c.add(std::move(p));
  return c;
}

bool PointCloud::admits(const Point& p) const {
  if (p.dim() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if (uses(i, p[i])) return false;
  return true;
}

std::size_t PointCloud::add(Point p) {
  if (p.dim() != dim_)
    throw Error(ErrorKind::kShapeMismatch, "point " + to_string(p) + " has arity " +
                                               std::to_string(p.dim()) + ", cloud has " +
                                               std::to_string(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    if (uses(i, p[i])) {
      std::size_t other = 0;
      while (points_[other][i] != p[i]) ++other;
      throw Error(ErrorKind::kColinear,
                  "point " + to_string(p) + " shares coordinate " + std::to_string(i) +
                      " with " + label(other),
                  {label(other), label(points_.size())});
    }
  for (std::size_t i = 0; i < dim_; ++i) used_[i].insert(p[i]);
  points_.push_back(std::move(p));
  return points_.size() - 1;
}

PointCloud PointCloud::with_point(Point p) const {
  PointCloud c = *this;
  c.add(std::move(p));
  return c;
}

bool Region::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!intervals[i].contains(p[i])) return false;
  return true;
}

void Region::validate() const {
  for (const auto& iv : intervals)
    if (iv.lo && iv.hi && !(*iv.lo < *iv.hi))
      throw Error(ErrorKind::kInvalidArgument, "empty interval in region " + to_string(*this));
}

std::string to_string(const Region& r) {
  std::string s;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (i) s += " x ";
    const auto& iv = r.intervals[i];
    s += "(" + (iv.lo ? format_rational(*iv.lo) : std::string("-inf")) + "," +
         (iv.hi ? format_rational(*iv.hi) : std::string("+inf")) + ")";
  }
  return s;
}

OrderedStructure induced_structure(const PointCloud& c) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < c.size(); ++k) labels.push_back(PointCloud::label(k));
  RealizerTuple orders;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    std::vector<Rational> keys;
    for (const auto& p : c.points()) keys.push_back(p[i]);
    orders.push_back(LinearOrder::by_key(keys));
  }
  return OrderedStructure::from_orders(std::move(labels), std::move(orders));
}

BallSequence::BallSequence(std::size_t dim) : dim_(dim) { start_block(); }

void BallSequence::start_block() {
  bound_ = static_cast<std::int64_t>(stage_);
  k_.assign(dim_, -bound_);
}

Ball BallSequence::next() {
  Ball ball;
  const Rational unit(1, mpz_class(1) << static_cast<mp_bitcnt_t>(scale_));
  for (auto k : k_) ball.center.coords.push_back(Rational(k) * unit);
  ball.radius = unit;

  std::size_t i = dim_;
  while (i > 0 && k_[i - 1] == bound_) k_[--i] = -bound_;
  if (i > 0) {
    ++k_[i - 1];
  } else {
    if (++scale_ > stage_) {
      ++stage_;
      scale_ = 0;
    }
    start_block();
  }
  return ball;
}

Point draw_in_ball(const PointCloud& cloud, const Ball& ball, std::mt19937_64& rng) {
  Point p;
  for (std::size_t i = 0; i < ball.center.dim(); ++i) {
    // u = (j - D) / D with 1 <= j <= 2D - 1, strictly inside (-1, 1).
    std::uint64_t denom = std::uint64_t{1} << 20;
    while (true) {
      const std::uint64_t j = 1 + rng() % (2 * denom - 1);
      Rational u(mpz_class(static_cast<unsigned long>(j)) -
                     mpz_class(static_cast<unsigned long>(denom)),
                 mpz_class(static_cast<unsigned long>(denom)));
      u.canonicalize();
      Rational x = ball.center[i] + u * ball.radius;
      if (!cloud.uses(i, x)) {
        p.coords.push_back(x);
        break;
      }
      if (denom < (std::uint64_t{1} << 62)) denom <<= 1;
    }
  }
  return p;
}

PointCloud sample_dn(std::size_t n, std::size_t count, std::uint64_t seed) {
  PointCloud cloud(n);
  BallSequence balls(n);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < count; ++k) cloud.add(draw_in_ball(cloud, balls.next(), rng));
  return cloud;
}

std::vector<Region> regions_of(const PointCloud& c) {
  std::vector<std::vector<Interval>> axes;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    std::set<Rational> values;
    for (const auto& p : c.points()) values.insert(p[i]);
    std::vector<Interval> ivs;
    std::optional<Rational> lo;
    for (const auto& v : values) {
      ivs.push_back({lo, v});
      lo = v;
    }
    ivs.push_back({lo, std::nullopt});
    axes.push_back(std::move(ivs));
  }
  std::vector<Region> out{Region{}};
  for (const auto& ivs : axes) {
    std::vector<Region> next;
    for (const auto& r : out)
      for (const auto& iv : ivs) {
        Region s = r;
        s.intervals.push_back(iv);
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

Point pick_in_region(const PointCloud& c, const Region& r) {
  if (r.dim() != c.dim()) throw Error(ErrorKind::kShapeMismatch, "region and cloud dimensions differ");
  r.validate();
  Point p;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const auto& [lo, hi] = r.intervals[i];
    Rational x;
    if (lo && hi) x = (*lo + *hi) / 2;
    else if (lo) x = *lo + 1;
    else if (hi) x = *hi - 1;
    else x = 0;
    while (c.uses(i, x)) x = hi ? Rational((x + *hi) / 2) : Rational(x + 1);
    p.coords.push_back(x);
  }
  return p;
}

PartialEmbedding::PartialEmbedding(OrderedStructure source, PointCloud target)
    : source_(std::move(source)), target_(std::move(target)), image_(source_.size()) {
  if (source_.dim() != target_.dim())
    throw Error(ErrorKind::kShapeMismatch, "structure has " + std::to_string(source_.dim()) +
                                               " orders, cloud has dimension " +
                                               std::to_string(target_.dim()));
}

std::vector<std::size_t> PartialEmbedding::domain() const {
  std::vector<std::size_t> d;
  for (std::size_t e = 0; e < image_.size(); ++e)
    if (image_[e]) d.push_back(e);
  return d;
}

void PartialEmbedding::assign(std::size_t element, std::size_t point) { image_[element] = point; }

bool PartialEmbedding::is_valid() const {
  const auto dom = domain();
  for (auto a : dom) {
    if (*image_[a] >= target_.size()) return false;
    for (auto b : dom) {
      if (a == b) continue;
      const Point& x = target_.point(*image_[a]);
      const Point& y = target_.point(*image_[b]);
      if (*image_[a] == *image_[b]) return false;
      if (source_.poset().less(a, b) != product_less(x, y)) return false;
      for (std::size_t i = 0; i < source_.dim(); ++i)
        if (source_.realizers()[i].before(a, b) != (x[i] < y[i])) return false;
    }
  }
  return true;
}

Region forth_region(const PartialEmbedding& f, std::size_t q) {
  const auto& s = f.source();
  Region r = Region::whole(s.dim());
  for (auto d : f.domain()) {
    const Point& y = f.target().point(*f.image(d));
    for (std::size_t i = 0; i < s.dim(); ++i) {
      auto& iv = r.intervals[i];
      if (s.realizers()[i].before(d, q)) {
        if (!iv.lo || *iv.lo < y[i]) iv.lo = y[i];
      } else if (!iv.hi || y[i] < *iv.hi) {
        iv.hi = y[i];
      }
    }
  }
  return r;
}

PartialEmbedding forth_extend(const PartialEmbedding& f, std::size_t q) {
  if (q >= f.source().size()) throw Error(ErrorKind::kInvalidArgument, "element out of range");
  if (f.image(q)) throw Error(ErrorKind::kInvalidArgument, "element is already mapped");
  if (!f.is_valid())
    throw Error(ErrorKind::kInvalidEmbedding, "the map does not preserve the structure");
  PartialEmbedding g = f;
  const Point p = pick_in_region(g.target(), forth_region(g, q));
  g.assign(q, g.add_target_point(p));
  return g;
}

PartialEmbedding embed_structure(const OrderedStructure& s, const PointCloud& target) {
  PartialEmbedding f(s, target);
  for (std::size_t q = 0; q < s.size(); ++q) f = forth_extend(f, q);
  return f;
}

bool BackAndForthResult::is_partial_isomorphism() const {
  std::set<std::size_t> left;
  std::set<std::size_t> right;
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= b.size()) return false;
    left.insert(x);
    right.insert(y);
  }
  if (left.size() != pairs.size() || right.size() != pairs.size()) return false;
  for (auto [x1, y1] : pairs)
    for (auto [x2, y2] : pairs)
      for (std::size_t i = 0; i < a.dim(); ++i)
        if ((a.point(x1)[i] < a.point(x2)[i]) != (b.point(y1)[i] < b.point(y2)[i]))
          return false;
  return true;
}

Region matched_region(const PointCloud& from, const PointCloud& to,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      const Point& x, bool forward) {
  Region r = Region::whole(from.dim());
  for (const auto& pr : pairs) {
    const Point& u = from.point(forward ? pr.first : pr.second);
    const Point& v = to.point(forward ? pr.second : pr.first);
    for (std::size_t i = 0; i < from.dim(); ++i) {
      auto& iv = r.intervals[i];
      if (u[i] < x[i]) {
        if (!iv.lo || *iv.lo < v[i]) iv.lo = v[i];
      } else if (!iv.hi || v[i] < *iv.hi) {
        iv.hi = v[i];
      }
    }
  }
  return r;
}

BackAndForthResult back_and_forth_iso(const PointCloud& a, const PointCloud& b,
                                      std::size_t steps,
                                      std::vector<std::pair<std::size_t, std::size_t>> initial) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::kShapeMismatch, "clouds differ in dimension");
  BackAndForthResult res{a, b, std::move(initial)};
  if (!res.is_partial_isomorphism())
    throw Error(ErrorKind::kInvalidEmbedding, "initial pairs are not a partial isomorphism");
  std::vector<bool> used_a(res.a.size(), false);
  std::vector<bool> used_b(res.b.size(), false);
  for (auto [x, y] : res.pairs) used_a[x] = used_b[y] = true;

  auto step = [&](PointCloud& from, PointCloud& to, std::vector<bool>& used_from,
                  std::vector<bool>& used_to, bool forward) {
    std::size_t x = 0;
    while (x < from.size() && used_from[x]) ++x;
    if (x == from.size()) {
      from.add(pick_in_region(from, Region::whole(from.dim())));
      used_from.push_back(false);
    }
    const Region cell = matched_region(from, to, res.pairs, from.point(x), forward);
    std::size_t y = 0;
    while (y < to.size() && (used_to[y] || !cell.contains(to.point(y)))) ++y;
    if (y == to.size()) {
      to.add(pick_in_region(to, cell));
      used_to.push_back(false);
    }
    used_from[x] = used_to[y] = true;
    res.pairs.emplace_back(forward ? x : y, forward ? y : x);
  };

  for (std::size_t s = 1; s <= steps; ++s) {
    if (s % 2 == 1) step(res.a, res.b, used_a, used_b, true);
    else step(res.b, res.a, used_b, used_a, false);
  }
  return res;
}

}  // namespace orderdim
