#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orderdim/poset.hpp"
#include "orderdim/rational.hpp"

namespace orderdim {

struct Point {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  friend bool operator==(const Point&, const Point&) = default;
};

Point make_point(std::initializer_list<std::string_view> coords);
std::string to_string(const Point& p);

// Product order: coordinatewise <= and not equal.
bool product_less(const Point& a, const Point& b);

// Finite set of points of Q^n in which no two points share a coordinate.
// Points are only ever appended; their indices are stable.
class PointCloud {
 public:
  explicit PointCloud(std::size_t dim);
  // kColinear (witness: the two point labels) when two points share a
  // coordinate, kShapeMismatch on a wrong arity.
  static PointCloud from_points(std::size_t dim, std::vector<Point> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_[i]; }
  static std::string label(std::size_t i) { return "p" + std::to_string(i); }

  bool uses(std::size_t axis, const Rational& v) const { return used_[axis].count(v) != 0; }
  // Whether p can join without sharing a coordinate.
  bool admits(const Point& p) const;

  std::size_t add(Point p);
  PointCloud with_point(Point p) const;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<std::set<Rational>> used_;
};

// Open interval; a missing endpoint is infinite.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Region {
  std::vector<Interval> intervals;

  static Region whole(std::size_t dim) { return Region{std::vector<Interval>(dim)}; }
  std::size_t dim() const { return intervals.size(); }
  bool contains(const Point& p) const;
  // kInvalidArgument when some interval is empty.
  void validate() const;
  friend bool operator==(const Region&, const Region&) = default;
};

std::string to_string(const Region& r);

// Labels p0, p1, ...; order i is the order of the i-th coordinates.
OrderedStructure induced_structure(const PointCloud& c);

// Rational sup-norm balls: radius 2^-s around a center k / 2^s. Stage t lists,
// for s = 0..t, every integer vector k with |k_i| <= t, in lexicographic
// order. Every open set of Q^n contains a ball that shows up at some stage
// and at every stage after it.
struct Ball {
  Point center;
  Rational radius;
};

class BallSequence {
 public:
  explicit BallSequence(std::size_t dim);
  Ball next();

 private:
  void start_block();

  std::size_t dim_;
  std::size_t stage_ = 0;
  std::size_t scale_ = 0;
  std::vector<std::int64_t> k_;
  std::int64_t bound_ = 0;
};

// The k-th point is drawn inside the k-th ball of BallSequence; the seed only
// moves points within their balls. No two points share a coordinate.
PointCloud sample_dn(std::size_t n, std::size_t count, std::uint64_t seed);

// A point of the open ball, chosen from raw generator bits, that `cloud`
// admits.
Point draw_in_ball(const PointCloud& cloud, const Ball& ball, std::mt19937_64& rng);

// All (k+1)^n cells cut out by the distinct coordinate values, axis 0 most
// significant, intervals left to right.
std::vector<Region> regions_of(const PointCloud& c);

// Deterministic point strictly inside r that shares no coordinate with c.
Point pick_in_region(const PointCloud& c, const Region& r);

// Map from the elements of an ordered structure into a point cloud of the
// same dimension.
class PartialEmbedding {
 public:
  PartialEmbedding(OrderedStructure source, PointCloud target);

  const OrderedStructure& source() const { return source_; }
  const PointCloud& target() const { return target_; }
  std::optional<std::size_t> image(std::size_t element) const { return image_[element]; }
  std::vector<std::size_t> domain() const;

  // Sets element -> point without checks.
  void assign(std::size_t element, std::size_t point);
  std::size_t add_target_point(Point p) { return target_.add(std::move(p)); }

  // Injective and, on the domain, matches < and every <_i with the product
  // and coordinate orders of the target.
  bool is_valid() const;

 private:
  OrderedStructure source_;
  PointCloud target_;
  std::vector<std::optional<std::size_t>> image_;
};

// The cell of q among the images: on axis i, above every image of an element
// below q in <_i and below every image of an element above q in <_i.
Region forth_region(const PartialEmbedding& f, std::size_t q);

// Places q at pick_in_region(target, forth_region). kInvalidEmbedding when f
// is not valid, kInvalidArgument when q is already mapped.
PartialEmbedding forth_extend(const PartialEmbedding& f, std::size_t q);

// Embeds all of s into `target`, element by element.
PartialEmbedding embed_structure(const OrderedStructure& s, const PointCloud& target);

struct BackAndForthResult {
  PointCloud a;
  PointCloud b;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (index in a, index in b)

  // The pairs define an injective map matching every coordinate order.
  bool is_partial_isomorphism() const;
};

// Odd steps map the first unmatched point of a, even steps pull back the
// first unmatched point of b. The partner is the first unmatched point of the
// other cloud in the forced cell, or a fresh point picked there. A cloud that
// runs out of points is extended by pick_in_region over the whole space.
BackAndForthResult back_and_forth_iso(
    const PointCloud& a, const PointCloud& b, std::size_t steps,
    std::vector<std::pair<std::size_t, std::size_t>> initial = {});

// Cell of the (matched-coordinate) type of `from` point x over the matched
// pairs, expressed in the other cloud. `forward` says which side x is on.
Region matched_region(const PointCloud& from, const PointCloud& to,
                      const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                      const Point& x, bool forward);

}  // namespace orderdim
