#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orderdim/geometry.hpp"
#include "orderdim/poset.hpp"

namespace orderdim {

// A strict relation < and n further relations on the same m elements, kept
// raw so that the axioms can be checked rather than assumed.
struct RelationalStructure {
  std::vector<std::string> labels;
  Relation lt;
  std::vector<Relation> orders;
  // Coordinates, when the structure comes from points (used for regions).
  std::vector<Point> points;
  // The orders are the lexicographic orders of the points.
  bool lexicographic = false;

  static RelationalStructure from_structure(const OrderedStructure& s);
  static RelationalStructure from_cloud(const PointCloud& c);
  // Product order and the n cyclic lexicographic orders; points may share
  // coordinates but must be distinct.
  static RelationalStructure from_points_lex(const std::vector<Point>& pts);

  std::size_t size() const { return labels.size(); }
};

// u <lex_i v comparing coordinates i, i+1, ..., i-1 (0-based i).
bool lex_less(const Point& u, const Point& v, std::size_t axis);

struct DensityDefect {
  // gaps[i] = number of elements below the cell in order i.
  std::vector<std::size_t> gaps;
  // The order-i neighbours of the cell (element indices), when present.
  std::vector<std::optional<std::size_t>> below;
  std::vector<std::optional<std::size_t>> above;
  // The cell as a box of Q^n, for coordinate-ordered point inputs.
  std::optional<Region> region;
  // Whether some new point of Q^n would land in the cell.
  bool fillable = true;
};

struct AxiomReport {
  bool poset_ok = false;
  bool linears_ok = false;
  bool realization_ok = false;
  std::vector<DensityDefect> density_defects;

  bool universal_ok() const { return poset_ok && linears_ok && realization_ok; }
};

// The universal axioms are checked literally. Every cell cut out by the n
// linear orders is empty in a finite structure, so each one is listed.
AxiomReport check_dpo_fragment(const RelationalStructure& s);
AxiomReport check_dpo_fragment(const OrderedStructure& s);
AxiomReport check_dpo_fragment(const PointCloud& c);

enum class CertificateKind {
  kAPFailure,
  kNotUltrahomogeneous,
  kQnLexNotUltrahomogeneous,
  kTwoHomogeneityExtension,
};

std::string_view to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::kAPFailure;
  std::size_t n = 0;
  std::vector<std::pair<std::string, Point>> points;
  std::map<std::string, long long> counts;
  // Named claims, each with the outcome of its check.
  std::vector<std::pair<std::string, bool>> checks;
  bool verdict = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Re-runs the construction for cert.kind and cert.n and compares.
bool replay(const Certificate& cert);

// Induced copy of `pattern` inside `host`: injective map preserving < both
// ways, by backtracking.
std::optional<std::vector<std::size_t>> find_induced_copy(const FinitePoset& host,
                                                          const FinitePoset& pattern);

// Amalgamation diagram inside crown(n+1): A = {a_i}, B = A + {b_2..b_{n+1}},
// C = A + {b_1}. Every way to relate or identify h(b_1) with the g(b_j) is
// tried, and the consistent ones are the completions.
struct Amalgam {
  FinitePoset order;
  // Index in `order` of h(b_1), and of g(b_j) for j = 2..n+1 (or the merged
  // element when identified).
  std::vector<std::size_t> b_index;
};
std::vector<Amalgam> amalgam_completions(std::size_t n, std::size_t* candidates = nullptr);

Certificate ap_failure_certificate(std::size_t n = 2);

// a, b, c with a_1 < b_1 < c_1 and c_i < b_i < a_i otherwise; x above b and
// c but below a on axis 2.
struct NonhomConfiguration {
  Point a, b, c, x;
};
NonhomConfiguration nonhom_configuration(std::size_t n);
Certificate nonhom_witness(std::size_t n);

struct QnLexConfiguration {
  Point a, b, c, x;
  Point a2, b2, c2;  // the colinear images
};
QnLexConfiguration qn_lex_configuration(std::size_t n);

// Interval propagation over the lexicographic constraints
// lo_k <lex_{axis_k} u <lex_{axis_k} hi_k: a coordinate pinned between equal
// values is forced. Returns the forced point when every coordinate is forced.
struct LexConstraint {
  std::size_t axis;
  Point lo, hi;
};
std::optional<Point> lex_forced_point(const std::vector<LexConstraint>& constraints, std::size_t n);

Certificate qn_lex_nonhom_witness(std::size_t n);

// Per coordinate, whether a' and b' compare the opposite way to a and b.
struct FlipPattern {
  std::vector<bool> flipped;

  std::size_t count() const;
  friend bool operator==(const FlipPattern&, const FlipPattern&) = default;
};
FlipPattern flip_pattern(const Point& a, const Point& b, const Point& a2, const Point& b2);

struct TwoHomogeneityExtension {
  PointCloud cloud;
  // (x, g(x)) as indices into cloud; starts with the two given pairs.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  FlipPattern flips;
  // g carries coordinate j of the domain side to coordinate axis_map[j].
  std::vector<std::size_t> axis_map;

  // Injective, and < holds between domain points exactly when it holds
  // between their images.
  bool preserves_order() const;
};

// Extends a -> a2, b -> b2 to a <-preserving partial map of one growing cloud
// by `steps` further back-and-forth steps. The map matches coordinate j with
// coordinate axis_map[j], for an axis permutation turning the sign pattern of
// (a, b) into that of (a2, b2). Points missing from the cloud are added.
// kNotOrderPreserving when the pair map breaks <; kNotExtendable when no axis
// permutation matches the sign patterns (possible for n >= 3).
TwoHomogeneityExtension two_homogeneity_extend(const PointCloud& c,
                                               std::pair<Point, Point> pair1,
                                               std::pair<Point, Point> pair2,
                                               std::size_t steps);

// Samples a cloud, takes (p0, p1) and the first other ordered pair of the
// same comparability type whose sign pattern an axis permutation can match,
// preferring one with flipped coordinates, and extends the pair map.
Certificate two_homogeneity_certificate(std::size_t n, std::uint64_t seed,
                                        std::size_t steps = 10);

}  // namespace orderdim
