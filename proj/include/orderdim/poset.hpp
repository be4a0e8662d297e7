#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderdim/error.hpp"
#include "orderdim/relation.hpp"

namespace orderdim {

using ElementPair = std::pair<std::size_t, std::size_t>;

// A finite strict partial order on labelled elements. Algorithms work on the
// element indices; labels only matter for I/O and error witnesses.
class FinitePoset {
 public:
  // Throws Error (kShapeMismatch, kDuplicateLabel, kReflexiveViolation,
  // kTransitivityViolation) naming the first violation found.
  static FinitePoset validate(std::vector<std::string> labels,
                              const std::vector<std::vector<bool>>& lt);
  static FinitePoset validate(std::vector<std::string> labels, Relation lt);

  // Antichain on the given labels.
  static FinitePoset antichain(std::vector<std::string> labels);
  // Chain labels[0] < labels[1] < ...
  static FinitePoset chain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool less(std::size_t a, std::size_t b) const { return lt_(a, b); }
  bool comparable(std::size_t a, std::size_t b) const {
    return a == b || lt_(a, b) || lt_(b, a);
  }
  const Relation& relation() const { return lt_; }

  bool is_chain() const;

  // Incomparable pairs (a, b) with a < b as indices, in lexicographic order.
  std::vector<ElementPair> incomparable_pairs() const;

  // Pairs (a, b) with a < b and nothing strictly between them.
  std::vector<ElementPair> covering_pairs() const;

  FinitePoset induced(const std::vector<std::size_t>& subset) const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  FinitePoset(std::vector<std::string> labels, Relation lt)
      : labels_(std::move(labels)), lt_(std::move(lt)) {}

  std::vector<std::string> labels_;
  Relation lt_;
};

// A linear order on element indices 0..m-1, stored both as the sequence of
// elements from least to greatest and as the inverse position table.
class LinearOrder {
 public:
  LinearOrder() = default;
  // Throws kInvalidArgument unless `sequence` is a permutation of 0..m-1.
  explicit LinearOrder(std::vector<std::size_t> sequence);

  // Orders the elements by increasing key; ties are rejected.
  template <typename Key>
  static LinearOrder by_key(const std::vector<Key>& keys);

  std::size_t size() const { return sequence_.size(); }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  std::size_t position(std::size_t element) const { return position_[element]; }
  // 1-based rank, the `rk` of the rigid embedding.
  std::size_t rank(std::size_t element) const { return position_[element] + 1; }
  bool before(std::size_t a, std::size_t b) const {
    return position_[a] < position_[b];
  }

  bool extends(const FinitePoset& poset) const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.sequence_ == b.sequence_;
  }
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.sequence_ <=> b.sequence_;
  }

 private:
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> position_;
};

template <typename Key>
LinearOrder LinearOrder::by_key(const std::vector<Key>& keys) {
  std::vector<std::size_t> seq(keys.size());
  for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i;
  std::sort(seq.begin(), seq.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t k = 1; k < seq.size(); ++k)
    if (!(keys[seq[k - 1]] < keys[seq[k]]))
      throw Error(ErrorKind::kInvalidArgument, "linear order keys tie");
  return LinearOrder(std::move(seq));
}

using RealizerTuple = std::vector<LinearOrder>;

// True iff a < b exactly when a precedes b in every order of `t`.
// Throws kElementMismatch when an order's support differs from the poset's.
bool is_realizer(const FinitePoset& poset, const RealizerTuple& t);

// Relation a <_t b iff a precedes b in every order of t.
Relation intersection_of(const RealizerTuple& t);

// A poset together with n linear orders realizing it.
class OrderedStructure {
 public:
  // Throws kNotARealizer (or kElementMismatch) when the invariant fails.
  OrderedStructure(FinitePoset poset, RealizerTuple realizers);

  // Builds the poset as the intersection of `orders`.
  static OrderedStructure from_orders(std::vector<std::string> labels,
                                      RealizerTuple orders);

  const FinitePoset& poset() const { return poset_; }
  const RealizerTuple& realizers() const { return realizers_; }
  std::size_t size() const { return poset_.size(); }
  std::size_t dim() const { return realizers_.size(); }

  OrderedStructure induced(const std::vector<std::size_t>& subset) const;

 private:
  FinitePoset poset_;
  RealizerTuple realizers_;
};

// Whether `map` (source index -> target index) is an isomorphism of the
// source structure onto its image: it must match < and every <_i both ways.
bool preserves_structure(const OrderedStructure& source,
                         const OrderedStructure& target,
                         const std::vector<std::size_t>& map);

// Isomorphism as ordered structures. The isomorphism, if any, is forced by
// the ranks in the realizer orders, so this is a rank-signature comparison.
bool isomorphic(const OrderedStructure& a, const OrderedStructure& b);

inline FinitePoset validate_poset(std::vector<std::string> labels,
                                  const std::vector<std::vector<bool>>& lt) {
  return FinitePoset::validate(std::move(labels), lt);
}

// Linear extension placing a before b for every forced (a, b). Among the
// minimal elements left, the lowest index is taken first.
// Throws kCycleIntroduced with the offending cycle as witness.
LinearOrder szpilrajn_extend(const FinitePoset& poset,
                             const std::vector<ElementPair>& forced = {});

// 2n elements a1..an, b1..bn with a_i < b_j iff i != j.
FinitePoset crown(std::size_t n);

// Cartesian product, coordinatewise <= and distinct. Elements are listed in
// lexicographic order of their index tuples (first factor most significant).
FinitePoset product_order(const std::vector<FinitePoset>& factors);

// The lexicographic order on the product of `chains` that compares the
// coordinates cyclically starting from `priority_axis` (0-based).
// Throws kNotLinear when a factor is not a chain.
LinearOrder lex_order(const std::vector<FinitePoset>& chains,
                      std::size_t priority_axis);

// floor(|P| / 2); kTooSmall below four elements.
std::size_t hiraguchi_bound(const FinitePoset& poset);

}  // namespace orderdim
