#include "orderdim/poset.hpp"

#include <set>

#include "orderdim/error.hpp"

namespace orderdim {

namespace {

std::vector<std::string> labels_of(const FinitePoset& p,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(p.label(i));
  return out;
}

// Position of each element of a chain, i.e. its number of predecessors.
std::vector<std::size_t> chain_ranks(const FinitePoset& chain) {
  std::vector<std::size_t> rank(chain.size(), 0);
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = 0; b < chain.size(); ++b)
      if (chain.less(b, a)) ++rank[a];
  return rank;
}

}  // namespace

FinitePoset FinitePoset::validate(std::vector<std::string> labels,
                                  const std::vector<std::vector<bool>>& lt) {
  if (lt.size() != labels.size())
    throw Error(ErrorKind::kShapeMismatch, "relation has " +
                                               std::to_string(lt.size()) +
                                               " rows for " +
                                               std::to_string(labels.size()) +
                                               " elements");
  Relation rel(labels.size());
  for (std::size_t a = 0; a < lt.size(); ++a) {
    if (lt[a].size() != labels.size())
      throw Error(ErrorKind::kShapeMismatch,
                  "relation row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < lt[a].size(); ++b)
      if (lt[a][b]) rel.set(a, b);
  }
  return validate(std::move(labels), std::move(rel));
}

FinitePoset FinitePoset::validate(std::vector<std::string> labels,
                                  Relation lt) {
  const std::size_t m = labels.size();
  if (lt.size() != m)
    throw Error(ErrorKind::kShapeMismatch, "relation size differs from label count");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw Error(ErrorKind::kDuplicateLabel, "duplicate label " + l, {l});
  for (std::size_t a = 0; a < m; ++a)
    if (lt(a, a))
      throw Error(ErrorKind::kReflexiveViolation,
                  labels[a] + " < " + labels[a], {labels[a]});
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!lt(a, b)) continue;
      for (std::size_t c = 0; c < m; ++c)
        if (lt(b, c) && !lt(a, c))
          throw Error(ErrorKind::kTransitivityViolation,
                      labels[a] + " < " + labels[b] + " < " + labels[c] +
                          " but not " + labels[a] + " < " + labels[c],
                      {labels[a], labels[b], labels[c]});
    }
  return FinitePoset(std::move(labels), std::move(lt));
}

FinitePoset FinitePoset::antichain(std::vector<std::string> labels) {
  Relation r(labels.size());
  return validate(std::move(labels), std::move(r));
}

FinitePoset FinitePoset::chain(std::vector<std::string> labels) {
  Relation r(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b) r.set(a, b);
  return validate(std::move(labels), std::move(r));
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool FinitePoset::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!comparable(a, b)) return false;
  return true;
}

std::vector<ElementPair> FinitePoset::incomparable_pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!comparable(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<ElementPair> FinitePoset::covering_pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < size() && covered; ++c)
        if (less(a, c) && less(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& subset) const {
  return FinitePoset(labels_of(*this, subset), lt_.restricted(subset));
}

LinearOrder::LinearOrder(std::vector<std::size_t> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), 0) {
  std::vector<bool> hit(sequence_.size(), false);
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    const auto e = sequence_[k];
    if (e >= sequence_.size() || hit[e])
      throw Error(ErrorKind::kInvalidArgument,
                  "linear order is not a permutation of its elements");
    hit[e] = true;
    position_[e] = k;
  }
}

bool LinearOrder::extends(const FinitePoset& poset) const {
  if (poset.size() != size()) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (poset.less(a, b) && !before(a, b)) return false;
  return true;
}

Relation intersection_of(const RealizerTuple& t) {
  const std::size_t m = t.empty() ? 0 : t.front().size();
  Relation r(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      bool all = true;
      for (const auto& o : t) all = all && o.before(a, b);
      if (all) r.set(a, b);
    }
  return r;
}

bool is_realizer(const FinitePoset& poset, const RealizerTuple& t) {
  for (const auto& o : t)
    if (o.size() != poset.size())
      throw Error(ErrorKind::kElementMismatch,
                  "order over " + std::to_string(o.size()) +
                      " elements, poset has " + std::to_string(poset.size()));
  if (t.empty()) return poset.size() <= 1;
  // Every order must be a linear extension, and every incomparable pair must
  // appear in both directions somewhere in the tuple.
  for (const auto& o : t)
    if (!o.extends(poset)) return false;
  for (auto [a, b] : poset.incomparable_pairs()) {
    bool forward = false;
    bool backward = false;
    for (const auto& o : t) (o.before(a, b) ? forward : backward) = true;
    if (!forward || !backward) return false;
  }
  return true;
}

OrderedStructure::OrderedStructure(FinitePoset poset, RealizerTuple realizers)
    : poset_(std::move(poset)), realizers_(std::move(realizers)) {
  if (realizers_.empty())
    throw Error(ErrorKind::kNotARealizer, "a structure needs at least one order");
  if (!is_realizer(poset_, realizers_))
    throw Error(ErrorKind::kNotARealizer,
                "the orders do not intersect to the partial order");
}

OrderedStructure OrderedStructure::from_orders(std::vector<std::string> labels,
                                               RealizerTuple orders) {
  for (const auto& o : orders)
    if (o.size() != labels.size())
      throw Error(ErrorKind::kElementMismatch, "order size differs from label count");
  auto poset = FinitePoset::validate(std::move(labels), intersection_of(orders));
  return OrderedStructure(std::move(poset), std::move(orders));
}

OrderedStructure OrderedStructure::induced(
    const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> local(poset_.size(), 0);
  for (std::size_t k = 0; k < subset.size(); ++k) local[subset[k]] = k;
  RealizerTuple orders;
  for (const auto& o : realizers_) {
    std::vector<std::size_t> seq;
    std::vector<bool> in(poset_.size(), false);
    for (auto e : subset) in[e] = true;
    for (auto e : o.sequence())
      if (in[e]) seq.push_back(local[e]);
    orders.emplace_back(std::move(seq));
  }
  return OrderedStructure(poset_.induced(subset), std::move(orders));
}

bool preserves_structure(const OrderedStructure& source,
                         const OrderedStructure& target,
                         const std::vector<std::size_t>& map) {
  if (map.size() != source.size() || source.dim() != target.dim()) return false;
  std::set<std::size_t> image(map.begin(), map.end());
  if (image.size() != map.size()) return false;
  for (std::size_t a = 0; a < map.size(); ++a)
    for (std::size_t b = 0; b < map.size(); ++b) {
      if (a == b) continue;
      if (source.poset().less(a, b) != target.poset().less(map[a], map[b]))
        return false;
      for (std::size_t i = 0; i < source.dim(); ++i)
        if (source.realizers()[i].before(a, b) !=
            target.realizers()[i].before(map[a], map[b]))
          return false;
    }
  return true;
}

bool isomorphic(const OrderedStructure& a, const OrderedStructure& b) {
  if (a.size() != b.size() || a.dim() != b.dim()) return false;
  auto signature = [](const OrderedStructure& s) {
    std::vector<std::vector<std::size_t>> pts;
    for (std::size_t e = 0; e < s.size(); ++e) {
      std::vector<std::size_t> p;
      for (const auto& o : s.realizers()) p.push_back(o.position(e));
      pts.push_back(std::move(p));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
  };
  return signature(a) == signature(b);
}

LinearOrder szpilrajn_extend(const FinitePoset& poset,
                             const std::vector<ElementPair>& forced) {
  const std::size_t m = poset.size();
  Relation rel = poset.relation();
  for (auto [a, b] : forced) {
    if (a >= m || b >= m)
      throw Error(ErrorKind::kInvalidArgument, "forced pair out of range");
    rel.set(a, b);
  }
  if (auto cycle = rel.find_cycle())
    throw Error(ErrorKind::kCycleIntroduced,
                "forced pairs contradict the order or each other",
                labels_of(poset, *cycle));
  rel.close_transitively();

  std::vector<std::size_t> seq;
  std::vector<bool> placed(m, false);
  while (seq.size() < m) {
    for (std::size_t c = 0; c < m; ++c) {
      if (placed[c]) continue;
      bool minimal = true;
      for (std::size_t d = 0; d < m && minimal; ++d)
        if (!placed[d] && rel(d, c)) minimal = false;
      if (minimal) {
        placed[c] = true;
        seq.push_back(c);
        break;
      }
    }
  }
  return LinearOrder(std::move(seq));
}

FinitePoset crown(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "crown needs n >= 2");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  Relation r(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r.set(i, n + j);
  return FinitePoset::validate(std::move(labels), std::move(r));
}

FinitePoset product_order(const std::vector<FinitePoset>& factors) {
  if (factors.empty())
    throw Error(ErrorKind::kInvalidArgument, "product of no factors");
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t e = 0; e < f.size(); ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::vector<std::string> labels;
  for (const auto& t : tuples) {
    std::string l = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) l += ",";
      l += factors[k].label(t[k]);
    }
    labels.push_back(l + ")");
  }
  Relation r(tuples.size());
  for (std::size_t x = 0; x < tuples.size(); ++x)
    for (std::size_t y = 0; y < tuples.size(); ++y) {
      if (x == y) continue;
      bool le = true;
      for (std::size_t k = 0; k < factors.size() && le; ++k)
        le = tuples[x][k] == tuples[y][k] ||
             factors[k].less(tuples[x][k], tuples[y][k]);
      if (le) r.set(x, y);
    }
  return FinitePoset::validate(std::move(labels), std::move(r));
}

LinearOrder lex_order(const std::vector<FinitePoset>& chains,
                      std::size_t priority_axis) {
  const std::size_t n = chains.size();
  if (n == 0 || priority_axis >= n)
    throw Error(ErrorKind::kInvalidArgument, "lex order axis out of range");
  std::vector<std::vector<std::size_t>> ranks;
  for (const auto& c : chains) {
    if (!c.is_chain())
      throw Error(ErrorKind::kNotLinear, "lexicographic factor is not a chain");
    ranks.push_back(chain_ranks(c));
  }
  // Same element enumeration as product_order; key = ranks in cyclic order.
  std::vector<std::vector<std::size_t>> keys{{}};
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (const auto& c : chains) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t e = 0; e < c.size(); ++e) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  keys.assign(tuples.size(), {});
  for (std::size_t x = 0; x < tuples.size(); ++x)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t axis = (priority_axis + k) % n;
      keys[x].push_back(ranks[axis][tuples[x][axis]]);
    }
  return LinearOrder::by_key(keys);
}

std::size_t hiraguchi_bound(const FinitePoset& poset) {
  if (poset.size() < 4)
    throw Error(ErrorKind::kTooSmall, "the bound is asserted only for |P| >= 4");
  return poset.size() / 2;
}

}  // namespace orderdim
