#include "orderdim/dimension.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "orderdim/error.hpp"

namespace orderdim {

Budget Budget::from_env() {
  Budget b;
  const char* env = std::getenv("ORDERDIM_BUDGET");
  if (env == nullptr) return b;
  std::string_view s(env);
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v == 0)
    throw Error(ErrorKind::kInvalidArgument,
                "ORDERDIM_BUDGET must be a positive integer, got '" + std::string(s) + "'");
  b.max_extensions = v;
  b.max_search_nodes = v;
  return b;
}

void for_each_linear_extension(const FinitePoset& p,
                               const std::function<bool(const LinearOrder&)>& visit,
                               const Budget& budget) {
  const std::size_t m = p.size();
  if (m > budget.max_elements)
    throw Error(ErrorKind::kLimitExceeded,
                std::to_string(m) + " elements exceed the extension limit of " +
                    std::to_string(budget.max_elements));
  // indegree counts unplaced predecessors.
  std::vector<std::size_t> indegree(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (p.less(a, b)) ++indegree[b];
  std::vector<bool> placed(m, false);
  std::vector<std::size_t> seq;
  std::uint64_t produced = 0;
  bool stop = false;

  std::function<void()> rec = [&] {
    if (seq.size() == m) {
      if (++produced > budget.max_extensions)
        throw Error(ErrorKind::kLimitExceeded,
                    "more than " + std::to_string(budget.max_extensions) +
                        " linear extensions");
      if (!visit(LinearOrder(seq))) stop = true;
      return;
    }
    for (std::size_t c = 0; c < m && !stop; ++c) {
      if (placed[c] || indegree[c] != 0) continue;
      placed[c] = true;
      seq.push_back(c);
      for (std::size_t d = 0; d < m; ++d)
        if (p.less(c, d)) --indegree[d];
      rec();
      for (std::size_t d = 0; d < m; ++d)
        if (p.less(c, d)) ++indegree[d];
      seq.pop_back();
      placed[c] = false;
    }
  };
  rec();
}

std::vector<LinearOrder> all_linear_extensions(const FinitePoset& p, const Budget& budget) {
  std::vector<LinearOrder> out;
  for_each_linear_extension(p, [&](const LinearOrder& o) {
    out.push_back(o);
    return true;
  }, budget);
  return out;
}

namespace {

// Depth-first search over the incomparable pairs of p. Each of the n orders
// is kept as a transitively closed relation containing p; a pair is oriented
// in every order at once, with at least one order each way. Leaves are
// realizer tuples, and every realizer tuple is reached by exactly one leaf.
class RealizerSearch {
 public:
  RealizerSearch(const FinitePoset& p, std::size_t n, const Budget& budget, bool symmetric)
      : p_(p), n_(n), budget_(budget), symmetric_(symmetric), pairs_(p.incomparable_pairs()) {}

  // Visits leaves until the callback returns false.
  void run(const std::function<bool(const RealizerTuple&)>& leaf) {
    leaf_ = &leaf;
    std::vector<Relation> orders(n_, p_.relation());
    std::vector<bool> tied(n_ > 0 ? n_ - 1 : 0, true);
    stop_ = false;
    rec(0, orders, tied);
  }

 private:
  void rec(std::size_t k, std::vector<Relation>& orders, std::vector<bool>& tied) {
    if (++nodes_ > budget_.max_search_nodes)
      throw Error(ErrorKind::kLimitExceeded,
                  "realizer search exceeded " + std::to_string(budget_.max_search_nodes) +
                      " nodes");
    if (k == pairs_.size()) {
      RealizerTuple t;
      for (const auto& o : orders) t.push_back(to_linear(o));
      if (!(*leaf_)(t)) stop_ = true;
      return;
    }
    const auto [a, b] = pairs_[k];
    // forced[i]: 1 = a before b already, 2 = b before a already, 0 = free.
    std::vector<int> forced(n_, 0);
    std::uint32_t fixed_mask = 0;
    std::uint32_t fixed_bits = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (orders[i](a, b)) forced[i] = 1;
      else if (orders[i](b, a)) forced[i] = 2;
      if (forced[i]) {
        fixed_mask |= 1u << i;
        if (forced[i] == 1) fixed_bits |= 1u << i;
      }
    }
    const std::uint32_t full = (1u << n_) - 1;
    // Bit i set means a before b in order i; highest masks first so that the
    // first leaf puts earlier pairs in index order in the first orders.
    for (std::uint32_t mask = full; mask-- > 1;) {
      if (stop_) return;
      if ((mask & fixed_mask) != fixed_bits) continue;
      std::vector<bool> next_tied = tied;
      bool ok = true;
      if (symmetric_)
        for (std::size_t i = 0; i + 1 < n_ && ok; ++i) {
          if (!tied[i]) continue;
          const bool hi = mask >> i & 1u;
          const bool lo = mask >> (i + 1) & 1u;
          if (lo && !hi) ok = false;
          else if (hi && !lo) next_tied[i] = false;
        }
      if (!ok) continue;
      std::vector<Relation> next = orders;
      for (std::size_t i = 0; i < n_; ++i) {
        if (forced[i]) continue;
        if (mask >> i & 1u) next[i].add_and_close(a, b);
        else next[i].add_and_close(b, a);
      }
      rec(k + 1, next, next_tied);
    }
  }

  LinearOrder to_linear(const Relation& r) const {
    const std::size_t m = p_.size();
    std::vector<std::size_t> seq(m);
    for (std::size_t x = 0; x < m; ++x) {
      std::size_t below = 0;
      for (std::size_t y = 0; y < m; ++y) below += r(y, x);
      seq[below] = x;
    }
    return LinearOrder(std::move(seq));
  }

  const FinitePoset& p_;
  std::size_t n_;
  Budget budget_;
  bool symmetric_;
  std::vector<ElementPair> pairs_;
  const std::function<bool(const RealizerTuple&)>* leaf_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

void check_arity(std::size_t n) {
  if (n == 0 || n > 16)
    throw Error(ErrorKind::kInvalidArgument, "number of orders must be in 1..16");
}

}  // namespace

std::optional<RealizerTuple> find_realizers(const FinitePoset& p, std::size_t n,
                                            const Budget& budget) {
  check_arity(n);
  if (n == 1 && !p.is_chain()) return std::nullopt;
  std::optional<RealizerTuple> found;
  RealizerSearch(p, n, budget, true).run([&](const RealizerTuple& t) {
    found = t;
    return false;
  });
  return found;
}

void for_each_realizer_tuple(const FinitePoset& p, std::size_t n,
                             const std::function<bool(const RealizerTuple&)>& visit,
                             const Budget& budget) {
  check_arity(n);
  if (n == 1 && !p.is_chain()) return;
  RealizerSearch(p, n, budget, false).run(visit);
}

std::vector<RealizerTuple> enumerate_realizer_tuples(const FinitePoset& p, std::size_t n,
                                                     const Budget& budget) {
  std::vector<RealizerTuple> out;
  for_each_realizer_tuple(
      p, n,
      [&](const RealizerTuple& t) {
        out.push_back(t);
        return true;
      },
      budget);
  return out;
}

DimensionResult dimension(const FinitePoset& p, const Budget& budget) {
  if (p.size() == 0) throw Error(ErrorKind::kInvalidArgument, "empty poset");
  for (std::size_t n = 1;; ++n)
    if (auto t = find_realizers(p, n, budget)) return {n, std::move(*t)};
}

std::vector<std::vector<std::size_t>> ore_embedding(const FinitePoset& p,
                                                    const RealizerTuple& t) {
  if (t.empty() || !is_realizer(p, t))
    throw Error(ErrorKind::kNotARealizer, "the orders do not realize the poset");
  std::vector<std::vector<std::size_t>> coords(p.size());
  for (std::size_t e = 0; e < p.size(); ++e)
    for (const auto& o : t) coords[e].push_back(o.rank(e));
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      bool dominated = true;
      for (std::size_t i = 0; i < t.size(); ++i) dominated = dominated && coords[a][i] < coords[b][i];
      if (dominated != p.less(a, b))
        throw Error(ErrorKind::kNotARealizer, "diagonal map is not an order embedding");
    }
  return coords;
}

}  // namespace orderdim
