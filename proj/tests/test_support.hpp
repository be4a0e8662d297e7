#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "orderdim/poset.hpp"

namespace orderdim::testing {

inline std::vector<std::string> letters(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

// Calls f on every naturally labelled poset with m elements (i < j in the
// order implies i < j as indices). Element k picks a down-closed set of
// predecessors among 0..k-1.
inline void for_each_natural_poset(std::size_t m,
                                   const std::function<void(const FinitePoset&)>& f) {
  Relation r(m);
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == m) {
      f(FinitePoset::validate(letters(m), r));
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      bool closed = true;
      for (std::size_t i = 0; i < k && closed; ++i)
        if (mask >> i & 1u)
          for (std::size_t j = 0; j < k; ++j)
            if (r(j, i) && !(mask >> j & 1u)) closed = false;
      if (!closed) continue;
      for (std::size_t i = 0; i < k; ++i) r.set(i, k, mask >> i & 1u);
      place(k + 1);
    }
    for (std::size_t i = 0; i < k; ++i) r.set(i, k, false);
  };
  place(0);
}

inline std::vector<std::size_t> random_permutation(std::size_t m, std::mt19937_64& rng) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Closure of a random DAG on shuffled indices.
inline FinitePoset random_poset(std::size_t m, double density, std::mt19937_64& rng) {
  auto perm = random_permutation(m, rng);
  std::bernoulli_distribution edge(density);
  Relation r(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (edge(rng)) r.set(perm[i], perm[j]);
  r.close_transitively();
  return FinitePoset::validate(letters(m), r);
}

inline OrderedStructure random_structure(std::size_t m, std::size_t n,
                                         std::mt19937_64& rng) {
  RealizerTuple orders;
  for (std::size_t i = 0; i < n; ++i) orders.emplace_back(random_permutation(m, rng));
  return OrderedStructure::from_orders(letters(m), orders);
}

// lt[a][b] <=> a precedes b in every order, checked pair by pair.
inline bool naive_realizes(const FinitePoset& p, const RealizerTuple& t) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      bool all = true;
      for (const auto& o : t) all = all && o.position(a) < o.position(b);
      if (p.less(a, b) != all) return false;
    }
  return true;
}

}  // namespace orderdim::testing
