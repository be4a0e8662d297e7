#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orderdim/poset.hpp"

namespace orderdim {

// Search limits. Exceeding any of them raises kLimitExceeded.
struct Budget {
  std::size_t max_elements = 10;          // all_linear_extensions only
  std::uint64_t max_extensions = 1000000;
  std::uint64_t max_search_nodes = 10000000;

  // Defaults, with both step limits replaced by $ORDERDIM_BUDGET when set
  // (a positive integer).
  static Budget from_env();
};

// Linear extensions in lexicographic order of their sequences. The visitor
// returns false to stop early.
void for_each_linear_extension(const FinitePoset& p,
                               const std::function<bool(const LinearOrder&)>& visit,
                               const Budget& budget = Budget::from_env());

std::vector<LinearOrder> all_linear_extensions(const FinitePoset& p,
                                               const Budget& budget = Budget::from_env());

// Some n linear extensions whose intersection is exactly the order of p.
std::optional<RealizerTuple> find_realizers(const FinitePoset& p, std::size_t n,
                                            const Budget& budget = Budget::from_env());

// Ordered realizer n-tuples, each once, until the visitor returns false.
void for_each_realizer_tuple(const FinitePoset& p, std::size_t n,
                             const std::function<bool(const RealizerTuple&)>& visit,
                             const Budget& budget = Budget::from_env());

// Every ordered n-tuple of linear extensions realizing p, each once.
std::vector<RealizerTuple> enumerate_realizer_tuples(const FinitePoset& p, std::size_t n,
                                                     const Budget& budget = Budget::from_env());

struct DimensionResult {
  std::size_t dim = 0;
  RealizerTuple witness;
};

DimensionResult dimension(const FinitePoset& p, const Budget& budget = Budget::from_env());

// p -> (rank_1(p), ..., rank_n(p)), 1-based. The result is checked to be an
// order embedding into the product of the chains; kNotARealizer otherwise.
std::vector<std::vector<std::size_t>> ore_embedding(const FinitePoset& p,
                                                    const RealizerTuple& t);

}  // namespace orderdim
