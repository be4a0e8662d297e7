#include "orderdim/relation.hpp"

#include <functional>

namespace orderdim {

void Relation::close_transitively() {
  for (std::size_t k = 0; k < size_; ++k)
    for (std::size_t i = 0; i < size_; ++i) {
      if (!(*this)(i, k)) continue;
      for (std::size_t j = 0; j < size_; ++j)
        if ((*this)(k, j)) set(i, j);
    }
}

void Relation::add_and_close(std::size_t a, std::size_t b) {
  if ((*this)(a, b)) return;
  std::vector<std::size_t> below{a};
  std::vector<std::size_t> above{b};
  for (std::size_t u = 0; u < size_; ++u) {
    if ((*this)(u, a)) below.push_back(u);
    if ((*this)(b, u)) above.push_back(u);
  }
  for (std::size_t u : below)
    for (std::size_t w : above) set(u, w);
}

bool Relation::is_irreflexive() const {
  for (std::size_t i = 0; i < size_; ++i)
    if ((*this)(i, i)) return false;
  return true;
}

std::optional<std::vector<std::size_t>> Relation::find_cycle() const {
  enum class Mark { kWhite, kGrey, kBlack };
  std::vector<Mark> mark(size_, Mark::kWhite);
  std::vector<std::size_t> stack;
  std::optional<std::vector<std::size_t>> cycle;

  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    mark[u] = Mark::kGrey;
    stack.push_back(u);
    for (std::size_t v = 0; v < size_; ++v) {
      if (!(*this)(u, v)) continue;
      if (mark[v] == Mark::kGrey) {
        std::vector<std::size_t> c;
        std::size_t k = stack.size();
        while (stack[k - 1] != v) --k;
        c.assign(stack.begin() + static_cast<std::ptrdiff_t>(k - 1), stack.end());
        c.push_back(v);
        cycle = std::move(c);
        return true;
      }
      if (mark[v] == Mark::kWhite && visit(v)) return true;
    }
    stack.pop_back();
    mark[u] = Mark::kBlack;
    return false;
  };

  for (std::size_t u = 0; u < size_; ++u)
    if (mark[u] == Mark::kWhite && visit(u)) break;
  return cycle;
}

Relation Relation::restricted(const std::vector<std::size_t>& subset) const {
  Relation r(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if ((*this)(subset[i], subset[j])) r.set(i, j);
  return r;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

}  // namespace orderdim
