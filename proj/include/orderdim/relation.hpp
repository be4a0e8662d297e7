#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace orderdim {

// Dense square boolean matrix over element indices 0..size()-1.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t size) : size_(size), bits_(size * size, 0) {}

  std::size_t size() const { return size_; }

  bool operator()(std::size_t a, std::size_t b) const {
    return bits_[a * size_ + b] != 0;
  }
  void set(std::size_t a, std::size_t b, bool value = true) {
    bits_[a * size_ + b] = value ? 1 : 0;
  }

  // Warshall closure in place.
  void close_transitively();

  // Adds a -> b to an already transitive relation and keeps it transitive.
  void add_and_close(std::size_t a, std::size_t b);

  bool is_irreflexive() const;

  // A directed cycle of the relation read as a graph, first vertex repeated
  // at the end, or nullopt when acyclic.
  std::optional<std::vector<std::size_t>> find_cycle() const;

  Relation restricted(const std::vector<std::size_t>& subset) const;

  std::size_t count() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace orderdim
