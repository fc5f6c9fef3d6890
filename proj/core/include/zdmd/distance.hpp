#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "zdmd/graph.hpp"

namespace zdmd {

using Distance = std::uint32_t;

/// Marks a disconnected pair. Larger than any real distance, so codes that
/// contain it still compare with a total order.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Dense all-pairs hop distances. Immutable once built.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> data);

  std::size_t size() const { return n_; }
  Distance operator()(Vertex u, Vertex v) const { return data_[std::size_t{u} * n_ + v]; }
  /// Distances from v to every vertex.
  std::span<const Distance> row(Vertex v) const {
    return {data_.data() + std::size_t{v} * n_, n_};
  }
  bool connected() const;
  /// Largest finite distance (0 for n <= 1).
  Distance diameter() const;

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

/// One BFS per source; O(n (n + m)).
DistanceMatrix bfs_all_pairs(const Graph& g);

/// Distances from a single source.
std::vector<Distance> bfs_from(const Graph& g, Vertex source);

}  // namespace zdmd
