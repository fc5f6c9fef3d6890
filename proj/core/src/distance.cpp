#include "zdmd/distance.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdmd {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Distance> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) {
    throw std::invalid_argument("distance matrix data has wrong size");
  }
}

bool DistanceMatrix::connected() const {
  return std::find(data_.begin(), data_.end(), kUnreachable) == data_.end();
}

Distance DistanceMatrix::diameter() const {
  Distance best = 0;
  for (Distance d : data_) {
    if (d != kUnreachable) best = std::max(best, d);
  }
  return best;
}

std::vector<Distance> bfs_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix bfs_all_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Distance> data;
  data.reserve(n * n);
  for (Vertex s = 0; s < n; ++s) {
    const auto row = bfs_from(g, s);
    data.insert(data.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(data));
}

}  // namespace zdmd
