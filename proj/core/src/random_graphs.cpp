#include "zdmd/random_graphs.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace zdmd {

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
  if (n == 1) return Graph::from_edge_list(1, {});
  if (n == 2) {
    const Edge e{0, 1};
    return Graph::from_edge_list(2, std::span(&e, 1));
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph::from_edge_list(n, edges);
}

Graph random_connected_graph(std::size_t n, double extra, std::mt19937_64& rng) {
  const Graph tree = random_tree(n, rng);
  std::vector<Edge> edges = tree.edges();
  std::bernoulli_distribution coin(extra);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.has_edge(u, v) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace zdmd
