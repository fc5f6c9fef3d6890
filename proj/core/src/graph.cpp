#include "zdmd/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace zdmd {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an id >= " + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& row : g.adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    degree_sum += row.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::name(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != vertex_count()) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " +
                                std::to_string(vertex_count()));
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(adjacency_.size()) + ")");
  }
}

Graph subdivide_edge(const Graph& g, Edge e) {
  g.check_vertex(e.first);
  g.check_vertex(e.second);
  if (!g.has_edge(e.first, e.second)) {
    throw std::invalid_argument("(" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") is not an edge");
  }
  const auto target = canonical_edge(e.first, e.second);
  const auto w = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 1);
  for (const auto& edge : g.edges()) {
    if (edge != target) edges.push_back(edge);
  }
  edges.emplace_back(target.first, w);
  edges.emplace_back(w, target.second);
  Graph out = Graph::from_edge_list(g.vertex_count() + 1, edges);
  if (g.has_labels()) {
    auto labels = g.labels();
    labels.push_back("m_" + g.name(target.first) + "_" + g.name(target.second));
    out = out.with_labels(std::move(labels));
  }
  assert(out.edge_count() == g.edge_count() + 1);
  return out;
}

Subdivision barycentric_subdivision(const Graph& g) {
  const auto original = g.edges();
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(2 * original.size());
  Subdivision out;
  for (std::size_t i = 0; i < original.size(); ++i) {
    const auto w = static_cast<Vertex>(n + i);
    edges.emplace_back(original[i].first, w);
    edges.emplace_back(w, original[i].second);
    out.edge_to_vertex.emplace(original[i], w);
  }
  out.graph = Graph::from_edge_list(n + original.size(), edges);
  if (g.has_labels()) {
    auto labels = g.labels();
    for (const auto& [u, v] : original) {
      labels.push_back("m_" + g.name(u) + "_" + g.name(v));
    }
    out.graph = out.graph.with_labels(std::move(labels));
  }
  return out;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

namespace {

// BFS 2-coloring of every component; returns false on an odd cycle.
bool two_color(const Graph& g, std::vector<int>& color) {
  color.assign(g.vertex_count(), -1);
  std::queue<Vertex> frontier;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          frontier.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color;
  return two_color(g, color);
}

}  // namespace zdmd
