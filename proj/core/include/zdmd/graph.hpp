#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zdmd {

/// Dense vertex id in [0, vertex_count).
using Vertex = std::uint32_t;

/// Unordered vertex pair; canonical form has first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge canonical_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph over dense integer ids with an optional label layer.
///
/// Immutable after construction. Every factory enforces the three structural
/// invariants (no loops, symmetric adjacency, ids in range), so algorithms can
/// rely on them without re-checking.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either orientation)
  /// are merged. Throws std::out_of_range for ids >= n and
  /// std::invalid_argument for self-loops.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Sorted neighbor ids of v.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges in canonical form, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// The label of v, or its decimal id when the graph is unlabeled.
  std::string name(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Copy of this graph carrying the given labels (one per vertex, or none).
  Graph with_labels(std::vector<std::string> labels) const;

  /// Throws std::out_of_range unless v < vertex_count().
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Replaces edge e by a path of length two through a new vertex appended at
/// index vertex_count(). Throws std::invalid_argument when e is not an edge.
Graph subdivide_edge(const Graph& g, Edge e);

struct Subdivision {
  Graph graph;
  /// Original edge (canonical form) -> id of the vertex that subdivides it.
  std::map<Edge, Vertex> edge_to_vertex;
};

/// Subdivides every edge once. New vertices are appended in the order of
/// g.edges(), so ids are reproducible.
Subdivision barycentric_subdivision(const Graph& g);

/// True iff no edge of g joins two members of s. Throws std::out_of_range on
/// invalid ids.
bool is_independent_set(const Graph& g, std::span<const Vertex> s);

bool is_connected(const Graph& g);
/// Connected and |E| = |V| - 1.
bool is_tree(const Graph& g);
/// A tree with maximum degree at most two (K_1 counts as a path).
bool is_path_graph(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace zdmd
