#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "zdmd/graph.hpp"

using namespace zdmd;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, e);
}

}  // namespace

TEST(Graph, DeduplicatesEdgesAndSortsNeighbors) {
  const std::vector<Edge> e{{2, 0}, {0, 2}, {1, 2}, {2, 1}};
  const auto g = Graph::from_edge_list(3, e);
  EXPECT_EQ(g.edge_count(), 2u);
  const auto nb = g.neighbors(2);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(Graph, RejectsSelfLoopsAndBadIds) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edge_list(2, loop), std::invalid_argument);
  const std::vector<Edge> bad{{0, 5}};
  EXPECT_THROW(Graph::from_edge_list(3, bad), std::out_of_range);
  EXPECT_THROW(path(3).neighbors(7), std::out_of_range);
}

TEST(Graph, LabelsDefaultToIds) {
  const auto g = path(3);
  EXPECT_FALSE(g.has_labels());
  EXPECT_EQ(g.name(2), "2");
  const auto h = g.with_labels({"x", "y", "z"});
  EXPECT_EQ(h.name(1), "y");
  EXPECT_THROW(g.with_labels({"x"}), std::invalid_argument);
}

TEST(Subdivision, SingleEdge) {
  const auto g = subdivide_edge(path(2), {0, 1});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_THROW(subdivide_edge(path(3), {0, 2}), std::invalid_argument);
}

TEST(Subdivision, BarycentricOfCycleIsDoubleCycle) {
  const auto s = barycentric_subdivision(cycle(5));
  EXPECT_EQ(s.graph.vertex_count(), 10u);
  EXPECT_EQ(s.graph.edge_count(), 10u);
  EXPECT_EQ(s.edge_to_vertex.size(), 5u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(s.graph.degree(v), 2u);
  EXPECT_TRUE(is_bipartite(s.graph));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_EQ(s.edge_to_vertex.at({0, 1}), 5u);
}

TEST(Subdivision, EmptyAndSingleVertex) {
  const auto one = barycentric_subdivision(Graph::from_edge_list(1, {}));
  EXPECT_EQ(one.graph.vertex_count(), 1u);
  EXPECT_EQ(one.graph.edge_count(), 0u);
}

TEST(GraphPredicates, TreesPathsAndConnectivity) {
  EXPECT_TRUE(is_tree(path(6)));
  EXPECT_TRUE(is_path_graph(path(6)));
  EXPECT_FALSE(is_tree(cycle(4)));
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  const auto s = Graph::from_edge_list(4, star);
  EXPECT_TRUE(is_tree(s));
  EXPECT_FALSE(is_path_graph(s));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  const auto d = Graph::from_edge_list(4, two);
  EXPECT_FALSE(is_connected(d));
  EXPECT_FALSE(is_tree(d));
  EXPECT_TRUE(is_connected(Graph::from_edge_list(1, {})));
}

TEST(GraphPredicates, IndependentSet) {
  const auto g = cycle(6);
  const std::vector<Vertex> ok{0, 2, 4};
  const std::vector<Vertex> bad{0, 1};
  EXPECT_TRUE(is_independent_set(g, ok));
  EXPECT_FALSE(is_independent_set(g, bad));
  EXPECT_TRUE(is_independent_set(g, std::vector<Vertex>{}));
}
