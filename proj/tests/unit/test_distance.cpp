#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zdmd/distance.hpp"
#include "zdmd/random_graphs.hpp"

using namespace zdmd;

TEST(Bfs, PathDistances) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
  const auto dm = bfs_all_pairs(Graph::from_edge_list(4, e));
  EXPECT_EQ(dm(0, 3), 3u);
  EXPECT_EQ(dm(3, 0), 3u);
  EXPECT_EQ(dm(2, 2), 0u);
  EXPECT_EQ(dm.diameter(), 3u);
  EXPECT_TRUE(dm.connected());
}

TEST(Bfs, DisconnectedPairsAreUnreachable) {
  const std::vector<Edge> e{{0, 1}};
  const auto g = Graph::from_edge_list(3, e);
  const auto dm = bfs_all_pairs(g);
  EXPECT_EQ(dm(0, 2), kUnreachable);
  EXPECT_FALSE(dm.connected());
  EXPECT_EQ(bfs_from(g, 2)[0], kUnreachable);
}

// Symmetry, zero diagonal, triangle inequality and agreement with
// Floyd-Warshall on random graphs up to 60 vertices.
TEST(Bfs, MatchesFloydWarshallOnRandomGraphs) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> size(1, 60);
  for (int round = 0; round < 40; ++round) {
    const auto n = size(rng);
    const auto g = random_connected_graph(n, round % 2 ? 0.05 : 0.2, rng);
    const auto dm = bfs_all_pairs(g);
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_EQ(dm(u, u), 0u);
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(dm(u, v), fw[u][v]) << "n=" << n << " u=" << u << " v=" << v;
        ASSERT_EQ(dm(u, v), dm(v, u));
      }
    }
    for (Vertex u = 0; u < n; u += 3) {
      for (Vertex v = 0; v < n; v += 2) {
        for (Vertex w = 0; w < n; w += 5) ASSERT_LE(dm(u, w), dm(u, v) + dm(v, w));
      }
    }
  }
}
