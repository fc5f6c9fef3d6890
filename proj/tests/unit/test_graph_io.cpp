#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "zdmd/graph_io.hpp"
#include "zdmd/random_graphs.hpp"
#include "zdmd/ring.hpp"

using namespace zdmd;

TEST(Dot, ZeroDivisorGraphOfSix) {
  EXPECT_EQ(to_dot(zero_divisor_graph(Modulus(6))), "graph G {\n  2 -- 3;\n  3 -- 4;\n}\n");
}

TEST(Dot, IsolatedVerticesAndQuotedNames) {
  const auto g = Graph::from_edge_list(2, {}).with_labels({"a b", "c"});
  const auto dot = to_dot(g);
  EXPECT_NE(dot.find("\"a b\";"), std::string::npos);
  EXPECT_NE(dot.find("  c;"), std::string::npos);
}

TEST(Json, RoundTripKeepsAdjacencyAndLabels) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_connected_graph(5 + i, 0.3, rng);
    const auto back = graph_from_json(to_json(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.edges(), g.edges());
  }
  const auto z = zero_divisor_graph(Modulus(12));
  const auto back = graph_from_json(to_json(z));
  EXPECT_EQ(back.labels(), z.labels());
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(graph_from_json("not json"), std::invalid_argument);
  EXPECT_THROW(graph_from_json(R"({"edges":[[0,1]]})"), std::invalid_argument);
  EXPECT_THROW(graph_from_json(R"({"n":2,"edges":[[0,2]]})"), std::invalid_argument);
  EXPECT_THROW(graph_from_json(R"({"n":2,"edges":[[1,1]]})"), std::invalid_argument);
}
