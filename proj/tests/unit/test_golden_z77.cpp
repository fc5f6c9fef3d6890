#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "zdmd/bs_partition.hpp"
#include "zdmd/coordinate_formulas.hpp"
#include "zdmd/distance.hpp"

using namespace zdmd;

namespace {

struct Row {
  std::string label;
  MetricCode code;
};

std::vector<Row> load_table() {
  std::ifstream in(std::string(ZDMD_TEST_DATA_DIR) + "/z77_codes.txt");
  std::vector<Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Row r;
    std::string code;
    ls >> r.label >> code;
    std::istringstream cs(code);
    for (std::string part; std::getline(cs, part, ',');) {
      r.code.push_back(static_cast<Distance>(std::stoul(part)));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

class Z77 : public ::testing::Test {
 protected:
  void SetUp() override {
    rows_ = load_table();
    for (Vertex v = 0; v < lbs_.graph.vertex_count(); ++v) by_name_[lbs_.graph.name(v)] = v;
  }
  LabeledBs lbs_ = build_labeled_bs(7, 11);
  DistanceMatrix dm_ = bfs_all_pairs(lbs_.graph);
  std::vector<Vertex> e_ = paper_resolving_set(lbs_.partition);
  std::vector<Row> rows_;
  std::map<std::string, Vertex> by_name_;
};

TEST_F(Z77, TableCoversEveryVertexOnce) {
  ASSERT_EQ(rows_.size(), 76u);
  std::set<std::string> seen;
  for (const auto& r : rows_) {
    EXPECT_TRUE(by_name_.count(r.label)) << r.label;
    EXPECT_TRUE(seen.insert(r.label).second) << r.label;
  }
}

TEST_F(Z77, EveryPrintedVectorMatchesBfs) {
  for (const auto& r : rows_) {
    EXPECT_EQ(metric_code(dm_, by_name_.at(r.label), e_), r.code) << r.label;
  }
}

TEST_F(Z77, FormulaOracleReproducesTheNonLandmarkRows) {
  int compared = 0;
  for (const auto& r : rows_) {
    const auto pred = predicted_code(7, 11, lbs_.partition.label(by_name_.at(r.label)));
    if (pred.branch == "landmark") continue;
    ASSERT_TRUE(pred.code) << r.label;
    EXPECT_EQ(*pred.code, r.code) << r.label << " via " << pred.branch;
    ++compared;
  }
  EXPECT_EQ(compared, 66);
}

TEST_F(Z77, QuotedEntries) {
  EXPECT_EQ(metric_code(dm_, by_name_.at("q_1"), e_), (MetricCode{2, 1, 1, 3, 3, 3, 3, 3, 3, 3}));
  EXPECT_EQ(metric_code(dm_, by_name_.at("c3_6"), e_), (MetricCode{3, 4, 4, 4, 4, 0, 2, 4, 4, 4}));
  EXPECT_EQ(dm_(by_name_.at("q_1"), by_name_.at("a_1")), 2u);
}
