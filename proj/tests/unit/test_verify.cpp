#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "zdmd/verify.hpp"

using namespace zdmd;

namespace {

const CheckRow* find(const VerificationReport& r, const std::string& check) {
  for (const auto& row : r.rows) {
    if (row.check == check) return &row;
  }
  return nullptr;
}

std::size_t count_prefix(const VerificationReport& r, const std::string& prefix) {
  return static_cast<std::size_t>(std::count_if(r.rows.begin(), r.rows.end(), [&](const auto& row) {
    return row.check.rfind(prefix, 0) == 0;
  }));
}

}  // namespace

TEST(Binomial, ExactAndSaturating) {
  EXPECT_EQ(binomial_saturating(34, 5), 278256u);
  EXPECT_EQ(binomial_saturating(20, 4), 4845u);
  EXPECT_EQ(binomial_saturating(5, 7), 0u);
  EXPECT_EQ(binomial_saturating(200, 100), std::numeric_limits<std::uint64_t>::max());
}

TEST(Verify, PThreeFull) {
  const auto r = verify_theorem(3, 7, VerifyMode::full);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(CheckStatus::fail), 0u);
  ASSERT_TRUE(find(r, "exact_dimension"));
  EXPECT_NE(find(r, "exact_dimension")->detail.find("dim=5"), std::string::npos);
  EXPECT_EQ(find(r, "dimension")->status, CheckStatus::pass);
}

TEST(Verify, TwicePMinusThreeFull) {
  const auto r = verify_theorem(5, 7, VerifyMode::full);
  EXPECT_TRUE(r.ok());
  const auto* scan = find(r, "no_resolving_set_of_size_q-2");
  ASSERT_TRUE(scan);
  EXPECT_EQ(scan->status, CheckStatus::pass);
  EXPECT_NE(scan->detail.find("278256"), std::string::npos);
  EXPECT_NE(find(r, "exact_dimension")->detail.find("dim=6"), std::string::npos);
}

TEST(Verify, WorkedExampleFast) {
  const auto r = verify_theorem(7, 11, VerifyMode::fast);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(count_prefix(r, "code:"), 66u);
  EXPECT_EQ(count_prefix(r, "landmark:"), 10u);
  EXPECT_EQ(find(r, "q_split")->status, CheckStatus::pass);
  EXPECT_EQ(find(r, "family_bound_A")->status, CheckStatus::pass);
}

TEST(Verify, StrictGapReportsCertificateOnly) {
  const auto r = verify_theorem(11, 13, VerifyMode::full, 1'000'000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(find(r, "resolving_set")->status, CheckStatus::skip);
  EXPECT_NE(find(r, "family_bound_A")->detail.find("dim >= 11"), std::string::npos);
  EXPECT_EQ(find(r, "no_resolving_set_of_size_q-2")->status, CheckStatus::skip);
  EXPECT_EQ(find(r, "exact_dimension")->status, CheckStatus::skip);
}

TEST(Verify, TreeRegime) {
  const auto r = verify_theorem(2, 11, VerifyMode::full);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(find(r, "tree_formula")->status, CheckStatus::pass);
  EXPECT_FALSE(find(r, "resolving_set"));
}

TEST(Verify, SmallBudgetSkipsInsteadOfGuessing) {
  const auto r = verify_theorem(5, 7, VerifyMode::full, 1000);
  EXPECT_EQ(find(r, "no_resolving_set_of_size_q-2")->status, CheckStatus::skip);
  EXPECT_EQ(find(r, "exact_dimension")->status, CheckStatus::skip);
}

TEST(Verify, RejectsNonPrimes) {
  EXPECT_THROW(verify_theorem(4, 7, VerifyMode::fast), std::invalid_argument);
}

TEST(Report, CsvQuotesDetails) {
  const std::vector<CheckRow> rows{{5, 7, "x", CheckStatus::fail, "a,b \"c\""}};
  EXPECT_EQ(to_csv(rows), "p,q,check,status,detail\n5,7,x,fail,\"a,b \"\"c\"\"\"\n");
  EXPECT_EQ(to_text(rows), "[FAIL] (5,7) x: a,b \"c\"\n");
}
