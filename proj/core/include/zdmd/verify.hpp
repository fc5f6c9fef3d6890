#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zdmd/bs_partition.hpp"
#include "zdmd/solver.hpp"

namespace zdmd {

enum class CheckStatus { pass, fail, skip, budget };

std::string_view to_string(CheckStatus s);

/// One line of a verification report; `detail` carries the witness on failure.
struct CheckRow {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<CheckRow> rows;

  /// No failed row and no exhausted budget.
  bool ok() const;
  std::size_t count(CheckStatus s) const;
};

enum class VerifyMode { fast, full };

/// Checks the labeled construction against BS(Gamma(Z_pq)) built from the
/// ring, mapping a_i, q_j and subdivision vertices through their residues.
/// Returns a description of the first difference, or nothing.
std::optional<std::string> audit_labeled_bs(const LabeledBs& lbs);

/// Runs every applicable check for the pair (p, q). Fast mode stays
/// polynomial; full mode adds the exact-dimension search and, when
/// C(pq-1, q-2) <= budget, the exhaustive scan ruling out size q-2.
/// Throws std::invalid_argument unless p < q are primes.
VerificationReport verify_theorem(std::uint64_t p, std::uint64_t q, VerifyMode mode,
                                  std::uint64_t budget = kDefaultBudget);

/// `p,q,check,status,detail`, one row per line, RFC 4180 quoting.
std::string to_csv(std::span<const CheckRow> rows, bool header = true);
std::string to_text(std::span<const CheckRow> rows);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace zdmd
