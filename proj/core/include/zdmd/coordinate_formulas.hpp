#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdmd/bs_partition.hpp"
#include "zdmd/resolving.hpp"

namespace zdmd {

/// One displayed case of a coordinate table: for subscripts rho in [lo, hi]
/// the code is `background` everywhere, `first` in position 1, each segment's
/// value over its positions, and `rho_value` at position rho when set.
struct CodeBranch {
  struct Segment {
    int from;  // 1-based landmark positions, inclusive
    int to;
    Distance value;
  };
  std::string name;
  int lo;
  int hi;
  Distance first;
  Distance background;
  std::vector<Segment> segments;
  std::optional<Distance> rho_value;
  /// Set when the displayed formula is typographically suspect.
  std::optional<std::string> flag;

  bool matches(int rho) const { return lo <= rho && rho <= hi; }
  MetricCode code(int rho, std::size_t k) const;
};

/// Branches for the family of `label`, in displayed order. Empty for landmark
/// families that have no table. Throws std::invalid_argument outside the
/// p = 3, general and q = 2p - 3 regimes.
std::vector<CodeBranch> code_branches(std::uint64_t p, std::uint64_t q, const BsLabel& label);

struct PredictedCode {
  /// Empty for landmarks and for subscripts no branch covers; those defer to
  /// the BFS code.
  std::optional<MetricCode> code;
  std::string branch;  // "<family>:<condition>", "landmark" or "uncovered"
  std::optional<std::string> flag;
};

/// Code predicted by the first displayed branch matching `label`, in the
/// landmark order of paper_resolving_labels(p, q).
PredictedCode predicted_code(std::uint64_t p, std::uint64_t q, const BsLabel& label);

}  // namespace zdmd
