#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "zdmd/distance.hpp"
#include "zdmd/graph.hpp"
#include "zdmd/pair_cover.hpp"

namespace zdmd {

/// Candidate sets tested (exhaustive) or nodes expanded (branch and bound).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class Method { exhaustive, bnb, certificate_construction, tree_formula, greedy };

std::string_view to_string(Method m);

/// Outcome of a dimension computation.
///
/// `lower <= upper` always holds. A witness, when present, resolves the graph
/// and has exactly `upper` vertices. For the independent variant, `feasible`
/// is false when the search proved that no independent resolving set exists;
/// lower and upper are then 0 and meaningless.
struct DimensionReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  std::optional<std::vector<Vertex>> witness;
  Method method = Method::exhaustive;
  std::uint64_t work = 0;
  bool budget_exhausted = false;
  bool feasible = true;
};

struct SubsetScan {
  std::optional<std::vector<Vertex>> witness;  // lexicographically first hit
  std::uint64_t tested = 0;
  bool budget_exhausted = false;
};

/// Tests k-subsets in lexicographic order until one resolves every pair.
/// When `independent_in` is given, only sets independent in that graph are
/// generated (and counted).
SubsetScan scan_subsets_of_size(const PairCover& cover, std::size_t k, std::uint64_t budget,
                                const Graph* independent_in = nullptr);

/// Repeatedly adds the vertex that resolves the most still-unresolved pairs
/// (smallest id on ties). The result always resolves.
std::vector<Vertex> greedy_upper_bound(const DistanceMatrix& dm);

/// Same rule restricted to vertices not adjacent to an earlier pick; fails
/// when it runs out of candidates.
std::optional<std::vector<Vertex>> greedy_independent(const Graph& g, const DistanceMatrix& dm);

/// Exact dimension by scanning k = 1..k_max. Throws std::invalid_argument for
/// disconnected graphs or graphs with fewer than two vertices.
DimensionReport min_resolving_exhaustive(const Graph& g, std::size_t k_max,
                                         std::uint64_t budget = kDefaultBudget);

struct BnbOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Restrict to independent sets.
  bool independent = false;
  /// Optional equidistant family; verified with equidistant_family_bound
  /// before the search and then used as a per-node lower bound.
  std::vector<Vertex> family;
};

/// Exact minimum set cover of the vertex pairs by branch and bound. Branches
/// on the uncovered pair with the fewest eligible resolvers; bounds with
/// ceil(uncovered / best marginal cover), plus the family bound when given.
/// The incumbent starts from the greedy solution.
DimensionReport min_resolving_bnb(const Graph& g, const BnbOptions& options = {});

/// Smallest resolving set that is also independent, by exhaustive scan over
/// independent k-subsets.
DimensionReport independent_min_resolving(const Graph& g, std::size_t k_max,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace zdmd
