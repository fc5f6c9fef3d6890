#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the Graph container, so agreement is meaningful.

#include <cstdint>
#include <optional>
#include <vector>

#include "zdmd/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::uint32_t>>;
inline constexpr std::uint32_t kInf = 1u << 30;

/// Nonzero residues r with r*s == 0 mod n for some nonzero s, by trying all s.
std::vector<std::uint64_t> zero_divisors(std::uint64_t n);

/// Edge list of Gamma(Z_n) over residues, by testing every pair.
std::vector<std::pair<std::uint64_t, std::uint64_t>> zero_divisor_edges(std::uint64_t n);

Matrix floyd_warshall(const zdmd::Graph& g);

/// Smallest k such that some k-subset gives pairwise distinct distance
/// vectors, comparing whole vectors through a std::set.
std::size_t metric_dimension(const Matrix& d);

/// Same restricted to independent subsets; nothing when none resolves.
std::optional<std::size_t> independent_metric_dimension(const Matrix& d);

/// Whether the landmark list gives all vertices distinct vectors.
bool resolves_all(const Matrix& d, const std::vector<zdmd::Vertex>& landmarks);

}  // namespace oracle
