#pragma once

#include <cstddef>
#include <vector>

#include "zdmd/graph.hpp"

namespace zdmd {

/// Number of legs anchored at each vertex of a tree.
///
/// A leg is a maximal pendant path v - x1 - ... - xk where xk is a leaf and
/// x1..x(k-1) have degree 2. In a tree that is not a path, walking inward from
/// a leaf through degree-2 vertices always stops at a vertex of degree >= 3,
/// which is where that leg is counted. Throws std::invalid_argument when t is
/// not a tree or is a path.
std::vector<std::size_t> leg_counts(const Graph& t);

/// Sum over vertices with l_v > 1 of (l_v - 1). Same preconditions as
/// leg_counts: paths are rejected (their dimension is 1).
std::size_t tree_metric_dimension(const Graph& t);

/// tree_metric_dimension, except that paths on >= 2 vertices return 1.
std::size_t tree_dimension_or_path(const Graph& t);

}  // namespace zdmd
