#pragma once

#include <cstdint>
#include <random>

#include "zdmd/graph.hpp"

namespace zdmd {

/// Uniform labeled tree on n vertices from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::mt19937_64& rng);

/// Connected graph on n vertices: a random tree plus each remaining pair
/// independently with probability `extra`.
Graph random_connected_graph(std::size_t n, double extra, std::mt19937_64& rng);

}  // namespace zdmd
