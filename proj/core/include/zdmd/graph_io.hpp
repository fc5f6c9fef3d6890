#pragma once

#include <string>
#include <string_view>

#include "zdmd/graph.hpp"

namespace zdmd {

/// Graphviz export: `graph G { a_1 -- c1_2; ... }`. Vertex names are labels
/// when present, ids otherwise; isolated vertices get a bare node statement.
std::string to_dot(const Graph& g);

/// `{"n": int, "edges": [[u,v],...], "labels": {"id": "name"}}`. The labels
/// object is omitted for unlabeled graphs.
std::string to_json(const Graph& g);

/// Inverse of to_json. Throws std::invalid_argument on malformed documents and
/// the usual Graph::from_edge_list errors on bad edges.
Graph graph_from_json(std::string_view text);

}  // namespace zdmd
