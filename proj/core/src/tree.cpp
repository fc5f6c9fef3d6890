#include "zdmd/tree.hpp"

#include <stdexcept>

namespace zdmd {

std::vector<std::size_t> leg_counts(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("leg_counts: input is not a tree");
  if (is_path_graph(t)) {
    throw std::invalid_argument("leg_counts: input is a path; the leg formula does not apply");
  }
  std::vector<std::size_t> legs(t.vertex_count(), 0);
  for (Vertex leaf = 0; leaf < t.vertex_count(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    Vertex prev = leaf;
    Vertex cur = t.neighbors(leaf)[0];
    while (t.degree(cur) == 2) {
      const auto nb = t.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    // cur has degree >= 3: a second leaf here would make t a path.
    ++legs[cur];
  }
  return legs;
}

std::size_t tree_metric_dimension(const Graph& t) {
  std::size_t dim = 0;
  for (std::size_t l : leg_counts(t)) {
    if (l > 1) dim += l - 1;
  }
  return dim;
}

std::size_t tree_dimension_or_path(const Graph& t) {
  if (is_path_graph(t)) {
    if (t.vertex_count() < 2) throw std::invalid_argument("trivial graph has no metric dimension");
    return 1;
  }
  return tree_metric_dimension(t);
}

}  // namespace zdmd
