#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdmd/graph.hpp"

namespace zdmd {

/// Which family of n = pq a pair (p, q) belongs to.
enum class Regime {
  tree,              // p = 2: the subdivision is a spider
  p_three,           // p = 3
  general,           // p >= 5, q >= 2p - 1
  twice_p_minus_3,   // p >= 5, q = 2p - 3
  strict_gap,        // p >= 5, p + 1 < q < 2p - 1, q != 2p - 3
  open,              // anything else (unreachable for odd primes p >= 5)
};

std::string to_string(Regime r);

/// Throws std::invalid_argument unless p < q are primes.
Regime classify(std::uint64_t p, std::uint64_t q);

/// Structured name of a vertex of BS(Gamma(Z_pq)).
struct BsLabel {
  enum class Kind { a, q, c, b, s };
  Kind kind;
  int family = 0;  // superscript of c / b; 0 for a, q, s
  int index = 0;   // subscript (1-based)

  std::string str() const;
  friend bool operator==(const BsLabel&, const BsLabel&) = default;
};

/// Canonical vertex partition of BS(Gamma(Z_pq)) into A, Q, C^nu, B^mu.
///
/// a_i is the residue i*p (1 <= i <= q-1) and q_j the residue j*q
/// (1 <= j <= p-1). For odd p with h = (p-1)/2, the vertex subdividing the
/// edge a_i -- q_nu is c^nu_i when nu <= h and b^(nu-h)_i otherwise, so q_nu
/// touches only C^nu for nu <= h and only B^(nu-h) above. For p = 2 the single
/// family s_i subdivides a_i -- q_1.
///
/// Vertex ids follow the order a, q, then c^1..c^h, b^1..b^h (or s), each
/// family by increasing subscript.
class BsPartition {
 public:
  BsPartition(std::uint64_t p, std::uint64_t q);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  /// (p - 1) / 2, the number of C (and of B) families for odd p.
  int half() const { return half_; }
  std::size_t vertex_count() const { return labels_.size(); }

  Vertex a(int i) const;
  Vertex qv(int j) const;
  Vertex c(int nu, int i) const;
  Vertex b(int mu, int i) const;
  Vertex s(int i) const;
  /// Vertex subdividing a_i -- q_nu, whatever its family name.
  Vertex subdivision(int i, int nu) const;

  const BsLabel& label(Vertex v) const { return labels_.at(v); }
  Vertex find(const BsLabel& label) const;

  std::vector<Vertex> a_family() const;
  std::vector<Vertex> q_family() const;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  int half_;
  std::vector<BsLabel> labels_;
};

struct LabeledBs {
  Graph graph;  // labeled with BsLabel::str()
  BsPartition partition;
};

/// BS(Gamma(Z_pq)) built straight from the partition. Throws
/// std::invalid_argument unless p < q are primes.
LabeledBs build_labeled_bs(std::uint64_t p, std::uint64_t q);

/// The explicit landmark list E for the p = 3, general and q = 2p - 3 regimes,
/// in landmark order. Throws std::invalid_argument for other regimes.
std::vector<Vertex> paper_resolving_set(const BsPartition& part);

/// The same list as labels, e.g. {a_1, c1_2, c1_3, ...}.
std::vector<BsLabel> paper_resolving_labels(std::uint64_t p, std::uint64_t q);

struct DimensionPrediction {
  enum class Kind { exact, strictly_greater_than, open };
  Kind kind;
  std::uint64_t value = 0;
  std::string source;

  std::string str() const;
};

/// Exact(q-2) for p in {2,3} and the general regime, Exact(q-1) for
/// q = 2p - 3, StrictlyGreaterThan(q-2) for the remaining p + 1 < q < 2p - 1.
DimensionPrediction predicted_dimension(std::uint64_t p, std::uint64_t q);

}  // namespace zdmd
