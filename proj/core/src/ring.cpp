#include "zdmd/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace zdmd {

Modulus::Modulus(std::uint64_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(n));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> split_two_primes(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t other = n / d;
    if (d != other && is_prime(d) && is_prime(other)) return std::pair{d, other};
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Residue> zero_divisors(Modulus m) {
  const auto n = m.value();
  std::vector<Residue> out;
  for (Residue a = 1; a < n; ++a) {
    if (std::gcd(a, n) > 1) out.push_back(a);
  }
  return out;
}

Graph zero_divisor_graph(Modulus m) {
  const auto n = m.value();
  const auto zd = zero_divisors(m);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < zd.size(); ++i) {
    for (std::size_t j = i + 1; j < zd.size(); ++j) {
      if ((zd[i] % n) * (zd[j] % n) % n == 0) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(zd.size());
  for (Residue r : zd) labels.push_back(std::to_string(r));
  return Graph::from_edge_list(zd.size(), edges).with_labels(std::move(labels));
}

bool validate_kpq_structure(const Graph& g, std::uint64_t p, std::uint64_t q) {
  if (!(p < q && is_prime(p) && is_prime(q))) {
    throw std::invalid_argument("validate_kpq_structure: need primes p < q, got " +
                                std::to_string(p) + ", " + std::to_string(q));
  }
  if (g.vertex_count() != p + q - 2) return false;
  std::set<Residue> q_side;  // multiples of q
  std::set<Residue> p_side;  // multiples of p
  std::vector<int> side(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Residue r = 0;
    try {
      r = std::stoull(g.name(v));
    } catch (const std::exception&) {
      return false;
    }
    if (r == 0 || r >= p * q) return false;
    if (r % q == 0) {
      q_side.insert(r);
      side[v] = 0;
    } else if (r % p == 0) {
      p_side.insert(r);
      side[v] = 1;
    } else {
      return false;
    }
  }
  if (q_side.size() != p - 1 || p_side.size() != q - 1) return false;
  if (g.edge_count() != (p - 1) * (q - 1)) return false;
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) return false;
  }
  return true;
}

}  // namespace zdmd
