#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zdmd/graph.hpp"

namespace zdmd {

using Residue = std::uint64_t;

/// Modulus n >= 2 of the ring Z_n.
class Modulus {
 public:
  explicit Modulus(std::uint64_t n);
  std::uint64_t value() const { return n_; }

 private:
  std::uint64_t n_;
};

bool is_prime(std::uint64_t n);

/// (p, q) with p < q distinct primes and n = pq, if n has that form.
std::optional<std::pair<std::uint64_t, std::uint64_t>> split_two_primes(std::uint64_t n);

/// Non-zero zero divisors of Z_n in ascending order (gcd(a, n) > 1).
std::vector<Residue> zero_divisors(Modulus m);

/// Gamma(Z_n): one vertex per zero divisor (ascending, labeled by its decimal
/// residue), edge between distinct a, b with ab = 0 mod n. Squares that vanish
/// do not create loops.
Graph zero_divisor_graph(Modulus m);

/// True iff g is complete bipartite K_{p-1,q-1} whose parts are exactly the
/// multiples of q and the multiples of p. Residues are read from g's labels.
/// Throws std::invalid_argument unless p < q are distinct primes.
bool validate_kpq_structure(const Graph& g, std::uint64_t p, std::uint64_t q);

}  // namespace zdmd
