#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zdmd/distance.hpp"

namespace zdmd {

/// Fixed-width bitset over 64-bit words. Bits past size() are kept zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all();

  std::size_t count() const;
  bool all() const;
  bool none() const;

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  /// this &= ~o
  Bitset& subtract(const Bitset& o);

  /// popcount(this & ~o)
  std::size_t count_and_not(const Bitset& o) const;
  /// popcount(this & o)
  std::size_t count_and(const Bitset& o) const;
  bool intersects(const Bitset& o) const;

  /// Index of the first set bit at or after `from`, or size().
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Set-cover view of the resolving problem: the universe is every unordered
/// vertex pair {x, y}; landmark a covers the pair iff d(a, x) != d(a, y).
/// Cover sets are computed once from the distance matrix.
class PairCover {
 public:
  explicit PairCover(const DistanceMatrix& dm);

  std::size_t vertex_count() const { return n_; }
  std::size_t pair_count() const { return pairs_.size(); }

  /// Pairs resolved by landmark a.
  const Bitset& cover(Vertex a) const { return cover_[a]; }
  /// Landmarks that resolve pair i (bitset over vertices).
  const Bitset& resolvers(std::size_t pair) const { return resolvers_[pair]; }
  std::pair<Vertex, Vertex> pair_at(std::size_t i) const { return pairs_[i]; }
  /// Index of {x, y}, x != y.
  std::size_t pair_index(Vertex x, Vertex y) const;

 private:
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<Bitset> cover_;
  std::vector<Bitset> resolvers_;
};

}  // namespace zdmd
