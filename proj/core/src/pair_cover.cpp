#include "zdmd/pair_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdmd {

void Bitset::set_all() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  if (bits_ % 64 != 0 && !words_.empty()) {
    words_.back() = (std::uint64_t{1} << (bits_ % 64)) - 1;
  }
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::all() const { return count() == bits_; }

bool Bitset::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

std::size_t Bitset::count_and_not(const Bitset& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
  }
  return c;
}

std::size_t Bitset::count_and(const Bitset& o) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  }
  return c;
}

bool Bitset::intersects(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::size_t Bitset::find_next(std::size_t from) const {
  if (from >= bits_) return bits_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return std::min(bits_, wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    if (++wi >= words_.size()) return bits_;
    w = words_[wi];
  }
}

PairCover::PairCover(const DistanceMatrix& dm) : n_(dm.size()) {
  pairs_.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y) pairs_.emplace_back(x, y);
  }
  cover_.assign(n_, Bitset(pairs_.size()));
  resolvers_.assign(pairs_.size(), Bitset(n_));
  for (Vertex a = 0; a < n_; ++a) {
    const auto row = dm.row(a);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (row[pairs_[i].first] != row[pairs_[i].second]) {
        cover_[a].set(i);
        resolvers_[i].set(a);
      }
    }
  }
}

std::size_t PairCover::pair_index(Vertex x, Vertex y) const {
  if (x == y || x >= n_ || y >= n_) throw std::invalid_argument("pair_index: invalid pair");
  if (x > y) std::swap(x, y);
  // Pairs with first < x come first: sum_{i<x} (n - 1 - i).
  const std::size_t before = std::size_t{x} * (2 * n_ - x - 1) / 2;
  return before + (y - x - 1);
}

}  // namespace zdmd
