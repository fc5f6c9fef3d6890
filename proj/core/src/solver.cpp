#include "zdmd/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdmd/resolving.hpp"

namespace zdmd {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::bnb: return "bnb";
    case Method::certificate_construction: return "certificate+construction";
    case Method::tree_formula: return "tree-formula";
    case Method::greedy: return "greedy";
  }
  return "unknown";
}

namespace {

void require_solvable(const Graph& g) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("metric dimension needs at least two vertices");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("metric dimension is only defined here for connected graphs");
  }
}

// Closed neighborhoods as vertex bitsets.
std::vector<Bitset> closed_neighborhoods(const Graph& g) {
  std::vector<Bitset> out(g.vertex_count(), Bitset(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out[v].set(v);
    for (Vertex w : g.neighbors(v)) out[v].set(w);
  }
  return out;
}

// Lexicographic k-subset enumeration with one partial-union buffer per depth.
class SubsetScanner {
 public:
  SubsetScanner(const PairCover& cover, std::size_t k, std::uint64_t budget, const Graph* indep)
      : cover_(cover), k_(k), budget_(budget), n_(cover.vertex_count()) {
    acc_.assign(k + 1, Bitset(cover.pair_count()));
    chosen_.resize(k);
    if (indep != nullptr) {
      blocked_.assign(k + 1, Bitset(n_));
      nbhd_ = closed_neighborhoods(*indep);
    }
  }

  SubsetScan run() {
    if (k_ > 0 && k_ <= n_) descend(0, 0);
    return std::move(result_);
  }

 private:
  bool descend(std::size_t depth, Vertex start) {
    if (depth == k_) {
      if (result_.tested >= budget_) {
        result_.budget_exhausted = true;
        return true;
      }
      ++result_.tested;
      if (acc_[k_].all()) {
        result_.witness = chosen_;
        return true;
      }
      return false;
    }
    const bool indep = !nbhd_.empty();
    for (Vertex v = start; v + (k_ - depth) <= n_; ++v) {
      if (indep && blocked_[depth].test(v)) continue;
      acc_[depth + 1] = acc_[depth];
      acc_[depth + 1] |= cover_.cover(v);
      if (indep) {
        blocked_[depth + 1] = blocked_[depth];
        blocked_[depth + 1] |= nbhd_[v];
      }
      chosen_[depth] = v;
      if (descend(depth + 1, v + 1)) return true;
    }
    return false;
  }

  const PairCover& cover_;
  std::size_t k_;
  std::uint64_t budget_;
  std::size_t n_;
  std::vector<Bitset> acc_;
  std::vector<Bitset> blocked_;
  std::vector<Bitset> nbhd_;
  std::vector<Vertex> chosen_;
  SubsetScan result_;
};

std::optional<std::vector<Vertex>> greedy_cover(const PairCover& cover,
                                                const std::vector<Bitset>* nbhd) {
  const std::size_t n = cover.vertex_count();
  Bitset covered(cover.pair_count());
  Bitset blocked(n);
  std::vector<Vertex> picked;
  while (!covered.all()) {
    std::size_t best_gain = 0;
    Vertex best = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (nbhd != nullptr && blocked.test(v)) continue;
      const std::size_t gain = cover.cover(v).count_and_not(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best_gain == 0) return std::nullopt;
    picked.push_back(best);
    covered |= cover.cover(best);
    if (nbhd != nullptr) blocked |= (*nbhd)[best];
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const DistanceMatrix& dm, const BnbOptions& options)
      : cover_(dm),
        options_(options),
        n_(g.vertex_count()),
        nbhd_(closed_neighborhoods(g)) {}

  DimensionReport run() {
    DimensionReport report;
    report.method = Method::bnb;

    std::optional<std::vector<Vertex>> incumbent =
        options_.independent ? greedy_cover(cover_, &nbhd_) : greedy_cover(cover_, nullptr);
    best_size_ = n_ + 1;
    if (incumbent) {
      best_ = *incumbent;
      best_size_ = best_.size();
    }

    Bitset covered(cover_.pair_count());
    Bitset allowed(n_);
    allowed.set_all();
    Bitset chosen_bits(n_);
    const std::size_t root_lb = lower_bound(covered, allowed, chosen_bits).value_or(n_ + 1);
    descend(covered, allowed, chosen_bits);

    report.work = work_;
    report.budget_exhausted = exhausted_;
    if (best_size_ <= n_) {
      report.upper = best_size_;
      report.witness = best_;
      report.lower = exhausted_ ? std::min(root_lb, best_size_) : best_size_;
      report.exact = !exhausted_;
    } else if (!exhausted_) {
      report.feasible = false;
      report.exact = true;
    } else {
      report.lower = std::min(root_lb, n_);
      report.upper = n_;
    }
    return report;
  }

 private:
  // Returns nothing when the node is infeasible.
  std::optional<std::size_t> lower_bound(const Bitset& covered, const Bitset& allowed,
                                         const Bitset& chosen_bits) const {
    const std::size_t uncovered = cover_.pair_count() - covered.count();
    if (uncovered == 0) return 0;
    std::size_t max_gain = 0;
    for (Vertex v = static_cast<Vertex>(allowed.find_first()); v < n_;
         v = static_cast<Vertex>(allowed.find_next(v + 1))) {
      max_gain = std::max(max_gain, cover_.cover(v).count_and_not(covered));
    }
    if (max_gain == 0) return std::nullopt;
    std::size_t lb = (uncovered + max_gain - 1) / max_gain;

    if (!options_.family.empty()) {
      std::size_t unhit = 0;
      std::size_t dead = 0;
      for (Vertex u : options_.family) {
        if (nbhd_[u].intersects(chosen_bits)) continue;
        ++unhit;
        if (!nbhd_[u].intersects(allowed)) ++dead;
      }
      if (dead >= 2) return std::nullopt;
      if (unhit > 0) lb = std::max(lb, unhit - 1);
    }
    return lb;
  }

  void descend(const Bitset& covered, const Bitset& allowed, const Bitset& chosen_bits) {
    if (exhausted_) return;
    if (work_ >= options_.budget) {
      exhausted_ = true;
      return;
    }
    ++work_;
    const std::size_t depth = chosen_.size();
    if (covered.all()) {
      if (depth < best_size_) {
        best_ = chosen_;
        std::sort(best_.begin(), best_.end());
        best_size_ = depth;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;
    const auto lb = lower_bound(covered, allowed, chosen_bits);
    if (!lb || depth + *lb >= best_size_) return;

    // Branch on the uncovered pair with the fewest eligible resolvers.
    std::size_t pick = cover_.pair_count();
    std::size_t pick_count = n_ + 1;
    const auto cw = covered.words();
    for (std::size_t wi = 0; wi < cw.size() && pick_count > 1; ++wi) {
      std::uint64_t free = ~cw[wi];
      if (wi + 1 == cw.size() && cover_.pair_count() % 64 != 0) {
        free &= (std::uint64_t{1} << (cover_.pair_count() % 64)) - 1;
      }
      while (free != 0 && pick_count > 1) {
        const std::size_t i = wi * 64 + static_cast<std::size_t>(std::countr_zero(free));
        free &= free - 1;
        const std::size_t c = cover_.resolvers(i).count_and(allowed);
        if (c == 0) return;
        if (c < pick_count) {
          pick_count = c;
          pick = i;
        }
      }
    }

    Bitset candidates = cover_.resolvers(pick);
    candidates &= allowed;
    std::vector<std::pair<std::size_t, Vertex>> order;
    for (Vertex v = static_cast<Vertex>(candidates.find_first()); v < n_;
         v = static_cast<Vertex>(candidates.find_next(v + 1))) {
      order.emplace_back(cover_.cover(v).count_and_not(covered), v);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    Bitset remaining = allowed;
    for (const auto& [gain, v] : order) {
      Bitset child_covered = covered;
      child_covered |= cover_.cover(v);
      Bitset child_allowed = remaining;
      child_allowed.reset(v);
      if (options_.independent) child_allowed.subtract(nbhd_[v]);
      Bitset child_chosen = chosen_bits;
      child_chosen.set(v);
      chosen_.push_back(v);
      descend(child_covered, child_allowed, child_chosen);
      chosen_.pop_back();
      if (exhausted_) return;
      // Later siblings exclude v: every set containing v was covered above.
      remaining.reset(v);
      if (depth + 1 >= best_size_) return;
    }
  }

  PairCover cover_;
  const BnbOptions& options_;
  std::size_t n_;
  std::vector<Bitset> nbhd_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  std::size_t best_size_ = 0;
  std::uint64_t work_ = 0;
  bool exhausted_ = false;
};

}  // namespace

SubsetScan scan_subsets_of_size(const PairCover& cover, std::size_t k, std::uint64_t budget,
                                const Graph* independent_in) {
  return SubsetScanner(cover, k, budget, independent_in).run();
}

std::vector<Vertex> greedy_upper_bound(const DistanceMatrix& dm) {
  return *greedy_cover(PairCover(dm), nullptr);
}

std::optional<std::vector<Vertex>> greedy_independent(const Graph& g, const DistanceMatrix& dm) {
  const auto nbhd = closed_neighborhoods(g);
  return greedy_cover(PairCover(dm), &nbhd);
}

namespace {

DimensionReport exhaustive_search(const Graph& g, std::size_t k_max, std::uint64_t budget,
                                  bool independent) {
  require_solvable(g);
  const auto dm = bfs_all_pairs(g);
  const PairCover cover(dm);
  const std::size_t n = g.vertex_count();
  k_max = std::min(k_max, n);

  DimensionReport report;
  report.method = Method::exhaustive;
  std::uint64_t left = budget;
  std::size_t k = 1;
  for (; k <= k_max; ++k) {
    auto scan = scan_subsets_of_size(cover, k, left, independent ? &g : nullptr);
    report.work += scan.tested;
    left -= scan.tested;
    if (scan.witness) {
      report.lower = report.upper = k;
      report.exact = true;
      report.witness = std::move(scan.witness);
      return report;
    }
    if (scan.budget_exhausted) {
      report.budget_exhausted = true;
      break;
    }
  }
  // Every size below k is ruled out.
  report.lower = k;
  auto fallback = independent ? greedy_independent(g, dm)
                              : std::optional<std::vector<Vertex>>(greedy_upper_bound(dm));
  if (fallback) {
    report.upper = std::max(fallback->size(), report.lower);
    if (fallback->size() >= report.lower) report.witness = std::move(fallback);
  } else if (independent && !report.budget_exhausted && k_max == n) {
    report.feasible = false;
    report.exact = true;
    report.lower = report.upper = 0;
  } else {
    report.upper = std::max(n, report.lower);
  }
  return report;
}

}  // namespace

DimensionReport min_resolving_exhaustive(const Graph& g, std::size_t k_max,
                                         std::uint64_t budget) {
  return exhaustive_search(g, k_max, budget, false);
}

DimensionReport independent_min_resolving(const Graph& g, std::size_t k_max,
                                          std::uint64_t budget) {
  return exhaustive_search(g, k_max, budget, true);
}

DimensionReport min_resolving_bnb(const Graph& g, const BnbOptions& options) {
  require_solvable(g);
  const auto dm = bfs_all_pairs(g);
  if (!options.family.empty()) equidistant_family_bound(dm, options.family);
  return BranchAndBound(g, dm, options).run();
}

}  // namespace zdmd
