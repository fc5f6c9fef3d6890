#include "zdmd/bs_partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdmd/ring.hpp"

namespace zdmd {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::tree: return "tree";
    case Regime::p_three: return "p=3";
    case Regime::general: return "q>=2p-1";
    case Regime::twice_p_minus_3: return "q=2p-3";
    case Regime::strict_gap: return "p+1<q<2p-1";
    case Regime::open: return "open";
  }
  return "unknown";
}

Regime classify(std::uint64_t p, std::uint64_t q) {
  if (!(p < q && is_prime(p) && is_prime(q))) {
    throw std::invalid_argument("need primes p < q, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  }
  if (p == 2) return Regime::tree;
  if (p == 3) return Regime::p_three;
  if (q >= 2 * p - 1) return Regime::general;
  if (q == 2 * p - 3) return Regime::twice_p_minus_3;
  if (p + 1 < q) return Regime::strict_gap;
  return Regime::open;
}

std::string BsLabel::str() const {
  switch (kind) {
    case Kind::a: return "a_" + std::to_string(index);
    case Kind::q: return "q_" + std::to_string(index);
    case Kind::c: return "c" + std::to_string(family) + "_" + std::to_string(index);
    case Kind::b: return "b" + std::to_string(family) + "_" + std::to_string(index);
    case Kind::s: return "s_" + std::to_string(index);
  }
  return "?";
}

BsPartition::BsPartition(std::uint64_t p, std::uint64_t q)
    : p_(p), q_(q), half_(static_cast<int>((p - 1) / 2)) {
  classify(p, q);
  const int qn = static_cast<int>(q);
  const int pn = static_cast<int>(p);
  for (int i = 1; i < qn; ++i) labels_.push_back({BsLabel::Kind::a, 0, i});
  for (int j = 1; j < pn; ++j) labels_.push_back({BsLabel::Kind::q, 0, j});
  if (p == 2) {
    for (int i = 1; i < qn; ++i) labels_.push_back({BsLabel::Kind::s, 0, i});
  } else {
    for (int nu = 1; nu <= half_; ++nu) {
      for (int i = 1; i < qn; ++i) labels_.push_back({BsLabel::Kind::c, nu, i});
    }
    for (int mu = 1; mu <= half_; ++mu) {
      for (int i = 1; i < qn; ++i) labels_.push_back({BsLabel::Kind::b, mu, i});
    }
  }
}

namespace {

void check_index(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(value) +
                            " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

}  // namespace

Vertex BsPartition::a(int i) const {
  check_index(i, 1, static_cast<int>(q_) - 1, "a");
  return static_cast<Vertex>(i - 1);
}

Vertex BsPartition::qv(int j) const {
  check_index(j, 1, static_cast<int>(p_) - 1, "q");
  return static_cast<Vertex>(q_ - 1 + static_cast<std::uint64_t>(j) - 1);
}

Vertex BsPartition::c(int nu, int i) const {
  if (p_ == 2) throw std::out_of_range("p = 2 has no C family");
  check_index(nu, 1, half_, "c family");
  check_index(i, 1, static_cast<int>(q_) - 1, "c");
  const auto base = (q_ - 1) + (p_ - 1);
  return static_cast<Vertex>(base + static_cast<std::uint64_t>(nu - 1) * (q_ - 1) +
                             static_cast<std::uint64_t>(i - 1));
}

Vertex BsPartition::b(int mu, int i) const {
  if (p_ == 2) throw std::out_of_range("p = 2 has no B family");
  check_index(mu, 1, half_, "b family");
  check_index(i, 1, static_cast<int>(q_) - 1, "b");
  const auto base = (q_ - 1) + (p_ - 1) + static_cast<std::uint64_t>(half_) * (q_ - 1);
  return static_cast<Vertex>(base + static_cast<std::uint64_t>(mu - 1) * (q_ - 1) +
                             static_cast<std::uint64_t>(i - 1));
}

Vertex BsPartition::s(int i) const {
  if (p_ != 2) throw std::out_of_range("the s family exists only for p = 2");
  check_index(i, 1, static_cast<int>(q_) - 1, "s");
  return static_cast<Vertex>((q_ - 1) + 1 + static_cast<std::uint64_t>(i - 1));
}

Vertex BsPartition::subdivision(int i, int nu) const {
  check_index(nu, 1, static_cast<int>(p_) - 1, "q");
  if (p_ == 2) return s(i);
  return nu <= half_ ? c(nu, i) : b(nu - half_, i);
}

Vertex BsPartition::find(const BsLabel& label) const {
  switch (label.kind) {
    case BsLabel::Kind::a: return a(label.index);
    case BsLabel::Kind::q: return qv(label.index);
    case BsLabel::Kind::c: return c(label.family, label.index);
    case BsLabel::Kind::b: return b(label.family, label.index);
    case BsLabel::Kind::s: return s(label.index);
  }
  throw std::invalid_argument("bad label");
}

std::vector<Vertex> BsPartition::a_family() const {
  std::vector<Vertex> out;
  for (int i = 1; i < static_cast<int>(q_); ++i) out.push_back(a(i));
  return out;
}

std::vector<Vertex> BsPartition::q_family() const {
  std::vector<Vertex> out;
  for (int j = 1; j < static_cast<int>(p_); ++j) out.push_back(qv(j));
  return out;
}

LabeledBs build_labeled_bs(std::uint64_t p, std::uint64_t q) {
  BsPartition part(p, q);
  std::vector<Edge> edges;
  for (int i = 1; i < static_cast<int>(q); ++i) {
    for (int nu = 1; nu < static_cast<int>(p); ++nu) {
      const Vertex mid = part.subdivision(i, nu);
      edges.emplace_back(part.a(i), mid);
      edges.emplace_back(mid, part.qv(nu));
    }
  }
  std::vector<std::string> names;
  names.reserve(part.vertex_count());
  for (Vertex v = 0; v < part.vertex_count(); ++v) names.push_back(part.label(v).str());
  Graph g = Graph::from_edge_list(part.vertex_count(), edges).with_labels(std::move(names));
  return {std::move(g), std::move(part)};
}

std::vector<BsLabel> paper_resolving_labels(std::uint64_t p, std::uint64_t q) {
  using K = BsLabel::Kind;
  const Regime regime = classify(p, q);
  const int pn = static_cast<int>(p);
  const int qn = static_cast<int>(q);
  std::vector<BsLabel> out{{K::a, 0, 1}};
  switch (regime) {
    case Regime::p_three:
      for (int i = 2; i <= qn - 2; ++i) out.push_back({K::b, 1, i});
      return out;
    case Regime::general:
    case Regime::twice_p_minus_3: {
      const int half = (pn - 1) / 2;
      for (int nu = 1; nu <= half; ++nu) {
        out.push_back({K::c, nu, 2 * nu});
        out.push_back({K::c, nu, 2 * nu + 1});
      }
      for (int mu = 1; mu <= (pn - 5) / 2; ++mu) {
        out.push_back({K::b, mu, pn + 2 * mu - 1});
        out.push_back({K::b, mu, pn + 2 * mu});
      }
      const int last = regime == Regime::general ? qn - 2 : qn - 1;
      for (int i = 2 * pn - 4; i <= last; ++i) out.push_back({K::b, (pn - 3) / 2, i});
      return out;
    }
    default:
      throw std::invalid_argument("no explicit resolving set for regime " + to_string(regime));
  }
}

std::vector<Vertex> paper_resolving_set(const BsPartition& part) {
  std::vector<Vertex> out;
  for (const auto& label : paper_resolving_labels(part.p(), part.q())) {
    out.push_back(part.find(label));
  }
  return out;
}

std::string DimensionPrediction::str() const {
  switch (kind) {
    case Kind::exact: return "Exact(" + std::to_string(value) + ")";
    case Kind::strictly_greater_than: return "StrictlyGreaterThan(" + std::to_string(value) + ")";
    case Kind::open: return "Open";
  }
  return "?";
}

DimensionPrediction predicted_dimension(std::uint64_t p, std::uint64_t q) {
  using K = DimensionPrediction::Kind;
  switch (classify(p, q)) {
    case Regime::tree: return {K::exact, q - 2, "p=2 tree formula"};
    case Regime::p_three: return {K::exact, q - 2, "p=3"};
    case Regime::general: return {K::exact, q - 2, "p>=5, q>=2p-1"};
    case Regime::twice_p_minus_3: return {K::exact, q - 1, "q=2p-3"};
    case Regime::strict_gap: return {K::strictly_greater_than, q - 2, "p+1<q<2p-1"};
    case Regime::open: return {K::open, 0, "open range"};
  }
  return {K::open, 0, "open range"};
}

}  // namespace zdmd
