#include "zdmd/resolving.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace zdmd {
namespace {

void check_ids(const DistanceMatrix& dm, std::span<const Vertex> ids) {
  for (Vertex v : ids) {
    if (v >= dm.size()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                              std::to_string(dm.size()) + ")");
    }
  }
}

}  // namespace

MetricCode metric_code(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> landmarks) {
  check_ids(dm, landmarks);
  check_ids(dm, std::span<const Vertex>(&v, 1));
  MetricCode code;
  code.reserve(landmarks.size());
  for (Vertex a : landmarks) code.push_back(dm(v, a));
  return code;
}

bool resolves(const DistanceMatrix& dm, Vertex a, Vertex x, Vertex y) {
  const std::array<Vertex, 3> ids{a, x, y};
  check_ids(dm, ids);
  if (x == y) throw std::invalid_argument("resolves: x and y must differ");
  return dm(a, x) != dm(a, y);
}

ResolveCheck is_resolving(const DistanceMatrix& dm, std::span<const Vertex> landmarks) {
  if (landmarks.empty()) throw std::invalid_argument("is_resolving: empty landmark set");
  check_ids(dm, landmarks);
  std::map<MetricCode, Vertex> seen;
  for (Vertex v = 0; v < dm.size(); ++v) {
    auto [it, inserted] = seen.emplace(metric_code(dm, v, landmarks), v);
    if (!inserted) return {false, std::pair{it->second, v}};
  }
  return {true, std::nullopt};
}

std::optional<ResolvingCertificate> certify(const DistanceMatrix& dm,
                                            std::span<const Vertex> landmarks) {
  if (!is_resolving(dm, landmarks).resolving) return std::nullopt;
  ResolvingCertificate cert;
  cert.landmarks.assign(landmarks.begin(), landmarks.end());
  cert.codes.reserve(dm.size());
  for (Vertex v = 0; v < dm.size(); ++v) cert.codes.push_back(metric_code(dm, v, landmarks));
  return cert;
}

bool certificate_consistent(const ResolvingCertificate& cert) {
  const std::size_t k = cert.landmarks.size();
  for (const auto& code : cert.codes) {
    if (code.size() != k) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = cert.landmarks[i];
    if (a >= cert.codes.size() || cert.codes[a][i] != 0) return false;
  }
  auto sorted = cert.codes;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::string certificate_to_json(const ResolvingCertificate& cert) {
  nlohmann::json doc;
  doc["landmarks"] = cert.landmarks;
  auto codes = nlohmann::json::object();
  for (std::size_t v = 0; v < cert.codes.size(); ++v) codes[std::to_string(v)] = cert.codes[v];
  doc["codes"] = std::move(codes);
  return doc.dump();
}

ResolvingCertificate certificate_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  if (!doc.contains("landmarks") || !doc.contains("codes")) {
    throw std::invalid_argument("certificate JSON: needs \"landmarks\" and \"codes\"");
  }
  ResolvingCertificate cert;
  cert.landmarks = doc["landmarks"].get<std::vector<Vertex>>();
  const auto& codes = doc["codes"];
  cert.codes.resize(codes.size());
  for (const auto& [key, value] : codes.items()) {
    const auto id = std::stoul(key);
    if (id >= cert.codes.size()) {
      throw std::invalid_argument("certificate JSON: code ids must be 0..n-1");
    }
    cert.codes[id] = value.get<MetricCode>();
  }
  return cert;
}

EquidistanceViolation::EquidistanceViolation(Vertex u_, Vertex v_, Vertex x_, bool overlap_)
    : std::runtime_error(overlap_ ? "closed neighborhoods of " + std::to_string(u_) + " and " +
                                        std::to_string(v_) + " share vertex " +
                                        std::to_string(x_)
                                  : "vertex " + std::to_string(x_) + " is not equidistant from " +
                                        std::to_string(u_) + " and " + std::to_string(v_)),
      u(u_),
      v(v_),
      x(x_),
      overlap(overlap_) {}

std::size_t equidistant_family_bound(const DistanceMatrix& dm, std::span<const Vertex> family) {
  check_ids(dm, family);
  if (family.empty()) return 0;
  const std::size_t n = dm.size();
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Vertex u = family[i];
      const Vertex v = family[j];
      for (Vertex x = 0; x < n; ++x) {
        const bool near_u = dm(u, x) <= 1;
        const bool near_v = dm(v, x) <= 1;
        if (near_u && near_v) throw EquidistanceViolation(u, v, x, true);
        if (!near_u && !near_v && dm(u, x) != dm(v, x)) {
          throw EquidistanceViolation(u, v, x, false);
        }
      }
    }
  }
  return family.size() - 1;
}

Md2Diagnostics md2_diagnostics(const Graph& g, const DistanceMatrix& dm,
                               std::array<Vertex, 2> basis) {
  if (basis[0] == basis[1] || !is_resolving(dm, basis).resolving) {
    throw std::invalid_argument("md2_diagnostics: basis does not resolve the graph");
  }
  const Vertex a = basis[0];
  const Vertex b = basis[1];
  if (dm(a, b) == kUnreachable) {
    throw std::invalid_argument("md2_diagnostics: landmarks lie in different components");
  }
  const std::size_t n = g.vertex_count();

  // Count shortest a-b paths by layering on d(a, .).
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return dm(a, x) < dm(a, y); });
  std::vector<unsigned long long> paths(n, 0);
  paths[a] = 1;
  for (Vertex x : order) {
    if (x == a || dm(a, x) == kUnreachable) continue;
    for (Vertex w : g.neighbors(x)) {
      if (dm(a, w) + 1 == dm(a, x)) paths[x] = std::min(paths[x] + paths[w], 2ULL);
    }
  }

  Md2Diagnostics out;
  out.unique_shortest_path = paths[b] == 1;
  out.landmark_degrees_ok = g.degree(a) <= 3 && g.degree(b) <= 3;

  // Walk back from b along predecessors (smallest id first).
  Vertex cur = b;
  out.path.push_back(b);
  while (cur != a) {
    for (Vertex w : g.neighbors(cur)) {
      if (dm(a, w) + 1 == dm(a, cur)) {
        cur = w;
        break;
      }
    }
    out.path.push_back(cur);
  }
  std::reverse(out.path.begin(), out.path.end());

  out.internal_degrees_ok = true;
  for (std::size_t i = 1; i + 1 < out.path.size(); ++i) {
    if (g.degree(out.path[i]) > 5) out.internal_degrees_ok = false;
  }
  return out;
}

}  // namespace zdmd
