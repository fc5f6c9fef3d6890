#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdmd/distance.hpp"
#include "zdmd/graph.hpp"

namespace zdmd {

/// Distances from one vertex to an ordered landmark list, in landmark order.
using MetricCode = std::vector<Distance>;

MetricCode metric_code(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> landmarks);

/// d(a, x) != d(a, y). Throws std::invalid_argument when x == y.
bool resolves(const DistanceMatrix& dm, Vertex a, Vertex x, Vertex y);

struct ResolveCheck {
  bool resolving = false;
  /// One pair with identical codes when !resolving.
  std::optional<std::pair<Vertex, Vertex>> unresolved;
};

/// Whether every vertex gets a distinct code. Throws std::invalid_argument on
/// an empty landmark list and std::out_of_range on bad ids.
ResolveCheck is_resolving(const DistanceMatrix& dm, std::span<const Vertex> landmarks);

/// A landmark list together with the code of every vertex.
struct ResolvingCertificate {
  std::vector<Vertex> landmarks;
  std::vector<MetricCode> codes;  // indexed by vertex id
};

/// Builds the certificate, or nothing when the landmarks do not resolve.
std::optional<ResolvingCertificate> certify(const DistanceMatrix& dm,
                                            std::span<const Vertex> landmarks);

/// Checks the certificate on its own terms: codes pairwise distinct, one code
/// per vertex of the right length, and landmark i has 0 in position i.
bool certificate_consistent(const ResolvingCertificate& cert);

/// `{"landmarks":[ids], "codes": {"id":[d1,...,dk]}}`
std::string certificate_to_json(const ResolvingCertificate& cert);
ResolvingCertificate certificate_from_json(std::string_view text);

/// Raised when a family fails the equidistance preconditions. `x` is the
/// witness vertex: a shared member of both closed neighborhoods, or an outside
/// vertex at different distances from u and v.
class EquidistanceViolation : public std::runtime_error {
 public:
  EquidistanceViolation(Vertex u, Vertex v, Vertex x, bool overlap);
  Vertex u;
  Vertex v;
  Vertex x;
  /// True for a closed-neighborhood overlap, false for unequal distances.
  bool overlap;
};

/// Lower bound |family| - 1 on the metric dimension.
///
/// Verifies that the closed neighborhoods N[u] of family members are pairwise
/// disjoint and that every vertex outside N[u_i] and N[u_j] is equidistant
/// from u_i and u_j. Then only vertices of N[u_i] or N[u_j] separate that
/// pair, so a resolving set misses at most one of the neighborhoods.
/// Throws EquidistanceViolation otherwise.
std::size_t equidistant_family_bound(const DistanceMatrix& dm, std::span<const Vertex> family);

struct Md2Diagnostics {
  bool unique_shortest_path = false;
  bool landmark_degrees_ok = false;   // both landmarks have degree <= 3
  bool internal_degrees_ok = false;   // inner path vertices have degree <= 5
  std::vector<Vertex> path;           // a shortest path between the landmarks
  bool all_pass() const {
    return unique_shortest_path && landmark_degrees_ok && internal_degrees_ok;
  }
};

/// Necessary conditions satisfied by every two-vertex metric basis. Throws
/// std::invalid_argument when the pair does not resolve g.
Md2Diagnostics md2_diagnostics(const Graph& g, const DistanceMatrix& dm,
                               std::array<Vertex, 2> basis);

}  // namespace zdmd
