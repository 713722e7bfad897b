#pragma once

#include <optional>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor {

/// Spanning edge subset in which every vertex has odd degree in [1, b].
struct FactorCertificate {
  std::vector<Edge> edges;
  std::vector<int> degrees;
};

/// A set S with more than b|S| odd components in G - S.
struct AmahashiViolation {
  VertexSet s;
  /// Odd components of G - S, in original vertex labels.
  std::vector<VertexSet> odd_components;
  int o = 0;
  int bound = 0;
};

inline constexpr int kDefaultAmahashiMaxN = 22;
inline constexpr int kDefaultFinderMaxEdges = 64;

/// Exhaustive subset check of o(G - S) <= b|S|. Returns nullopt when the
/// condition holds for every S, otherwise the violation with the smallest
/// |S|, ties broken lexicographically. Subsets are visited in increasing
/// cardinality, so the first hit is that witness.
///
/// Throws InvalidArgument for even or non-positive b, SizeLimit when
/// n > max_n (max_n itself is capped at 63).
std::optional<AmahashiViolation> check_amahashi(const Graph& g, int b,
                                                int max_n = kDefaultAmahashiMaxN);

struct FinderOptions {
  int max_edges = kDefaultFinderMaxEdges;
};

/// Exact depth-first search for an odd [1,b]-factor. Returns nullopt iff none
/// exists. Throws InvalidArgument for even b, SizeLimit when |E| exceeds the
/// configured guard.
std::optional<FactorCertificate> find_odd_factor(const Graph& g, int b,
                                                 FinderOptions options = {});

enum class CertificateDefect {
  None,
  ForeignEdge,     // edge not in the host graph (or malformed)
  RepeatedEdge,
  DegreeMismatch,  // stored degrees disagree with the edge list
  DegreeZero,
  EvenDegree,
  DegreeAboveB,
};

const char* to_string(CertificateDefect d);

struct CertificateCheck {
  CertificateDefect defect = CertificateDefect::None;
  Vertex where = -1;

  explicit operator bool() const { return defect == CertificateDefect::None; }
};

/// Never throws; reports the first defect found. Degrees are recomputed from
/// the edges, and the stored degree vector is only compared when nonempty.
CertificateCheck verify_certificate(const Graph& g, int b, const FactorCertificate& cert);

struct BoundaryComponent {
  VertexSet component;  // original labels
  int boundary = 0;     // edges between the component and S
};

/// Odd components Q of g - s with |[Q, s]| < ceil(r/b), ordered by smallest
/// vertex. Requires r >= 1 and b >= 1.
std::vector<BoundaryComponent> small_boundary_components(const Graph& g, const VertexSet& s,
                                                         int r, int b);

}  // namespace oddfactor
