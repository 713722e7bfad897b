#include "oddfactor/factor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "oddfactor/error.hpp"

namespace oddfactor {

namespace {

void require_odd_b(int b) {
  if (b < 1 || b % 2 == 0)
    throw Error(ErrorKind::InvalidArgument,
                "b must be a positive odd integer, got " + std::to_string(b));
}

using Mask = std::uint64_t;

// Number of odd components of the subgraph induced on `alive`.
int odd_components_in(const std::vector<Mask>& adj, Mask alive) {
  int odd = 0;
  while (alive != 0) {
    Mask comp = alive & (~alive + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & alive & ~comp;
      comp |= frontier;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    alive &= ~comp;
  }
  return odd;
}

AmahashiViolation describe_violation(const Graph& g, int b, const std::vector<Vertex>& s) {
  AmahashiViolation out;
  out.s = VertexSet(s);
  auto rest = delete_vertices(g, out.s);
  for (const auto& comp : components(rest.graph)) {
    if (comp.size() % 2 == 0) continue;
    std::vector<Vertex> lifted;
    for (Vertex v : comp) lifted.push_back(rest.new_to_old[v]);
    out.odd_components.emplace_back(std::move(lifted));
  }
  out.o = static_cast<int>(out.odd_components.size());
  out.bound = b * static_cast<int>(s.size());
  return out;
}

}  // namespace

std::optional<AmahashiViolation> check_amahashi(const Graph& g, int b, int max_n) {
  require_odd_b(b);
  const int n = g.order();
  if (n > std::min(max_n, 63))
    throw Error(ErrorKind::SizeLimit, "exhaustive subset check limited to n <= " +
                                          std::to_string(std::min(max_n, 63)) + ", got n=" +
                                          std::to_string(n));
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  const Mask all = n == 0 ? 0 : (n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);

  std::vector<int> idx;
  for (int k = 0; k <= n; ++k) {
    // o(G - S) <= n - |S|, so no set this large or larger can violate.
    if (n - k <= b * k) break;
    idx.resize(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask removed = 0;
      for (int v : idx) removed |= Mask{1} << v;
      if (odd_components_in(adj, all & ~removed) > b * k)
        return describe_violation(g, b, std::vector<Vertex>(idx.begin(), idx.end()));
      // Next k-combination of 0..n-1 in lexicographic order.
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

namespace {

class FactorSearch {
 public:
  FactorSearch(const Graph& g, int b) : g_(g), b_(b) {
    const int n = g.order();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex c) { return g.degree(a) > g.degree(c); });
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    // Edges grouped by their earlier endpoint in elimination order.
    for (Vertex v : order) {
      std::vector<Vertex> later;
      for (Vertex w : g.neighbors(v))
        if (pos[w] > pos[v]) later.push_back(w);
      std::sort(later.begin(), later.end(), [&](Vertex a, Vertex c) { return pos[a] < pos[c]; });
      for (Vertex w : later) seq_.push_back({v, w});
    }
    deg_.assign(static_cast<std::size_t>(n), 0);
    remaining_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) remaining_[v] = g.degree(v);
    chosen_.assign(seq_.size(), false);
  }

  std::optional<FactorCertificate> run() {
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!feasible(v)) return std::nullopt;
    if (!dfs(0)) return std::nullopt;
    FactorCertificate cert;
    for (std::size_t i = 0; i < seq_.size(); ++i)
      if (chosen_[i]) cert.edges.push_back({std::min(seq_[i].u, seq_[i].v), std::max(seq_[i].u, seq_[i].v)});
    std::sort(cert.edges.begin(), cert.edges.end());
    cert.degrees = deg_;
    return cert;
  }

 private:
  // Some odd value in [max(deg, 1), min(b, deg + remaining)] is reachable.
  bool feasible(Vertex v) const {
    const int lo = std::max(deg_[v], 1) | 1;
    const int hi = std::min(b_, deg_[v] + remaining_[v]);
    return lo <= hi;
  }

  bool dfs(std::size_t i) {
    if (i == seq_.size()) return true;
    const auto [u, v] = seq_[i];
    --remaining_[u];
    --remaining_[v];
    if (deg_[u] < b_ && deg_[v] < b_) {
      ++deg_[u];
      ++deg_[v];
      chosen_[i] = true;
      if (feasible(u) && feasible(v) && dfs(i + 1)) return true;
      chosen_[i] = false;
      --deg_[u];
      --deg_[v];
    }
    if (feasible(u) && feasible(v) && dfs(i + 1)) return true;
    ++remaining_[u];
    ++remaining_[v];
    return false;
  }

  const Graph& g_;
  int b_;
  std::vector<Edge> seq_;
  std::vector<int> deg_;
  std::vector<int> remaining_;
  std::vector<bool> chosen_;
};

}  // namespace

std::optional<FactorCertificate> find_odd_factor(const Graph& g, int b, FinderOptions options) {
  require_odd_b(b);
  if (static_cast<long>(g.size()) > options.max_edges)
    throw Error(ErrorKind::SizeLimit, "factor search limited to " +
                                          std::to_string(options.max_edges) + " edges, got " +
                                          std::to_string(g.size()));
  // Each component needs an even number of odd-degree vertices.
  for (const auto& comp : components(g))
    if (comp.size() % 2 == 1) return std::nullopt;
  return FactorSearch(g, b).run();
}

const char* to_string(CertificateDefect d) {
  switch (d) {
    case CertificateDefect::None: return "none";
    case CertificateDefect::ForeignEdge: return "foreign-edge";
    case CertificateDefect::RepeatedEdge: return "repeated-edge";
    case CertificateDefect::DegreeMismatch: return "degree-mismatch";
    case CertificateDefect::DegreeZero: return "degree-zero";
    case CertificateDefect::EvenDegree: return "even-degree";
    case CertificateDefect::DegreeAboveB: return "degree-above-b";
  }
  return "unknown";
}

CertificateCheck verify_certificate(const Graph& g, int b, const FactorCertificate& cert) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<Edge> seen;
  for (auto e : cert.edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v))
      return {CertificateDefect::ForeignEdge, e.u};
    seen.push_back(e);
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(seen.begin(), seen.end());
  if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end())
    return {CertificateDefect::RepeatedEdge, it->u};
  if (!cert.degrees.empty()) {
    if (cert.degrees.size() != deg.size()) return {CertificateDefect::DegreeMismatch, -1};
    for (Vertex v = 0; v < n; ++v)
      if (cert.degrees[v] != deg[v]) return {CertificateDefect::DegreeMismatch, v};
  }
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 0) return {CertificateDefect::DegreeZero, v};
    if (deg[v] % 2 == 0) return {CertificateDefect::EvenDegree, v};
    if (deg[v] > b) return {CertificateDefect::DegreeAboveB, v};
  }
  return {};
}

std::vector<BoundaryComponent> small_boundary_components(const Graph& g, const VertexSet& s,
                                                         int r, int b) {
  if (r < 1 || b < 1)
    throw Error(ErrorKind::InvalidArgument, "r and b must be positive");
  const int ceil_rb = (r + b - 1) / b;
  auto rest = delete_vertices(g, s);
  std::vector<BoundaryComponent> out;
  for (const auto& comp : components(rest.graph)) {
    if (comp.size() % 2 == 0) continue;
    std::vector<Vertex> lifted;
    for (Vertex v : comp) lifted.push_back(rest.new_to_old[v]);
    VertexSet q(std::move(lifted));
    const int boundary = edge_boundary(g, q, s);
    if (boundary < ceil_rb) out.push_back({std::move(q), boundary});
  }
  return out;
}

}  // namespace oddfactor
