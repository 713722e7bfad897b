#pragma once

// Test-only reference computations. Nothing here calls the eigensolver or
// either factor decider, so agreement with them is meaningful.

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "oddfactor/graph.hpp"

namespace oddfactor::testing {

/// Kneser graph K(n, k): k-subsets of [n], adjacent when disjoint.
/// K(5, 2) is the Petersen graph.
inline Graph kneser(int n, int k) {
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == k) subsets.push_back(m);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if ((subsets[i] & subsets[j]) == 0)
        es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  return Graph(static_cast<int>(subsets.size()), std::move(es));
}

inline Graph petersen() { return kneser(5, 2); }

inline Graph complete_bipartite(int a, int b) { return join(empty(a), empty(b)); }

inline Graph star(int leaves) { return join(complete(1), empty(leaves)); }

inline Graph path(int k) {
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < k; ++v) es.push_back({v, v + 1});
  return Graph(k, std::move(es));
}

/// Erdos-Renyi G(n, p).
template <class Rng>
Graph random_gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph(n, std::move(es));
}

/// Graph on n labeled vertices whose edges are the set bits of `mask`, in
/// the order (0,1),(0,2),...,(n-2,n-1).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) es.push_back({u, v});
  return Graph(n, std::move(es));
}

/// tr(A^k) for k = 1..kmax, i.e. the number of closed walks of length k,
/// in exact integer arithmetic. These are the power sums of the spectrum.
inline std::vector<long double> closed_walk_counts(const Graph& g, int kmax) {
  const int n = g.order();
  std::vector<std::vector<std::int64_t>> power(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<long double> traces;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::vector<std::int64_t>> next(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (Vertex w : g.neighbors(j)) next[i][j] += power[i][w];
    power = std::move(next);
    std::int64_t t = 0;
    for (int i = 0; i < n; ++i) t += power[i][i];
    traces.push_back(static_cast<long double>(t));
  }
  return traces;
}

/// Does some edge subset give every vertex an odd degree in [1, b]?
/// Plain enumeration over all 2^m subsets.
inline bool brute_force_has_odd_factor(const Graph& g, int b) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  if (m > 24) throw std::invalid_argument("brute force limited to 24 edges");
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        ++deg[edges[i].u];
        ++deg[edges[i].v];
      }
    bool ok = true;
    for (int d : deg)
      if (d % 2 == 0 || d > b) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

/// Cubic graph on 16 vertices without a perfect matching: a center joined to
/// three copies of K_4 with one edge subdivided (joined at the subdivision
/// vertex).
inline Graph cubic_without_perfect_matching() {
  std::vector<Edge> es;
  const Vertex center = 0;
  for (int copy = 0; copy < 3; ++copy) {
    const Vertex base = 1 + 5 * copy;  // base..base+3 form K4 minus {base, base+1}
    const Vertex mid = base + 4;       // subdivides {base, base+1}
    for (Vertex u = base; u < base + 4; ++u)
      for (Vertex v = u + 1; v < base + 4; ++v)
        if (!(u == base && v == base + 1)) es.push_back({u, v});
    es.push_back({base, mid});
    es.push_back({base + 1, mid});
    es.push_back({center, mid});
  }
  return Graph(16, std::move(es));
}

/// 4-regular graph on 22 vertices without a perfect matching: two hubs, each
/// joined to all four copies of K_5 minus an edge {a, c}, hub 0 to a and
/// hub 1 to c.
inline Graph quartic_without_perfect_matching() {
  std::vector<Edge> es;
  for (int copy = 0; copy < 4; ++copy) {
    const Vertex base = 2 + 5 * copy;
    for (Vertex u = base; u < base + 5; ++u)
      for (Vertex v = u + 1; v < base + 5; ++v)
        if (!(u == base && v == base + 1)) es.push_back({u, v});
    es.push_back({0, base});
    es.push_back({1, base + 1});
  }
  return Graph(22, std::move(es));
}

}  // namespace oddfactor::testing
