#include "oddfactor/graph.hpp"

#include <algorithm>
#include <numeric>

#include "oddfactor/error.hpp"

namespace oddfactor {

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  if (!items_.empty() && items_.front() < 0)
    throw Error(ErrorKind::InvalidArgument, "negative vertex index in vertex set");
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex in vertex set");
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  std::vector<Vertex> vs(static_cast<std::size_t>(std::max(0, last - first)));
  std::iota(vs.begin(), vs.end(), first);
  return VertexSet(std::move(vs));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::require_within(int n) const {
  if (!items_.empty() && items_.back() >= n)
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(items_.back()) + " out of range for n=" +
                    std::to_string(n));
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} out of range for n=" + std::to_string(n));
    if (e.u == e.v)
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
    throw Error(ErrorKind::DuplicateEdge,
                "duplicate edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "}");

  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::invariants_hold() const {
  if (static_cast<int>(adj_.size()) != n_) return false;
  std::size_t degree_sum = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u < 0 || e.u >= e.v || e.v >= n_) return false;
    if (i > 0 && !(edges_[i - 1] < e)) return false;
  }
  for (Vertex v = 0; v < n_; ++v) {
    const auto& nb = adj_[v];
    degree_sum += nb.size();
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    for (Vertex w : nb) {
      if (w == v || w < 0 || w >= n_) return false;
      const auto& back = adj_[w];
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
      Edge e{std::min(v, w), std::max(v, w)};
      if (!std::binary_search(edges_.begin(), edges_.end(), e)) return false;
    }
  }
  return degree_sum == 2 * edges_.size();
}

Graph complete(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "complete graph needs k >= 0");
  std::vector<Edge> es;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) es.push_back({u, v});
  return Graph(k, std::move(es));
}

Graph cycle(int k) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs k >= 3, got " + std::to_string(k));
  std::vector<Edge> es;
  for (Vertex v = 0; v < k; ++v) es.push_back({v, (v + 1) % k});
  return Graph(k, std::move(es));
}

Graph empty(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "empty graph needs k >= 0");
  return Graph(k);
}

Graph matching_complement(int k) {
  if (k < 0 || k % 2 != 0)
    throw Error(ErrorKind::InvalidArgument,
                "matching complement needs even k >= 0, got " + std::to_string(k));
  std::vector<Edge> es;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v)
      if (!(u % 2 == 0 && v == u + 1)) es.push_back({u, v});
  return Graph(k, std::move(es));
}

Graph standard_graph(StandardKind kind, int k) {
  switch (kind) {
    case StandardKind::Complete: return complete(k);
    case StandardKind::Cycle: return cycle(k);
    case StandardKind::Empty: return empty(k);
    case StandardKind::MatchingComplement: return matching_complement(k);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown standard graph kind");
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> es(g1.edges().begin(), g1.edges().end());
  for (const auto& e : g2.edges()) es.push_back({e.u + n1, e.v + n1});
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) es.push_back({u, v + n1});
  return Graph(n1 + n2, std::move(es));
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> es;
  int offset = 0;
  for (const auto& part : parts) {
    for (const auto& e : part.edges()) es.push_back({e.u + offset, e.v + offset});
    offset += part.order();
  }
  return Graph(offset, std::move(es));
}

namespace {

Relabeled keep_marked(const Graph& g, const std::vector<bool>& keep) {
  Relabeled out;
  out.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!keep[v]) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& e : g.edges())
    if (keep[e.u] && keep[e.v]) es.push_back({out.old_to_new[e.u], out.old_to_new[e.v]});
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(es));
  return out;
}

}  // namespace

Relabeled delete_vertices(const Graph& g, const VertexSet& s) {
  s.require_within(g.order());
  std::vector<bool> keep(static_cast<std::size_t>(g.order()), true);
  for (Vertex v : s) keep[v] = false;
  return keep_marked(g, keep);
}

Relabeled induced_subgraph(const Graph& g, const VertexSet& keep_set) {
  keep_set.require_within(g.order());
  std::vector<bool> keep(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : keep_set) keep[v] = true;
  return keep_marked(g, keep);
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

int odd_component_count(const Graph& g) {
  int odd = 0;
  for (const auto& c : components(g))
    if (c.size() % 2 == 1) ++odd;
  return odd;
}

int edge_boundary(const Graph& g, const VertexSet& a, const VertexSet& b) {
  a.require_within(g.order());
  b.require_within(g.order());
  for (Vertex v : a)
    if (b.contains(v))
      throw Error(ErrorKind::OverlappingSets,
                  "edge_boundary sets share vertex " + std::to_string(v));
  int count = 0;
  for (Vertex v : a)
    for (Vertex w : g.neighbors(v))
      if (b.contains(w)) ++count;
  return count;
}

bool is_regular(const Graph& g, int r) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != r) return false;
  return true;
}

}  // namespace oddfactor
