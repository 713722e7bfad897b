#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddfactor {

using Vertex = int;

/// Undirected edge in canonical form (u < v once stored in a Graph).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted set of distinct vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  /// Sorts the input; throws InvalidArgument on duplicates or negative indices.
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(Vertex v) const;
  Vertex operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  std::span<const Vertex> view() const { return items_; }

  /// Throws VertexOutOfRange unless every element is below n.
  void require_within(int n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Canonicalizes each edge to (min, max) and sorts. Throws on self-loops,
  /// duplicates, and out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Re-derives every structural invariant from scratch; true when all hold.
  bool invariants_hold() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Standard building blocks.

enum class StandardKind { Complete, Cycle, Empty, MatchingComplement };

/// complete/empty/matching_complement accept k >= 0; cycle needs k >= 3.
Graph standard_graph(StandardKind kind, int k);
Graph complete(int k);
Graph cycle(int k);
Graph empty(int k);
/// K_k minus a perfect matching {0,1},{2,3},...; k must be even.
Graph matching_complement(int k);

Graph complement(const Graph& g);
/// g1 keeps its labels, g2 is shifted by g1.order(); all cross edges added.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(std::span<const Graph> parts);

/// Result of deleting or keeping a vertex subset.
struct Relabeled {
  Graph graph;
  /// old_to_new[v] is the new index of v, or -1 when v was dropped.
  std::vector<Vertex> old_to_new;
  /// new_to_old[i] is the original index of new vertex i.
  std::vector<Vertex> new_to_old;
};

Relabeled delete_vertices(const Graph& g, const VertexSet& s);
Relabeled induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
int odd_component_count(const Graph& g);
/// Number of edges with one endpoint in a and the other in b.
int edge_boundary(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_regular(const Graph& g, int r);

// Edge-list text format: "n m" header, then m lines "u v".

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace oddfactor
