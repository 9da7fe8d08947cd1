#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "kempe/vertex_set.hpp"

namespace kempe {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is stored as one 64-bit neighbour mask per vertex, so set
/// operations over neighbourhoods are single instructions. Copies are cheap
/// enough (about half a kilobyte) to pass by value.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{IndexOutOfRange | LoopEdge | TooLarge}. Duplicate edges collapse.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  /// Union of neighbourhoods of s, minus s itself.
  VertexSet neighbors(VertexSet s) const;
  bool is_clique(VertexSet s) const;
  bool is_anticlique(VertexSet s) const;
  /// Number of edges with both ends in s.
  int edges_within(VertexSet s) const;
  /// Number of edges with at least one end in s.
  int edges_touching(VertexSet s) const;
  bool sets_adjacent(VertexSet a, VertexSet b) const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Vertices of s reachable from `from` inside G[s]; `from` must be in s.
  VertexSet reach(Vertex from, VertexSet s) const;

  /// G[s] relabelled so that the i-th smallest member of s becomes vertex i.
  Graph induced(VertexSet s) const;
  Graph with_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Mutable staging area used by generators; produces an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const { return g_.n_; }
  /// Throws Error{IndexOutOfRange | LoopEdge}.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return g_.adj_[u].contains(v); }
  Graph build() const;

 private:
  Graph g_;
};

}  // namespace kempe
