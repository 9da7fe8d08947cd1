#pragma once

#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// True iff s is nonempty and G[s] is connected.
bool is_connected_subset(const Graph& g, VertexSet s);

/// Vertex sets of the components of G[s], ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet s);

/// Number of vertices of degree n-1.
int universal_vertex_count(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths; s, t distinct and
/// nonadjacent. Stops counting once `cap` paths are found.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap = kMaxVertices);

/// Largest c such that g is c-connected: n-1 for complete graphs, 0 for
/// disconnected graphs and for n <= 1. Uses Even's pair selection over
/// unit-capacity flows. The parallel kernel splits the inner pair loop
/// across OpenMP threads and returns the same value.
namespace serial {
int vertex_connectivity(const Graph& g);
}
namespace parallel {
int vertex_connectivity(const Graph& g);
}

inline int vertex_connectivity(const Graph& g) { return parallel::vertex_connectivity(g); }

}  // namespace kempe
