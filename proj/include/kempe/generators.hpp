#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
Graph petersen_graph();

/// Vertices are grouped by part in the given order; uv is an edge iff u and v
/// lie in different parts. Throws Error{EmptyPart | TooLarge}.
Graph complete_multipartite(std::span<const int> parts);

/// Lexicographically least clique of exactly k vertices, if any.
std::optional<VertexSet> lex_least_clique(const Graph& g, int k);

/// (H,k)-cockade over H = complete_multipartite(parts). Each step glues a fresh
/// copy of H onto the current cockade by identifying the lexicographically
/// least k-clique of H with the lexicographically least k-clique of the
/// cockade, vertex by vertex in index order. Fresh vertices get the next
/// indices. Throws Error{NoKClique | TooLarge | InvalidArgument}.
Graph build_cockade(std::span<const int> parts, int k, int copies);

/// Adds t vertices n..n+t-1, each adjacent to every other vertex.
/// Throws Error{TooLarge}.
Graph add_universal_vertices(const Graph& g, int t);

/// Disjoint union of a and b plus all edges between them; a's vertices come first.
Graph join(const Graph& a, const Graph& b);

}  // namespace kempe
