#include "kempe/generators.hpp"

#include <string>

#include "kempe/error.hpp"

namespace kempe {

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  if (n >= 3) b.add_edge(n - 1, 0);
  return b.build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw Error(Errc::EmptyPart, "part size " + std::to_string(p));
    n += p;
  }
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "multipartite graph on " + std::to_string(n) + " vertices");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return b.build();
}

namespace {

bool extend_clique(const Graph& g, VertexSet chosen, VertexSet candidates, int need, VertexSet& out) {
  if (need == 0) {
    out = chosen;
    return true;
  }
  if (candidates.size() < need) return false;
  for (Vertex v : candidates) {
    candidates.erase(v);
    VertexSet next = candidates & g.neighbors(v);
    if (extend_clique(g, chosen | VertexSet::single(v), next, need - 1, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> lex_least_clique(const Graph& g, int k) {
  if (k < 0) return std::nullopt;
  VertexSet out;
  if (extend_clique(g, {}, g.vertices(), k, out)) return out;
  return std::nullopt;
}

Graph build_cockade(std::span<const int> parts, int k, int copies) {
  if (copies < 1) throw Error(Errc::InvalidArgument, "copies must be >= 1");
  const Graph base = complete_multipartite(parts);
  const auto base_clique = lex_least_clique(base, k);
  if (!base_clique)
    throw Error(Errc::NoKClique, "base graph has no clique of size " + std::to_string(k));
  const std::vector<Vertex> base_glue = base_clique->to_vector();

  Graph cockade = base;
  for (int c = 1; c < copies; ++c) {
    const std::vector<Vertex> glue = lex_least_clique(cockade, k)->to_vector();
    const int n_new = cockade.order() + base.order() - k;
    if (n_new > kMaxVertices)
      throw Error(Errc::TooLarge, "cockade would have " + std::to_string(n_new) + " vertices");

    std::vector<Vertex> image(base.order(), -1);
    for (int i = 0; i < k; ++i) image[base_glue[i]] = glue[i];
    Vertex next = cockade.order();
    for (Vertex v = 0; v < base.order(); ++v)
      if (image[v] < 0) image[v] = next++;

    GraphBuilder b(n_new);
    for (auto [u, v] : cockade.edges()) b.add_edge(u, v);
    for (auto [u, v] : base.edges()) b.add_edge(image[u], image[v]);
    cockade = b.build();
  }
  return cockade;
}

Graph add_universal_vertices(const Graph& g, int t) {
  if (t < 0) throw Error(Errc::InvalidArgument, "negative vertex count");
  const int n = g.order() + t;
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "padded graph on " + std::to_string(n) + " vertices");
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (Vertex a = g.order(); a < n; ++a)
    for (Vertex v = 0; v < n; ++v)
      if (v != a) b.add_edge(a, v);
  return b.build();
}

Graph join(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxVertices) throw Error(Errc::TooLarge, "join on " + std::to_string(n) + " vertices");
  GraphBuilder out(n);
  const int shift = a.order();
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, v + shift);
  return out.build();
}

}  // namespace kempe
