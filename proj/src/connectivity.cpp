#include "kempe/connectivity.hpp"

#include <algorithm>
#include <array>

namespace kempe {

bool is_connected_subset(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  return g.reach(s.front(), s) == s;
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  while (!s.empty()) {
    VertexSet c = g.reach(s.front(), s);
    out.push_back(c);
    s -= c;
  }
  return out;
}

int universal_vertex_count(const Graph& g) {
  int count = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) ++count;
  return count;
}

int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  // Split graph: node 2v = in(v), 2v+1 = out(v). Source out(s), sink in(t).
  // through[v]: unit flow on in(v) -> out(v). carries[u]: targets w with flow out(u) -> in(w).
  const int n = g.order();
  VertexSet through;
  std::array<VertexSet, kMaxVertices> carries{};
  std::array<int, 2 * kMaxVertices> parent{};
  std::array<int, 2 * kMaxVertices> queue{};

  int flow = 0;
  while (flow < cap) {
    parent.fill(-1);
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    parent[source] = source;
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    while (head < tail && parent[sink] < 0) {
      const int node = queue[head++];
      const Vertex v = node / 2;
      auto visit = [&](int next) {
        if (parent[next] < 0) {
          parent[next] = node;
          queue[tail++] = next;
        }
      };
      if (node % 2 == 0) {
        if (v != t && v != s && !through.contains(v)) visit(2 * v + 1);
        for (Vertex u = 0; u < n; ++u)
          if (carries[u].contains(v)) visit(2 * u + 1);
      } else {
        for (Vertex w : g.neighbors(v) - carries[v]) visit(2 * w);
        if (through.contains(v)) visit(2 * v);
      }
    }
    if (parent[sink] < 0) break;
    for (int node = sink; node != source; node = parent[node]) {
      const int prev = parent[node];
      const Vertex a = prev / 2;
      const Vertex b = node / 2;
      const bool from_in = prev % 2 == 0;
      if (a == b) {
        if (from_in) through.insert(a); else through.erase(a);
      } else if (from_in) {
        carries[b].erase(a);
      } else {
        carries[a].insert(b);
      }
    }
    ++flow;
  }
  return flow;
}

namespace {

bool complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

}  // namespace

namespace serial {

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (complete(g)) return n - 1;
  if (!is_connected_subset(g, g.vertices())) return 0;
  int best = n - 1;
  for (Vertex i = 0; i <= best && i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, local_connectivity(g, i, j, best));
  return best;
}

}  // namespace serial

namespace parallel {

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (complete(g)) return n - 1;
  if (!is_connected_subset(g, g.vertices())) return 0;
  int best = n - 1;
  for (Vertex i = 0; i <= best && i < n; ++i) {
    const int bound = best;
#pragma omp parallel for reduction(min : best) schedule(dynamic)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, local_connectivity(g, i, j, bound));
  }
  return best;
}

}  // namespace parallel

}  // namespace kempe
