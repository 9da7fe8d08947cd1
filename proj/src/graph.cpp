#include "kempe/graph.hpp"

#include <string>

#include "kempe/error.hpp"

namespace kempe {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::MalformedEdgeList: return "MalformedEdgeList";
    case Errc::EmptyPart: return "EmptyPart";
    case Errc::NoKClique: return "NoKClique";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotKempe: return "NotKempe";
    case Errc::NotUnique: return "NotUnique";
    case Errc::OrderTooHigh: return "OrderTooHigh";
    case Errc::WrongOrder: return "WrongOrder";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ExceptionalContradiction: return "ExceptionalContradiction";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(Errc::TooLarge, "vertex count " + std::to_string(n) + " outside [0, 64]");
  g_.n_ = n;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw Error(Errc::IndexOutOfRange,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                    std::to_string(g_.n_));
  if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
  if (g_.adj_[u].contains(v)) return;
  g_.adj_[u].insert(v);
  g_.adj_[v].insert(u);
  ++g_.m_;
}

Graph GraphBuilder::build() const { return g_; }

Graph Graph::build(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out - s;
}

bool Graph::is_clique(VertexSet s) const {
  for (Vertex v : s)
    if (!(s - VertexSet::single(v)).subset_of(adj_[v])) return false;
  return true;
}

bool Graph::is_anticlique(VertexSet s) const {
  for (Vertex v : s)
    if (adj_[v].intersects(s)) return false;
  return true;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (Vertex v : s) twice += (adj_[v] & s).size();
  return twice / 2;
}

int Graph::edges_touching(VertexSet s) const {
  int total = 0;
  for (Vertex v : s) total += adj_[v].size();
  return total - edges_within(s);
}

bool Graph::sets_adjacent(VertexSet a, VertexSet b) const {
  for (Vertex v : a)
    if (adj_[v].intersects(b)) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::reach(Vertex from, VertexSet s) const {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj_[v];
    next = (next & s) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

Graph Graph::induced(VertexSet s) const {
  std::array<int, kMaxVertices> index{};
  int i = 0;
  for (Vertex v : s) index[v] = i++;
  GraphBuilder b(i);
  for (Vertex u : s)
    for (Vertex v : adj_[u] & s)
      if (u < v) b.add_edge(index[u], index[v]);
  return b.build();
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  GraphBuilder b(n_);
  for (auto [a, c] : edges()) b.add_edge(a, c);
  b.add_edge(u, v);
  return b.build();
}

}  // namespace kempe
