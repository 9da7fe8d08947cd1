#include "kempe/extractor.hpp"

#include <array>
#include <stdexcept>

#include "kempe/connectivity.hpp"
#include "kempe/generators.hpp"
#include "kempe/verifiers.hpp"

namespace kempe {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::CliqueN8: return "CliqueN8";
    case Branch::StarClique: return "StarClique";
    case Branch::LiftedK9: return "LiftedK9";
    case Branch::ExceptionalContradiction: return "ExceptionalContradiction";
  }
  return "Unknown";
}

std::vector<DiagnosticCheck> ContradictionReport::failures() const {
  std::vector<DiagnosticCheck> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c);
  return out;
}

ContradictionReport contradiction_diagnostics(const Graph& h, int n_prime, const Partition& p_prime) {
  ContradictionReport r;
  auto add = [&](std::string name, bool passed, std::string detail) {
    r.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const int bound = 7 * n_prime - 27;
  add("edge_bound", h.size() >= bound,
      "m = " + std::to_string(h.size()) + ", 7n'-27 = " + std::to_string(bound));
  add("order_window", n_prime == 11 || n_prime == 12, "n' = " + std::to_string(n_prime) + ", expected 11 or 12");
  const int kappa = vertex_connectivity(h);
  add("connectivity", kappa >= 7, "connectivity " + std::to_string(kappa) + ", expected >= 7");

  int singletons = 0;
  for (VertexSet c : p_prime.classes()) singletons += c.size() == 1;
  add("singleton_classes", singletons >= 16 - n_prime,
      std::to_string(singletons) + " singleton classes, expected >= 16-n' = " + std::to_string(16 - n_prime));
  const int universal = universal_vertex_count(h);
  add("universal_vertices", universal >= 16 - n_prime,
      std::to_string(universal) + " universal vertices, expected >= 16-n' = " + std::to_string(16 - n_prime));

  const auto profile = multipartite_profile(h);
  const bool k22233 = profile == std::vector<int>{2, 2, 2, 3, 3};
  const bool cockade = !k22233 && is_cockade(h, {1, 2, 2, 2, 2, 2}, 6);
  add("exceptional_graph", k22233 || cockade,
      k22233 ? "isomorphic to K_{2,2,2,3,3}"
             : (cockade ? "a (K_{1,2,2,2,2,2},6)-cockade" : "neither exceptional graph"));
  const int exceptional_universal = k22233 ? 0 : (cockade ? (h.order() == 11 ? 1 : 0) : -1);
  if (exceptional_universal >= 0)
    add("exceptional_universal_count", exceptional_universal >= 16 - n_prime,
        "exceptional graph has " + std::to_string(exceptional_universal) + " universal vertices");
  return r;
}

PaddedColoring pad_to_ten(const Graph& g, const Partition& p) {
  if (!verify_partition(g, p).kempe) throw Error(Errc::NotKempe, "partition is not a Kempe-coloring");
  if (p.order() > kTargetOrder)
    throw Error(Errc::OrderTooHigh, "coloring of order " + std::to_string(p.order()) + " exceeds 10");
  const int t = kTargetOrder - p.order();
  PaddedColoring out{add_universal_vertices(g, t), {}, {}};
  std::vector<VertexSet> classes = p.classes();
  for (Vertex a = g.order(); a < g.order() + t; ++a) {
    classes.push_back(VertexSet::single(a));
    out.added.push_back(a);
  }
  out.partition = Partition(std::move(classes));
  return out;
}

int absorb_vertex(const Graph& g, MinorWitness& w, Vertex x) {
  VertexSet used;
  for (int i = 0; i < w.order(); ++i) {
    if (w.branch_sets[i].contains(x)) return i;
    used |= w.branch_sets[i];
  }
  std::array<Vertex, kMaxVertices> parent{};
  parent.fill(-1);
  VertexSet seen = VertexSet::single(x);
  std::vector<Vertex> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : g.neighbors(v)) {
      if (used.contains(u)) {
        for (int i = 0; i < w.order(); ++i) {
          if (!w.branch_sets[i].contains(u)) continue;
          for (Vertex p = v; p != -1; p = parent[p]) w.branch_sets[i].insert(p);
          return i;
        }
      }
      if (seen.contains(u)) continue;
      seen.insert(u);
      parent[u] = v;
      queue.push_back(u);
    }
  }
  throw std::logic_error("vertex is not connected to any branch set");
}

namespace {

using Status = MinorSearchResult::Status;

std::vector<Edge> bfs_tree(const Graph& g, VertexSet s) {
  std::vector<Edge> tree;
  VertexSet seen = VertexSet::single(s.front());
  std::vector<Vertex> queue{s.front()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex u : (g.neighbors(v) & s) - seen) {
      seen.insert(u);
      tree.emplace_back(v, u);
      queue.push_back(u);
    }
  }
  return tree;
}

Vertex lowest_leaf(VertexSet s, const std::vector<Edge>& tree) {
  std::array<int, kMaxVertices> degree{};
  for (auto [u, v] : tree) {
    ++degree[u];
    ++degree[v];
  }
  for (Vertex v : s)
    if (degree[v] <= 1) return v;
  throw std::logic_error("spanning tree without leaves");
}

/// Outcome of one class pair: a witness, or budget exhaustion of the K9 search.
std::optional<MinorWitness> attempt(const Graph& g, const Partition& p, int ia, int ib, const SearchBudget& budget,
                                    ExtractionTrace& tr) {
  VertexSet a = p[ia];
  VertexSet b = p[ib];
  const VertexSet ab = a | b;
  const VertexSet rest = g.vertices() - ab;

  tr = ExtractionTrace{};
  tr.chosen_classes = {ia, ib};
  tr.reduced_graph = g.induced(rest);
  tr.reduced_vertices = rest.to_vector();
  tr.n_prime = rest.size();

  if (tr.n_prime == kTargetOrder - 2) {
    if (!g.is_clique(rest)) throw std::logic_error("G' on 8 vertices is not a clique");
    for (Vertex u : ab) {
      const VertexSet later = (g.neighbors(u) & ab) - VertexSet::range(u + 1);
      if (later.empty()) continue;
      tr.branch_taken = Branch::CliqueN8;
      tr.clique_edge = Edge{u, later.front()};
      MinorWitness w;
      for (Vertex v : rest) w.branch_sets.push_back(VertexSet::single(v));
      w.branch_sets.push_back(VertexSet::single(u));
      w.branch_sets.push_back(VertexSet::single(later.front()));
      return w;
    }
    throw std::logic_error("G[A + B] has no edge");
  }

  tr.spanning_tree = bfs_tree(g, ab);
  const Vertex z = lowest_leaf(ab, tr.spanning_tree);
  tr.z = z;
  if (!a.contains(z)) {
    std::swap(a, b);
    tr.chosen_classes = {ib, ia};
  }

  std::vector<int> others;
  for (int c = 0; c < p.order(); ++c)
    if (c != ia && c != ib) others.push_back(c);
  VertexSet star;
  for (int c : others) {
    const VertexSet hits = g.neighbors(z) & p[c];
    if (hits.empty()) throw std::logic_error("z has no neighbour in some class; not a Kempe-coloring");
    tr.star_neighbors.push_back(hits.front());
    star.insert(hits.front());
  }

  const VertexSet tail = ab - VertexSet::single(z);
  if (g.is_clique(star)) {
    tr.branch_taken = Branch::StarClique;
    MinorWitness w;
    for (Vertex x : tr.star_neighbors) w.branch_sets.push_back(VertexSet::single(x));
    w.branch_sets.push_back(VertexSet::single(z));
    w.branch_sets.push_back(tail);
    return w;
  }

  const VertexSet nz = g.neighbors(z) & rest;
  for (Vertex x : nz) {
    const VertexSet ys = (nz - g.neighbors(x)) - VertexSet::range(x + 1);
    if (!ys.empty()) {
      tr.xy = Edge{x, ys.front()};
      break;
    }
  }
  if (!tr.xy) throw std::logic_error("no nonadjacent neighbours of z although the star is not a clique");
  const auto [x, y] = *tr.xy;

  std::array<Vertex, kMaxVertices> local{};
  for (std::size_t i = 0; i < tr.reduced_vertices.size(); ++i) local[tr.reduced_vertices[i]] = static_cast<Vertex>(i);
  const Graph h = tr.reduced_graph.with_edge(local[x], local[y]);
  auto lift = [&](VertexSet s) {
    VertexSet out;
    for (Vertex v : s) out.insert(tr.reduced_vertices[v]);
    return out;
  };

  const MinorSearchResult found = find_clique_minor(h, kTargetOrder - 1, budget);
  if (found.status == Status::BudgetExceeded) return std::nullopt;
  if (found.status == Status::NotFound) {
    tr.branch_taken = Branch::ExceptionalContradiction;
    std::vector<VertexSet> classes;
    for (int c : others) {
      VertexSet local_class;
      for (Vertex v : p[c]) local_class.insert(local[v]);
      classes.push_back(local_class);
    }
    auto report = contradiction_diagnostics(h, tr.n_prime, Partition(classes));
    throw ExtractionError(Errc::ExceptionalContradiction,
                          "G'+xy has no K9 minor; input is not a Kempe-coloring or the search is wrong", tr,
                          std::move(report));
  }

  MinorWitness k9 = *found.witness;
  const int q = absorb_vertex(h, k9, local[x]);
  MinorWitness lifted;
  for (VertexSet s : k9.branch_sets) lifted.branch_sets.push_back(lift(s));
  tr.lifted_from = lifted;
  tr.branch_taken = Branch::LiftedK9;

  MinorWitness w;
  for (int i = 0; i < lifted.order(); ++i)
    if (i != q) w.branch_sets.push_back(lifted.branch_sets[i]);
  w.branch_sets.push_back(lifted.branch_sets[q] | VertexSet::single(z));
  w.branch_sets.push_back(tail);
  return w;
}

}  // namespace

Extraction extract_theorem1(const Graph& g, const Partition& p, const SearchBudget& budget) {
  if (!verify_partition(g, p).kempe) throw Error(Errc::NotKempe, "partition is not a Kempe-coloring");
  if (p.order() != kTargetOrder)
    throw Error(Errc::WrongOrder, "expected a coloring of order 10, got " + std::to_string(p.order()));

  std::vector<std::pair<int, int>> exhausted;
  std::optional<ExtractionTrace> first_trace;
  for (int i = 0; i < p.order(); ++i) {
    for (int j = i + 1; j < p.order(); ++j) {
      ExtractionTrace tr;
      auto w = attempt(g, p, i, j, budget, tr);
      if (w) {
        tr.budget_exhausted_pairs = exhausted;
        const MinorCheck check = verify_clique_minor(g, *w);
        if (!check.ok() || w->order() != kTargetOrder)
          throw std::logic_error("constructed witness fails verification: " + check.describe());
        return {std::move(*w), std::move(tr)};
      }
      exhausted.emplace_back(i, j);
      if (!first_trace) first_trace = tr;
    }
  }
  first_trace->budget_exhausted_pairs = exhausted;
  throw ExtractionError(Errc::BudgetExceeded, "order-9 search exceeded its budget for every class pair",
                        std::move(*first_trace));
}

UniqueExtraction extract_unique(const Graph& g, int k, const SearchBudget& budget) {
  if (k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  if (k > kTargetOrder) throw Error(Errc::OrderTooHigh, "k = " + std::to_string(k) + " exceeds 10");
  const UniqueColoring u = unique_coloring(g, k);
  if (u.kind != UniqueColoring::Kind::Unique)
    throw Error(Errc::NotUnique, u.kind == UniqueColoring::Kind::None ? "no " + std::to_string(k) + "-coloring"
                                                                     : "several " + std::to_string(k) + "-colorings");
  const Partition& p = *u.partition;
  if (p.order() != k)
    throw Error(Errc::WrongOrder, "the unique coloring uses " + std::to_string(p.order()) +
                                      " classes; chromatic number is below " + std::to_string(k));
  if (!verify_partition(g, p).kempe) throw Error(Errc::NotKempe, "unique coloring is not a Kempe-coloring");

  const PaddedColoring padded = pad_to_ten(g, p);
  Extraction ex;
  try {
    ex = extract_theorem1(padded.graph, padded.partition, budget);
  } catch (ExtractionError& e) {
    e.trace().padding_added = padded.added;
    throw;
  }
  ex.trace.padding_added = padded.added;

  const VertexSet original = g.vertices();
  MinorWitness w;
  for (VertexSet s : ex.witness.branch_sets)
    if (s.subset_of(original)) w.branch_sets.push_back(s);
  if (w.order() < k || !verify_clique_minor(g, w).ok())
    throw std::logic_error("stripped witness is invalid");
  return {std::move(w), p, std::move(ex.trace)};
}

}  // namespace kempe
