#include "kempe/verifiers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "kempe/connectivity.hpp"
#include "kempe/error.hpp"
#include "kempe/generators.hpp"

namespace kempe {

namespace {

void require_kempe(const Graph& g, const Partition& p) {
  const KempeReport r = verify_partition(g, p);
  if (!r.kempe) throw Error(Errc::NotKempe, "partition is not a Kempe-coloring");
}

template <class Fn>
bool for_each_clique(const Graph& g, VertexSet chosen, VertexSet candidates, int need, Fn&& fn) {
  if (need == 0) return fn(chosen);
  if (candidates.size() < need) return true;
  for (Vertex v : candidates) {
    candidates.erase(v);
    if (!for_each_clique(g, chosen | VertexSet::single(v), candidates & g.neighbors(v), need - 1, fn)) return false;
  }
  return true;
}

}  // namespace

Lemma1Report check_lemma1(const Graph& g, const Partition& p) {
  require_kempe(g, p);
  Lemma1Report r;
  r.k = p.order();
  r.n = g.order();
  r.m = g.size();
  r.bound = static_cast<long long>(r.k - 1) * r.n - static_cast<long long>(r.k) * (r.k - 1) / 2;
  r.holds = r.m >= r.bound;
  r.equality = r.m == r.bound;
  r.all_pairs_trees = true;
  for (int i = 0; i < r.k && r.all_pairs_trees; ++i) {
    for (int j = i + 1; j < r.k; ++j) {
      const VertexSet both = p[i] | p[j];
      if (g.edges_within(both) != both.size() - 1 || !is_connected_subset(g, both)) {
        r.all_pairs_trees = false;
        r.non_tree_pair = {i, j};
        break;
      }
    }
  }
  return r;
}

bool check_lemma2(const Graph& g, const Partition& p) {
  require_kempe(g, p);
  return vertex_connectivity(g) >= p.order() - 1;
}

std::optional<std::vector<int>> multipartite_profile(const Graph& g) {
  std::vector<int> sizes;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    const Vertex v = left.front();
    const VertexSet part = g.vertices() - g.neighbors(v);
    for (Vertex w : part)
      if (g.vertices() - g.neighbors(w) != part) return std::nullopt;
    sizes.push_back(part.size());
    left -= part;
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_cockade(const Graph& g, const std::vector<int>& base_profile, int k) {
  std::vector<int> profile = base_profile;
  std::sort(profile.begin(), profile.end());
  int base_n = 0;
  for (int s : profile) base_n += s;

  if (g.order() == base_n) return multipartite_profile(g) == profile;
  if (g.order() < 2 * base_n - k) return false;

  bool found = false;
  for_each_clique(g, {}, g.vertices(), k, [&](VertexSet cut) {
    const auto parts = components(g, g.vertices() - cut);
    if (parts.size() < 2) return true;
    found = std::all_of(parts.begin(), parts.end(),
                        [&](VertexSet c) { return is_cockade(g.induced(c | cut), profile, k); });
    return !found;
  });
  return found;
}

Theorem0Report classify_theorem0(const Graph& g, const SearchBudget& budget) {
  if (g.order() <= 8) throw Error(Errc::TooSmall, "needs more than 8 vertices, got " + std::to_string(g.order()));
  Theorem0Report r;
  r.meets_edge_bound = g.size() >= 7 * g.order() - 27;
  auto search = find_clique_minor(g, 9, budget);
  r.k9 = search.status;
  r.k9_witness = std::move(search.witness);
  if (multipartite_profile(g) == std::vector<int>{2, 2, 2, 3, 3})
    r.exceptional_match = ExceptionalMatch::K22233;
  else if (is_cockade(g, {1, 2, 2, 2, 2, 2}, 6))
    r.exceptional_match = ExceptionalMatch::Cockade;
  return r;
}

ColoredGraph generate_uniquely_colorable(int k, int extra, std::uint64_t seed) {
  if (k < 1 || extra < 0) throw Error(Errc::InvalidArgument, "need k >= 1 and extra >= 0");
  if (k + extra > 20) throw Error(Errc::TooLarge, "k + extra = " + std::to_string(k + extra) + " exceeds 20");

  std::mt19937_64 rng(seed);
  std::vector<VertexSet> classes;
  for (Vertex v = 0; v < k; ++v) classes.push_back(VertexSet::single(v));
  GraphBuilder b(k + extra);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  for (Vertex v = k; v < k + extra; ++v) {
    const auto target = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    for (int c = 0; c < k; ++c)
      if (c != target)
        for (Vertex w : classes[c]) b.add_edge(v, w);
    classes[target].insert(v);
  }

  ColoredGraph out{b.build(), Partition(classes)};
  const auto check = unique_coloring(out.graph, k);
  if (check.kind != UniqueColoring::Kind::Unique || *check.partition != out.partition)
    throw std::logic_error("generated graph is not uniquely colorable");
  return out;
}

ColoredGraph thin_uniquely_colorable(const ColoredGraph& base, std::uint64_t seed) {
  const int k = base.partition.order();
  std::vector<Edge> edges = base.graph.edges();
  std::mt19937_64 rng(seed);
  std::shuffle(edges.begin(), edges.end(), rng);

  std::vector<Edge> kept = base.graph.edges();
  for (const Edge& e : edges) {
    std::vector<Edge> trial;
    trial.reserve(kept.size());
    for (const Edge& f : kept)
      if (f != e) trial.push_back(f);
    const Graph g = Graph::build(base.graph.order(), trial);
    const auto r = unique_coloring(g, k);
    if (r.kind == UniqueColoring::Kind::Unique && *r.partition == base.partition) kept = std::move(trial);
  }
  return {Graph::build(base.graph.order(), kept), base.partition};
}

ColoredGraph generate_kempe_colored(int k, int max_class_size, int extra_edges, std::uint64_t seed) {
  if (k < 1 || max_class_size < 1 || extra_edges < 0) throw Error(Errc::InvalidArgument, "invalid generator parameters");
  if (k * max_class_size > kMaxVertices) throw Error(Errc::TooLarge, "up to " + std::to_string(k * max_class_size) + " vertices");

  std::mt19937_64 rng(seed);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<std::vector<Vertex>> classes(k);
  Vertex next = 0;
  for (auto& c : classes) {
    const auto size = 1 + static_cast<int>(below(max_class_size));
    for (int i = 0; i < size; ++i) c.push_back(next++);
  }

  GraphBuilder b(next);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<Vertex> placed_a{classes[i][below(classes[i].size())]};
      std::vector<Vertex> placed_b{classes[j][below(classes[j].size())]};
      b.add_edge(placed_a[0], placed_b[0]);
      std::vector<Vertex> pending;
      for (Vertex v : classes[i])
        if (v != placed_a[0]) pending.push_back(v);
      for (Vertex v : classes[j])
        if (v != placed_b[0]) pending.push_back(v);
      std::shuffle(pending.begin(), pending.end(), rng);
      for (Vertex v : pending) {
        const bool in_a = v < classes[j].front();
        auto& other = in_a ? placed_b : placed_a;
        b.add_edge(v, other[below(other.size())]);
        (in_a ? placed_a : placed_b).push_back(v);
      }
    }
  }
  std::vector<int> class_of(next);
  for (int i = 0; i < k; ++i)
    for (Vertex v : classes[i]) class_of[v] = i;
  for (int e = 0; e < extra_edges && k > 1; ++e) {
    const auto u = static_cast<Vertex>(below(next));
    const auto v = static_cast<Vertex>(below(next));
    if (class_of[u] != class_of[v]) b.add_edge(u, v);
  }

  std::vector<VertexSet> sets;
  for (const auto& c : classes) {
    VertexSet s;
    for (Vertex v : c) s.insert(v);
    sets.push_back(s);
  }
  return {b.build(), Partition(std::move(sets))};
}

}  // namespace kempe
