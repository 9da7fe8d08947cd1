#pragma once

// Brute-force reference routines for tests. They deliberately avoid the
// library's bitset helpers and work from plain adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "kempe/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const kempe::Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

inline kempe::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  kempe::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

/// Connectivity of the subgraph induced by `keep` (a bool mask); empty counts as connected.
inline bool connected(const Matrix& a, const std::vector<bool>& keep) {
  const int n = static_cast<int>(a.size());
  int start = -1;
  int total = 0;
  for (int v = 0; v < n; ++v)
    if (keep[v]) {
      ++total;
      if (start < 0) start = v;
    }
  if (total == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w = 0; w < n; ++w)
      if (keep[w] && a[v][w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return count == total;
}

/// Smallest separator size by subset enumeration; n-1 for complete graphs.
inline int vertex_connectivity(const kempe::Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const Matrix a = matrix(g);
  for (int s = 0; s <= n - 2; ++s) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - s, pick.end(), true);
    do {
      std::vector<bool> keep(n);
      for (int v = 0; v < n; ++v) keep[v] = !pick[v];
      if (!connected(a, keep)) return s;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return n - 1;
}

inline int max_clique(const kempe::Graph& g) {
  const int n = g.order();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, __builtin_popcountll(mask));
  }
  return best;
}

/// Canonical proper partitions into at most k classes, via all k^n labelings.
inline std::set<std::vector<std::vector<int>>> naive_partitions(const kempe::Graph& g, int k) {
  const int n = g.order();
  std::set<std::vector<std::vector<int>>> out;
  if (k <= 0) {
    if (n == 0) out.insert(std::vector<std::vector<int>>{});
    return out;
  }
  std::vector<int> label(n, 0);
  while (true) {
    bool proper = true;
    for (int u = 0; u < n && proper; ++u)
      for (int v = u + 1; v < n && proper; ++v)
        if (label[u] == label[v] && g.adjacent(u, v)) proper = false;
    if (proper) {
      std::vector<std::vector<int>> classes(k);
      for (int v = 0; v < n; ++v) classes[label[v]].push_back(v);
      std::erase_if(classes, [](const auto& c) { return c.empty(); });
      std::sort(classes.begin(), classes.end());
      out.insert(classes);
    }
    int i = 0;
    while (i < n && ++label[i] == k) label[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace oracle
