#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"
#include "kempe/minor.hpp"

namespace kempe {

/// Edge bound for a Kempe-coloring of order k: m >= (k-1)n - k(k-1)/2, with
/// equality exactly when every pair of classes induces a tree.
struct Lemma1Report {
  int k = 0;
  int n = 0;
  int m = 0;
  long long bound = 0;
  bool holds = false;
  bool equality = false;
  bool all_pairs_trees = false;
  std::optional<std::pair<int, int>> non_tree_pair;
};

/// Throws Error{NotKempe} (or NotAPartition) unless p is a Kempe-coloring of g.
Lemma1Report check_lemma1(const Graph& g, const Partition& p);

/// vertex_connectivity(g) >= |p| - 1. Throws like check_lemma1.
bool check_lemma2(const Graph& g, const Partition& p);

/// Sorted part sizes if g is complete multipartite (non-adjacency is an
/// equivalence relation), otherwise nullopt.
std::optional<std::vector<int>> multipartite_profile(const Graph& g);

/// Recognises (H,k)-cockades for H complete multipartite with the given
/// profile: either g is H itself, or some k-clique S separates g and every
/// component C of g - S gives a cockade g[C + S].
bool is_cockade(const Graph& g, const std::vector<int>& base_profile, int k);

enum class ExceptionalMatch { None, K22233, Cockade };

struct Theorem0Report {
  bool meets_edge_bound = false;
  MinorSearchResult::Status k9 = MinorSearchResult::Status::NotFound;
  std::optional<MinorWitness> k9_witness;
  ExceptionalMatch exceptional_match = ExceptionalMatch::None;
};

/// Throws Error{TooSmall} when n <= 8.
Theorem0Report classify_theorem0(const Graph& g, const SearchBudget& budget = {});

struct ColoredGraph {
  Graph graph;
  Partition partition;
};

/// Starts from K_k with singleton classes; each of the `extra` steps adds a
/// vertex to a seeded class and joins it to every vertex of every other
/// class. The result is uniquely k-colorable with the constructed partition,
/// which is re-checked with unique_coloring. Throws Error{TooLarge} when
/// k + extra > 20 and Error{InvalidArgument} when k < 1 or extra < 0.
ColoredGraph generate_uniquely_colorable(int k, int extra, std::uint64_t seed);

/// Deletes edges of `base` in seeded random order, keeping each deletion only
/// if the partition stays the unique coloring with base.partition.order()
/// classes. Produces sparser uniquely colorable graphs than the generator.
ColoredGraph thin_uniquely_colorable(const ColoredGraph& base, std::uint64_t seed);

/// Kempe-colored graph with k classes of random sizes in [1, max_class_size]:
/// each pair of classes gets a random spanning tree of its union, so the
/// edge count meets the (k-1)n - k(k-1)/2 bound with equality; `extra_edges`
/// further random edges between distinct classes are then added.
/// Throws Error{TooLarge} when more than 64 vertices could result.
ColoredGraph generate_kempe_colored(int k, int max_class_size, int extra_edges, std::uint64_t seed);

}  // namespace kempe
