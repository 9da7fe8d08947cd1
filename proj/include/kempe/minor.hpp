#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Branch sets of a clique minor. order() is the size of the clique.
struct MinorWitness {
  std::vector<VertexSet> branch_sets;

  int order() const { return static_cast<int>(branch_sets.size()); }
  bool operator==(const MinorWitness&) const = default;
};

struct MinorCheck {
  enum class Violation { None, EmptySet, OutOfRange, Overlap, Disconnected, NotAdjacent };

  Violation violation = Violation::None;
  int first = -1;   // offending set
  int second = -1;  // partner set for Overlap / NotAdjacent

  bool ok() const { return violation == Violation::None; }
  std::string describe() const;
};

MinorCheck verify_clique_minor(const Graph& g, const MinorWitness& w);

struct SearchBudget {
  long long node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

/// Some clique whose removal disconnects G[s], if one is found. Candidates
/// are minimal separators generated by closing {N(C) : C a component of
/// G[s] - N[u]} under S -> N(C) for components C of G[s] - (S + N(x)),
/// x in S. The closure is cut off after 256 separators, so a miss is possible.
std::optional<VertexSet> find_clique_separator(const Graph& g, VertexSet s);

enum class SearchMode { Pruned, Exhaustive };

struct MinorSearchResult {
  enum class Status { Found, NotFound, BudgetExceeded };

  Status status = Status::NotFound;
  std::optional<MinorWitness> witness;  // set iff Found
  long long nodes = 0;
};

std::string to_string(MinorSearchResult::Status s);

/// Searches for a clique minor of order t (t >= 1, else Error{InvalidArgument}).
///
/// Pruned mode first splits the graph into connected components and then
/// recursively along clique separators; a K_t model in a graph glued along a
/// clique projects into one of the glued parts. Inside a connected graph any
/// clique minor extends to one whose branch sets partition the whole
/// part (an unused vertex next to a branch set can always join it), so
/// the search assigns every vertex of the part to one of t blocks. The
/// next vertex is the unassigned one with most assigned neighbours; blocks
/// open in assignment order, which enumerates each partition once. A node is
/// cut when
///   - fewer unassigned vertices remain than unopened blocks,
///   - a block cannot become connected through unassigned vertices,
///   - two blocks cannot become adjacent, or a block cannot meet the
///     remaining unopened blocks,
///   - adjacent block pairs + edges touching unassigned vertices
///     - (forced tree edges) < t(t-1)/2.
///
/// Exhaustive mode is the reference oracle: it enumerates assignments of
/// every vertex to "unused" or one of t labels (labels opened in order) and
/// checks each complete assignment with verify_clique_minor.
///
/// NotFound is returned only after the search space is exhausted.
namespace serial {
MinorSearchResult find_clique_minor(const Graph& g, int t, const SearchBudget& budget = {},
                                    SearchMode mode = SearchMode::Pruned);
}

/// OpenMP kernel for pruned mode: the serial search is cut at a fixed depth,
/// the frontier subtrees run in parallel, and the result of the first
/// frontier subtree (in serial visiting order) that is not NotFound wins, so
/// the witness matches the serial one. Exhaustive mode delegates to serial.
namespace parallel {
MinorSearchResult find_clique_minor(const Graph& g, int t, const SearchBudget& budget = {},
                                    SearchMode mode = SearchMode::Pruned);
}

inline MinorSearchResult find_clique_minor(const Graph& g, int t, const SearchBudget& budget = {},
                                           SearchMode mode = SearchMode::Pruned) {
  return parallel::find_clique_minor(g, t, budget, mode);
}

}  // namespace kempe
