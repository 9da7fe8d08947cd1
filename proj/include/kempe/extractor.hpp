#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/graph.hpp"
#include "kempe/minor.hpp"

namespace kempe {

inline constexpr int kTargetOrder = 10;

enum class Branch { CliqueN8, StarClique, LiftedK9, ExceptionalContradiction };

std::string to_string(Branch b);

/// Record of one run of the order-10 extraction. Vertex indices refer to the
/// (padded) input graph unless stated otherwise.
struct ExtractionTrace {
  /// Class indices (A, B), swapped if needed so that z lies in A.
  std::pair<int, int> chosen_classes{-1, -1};
  /// G' = G - (A + B), relabelled; reduced_vertices[i] is the original index of vertex i.
  Graph reduced_graph;
  std::vector<Vertex> reduced_vertices;
  int n_prime = 0;
  Branch branch_taken = Branch::ExceptionalContradiction;
  /// CliqueN8: the edge ab of G[A + B] used.
  std::optional<Edge> clique_edge;
  /// BFS spanning tree of G[A + B] as (parent, child) edges.
  std::vector<Edge> spanning_tree;
  std::optional<Vertex> z;
  /// One neighbour of z per class of G', in class order.
  std::vector<Vertex> star_neighbors;
  std::optional<Edge> xy;
  /// LiftedK9: the order-9 witness found in G' + xy, in original indices.
  std::optional<MinorWitness> lifted_from;
  /// Padding vertices a_{k+1}, ..., a_10 (set by extract_unique).
  std::vector<Vertex> padding_added;
  /// Class pairs abandoned because the order-9 search ran out of budget.
  std::vector<std::pair<int, int>> budget_exhausted_pairs;
};

struct DiagnosticCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Expectations the order-10 argument derives for G' + xy when it has no K9
/// minor. Each entry is evaluated independently; failures() lists the ones
/// that do not hold.
struct ContradictionReport {
  std::vector<DiagnosticCheck> checks;

  std::vector<DiagnosticCheck> failures() const;
};

ContradictionReport contradiction_diagnostics(const Graph& g_prime_xy, int n_prime, const Partition& p_prime);

/// Thrown for BudgetExceeded and ExceptionalContradiction; carries the trace.
class ExtractionError : public Error {
 public:
  ExtractionError(Errc code, const std::string& what, ExtractionTrace trace,
                  std::optional<ContradictionReport> report = std::nullopt)
      : Error(code, what), trace_(std::move(trace)), report_(std::move(report)) {}

  const ExtractionTrace& trace() const { return trace_; }
  ExtractionTrace& trace() { return trace_; }
  const std::optional<ContradictionReport>& report() const { return report_; }

 private:
  ExtractionTrace trace_;
  std::optional<ContradictionReport> report_;
};

struct PaddedColoring {
  Graph graph;
  Partition partition;
  std::vector<Vertex> added;
};

/// Adds 10 - k universal vertices, each as a singleton class.
/// Throws Error{NotKempe | OrderTooHigh | TooLarge}.
PaddedColoring pad_to_ten(const Graph& g, const Partition& p);

struct Extraction {
  MinorWitness witness;
  ExtractionTrace trace;
};

/// Clique minor of order 10 from a Kempe-coloring of order 10. Class pairs
/// are tried in canonical order; a pair is abandoned only if the order-9
/// search runs out of budget. Throws Error{NotKempe | WrongOrder} and
/// ExtractionError{BudgetExceeded | ExceptionalContradiction}.
Extraction extract_theorem1(const Graph& g, const Partition& p, const SearchBudget& budget = {});

struct UniqueExtraction {
  MinorWitness witness;  // order >= k, over V(g)
  Partition coloring;    // the unique k-coloring
  ExtractionTrace trace;
};

/// Pads the unique k-coloring to order 10, extracts, and drops every branch
/// set that contains a padding vertex. Throws Error{NotUnique | NotKempe |
/// WrongOrder | OrderTooHigh | InvalidArgument} plus those of extract_theorem1.
UniqueExtraction extract_unique(const Graph& g, int k, const SearchBudget& budget = {});

/// Makes x part of some branch set of w, growing the branch set reached first
/// by a BFS from x through vertices outside all branch sets. Returns the
/// index of that set. g must connect x to the witness.
int absorb_vertex(const Graph& g, MinorWitness& w, Vertex x);

}  // namespace kempe
