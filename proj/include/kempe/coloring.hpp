#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

/// Ordered list of vertex classes. Construction sorts classes by least
/// element, which is the canonical form used for comparison; validity with
/// respect to a graph is checked by verify_partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<VertexSet> classes);

  const std::vector<VertexSet>& classes() const { return classes_; }
  int order() const { return static_cast<int>(classes_.size()); }
  const VertexSet& operator[](int i) const { return classes_[i]; }
  /// Index of the class containing v, or -1.
  int class_of(Vertex v) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<VertexSet> classes_;
};

struct KempeReport {
  bool proper = false;
  bool kempe = false;
  bool star_ok = false;
  /// First class (canonical order) that is not an anticlique.
  std::optional<int> failing_class;
  /// First pair i < j whose union induces a disconnected subgraph.
  std::optional<std::pair<int, int>> failing_pair;
  int order = 0;
};

/// Throws Error{NotAPartition} on overlap, gap, stray vertex or empty class.
void require_partition(const Graph& g, const Partition& p);

/// Throws Error{NotAPartition}; see require_partition.
KempeReport verify_partition(const Graph& g, const Partition& p);

/// Visits every partition of V(g) into at most k anticliques exactly once, in
/// canonical form. Vertices are assigned in index order, each trying existing
/// classes in order before opening a new one. Return false from the visitor
/// to stop early. Returns the number of partitions visited.
long long for_each_partition(const Graph& g, int k, const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_partitions(const Graph& g, int k);

int chromatic_number(const Graph& g);

struct UniqueColoring {
  enum class Kind { Unique, Multiple, None };
  Kind kind = Kind::None;
  std::optional<Partition> partition;  // set iff kind == Unique
};

/// Stops at the second partition found.
UniqueColoring unique_coloring(const Graph& g, int k);

}  // namespace kempe
