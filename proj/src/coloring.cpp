#include "kempe/coloring.hpp"

#include <algorithm>
#include <string>

#include "kempe/connectivity.hpp"
#include "kempe/error.hpp"

namespace kempe {

Partition::Partition(std::vector<VertexSet> classes) : classes_(std::move(classes)) {
  std::stable_sort(classes_.begin(), classes_.end(),
                   [](VertexSet a, VertexSet b) { return a.canonical_less(b); });
}

int Partition::class_of(Vertex v) const {
  for (int i = 0; i < order(); ++i)
    if (classes_[i].contains(v)) return i;
  return -1;
}

void require_partition(const Graph& g, const Partition& p) {
  VertexSet seen;
  for (int i = 0; i < p.order(); ++i) {
    const VertexSet c = p[i];
    if (c.empty()) throw Error(Errc::NotAPartition, "class " + std::to_string(i) + " is empty");
    if (!c.subset_of(g.vertices()))
      throw Error(Errc::NotAPartition, "class " + std::to_string(i) + " contains a non-vertex");
    if (c.intersects(seen))
      throw Error(Errc::NotAPartition, "class " + std::to_string(i) + " overlaps an earlier class");
    seen |= c;
  }
  if (seen != g.vertices())
    throw Error(Errc::NotAPartition,
                "vertex " + std::to_string((g.vertices() - seen).front()) + " is not covered");
}

KempeReport verify_partition(const Graph& g, const Partition& p) {
  require_partition(g, p);
  KempeReport r;
  r.order = p.order();
  r.proper = true;
  for (int i = 0; i < p.order(); ++i) {
    if (!g.is_anticlique(p[i])) {
      r.proper = false;
      r.failing_class = i;
      break;
    }
  }
  r.star_ok = true;
  for (int i = 0; i < p.order(); ++i) {
    for (int j = 0; j < p.order(); ++j) {
      if (i == j) continue;
      for (Vertex v : p[i])
        if (!g.neighbors(v).intersects(p[j])) r.star_ok = false;
      if (i < j && !r.failing_pair && !is_connected_subset(g, p[i] | p[j])) r.failing_pair = {i, j};
    }
  }
  r.kempe = r.proper && !r.failing_pair;
  return r;
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, int k, const std::function<bool(const Partition&)>& visit)
      : g_(g), k_(k), visit_(visit) {}

  long long run() {
    classes_.clear();
    count_ = 0;
    stopped_ = false;
    if (k_ >= 0) assign(0);
    return count_;
  }

 private:
  void assign(Vertex v) {
    if (stopped_) return;
    if (v == g_.order()) {
      ++count_;
      if (!visit_(Partition(classes_))) stopped_ = true;
      return;
    }
    const VertexSet nb = g_.neighbors(v);
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      if (classes_[i].intersects(nb)) continue;
      classes_[i].insert(v);
      assign(v + 1);
      classes_[i].erase(v);
      if (stopped_) return;
    }
    if (static_cast<int>(classes_.size()) < k_) {
      classes_.push_back(VertexSet::single(v));
      assign(v + 1);
      classes_.pop_back();
    }
  }

  const Graph& g_;
  int k_;
  const std::function<bool(const Partition&)>& visit_;
  std::vector<VertexSet> classes_;
  long long count_ = 0;
  bool stopped_ = false;
};

}  // namespace

long long for_each_partition(const Graph& g, int k, const std::function<bool(const Partition&)>& visit) {
  return PartitionSearch(g, k, visit).run();
}

std::vector<Partition> enumerate_partitions(const Graph& g, int k) {
  std::vector<Partition> out;
  for_each_partition(g, k, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

int chromatic_number(const Graph& g) {
  for (int k = 0;; ++k) {
    bool found = false;
    for_each_partition(g, k, [&](const Partition&) {
      found = true;
      return false;
    });
    if (found) return k;
  }
}

UniqueColoring unique_coloring(const Graph& g, int k) {
  UniqueColoring out;
  int seen = 0;
  for_each_partition(g, k, [&](const Partition& p) {
    if (++seen == 1) out.partition = p;
    return seen < 2;
  });
  if (seen == 0) return out;
  if (seen >= 2) {
    out.kind = UniqueColoring::Kind::Multiple;
    out.partition.reset();
    return out;
  }
  out.kind = UniqueColoring::Kind::Unique;
  return out;
}

}  // namespace kempe
