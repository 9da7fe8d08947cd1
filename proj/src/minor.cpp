#include "kempe/minor.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <string>

#include "kempe/connectivity.hpp"
#include "kempe/error.hpp"

namespace kempe {

using Status = MinorSearchResult::Status;
using Clock = std::chrono::steady_clock;

std::string MinorCheck::describe() const {
  const auto a = std::to_string(first);
  const auto b = std::to_string(second);
  switch (violation) {
    case Violation::None: return "ok";
    case Violation::EmptySet: return "branch set " + a + " is empty";
    case Violation::OutOfRange: return "branch set " + a + " contains a non-vertex";
    case Violation::Overlap: return "branch sets " + a + " and " + b + " overlap";
    case Violation::Disconnected: return "branch set " + a + " is not connected";
    case Violation::NotAdjacent: return "pair not adjacent: branch sets " + a + " and " + b;
  }
  return "unknown";
}

MinorCheck verify_clique_minor(const Graph& g, const MinorWitness& w) {
  using V = MinorCheck::Violation;
  const auto& sets = w.branch_sets;
  const int k = w.order();
  for (int i = 0; i < k; ++i) {
    if (sets[i].empty()) return {V::EmptySet, i};
    if (!sets[i].subset_of(g.vertices())) return {V::OutOfRange, i};
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (sets[i].intersects(sets[j])) return {V::Overlap, i, j};
  for (int i = 0; i < k; ++i)
    if (!is_connected_subset(g, sets[i])) return {V::Disconnected, i};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (!g.sets_adjacent(sets[i], sets[j])) return {V::NotAdjacent, i, j};
  return {};
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Found: return "Found";
    case Status::NotFound: return "NotFound";
    case Status::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

namespace {

/// Node and time accounting shared by all searches belonging to one call.
class Meter {
 public:
  explicit Meter(const SearchBudget& b)
      : limit_(b.node_limit),
        batch_(std::clamp<long long>(b.node_limit, 1, 1024)),
        deadline_(Clock::now() + b.time_limit) {}

  /// Nodes a search may accumulate locally before charging them.
  long long batch() const { return batch_; }

  /// Adds a batch of nodes; false once the budget is spent.
  bool charge(long long batch) {
    const long long total = used_.fetch_add(batch, std::memory_order_relaxed) + batch;
    if (total > limit_ || Clock::now() > deadline_) exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted_.load(std::memory_order_relaxed);
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  long long used() const { return used_.load(std::memory_order_relaxed); }

 private:
  long long limit_;
  long long batch_;
  Clock::time_point deadline_;
  std::atomic<long long> used_{0};
  std::atomic<bool> exhausted_{false};
};

struct Blocks {
  std::array<VertexSet, kMaxVertices> members{};
  std::array<VertexSet, kMaxVertices> nbrs{};  // union of member neighbourhoods
  int opened = 0;
  VertexSet unassigned;
};

/// One pruned search over a connected vertex set. Not thread-safe; the
/// parallel kernel runs one instance per frontier task.
class PrunedSearch {
 public:
  PrunedSearch(const Graph& g, int t, Meter& meter, const std::atomic<bool>* cancel = nullptr)
      : g_(g), t_(t), pairs_needed_(t * (t - 1) / 2), meter_(meter), cancel_(cancel) {}

  ~PrunedSearch() { meter_.charge(pending_); }

  /// With a frontier, states at depth `cutoff` are recorded instead of explored.
  Status run(Blocks& s, int cutoff = -1, std::vector<Blocks>* frontier = nullptr) {
    cutoff_ = cutoff;
    frontier_ = frontier;
    return dfs(s, 0);
  }

  const std::optional<MinorWitness>& witness() const { return witness_; }

 private:
  bool tick() {
    if (++pending_ < meter_.batch()) return !meter_.exhausted();
    const bool ok = meter_.charge(pending_);
    pending_ = 0;
    return ok;
  }

  bool cancelled() const { return cancel_ && cancel_->load(std::memory_order_relaxed); }

  bool feasible(const Blocks& s) const {
    const VertexSet free = s.unassigned;
    const int unopened = t_ - s.opened;
    if (unopened > free.size()) return false;

    int adjacent_pairs = 0;
    for (int i = 0; i < s.opened; ++i)
      for (int j = i + 1; j < s.opened; ++j)
        if (s.nbrs[i].intersects(s.members[j])) ++adjacent_pairs;
    const int forced_internal = free.size() - unopened;
    if (adjacent_pairs + g_.edges_touching(free) - forced_internal < pairs_needed_) return false;

    std::array<VertexSet, kMaxVertices> region;
    std::array<VertexSet, kMaxVertices> closure;
    for (int i = 0; i < s.opened; ++i) {
      const VertexSet b = s.members[i];
      region[i] = g_.reach(b.front(), b | free);
      if (!b.subset_of(region[i])) return false;
      closure[i] = region[i] | g_.neighbors(region[i]);
      if ((closure[i] & free).size() < unopened) return false;
    }
    for (int i = 0; i < s.opened; ++i)
      for (int j = i + 1; j < s.opened; ++j)
        if (!s.nbrs[i].intersects(s.members[j]) && !closure[i].intersects(region[j])) return false;
    return true;
  }

  bool complete(const Blocks& s) const {
    if (s.opened != t_ || !s.unassigned.empty()) return false;
    for (int i = 0; i < t_; ++i) {
      if (!is_connected_subset(g_, s.members[i])) return false;
      for (int j = i + 1; j < t_; ++j)
        if (!s.nbrs[i].intersects(s.members[j])) return false;
    }
    return true;
  }

  Vertex pick(const Blocks& s) const {
    const VertexSet assigned = g_.vertices() - s.unassigned;
    Vertex best = -1;
    int best_score = -1;
    for (Vertex v : s.unassigned) {
      const int score = (g_.neighbors(v) & assigned).size();
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    return best;
  }

  Status descend(Blocks& s, int block, Vertex v, int depth) {
    const VertexSet saved_nbrs = s.nbrs[block];
    s.members[block].insert(v);
    s.nbrs[block] |= g_.neighbors(v);
    s.unassigned.erase(v);
    const Status r = dfs(s, depth + 1);
    s.unassigned.insert(v);
    s.nbrs[block] = saved_nbrs;
    s.members[block].erase(v);
    return r;
  }

  Status dfs(Blocks& s, int depth) {
    if (!tick() || cancelled()) return Status::BudgetExceeded;
    if (!feasible(s)) return Status::NotFound;
    if (s.unassigned.empty()) {
      if (!complete(s)) return Status::NotFound;
      witness_ = MinorWitness{{s.members.begin(), s.members.begin() + t_}};
      return Status::Found;
    }
    if (frontier_ && depth == cutoff_) {
      frontier_->push_back(s);
      return Status::NotFound;
    }

    const Vertex v = pick(s);
    if (s.opened < t_) {
      ++s.opened;
      const Status r = descend(s, s.opened - 1, v, depth);
      --s.opened;
      if (r != Status::NotFound) return r;
    }
    const VertexSet nv = g_.neighbors(v);
    for (const bool want_adjacent : {true, false}) {
      for (int i = 0; i < s.opened; ++i) {
        if (s.members[i].intersects(nv) != want_adjacent) continue;
        const Status r = descend(s, i, v, depth);
        if (r != Status::NotFound) return r;
      }
    }
    return Status::NotFound;
  }

  const Graph& g_;
  int t_;
  int pairs_needed_;
  Meter& meter_;
  const std::atomic<bool>* cancel_;
  long long pending_ = 0;
  int cutoff_ = -1;
  std::vector<Blocks>* frontier_ = nullptr;
  std::optional<MinorWitness> witness_;
};

Blocks root_state(VertexSet component) {
  Blocks s;
  s.unassigned = component;
  return s;
}

MinorSearchResult trivial_cases(const Graph& g, int t, bool& handled) {
  if (t < 1) throw Error(Errc::InvalidArgument, "clique minor order must be >= 1");
  handled = true;
  if (t > g.order()) return {};
  if (t == 1) return {Status::Found, MinorWitness{{VertexSet::single(0)}}, 1};
  handled = false;
  return {};
}

class ExhaustiveSearch {
 public:
  ExhaustiveSearch(const Graph& g, int t, Meter& meter) : g_(g), t_(t), meter_(meter) {}
  ~ExhaustiveSearch() { meter_.charge(pending_); }

  Status run() { return assign(0); }
  const std::optional<MinorWitness>& witness() const { return witness_; }

 private:
  Status assign(Vertex v) {
    if (++pending_ >= meter_.batch()) {
      const bool ok = meter_.charge(pending_);
      pending_ = 0;
      if (!ok) return Status::BudgetExceeded;
    }
    if (v == g_.order()) {
      if (opened_ != t_) return Status::NotFound;
      MinorWitness w{{labels_.begin(), labels_.begin() + t_}};
      if (!verify_clique_minor(g_, w).ok()) return Status::NotFound;
      witness_ = std::move(w);
      return Status::Found;
    }
    if (Status r = assign(v + 1); r != Status::NotFound) return r;
    for (int j = 0; j < opened_; ++j) {
      labels_[j].insert(v);
      const Status r = assign(v + 1);
      labels_[j].erase(v);
      if (r != Status::NotFound) return r;
    }
    if (opened_ < t_) {
      labels_[opened_++].insert(v);
      const Status r = assign(v + 1);
      labels_[--opened_].erase(v);
      if (r != Status::NotFound) return r;
    }
    return Status::NotFound;
  }

  const Graph& g_;
  int t_;
  Meter& meter_;
  long long pending_ = 0;
  int opened_ = 0;
  std::array<VertexSet, kMaxVertices> labels_{};
  std::optional<MinorWitness> witness_;
};

MinorSearchResult exhaustive(const Graph& g, int t, const SearchBudget& budget) {
  Meter meter(budget);
  Status status;
  std::optional<MinorWitness> witness;
  {
    ExhaustiveSearch search(g, t, meter);
    status = search.run();
    witness = search.witness();
  }
  return {status, std::move(witness), meter.used()};
}

}  // namespace

std::optional<VertexSet> find_clique_separator(const Graph& g, VertexSet s) {
  constexpr std::size_t kMaxSeparators = 256;
  std::vector<VertexSet> found;
  auto consider = [&](VertexSet removed) -> std::optional<VertexSet> {
    for (VertexSet c : components(g, s - removed)) {
      const VertexSet sep = g.neighbors(c) & s;
      if (std::find(found.begin(), found.end(), sep) != found.end()) continue;
      if (components(g, s - sep).size() < 2) continue;
      if (g.is_clique(sep)) return sep;
      found.push_back(sep);
    }
    return std::nullopt;
  };
  for (Vertex u : s)
    if (auto hit = consider((g.neighbors(u) & s) | VertexSet::single(u))) return hit;
  for (std::size_t i = 0; i < found.size() && i < kMaxSeparators; ++i)
    for (Vertex x : found[i])
      if (auto hit = consider(found[i] | (g.neighbors(x) & s))) return hit;
  return std::nullopt;
}

namespace {

/// Parts that can host a K_t model, in a fixed order.
void collect_pieces(const Graph& g, VertexSet s, int t, std::vector<VertexSet>& out) {
  if (s.size() < t) return;
  if (const auto sep = find_clique_separator(g, s)) {
    for (VertexSet c : components(g, s - *sep)) collect_pieces(g, c | *sep, t, out);
    return;
  }
  out.push_back(s);
}

std::vector<VertexSet> candidate_pieces(const Graph& g, int t) {
  std::vector<VertexSet> out;
  for (VertexSet c : components(g, g.vertices())) collect_pieces(g, c, t, out);
  return out;
}

MinorWitness lift(const MinorWitness& w, VertexSet piece) {
  const std::vector<Vertex> original = piece.to_vector();
  MinorWitness out;
  for (VertexSet b : w.branch_sets) {
    VertexSet mapped;
    for (Vertex v : b) mapped.insert(original[v]);
    out.branch_sets.push_back(mapped);
  }
  return out;
}

constexpr int kFrontierDepth = 4;

}  // namespace

namespace serial {

MinorSearchResult find_clique_minor(const Graph& g, int t, const SearchBudget& budget, SearchMode mode) {
  bool handled = false;
  if (auto r = trivial_cases(g, t, handled); handled) return r;
  if (mode == SearchMode::Exhaustive) return exhaustive(g, t, budget);

  Meter meter(budget);
  bool over_budget = false;
  for (VertexSet piece : candidate_pieces(g, t)) {
    const Graph h = g.induced(piece);
    Status status;
    std::optional<MinorWitness> witness;
    {
      PrunedSearch search(h, t, meter);
      Blocks s = root_state(h.vertices());
      status = search.run(s);
      witness = search.witness();
    }
    if (status == Status::Found) return {status, lift(*witness, piece), meter.used()};
    if (status == Status::BudgetExceeded) over_budget = true;
  }
  return {over_budget ? Status::BudgetExceeded : Status::NotFound, std::nullopt, meter.used()};
}

}  // namespace serial

namespace parallel {

MinorSearchResult find_clique_minor(const Graph& g, int t, const SearchBudget& budget, SearchMode mode) {
  bool handled = false;
  if (auto r = trivial_cases(g, t, handled); handled) return r;
  if (mode == SearchMode::Exhaustive) return exhaustive(g, t, budget);

  Meter meter(budget);
  bool over_budget = false;
  for (VertexSet piece : candidate_pieces(g, t)) {
    const Graph h = g.induced(piece);
    std::vector<Blocks> frontier;
    Status head;
    std::optional<MinorWitness> head_witness;
    {
      PrunedSearch search(h, t, meter);
      Blocks s = root_state(h.vertices());
      head = search.run(s, kFrontierDepth, &frontier);
      head_witness = search.witness();
    }
    if (head == Status::BudgetExceeded) {
      over_budget = true;
      continue;
    }
    // A leaf found while collecting comes after every recorded frontier state
    // in serial order.
    const int tasks = static_cast<int>(frontier.size());
    std::vector<Status> status(tasks, Status::NotFound);
    std::vector<std::optional<MinorWitness>> witness(tasks);
    std::atomic<int> first_found{std::numeric_limits<int>::max()};
    std::vector<std::atomic<bool>> cancel(tasks);
    for (auto& flag : cancel) flag.store(false);

#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < tasks; ++i) {
      if (i > first_found.load(std::memory_order_relaxed)) {
        status[i] = Status::BudgetExceeded;  // superseded, never inspected
        continue;
      }
      PrunedSearch search(h, t, meter, &cancel[i]);
      Blocks s = frontier[i];
      status[i] = search.run(s);
      if (status[i] == Status::Found) {
        witness[i] = search.witness();
        int seen = first_found.load();
        while (i < seen && !first_found.compare_exchange_weak(seen, i)) {
        }
        for (int j = i + 1; j < tasks; ++j) cancel[j].store(true, std::memory_order_relaxed);
      }
    }

    for (int i = 0; i < tasks; ++i) {
      if (status[i] == Status::Found) return {Status::Found, lift(*witness[i], piece), meter.used()};
      if (status[i] == Status::BudgetExceeded) {
        over_budget = true;
        break;
      }
    }
    if (head == Status::Found) return {Status::Found, lift(*head_witness, piece), meter.used()};
  }
  return {over_budget ? Status::BudgetExceeded : Status::NotFound, std::nullopt, meter.used()};
}

}  // namespace parallel

}  // namespace kempe
