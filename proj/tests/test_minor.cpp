#include <random>

#include "doctest.h"
#include "kempe/error.hpp"
#include "kempe/generators.hpp"
#include "kempe/minor.hpp"
#include "oracles.hpp"

using namespace kempe;
using Status = MinorSearchResult::Status;

namespace {

MinorWitness singletons(std::initializer_list<Vertex> vs) {
  MinorWitness w;
  for (Vertex v : vs) w.branch_sets.push_back(VertexSet::single(v));
  return w;
}

void check_sound(const Graph& g, int t, const MinorSearchResult& r) {
  if (r.status != Status::Found) return;
  REQUIRE(r.witness);
  CHECK(r.witness->order() == t);
  CHECK(verify_clique_minor(g, *r.witness).ok());
}

Status search(const Graph& g, int t, SearchMode mode = SearchMode::Pruned) {
  const auto r = find_clique_minor(g, t, {}, mode);
  check_sound(g, t, r);
  return r.status;
}

}  // namespace

TEST_CASE("verify_clique_minor") {
  CHECK(verify_clique_minor(complete_graph(5), singletons({0, 1, 2, 3, 4})).ok());
  CHECK(verify_clique_minor(cycle_graph(4), MinorWitness{{{0, 1}, {2, 3}}}).ok());

  const Graph p = petersen_graph();
  REQUIRE_FALSE(p.adjacent(0, 2));
  auto r = verify_clique_minor(p, singletons({0, 2}));
  CHECK(r.violation == MinorCheck::Violation::NotAdjacent);
  CHECK(r.describe().find("pair not adjacent") != std::string::npos);

  r = verify_clique_minor(cycle_graph(4), MinorWitness{{{0, 2}, {1}}});
  CHECK(r.violation == MinorCheck::Violation::Disconnected);
  CHECK(r.first == 0);
  r = verify_clique_minor(cycle_graph(4), MinorWitness{{{0, 1}, {1, 2}}});
  CHECK(r.violation == MinorCheck::Violation::Overlap);
  r = verify_clique_minor(cycle_graph(4), MinorWitness{{{0}, {}}});
  CHECK(r.violation == MinorCheck::Violation::EmptySet);
  r = verify_clique_minor(cycle_graph(4), MinorWitness{{{0}, {5}}});
  CHECK(r.violation == MinorCheck::Violation::OutOfRange);
  CHECK(verify_clique_minor(cycle_graph(4), MinorWitness{}).ok());
}

TEST_CASE("Petersen graph has K5 but not K6 minor") {
  const Graph p = petersen_graph();
  CHECK(search(p, 5) == Status::Found);
  CHECK(search(p, 5, SearchMode::Exhaustive) == Status::Found);
  // 6 branch sets need 15 cross edges plus (used - 6) tree edges; Petersen has 15 edges,
  // so every vertex is a singleton and the six would form a K6 subgraph.
  CHECK(search(p, 6) == Status::NotFound);
  CHECK(search(p, 6, SearchMode::Exhaustive) == Status::NotFound);
}

TEST_CASE("exceptional graphs have no K9 minor") {
  const std::vector<int> k22233{2, 2, 2, 3, 3};
  const std::vector<int> k122222{1, 2, 2, 2, 2, 2};
  const auto a = find_clique_minor(complete_multipartite(k22233), 9);
  CHECK(a.status == Status::NotFound);
  const auto b = find_clique_minor(complete_multipartite(k122222), 9);
  CHECK(b.status == Status::NotFound);
  CHECK(search(complete_multipartite(k22233), 8) == Status::Found);
  CHECK(search(complete_multipartite(k122222), 8) == Status::Found);
}

TEST_CASE("complete graphs") {
  for (int n = 1; n <= 12; ++n)
    for (int t = 1; t <= n + 1; ++t) CHECK(search(complete_graph(n), t) == (t <= n ? Status::Found : Status::NotFound));
  CHECK(search(empty_graph(0), 1) == Status::NotFound);
  CHECK(search(empty_graph(3), 2) == Status::NotFound);
  CHECK_THROWS_AS(find_clique_minor(complete_graph(3), 0), Error);
}

TEST_CASE("disconnected hosts are searched per component") {
  // K4 on {4..7}, a long path elsewhere.
  GraphBuilder b(8);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  for (Vertex u = 4; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) b.add_edge(u, v);
  CHECK(search(b.build(), 4) == Status::Found);
  CHECK(search(b.build(), 4, SearchMode::Exhaustive) == Status::Found);
  CHECK(search(b.build(), 5) == Status::NotFound);
}

TEST_CASE("budget exhaustion is reported, never NotFound") {
  const std::vector<int> k22233{2, 2, 2, 3, 3};
  const Graph g = complete_multipartite(k22233);
  SearchBudget tiny{.node_limit = 50, .time_limit = std::chrono::milliseconds(60'000)};
  CHECK(serial::find_clique_minor(g, 9, tiny).status == Status::BudgetExceeded);
  CHECK(parallel::find_clique_minor(g, 9, tiny).status == Status::BudgetExceeded);
  CHECK(serial::find_clique_minor(petersen_graph(), 6, tiny, SearchMode::Exhaustive).status ==
        Status::BudgetExceeded);
}

TEST_CASE("pruned search agrees with the exhaustive oracle") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> density(0.15, 0.9);
  int found = 0;
  int not_found = 0;
  int without_separator = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 7, density(rng), rng);
    for (int t = 1; t <= 5; ++t) {
      const auto pruned = serial::find_clique_minor(g, t);
      const auto par = parallel::find_clique_minor(g, t);
      const auto exact = serial::find_clique_minor(g, t, {}, SearchMode::Exhaustive);
      REQUIRE(exact.status != Status::BudgetExceeded);
      CHECK(pruned.status == exact.status);
      CHECK(par.status == exact.status);
      CHECK(par.witness == pruned.witness);
      check_sound(g, t, pruned);
      check_sound(g, t, exact);
      (exact.status == Status::Found ? found : not_found)++;
    }
    if (g.order() >= 4 && oracle::vertex_connectivity(g) > 0 && !find_clique_separator(g, g.vertices()))
      ++without_separator;
  }
  CHECK(found > 200);
  CHECK(not_found > 200);
  // graphs the backtracking core handles without any decomposition
  CHECK(without_separator > 15);
}

TEST_CASE("pruned search agrees with the oracle on graphs without clique separators") {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> density(0.3, 0.75);
  int kept = 0;
  int found = 0;
  int not_found = 0;
  while (kept < 150) {
    const Graph g = oracle::random_graph(5 + kept % 4, density(rng), rng);
    if (oracle::vertex_connectivity(g) == 0 || find_clique_separator(g, g.vertices())) continue;
    ++kept;
    for (int t = 3; t <= 6; ++t) {
      const auto pruned = serial::find_clique_minor(g, t);
      const auto exact = serial::find_clique_minor(g, t, {}, SearchMode::Exhaustive);
      CHECK(pruned.status == exact.status);
      CHECK(parallel::find_clique_minor(g, t).witness == pruned.witness);
      check_sound(g, t, pruned);
      (exact.status == Status::Found ? found : not_found)++;
    }
  }
  CHECK(found > 100);
  CHECK(not_found > 100);
}

TEST_CASE("minor search monotonicity properties") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    int best = 0;
    for (int t = 1; t <= n; ++t)
      if (search(g, t) == Status::Found) best = t;
    for (int t = 1; t <= best; ++t) CHECK(search(g, t) == Status::Found);

    const Graph apex = add_universal_vertices(g, 1);
    if (best > 0) CHECK(search(apex, best + 1) == Status::Found);

    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && best > 0) CHECK(search(g.with_edge(u, v), best) == Status::Found);
  }
}

TEST_CASE("serial and parallel kernels return the same witness") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(10 + trial % 5, 0.7, rng);
    for (int t : {5, 6, 7}) {
      const auto a = serial::find_clique_minor(g, t);
      const auto b = parallel::find_clique_minor(g, t);
      CHECK(a.status == b.status);
      CHECK(a.witness == b.witness);
    }
  }
}

TEST_CASE("clique separators") {
  const std::vector<int> base{1, 2, 2, 2, 2, 2};
  const Graph cockade = build_cockade(base, 6, 2);
  CHECK(find_clique_separator(cockade, cockade.vertices()) == VertexSet{0, 1, 3, 5, 7, 9});
  CHECK_FALSE(find_clique_separator(petersen_graph(), petersen_graph().vertices()));
  CHECK_FALSE(find_clique_separator(complete_multipartite(base), VertexSet::range(11)));
  CHECK_FALSE(find_clique_separator(complete_graph(6), VertexSet::range(6)));
  const auto sep = find_clique_separator(path_graph(5), VertexSet::range(5));
  REQUIRE(sep);
  CHECK(sep->size() == 1);
}

TEST_CASE("cockades have no K9 minor") {
  const std::vector<int> base{1, 2, 2, 2, 2, 2};
  for (int c = 2; c <= 4; ++c) {
    const Graph cockade = build_cockade(base, 6, c);
    CHECK(search(cockade, 9) == Status::NotFound);
    CHECK(search(cockade, 8) == Status::Found);
  }
  const Graph plus = add_universal_vertices(complete_multipartite(base), 1);
  CHECK(search(plus, 9) == Status::Found);
}
