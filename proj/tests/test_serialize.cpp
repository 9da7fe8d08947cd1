#include <doctest.h>

#include "kempe/codec.hpp"
#include "kempe/generators.hpp"
#include "kempe/serialize.hpp"

using namespace kempe;

TEST_CASE("partitions and witnesses serialize as lists of lists") {
  const Partition p({VertexSet{1, 3}, VertexSet{0, 2}});
  CHECK(to_json(p).dump() == "[[0,2],[1,3]]");
  CHECK(partition_from_json(json::parse("[[1,3],[2,0]]")) == p);

  const MinorWitness w{{VertexSet{4}, VertexSet{0, 1}}};
  CHECK(to_json(w).dump() == "[[4],[0,1]]");
  CHECK(witness_from_json(to_json(w)) == w);

  CHECK_THROWS_AS(partition_from_json(json::parse("[0,1]")), Error);
  CHECK_THROWS_AS(partition_from_json(json::parse("[[0,0]]")), Error);
  CHECK_THROWS_AS(partition_from_json(json::parse("[[64]]")), Error);
  CHECK_THROWS_AS(partition_from_json(json::parse("[[-1]]")), Error);
  CHECK_THROWS_AS(witness_from_json(json::parse("[[\"a\"]]")), Error);
  CHECK_THROWS_AS(witness_from_json(json::parse("{}")), Error);
}

TEST_CASE("reports serialize with their fields") {
  const Graph c4 = cycle_graph(4);
  const Partition bip({VertexSet{0, 2}, VertexSet{1, 3}});
  const json k = to_json(verify_partition(c4, bip));
  CHECK(k["kempe"] == true);
  CHECK(k["failing_pair"].is_null());

  const json l = to_json(check_lemma1(c4, bip));
  CHECK(l["bound"] == 3);
  CHECK(l["m"] == 4);
  CHECK(l["equality"] == false);
  CHECK(l["all_pairs_trees"] == false);

  const json m = to_json(verify_clique_minor(petersen_graph(), {{{0}, {2}}}));
  CHECK(m["ok"] == false);
  CHECK(m["violation"] == "not-adjacent");
}

TEST_CASE("extraction trace serializes every field") {
  const Graph g = complete_graph(10);
  const UniqueExtraction x = extract_unique(g, 10);
  const json t = to_json(x.trace);
  for (const char* key : {"chosen_classes", "reduced_graph", "reduced_vertices", "n_prime", "branch_taken",
                          "clique_edge", "spanning_tree", "z", "star_neighbors", "xy", "lifted_from",
                          "padding_added", "budget_exhausted_pairs"})
    CHECK_MESSAGE(t.contains(key), key);
  CHECK(t["n_prime"] == 8);
  CHECK(from_graph6(t["reduced_graph"].get<std::string>()) == complete_graph(8));
  CHECK(t["branch_taken"] == "CliqueN8");
}

TEST_CASE("certificates round-trip through JSON and verify") {
  const Graph c4 = cycle_graph(4);
  const Partition bip({VertexSet{0, 2}, VertexSet{1, 3}});
  std::vector<Certificate> certs = {
      kempe_certificate(c4, bip),
      minor_certificate(petersen_graph(), {{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}}),
      lemma1_certificate(c4, bip),
      lemma2_certificate(c4, bip),
      extraction_certificate(complete_graph(10), 10, extract_unique(complete_graph(10), 10)),
  };
  certs[0].seed = 7;
  for (const Certificate& c : certs) {
    const Certificate back = certificate_from_json(json::parse(to_json(c).dump()));
    CHECK(back.graph == c.graph);
    CHECK(back.kind == c.kind);
    CHECK(back.payload == c.payload);
    CHECK(back.seed == c.seed);
    CHECK(back.tool_version == kToolVersion);
    const CertificateCheck r = verify_certificate(back);
    CHECK_MESSAGE(r.ok, r.failure);
  }
}

TEST_CASE("tampered certificates fail") {
  const Graph c4 = cycle_graph(4);
  const Partition bip({VertexSet{0, 2}, VertexSet{1, 3}});

  Certificate k = kempe_certificate(c4, bip);
  k.payload["partition"] = json::parse("[[0,1],[2,3]]");
  CHECK_FALSE(verify_certificate(k).ok);

  Certificate m = minor_certificate(petersen_graph(), {{{0}, {1}}});
  m.payload["order"] = 3;
  CHECK_FALSE(verify_certificate(m).ok);
  m.payload["branch_sets"] = json::parse("[[0],[2]]");
  m.payload["order"] = 2;
  CHECK(verify_certificate(m).failure == "pair not adjacent: branch sets 0 and 1");

  Certificate l1 = lemma1_certificate(c4, bip);
  l1.payload["report"]["m"] = 3;
  CHECK_FALSE(verify_certificate(l1).ok);

  Certificate l2 = lemma2_certificate(c4, bip);
  l2.payload["connectivity"] = 3;
  CHECK_FALSE(verify_certificate(l2).ok);

  // C_5 is not uniquely 3-colorable, so no extraction claim about it holds.
  Certificate x = extraction_certificate(complete_graph(3), 3, extract_unique(complete_graph(3), 3));
  x.graph = to_graph6(cycle_graph(5));
  CHECK_FALSE(verify_certificate(x).ok);
  Certificate y = extraction_certificate(complete_graph(3), 3, extract_unique(complete_graph(3), 3));
  y.payload["witness"] = json::parse("[[0],[1]]");
  CHECK(verify_certificate(y).failure == "witness order 2 below k");
}

TEST_CASE("malformed certificates throw") {
  CHECK_THROWS_AS(certificate_from_json(json::parse("{}")), Error);
  CHECK_THROWS_AS(certificate_from_json(json::parse(R"({"graph":"Bw","kind":"nope","payload":{}})")), Error);
  CHECK_THROWS_AS(certificate_from_json(json::parse(R"({"graph":"Bw","kind":"lemma1","payload":[]})")), Error);
  const Certificate c = certificate_from_json(json::parse(R"({"graph":"B!","kind":"kempe-coloring","payload":{"partition":[[0]]}})"));
  CHECK_THROWS_AS(verify_certificate(c), Error);
  const Certificate d = certificate_from_json(json::parse(R"({"graph":"Bw","kind":"kempe-coloring","payload":{}})"));
  CHECK_THROWS_AS(verify_certificate(d), Error);
}
