#include "kempe/serialize.hpp"

#include "kempe/codec.hpp"
#include "kempe/connectivity.hpp"

namespace kempe {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidArgument, what); }

std::vector<VertexSet> sets_from_json(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a list of lists");
  std::vector<VertexSet> out;
  for (const json& item : j) {
    if (!item.is_array()) bad(std::string(what) + " must be a list of lists");
    VertexSet s;
    for (const json& v : item) {
      if (!v.is_number_integer()) bad(std::string(what) + ": vertex indices must be integers");
      const auto x = v.get<long long>();
      if (x < 0 || x >= kMaxVertices) bad(std::string(what) + ": vertex " + std::to_string(x) + " out of range");
      if (s.contains(static_cast<Vertex>(x))) bad(std::string(what) + ": vertex " + std::to_string(x) + " repeated");
      s.insert(static_cast<Vertex>(x));
    }
    out.push_back(s);
  }
  return out;
}

json edge_json(const std::optional<Edge>& e) {
  if (!e) return nullptr;
  return json::array({e->first, e->second});
}

json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  json out = json::array();
  for (const auto& [a, b] : ps) out.push_back(json::array({a, b}));
  return out;
}

std::string_view violation_name(MinorCheck::Violation v) {
  using V = MinorCheck::Violation;
  switch (v) {
    case V::None: return "none";
    case V::EmptySet: return "empty-set";
    case V::OutOfRange: return "out-of-range";
    case V::Overlap: return "overlap";
    case V::Disconnected: return "disconnected";
    case V::NotAdjacent: return "not-adjacent";
  }
  return "unknown";
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Certificate make(const Graph& g, CertificateKind kind, json payload) {
  Certificate c;
  c.graph = to_graph6(g);
  c.kind = kind;
  c.payload = std::move(payload);
  return c;
}

CertificateCheck fail(std::string why) { return {false, std::move(why)}; }

CertificateCheck check_extraction(const Graph& g, const json& payload) {
  const json& kj = field(payload, "k");
  if (!kj.is_number_integer()) bad("k must be an integer");
  const int k = kj.get<int>();
  const Partition claimed = partition_from_json(field(payload, "partition"));
  const MinorWitness w = witness_from_json(field(payload, "witness"));
  if (k < 1 || k > kTargetOrder) return fail("k out of range 1..10");
  const UniqueColoring u = unique_coloring(g, k);
  if (u.kind != UniqueColoring::Kind::Unique) return fail("graph is not uniquely " + std::to_string(k) + "-colorable");
  if (!(*u.partition == claimed)) return fail("partition is not the unique coloring");
  const MinorCheck c = verify_clique_minor(g, w);
  if (!c.ok()) return fail(c.describe());
  if (w.order() < k) return fail("witness order " + std::to_string(w.order()) + " below k");
  return {true, {}};
}

}  // namespace

json sets_to_json(std::span<const VertexSet> sets) {
  json out = json::array();
  for (const VertexSet& s : sets) out.push_back(s.to_vector());
  return out;
}

json to_json(const Partition& p) { return sets_to_json(p.classes()); }
json to_json(const MinorWitness& w) { return sets_to_json(w.branch_sets); }

Partition partition_from_json(const json& j) { return Partition(sets_from_json(j, "partition")); }
MinorWitness witness_from_json(const json& j) { return MinorWitness{sets_from_json(j, "witness")}; }

json to_json(const KempeReport& r) {
  return {
      {"order", r.order},
      {"proper", r.proper},
      {"kempe", r.kempe},
      {"star_ok", r.star_ok},
      {"failing_class", r.failing_class ? json(*r.failing_class) : json(nullptr)},
      {"failing_pair", r.failing_pair ? json::array({r.failing_pair->first, r.failing_pair->second}) : json(nullptr)},
  };
}

json to_json(const Lemma1Report& r) {
  return {
      {"k", r.k},
      {"n", r.n},
      {"m", r.m},
      {"bound", r.bound},
      {"holds", r.holds},
      {"equality", r.equality},
      {"all_pairs_trees", r.all_pairs_trees},
      {"non_tree_pair", r.non_tree_pair ? json::array({r.non_tree_pair->first, r.non_tree_pair->second}) : json(nullptr)},
  };
}

json to_json(const MinorCheck& c) {
  json out = {{"ok", c.ok()}, {"violation", violation_name(c.violation)}, {"message", c.describe()}};
  if (c.first >= 0) out["first"] = c.first;
  if (c.second >= 0) out["second"] = c.second;
  return out;
}

json to_json(const ContradictionReport& r) {
  json checks = json::array();
  for (const DiagnosticCheck& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  json failed = json::array();
  for (const DiagnosticCheck& c : r.failures()) failed.push_back(c.name);
  return {{"checks", checks}, {"failures", failed}};
}

json to_json(const ExtractionTrace& t) {
  json tree = json::array();
  for (const Edge& e : t.spanning_tree) tree.push_back(json::array({e.first, e.second}));
  return {
      {"chosen_classes", json::array({t.chosen_classes.first, t.chosen_classes.second})},
      {"reduced_graph", to_graph6(t.reduced_graph)},
      {"reduced_vertices", t.reduced_vertices},
      {"n_prime", t.n_prime},
      {"branch_taken", to_string(t.branch_taken)},
      {"clique_edge", edge_json(t.clique_edge)},
      {"spanning_tree", tree},
      {"z", t.z ? json(*t.z) : json(nullptr)},
      {"star_neighbors", t.star_neighbors},
      {"xy", edge_json(t.xy)},
      {"lifted_from", t.lifted_from ? to_json(*t.lifted_from) : json(nullptr)},
      {"padding_added", t.padding_added},
      {"budget_exhausted_pairs", pairs_json(t.budget_exhausted_pairs)},
  };
}

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::KempeColoring: return "kempe-coloring";
    case CertificateKind::CliqueMinor: return "clique-minor";
    case CertificateKind::Lemma1: return "lemma1";
    case CertificateKind::Lemma2: return "lemma2";
    case CertificateKind::Extraction: return "extraction";
  }
  return "unknown";
}

CertificateKind certificate_kind_from_string(std::string_view name) {
  for (auto k : {CertificateKind::KempeColoring, CertificateKind::CliqueMinor, CertificateKind::Lemma1,
                 CertificateKind::Lemma2, CertificateKind::Extraction})
    if (to_string(k) == name) return k;
  bad("unknown certificate kind \"" + std::string(name) + "\"");
}

json to_json(const Certificate& c) {
  json out = {
      {"graph", c.graph},
      {"kind", to_string(c.kind)},
      {"payload", c.payload},
      {"tool_version", c.tool_version},
  };
  out["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  const json& g = field(j, "graph");
  const json& kind = field(j, "kind");
  if (!g.is_string() || !kind.is_string()) bad("graph and kind must be strings");
  c.graph = g.get<std::string>();
  c.kind = certificate_kind_from_string(kind.get<std::string>());
  c.payload = field(j, "payload");
  if (!c.payload.is_object()) bad("payload must be an object");
  if (j.contains("tool_version")) {
    if (!j["tool_version"].is_string()) bad("tool_version must be a string");
    c.tool_version = j["tool_version"].get<std::string>();
  }
  if (j.contains("seed") && !j["seed"].is_null()) {
    if (!j["seed"].is_number_unsigned()) bad("seed must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  return c;
}

Certificate kempe_certificate(const Graph& g, const Partition& p) {
  return make(g, CertificateKind::KempeColoring, {{"partition", to_json(p)}});
}

Certificate minor_certificate(const Graph& g, const MinorWitness& w) {
  return make(g, CertificateKind::CliqueMinor, {{"branch_sets", to_json(w)}, {"order", w.order()}});
}

Certificate lemma1_certificate(const Graph& g, const Partition& p) {
  return make(g, CertificateKind::Lemma1, {{"partition", to_json(p)}, {"report", to_json(check_lemma1(g, p))}});
}

Certificate lemma2_certificate(const Graph& g, const Partition& p) {
  check_lemma2(g, p);  // rejects non-Kempe input
  return make(g, CertificateKind::Lemma2,
              {{"partition", to_json(p)}, {"connectivity", vertex_connectivity(g)}, {"required", p.order() - 1}});
}

Certificate extraction_certificate(const Graph& g, int k, const UniqueExtraction& x) {
  return make(g, CertificateKind::Extraction,
              {{"k", k}, {"partition", to_json(x.coloring)}, {"witness", to_json(x.witness)}, {"trace", to_json(x.trace)}});
}

CertificateCheck verify_certificate(const Certificate& c) {
  const Graph g = from_graph6(c.graph);
  const json& payload = c.payload;
  switch (c.kind) {
    case CertificateKind::KempeColoring: {
      const Partition p = partition_from_json(field(payload, "partition"));
      try {
        const KempeReport r = verify_partition(g, p);
        if (!r.proper) return fail("class " + std::to_string(*r.failing_class) + " is not an anticlique");
        if (!r.kempe)
          return fail("classes " + std::to_string(r.failing_pair->first) + " and " +
                      std::to_string(r.failing_pair->second) + " induce a disconnected subgraph");
      } catch (const Error& e) {
        if (e.code() != Errc::NotAPartition) throw;
        return fail(e.what());
      }
      return {true, {}};
    }
    case CertificateKind::CliqueMinor: {
      const MinorWitness w = witness_from_json(field(payload, "branch_sets"));
      const json& order = field(payload, "order");
      if (!order.is_number_integer()) bad("order must be an integer");
      const MinorCheck mc = verify_clique_minor(g, w);
      if (!mc.ok()) return fail(mc.describe());
      if (order.get<int>() != w.order()) return fail("stated order differs from the number of branch sets");
      return {true, {}};
    }
    case CertificateKind::Lemma1: {
      const Partition p = partition_from_json(field(payload, "partition"));
      const json& claimed = field(payload, "report");
      Lemma1Report r;
      try {
        r = check_lemma1(g, p);
      } catch (const Error& e) {
        if (e.code() != Errc::NotKempe && e.code() != Errc::NotAPartition) throw;
        return fail(e.what());
      }
      if (to_json(r) != claimed) return fail("report does not match recomputation");
      if (!r.holds) return fail("edge bound violated");
      if (r.equality != r.all_pairs_trees) return fail("equality and tree condition disagree");
      return {true, {}};
    }
    case CertificateKind::Lemma2: {
      const Partition p = partition_from_json(field(payload, "partition"));
      bool holds = false;
      try {
        holds = check_lemma2(g, p);
      } catch (const Error& e) {
        if (e.code() != Errc::NotKempe && e.code() != Errc::NotAPartition) throw;
        return fail(e.what());
      }
      const int kappa = vertex_connectivity(g);
      if (field(payload, "connectivity") != kappa) return fail("stated connectivity does not match recomputation");
      if (field(payload, "required") != p.order() - 1) return fail("stated requirement does not match the partition");
      if (!holds) return fail("connectivity below order - 1");
      return {true, {}};
    }
    case CertificateKind::Extraction: return check_extraction(g, payload);
  }
  bad("unknown certificate kind");
}

}  // namespace kempe
