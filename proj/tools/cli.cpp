#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kempe/codec.hpp"
#include "kempe/coloring.hpp"
#include "kempe/connectivity.hpp"
#include "kempe/extractor.hpp"
#include "kempe/generators.hpp"
#include "kempe/minor.hpp"
#include "kempe/serialize.hpp"
#include "kempe/verifiers.hpp"

namespace kempe::cli {

namespace {

struct Flags {
  std::string format = "graph6";
  std::string output;
  std::string input = "-";
  long long timeout_ms = 60'000;
  long long node_limit = 100'000'000;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

bool malformed_code(Errc c) {
  switch (c) {
    case Errc::IndexOutOfRange:
    case Errc::LoopEdge:
    case Errc::TooLarge:
    case Errc::TooSmall:
    case Errc::MalformedGraph6:
    case Errc::MalformedEdgeList:
    case Errc::EmptyPart:
    case Errc::NoKClique:
    case Errc::OrderTooHigh:
    case Errc::InvalidArgument: return true;
    default: return false;
  }
}

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::InvalidArgument, "cannot read " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

Graph read_graph(const Flags& f, std::istream& in) {
  const std::string text = slurp(f.input, in);
  if (f.format == "edgelist") return from_edge_list(text);
  std::string line = text.substr(0, text.find('\n'));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return from_graph6(line);
}

std::string write_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? to_edge_list(g) : to_graph6(g) + "\n";
}

SearchBudget budget_of(const Flags& f) {
  SearchBudget b;
  b.node_limit = f.node_limit;
  b.time_limit = std::chrono::milliseconds(f.timeout_ms);
  return b;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidArgument, std::string(what) + " is not valid JSON: " + e.what());
  }
}

std::string pair_text(std::pair<int, int> p) {
  return std::to_string(p.first) + " and " + std::to_string(p.second);
}

std::string kind_name(UniqueColoring::Kind k) {
  switch (k) {
    case UniqueColoring::Kind::Unique: return "Unique";
    case UniqueColoring::Kind::Multiple: return "Multiple";
    case UniqueColoring::Kind::None: return "None";
  }
  return "?";
}

void with_seed(Certificate& c, const Flags& f) {
  if (f.seed_given) c.seed = f.seed;
}

enum class What { Coloring, Kempe, Lemma1, Lemma2, Minor, Certificate };

int cmd_check(What what, const std::string& arg, const Flags& f, std::istream& in, json& report) {
  if (what == What::Certificate) {
    const Certificate c = certificate_from_json(parse_json(slurp(arg, in), "certificate"));
    const CertificateCheck r = verify_certificate(c);
    report = {{"check", "certificate"}, {"kind", to_string(c.kind)}, {"graph", c.graph}, {"verified", r.ok}};
    if (!r.ok) report["failure"] = r.failure;
    return r.ok ? kVerified : kFalse;
  }

  const Graph g = read_graph(f, in);
  const json sets = parse_json(arg, "argument");
  report = {{"graph", to_graph6(g)}};
  std::optional<Certificate> cert;
  std::string failure;

  if (what == What::Minor) {
    const MinorWitness w = witness_from_json(sets);
    const MinorCheck c = verify_clique_minor(g, w);
    report["check"] = "minor";
    report["order"] = w.order();
    report["report"] = to_json(c);
    if (c.ok()) cert = minor_certificate(g, w);
    else failure = c.describe();
  } else {
    const Partition p = partition_from_json(sets);
    try {
      switch (what) {
        case What::Coloring:
        case What::Kempe: {
          const KempeReport r = verify_partition(g, p);
          report["check"] = what == What::Kempe ? "kempe" : "coloring";
          report["report"] = to_json(r);
          if (!r.proper) failure = "class " + std::to_string(*r.failing_class) + " is not an anticlique";
          else if (what == What::Kempe && !r.kempe)
            failure = "classes " + pair_text(*r.failing_pair) + " induce a disconnected subgraph";
          else if (what == What::Kempe) cert = kempe_certificate(g, p);
          break;
        }
        case What::Lemma1: {
          report["check"] = "lemma1";
          const Lemma1Report r = check_lemma1(g, p);
          report["report"] = to_json(r);
          if (!r.holds) failure = "edge bound violated";
          else if (r.equality != r.all_pairs_trees) failure = "equality and tree condition disagree";
          else cert = lemma1_certificate(g, p);
          break;
        }
        case What::Lemma2: {
          report["check"] = "lemma2";
          const bool holds = check_lemma2(g, p);
          report["connectivity"] = vertex_connectivity(g);
          report["required"] = p.order() - 1;
          if (!holds) failure = "connectivity below order - 1";
          else cert = lemma2_certificate(g, p);
          break;
        }
        default: break;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::NotAPartition && e.code() != Errc::NotKempe) throw;
      failure = e.what();
    }
  }

  report["verified"] = failure.empty();
  if (!failure.empty()) {
    report["failure"] = failure;
    return kFalse;
  }
  if (cert) {
    with_seed(*cert, f);
    report["certificate"] = to_json(*cert);
  }
  return kVerified;
}

int cmd_extract(int k, const Flags& f, std::istream& in, json& report, std::ostream& err) {
  if (k < 1 || k > kTargetOrder) throw Error(Errc::InvalidArgument, "k must lie in 1..10");
  const Graph g = read_graph(f, in);
  const UniqueColoring u = unique_coloring(g, k);
  if (u.kind != UniqueColoring::Kind::Unique) {
    report = {{"status", "not-unique"}, {"coloring", kind_name(u.kind)}, {"k", k}, {"graph", to_graph6(g)}};
    return kFalse;
  }
  try {
    const UniqueExtraction x = extract_unique(g, k, budget_of(f));
    Certificate c = extraction_certificate(g, k, x);
    with_seed(c, f);
    report = to_json(c);
    return kVerified;
  } catch (const ExtractionError& e) {
    report = {{"status", e.code() == Errc::BudgetExceeded ? "budget-exceeded" : "exceptional-contradiction"},
              {"k", k},
              {"graph", to_graph6(g)},
              {"trace", to_json(e.trace())}};
    if (e.report()) report["diagnostics"] = to_json(*e.report());
    err << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kBudget : kFalse;
  } catch (const Error& e) {
    if (e.code() != Errc::WrongOrder && e.code() != Errc::NotKempe) throw;
    report = {{"status", "wrong-order"}, {"k", k}, {"graph", to_graph6(g)}, {"message", e.what()}};
    return kFalse;
  }
}

void emit(const std::string& body, const Flags& f, std::ostream& out) {
  if (f.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(f.output, std::ios::binary);
  if (!file) throw Error(Errc::InvalidArgument, "cannot write " + f.output);
  file << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kempe-colorings, unique colorings and clique minors with checkable certificates", "kempe"};
  app.fallthrough();
  app.require_subcommand(1);

  Flags f;
  app.add_option("--format", f.format, "Graph format")->check(CLI::IsMember({"graph6", "edgelist"}));
  app.add_option("--output", f.output, "Write stdout output to FILE");
  app.add_option("--timeout-ms", f.timeout_ms, "Search time limit")->check(CLI::PositiveNumber);
  app.add_option("--node-limit", f.node_limit, "Search node limit")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", f.seed, "Random seed");

  auto* check = app.add_subcommand("check", "Verify a property of a graph");
  check->add_option("input", f.input, "Graph file, - for stdin");
  std::string coloring, kempe, lemma1, lemma2, minor, certificate;
  auto* group = check->add_option_group("property");
  group->add_option("--coloring", coloring, "Proper coloring, e.g. [[0,2],[1]]");
  group->add_option("--kempe", kempe, "Kempe-coloring");
  group->add_option("--lemma1", lemma1, "Edge bound for a Kempe-coloring");
  group->add_option("--lemma2", lemma2, "Connectivity bound for a Kempe-coloring");
  group->add_option("--minor", minor, "Clique minor branch sets");
  group->add_option("--certificate", certificate, "Certificate file, - for stdin");
  group->require_option(1);

  auto* extract = app.add_subcommand("extract", "Clique minor of order k from the unique k-coloring");
  extract->add_option("input", f.input, "Graph file, - for stdin");
  int k = 0;
  extract->add_option("-k", k, "Number of colors")->required();

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->require_subcommand(1);
  std::vector<int> parts;
  int gen_k = 0, copies = 1, extra = 0;
  auto* multipartite = gen->add_subcommand("multipartite", "Complete multipartite graph");
  multipartite->add_option("parts", parts, "Part sizes, e.g. 2,2,2,3,3")->required()->delimiter(',');
  auto* cockade = gen->add_subcommand("cockade", "Cockade over a complete multipartite graph");
  cockade->add_option("parts", parts, "Part sizes of the base graph")->required()->delimiter(',');
  cockade->add_option("--k", gen_k, "Size of the glue clique")->required();
  cockade->add_option("--copies", copies, "Number of copies");
  auto* unique = gen->add_subcommand("unique", "Uniquely k-colorable graph");
  auto* padded = gen->add_subcommand("padded", "Uniquely k-colorable graph padded to ten classes");
  for (auto* sub : {unique, padded}) {
    sub->add_option("--k", gen_k, "Number of colors")->required();
    sub->add_option("--extra", extra, "Added vertices");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kVerified : kMalformed;
  }
  f.seed_given = seed_opt->count() > 0;

  std::ostringstream body;
  int code = kVerified;
  try {
    json report;
    if (check->parsed()) {
      std::pair<What, const std::string*> chosen{What::Certificate, &certificate};
      if (group->get_option("--coloring")->count()) chosen = {What::Coloring, &coloring};
      if (group->get_option("--kempe")->count()) chosen = {What::Kempe, &kempe};
      if (group->get_option("--lemma1")->count()) chosen = {What::Lemma1, &lemma1};
      if (group->get_option("--lemma2")->count()) chosen = {What::Lemma2, &lemma2};
      if (group->get_option("--minor")->count()) chosen = {What::Minor, &minor};
      code = cmd_check(chosen.first, *chosen.second, f, in, report);
      body << report.dump(2) << '\n';
    } else if (extract->parsed()) {
      code = cmd_extract(k, f, in, report, err);
      body << report.dump(2) << '\n';
    } else if (multipartite->parsed()) {
      const Graph g = complete_multipartite(parts);
      std::vector<VertexSet> classes;
      int next = 0;
      for (int size : parts) {
        classes.push_back(VertexSet::range(next + size) - VertexSet::range(next));
        next += size;
      }
      body << write_graph(g, f.format) << to_json(Partition(classes)).dump() << '\n';
    } else if (cockade->parsed()) {
      body << write_graph(build_cockade(parts, gen_k, copies), f.format);
    } else if (unique->parsed() || padded->parsed()) {
      const ColoredGraph c = generate_uniquely_colorable(gen_k, extra, f.seed);
      if (unique->parsed()) {
        body << write_graph(c.graph, f.format) << to_json(c.partition).dump() << '\n';
      } else {
        const PaddedColoring p = pad_to_ten(c.graph, c.partition);
        body << write_graph(p.graph, f.format) << to_json(p.partition).dump() << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (!malformed_code(e.code())) err << "(unexpected error code)\n";
    return kMalformed;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }

  try {
    emit(body.str(), f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }
  return code;
}

}  // namespace kempe::cli
