#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kempe/coloring.hpp"
#include "kempe/extractor.hpp"
#include "kempe/graph.hpp"
#include "kempe/minor.hpp"
#include "kempe/verifiers.hpp"

namespace kempe {

using json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Vertex sets as a JSON list of sorted index lists.
json sets_to_json(std::span<const VertexSet> sets);
json to_json(const Partition& p);
json to_json(const MinorWitness& w);

/// Inverse of the above. Throws Error{InvalidArgument} on anything that is not
/// a list of lists of indices in [0, 64), or on a repeated index inside a set.
/// Whether the sets fit a particular graph is left to the verifiers.
Partition partition_from_json(const json& j);
MinorWitness witness_from_json(const json& j);

json to_json(const KempeReport& r);
json to_json(const Lemma1Report& r);
json to_json(const MinorCheck& c);
json to_json(const ContradictionReport& r);
json to_json(const ExtractionTrace& t);

enum class CertificateKind { KempeColoring, CliqueMinor, Lemma1, Lemma2, Extraction };

std::string_view to_string(CertificateKind kind);
/// Throws Error{InvalidArgument} for unknown names.
CertificateKind certificate_kind_from_string(std::string_view name);

/// Self-contained claim about the embedded graph.
///   kempe-coloring: {"partition"}
///   clique-minor:   {"branch_sets", "order"}
///   lemma1:         {"partition", "report"}
///   lemma2:         {"partition", "connectivity", "required"}
///   extraction:     {"k", "partition", "witness", "trace"}
struct Certificate {
  std::string graph;  // graph6
  CertificateKind kind = CertificateKind::KempeColoring;
  json payload;
  std::string tool_version{kToolVersion};
  std::optional<std::uint64_t> seed;
};

json to_json(const Certificate& c);
/// Throws Error{InvalidArgument} on missing or mistyped fields.
Certificate certificate_from_json(const json& j);

Certificate kempe_certificate(const Graph& g, const Partition& p);
Certificate minor_certificate(const Graph& g, const MinorWitness& w);
Certificate lemma1_certificate(const Graph& g, const Partition& p);
Certificate lemma2_certificate(const Graph& g, const Partition& p);
Certificate extraction_certificate(const Graph& g, int k, const UniqueExtraction& x);

struct CertificateCheck {
  bool ok = false;
  std::string failure;  // empty when ok
};

/// Recomputes the claim from the embedded graph alone. Malformed
/// certificates (bad graph6, bad payload shape) throw Error; a well-formed
/// certificate whose claim does not hold gives ok = false with a reason.
CertificateCheck verify_certificate(const Certificate& c);

}  // namespace kempe
