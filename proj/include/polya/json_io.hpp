#pragma once

#include "polya/algebra.hpp"
#include "polya/analysis.hpp"
#include "polya/graph.hpp"
#include "polya/intensity.hpp"
#include "polya/laws.hpp"
#include "polya/matrix.hpp"
#include "polya/simulator.hpp"
#include "polya/spectra.hpp"
#include "polya/urn.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>

namespace polya {

using Json = nlohmann::ordered_json;

/// An urn file: the urn plus, for composed products, the two factors.
struct UrnDocument {
  PolyaUrn urn;
  std::optional<std::pair<PolyaUrn, PolyaUrn>> factors;
};

/// {"colours": [...], "activities": ["p/q"...], "initial": [...],
///  "replacements": [[{"prob": "p/q", "delta": {"<colour>": int}}...]...]}
Json urn_to_json(const PolyaUrn& urn);
/// Throws Error(Parse) for malformed documents and the urn_core errors for
/// invalid data; messages name the colour and atom index.
PolyaUrn urn_from_json(const Json& doc);

Json document_to_json(const UrnDocument& doc);
UrnDocument document_from_json(const Json& doc);
UrnDocument read_urn_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

/// FNV-1a over the compact urn serialisation, as 16 hex digits.
std::string urn_hash(const PolyaUrn& urn);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& doc);
Json witness_to_json(const PermutationWitness& w);
Json bijection_to_json(const ColourBijection& b);
Json spectrum_to_json(const SpectrumMultiset& m);
SpectrumMultiset spectrum_from_json(const Json& doc, double tol = kDefaultSpectrumTol);
Json partition_to_json(const DominancePartition& p);
Json assumptions_to_json(const AssumptionReport& r);
Json limit_to_json(const LimitPrediction& p);
Json law_report_to_json(const LawReport& r);

/// {"vertices": n, "edges": [[i, j], ...]}
Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& doc);

/// JSON lines: a metadata header {"seed", "stream", "rng", "urn_hash",
/// "stride"} followed by one {"step": n, "counts": [...]} per snapshot.
std::string trace_to_jsonl(const SimulationTrace& trace, const std::string& urn_hash);

}  // namespace polya
