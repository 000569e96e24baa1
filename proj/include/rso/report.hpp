#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rso/bounds.hpp"
#include "rso/exposure.hpp"
#include "rso/generators.hpp"
#include "rso/graph.hpp"
#include "rso/orientation.hpp"
#include "rso/sieve.hpp"
#include "rso/spectral.hpp"

namespace rso {

using Json = nlohmann::ordered_json;

/// Bumped whenever a JSON key is added, removed or renamed.
constexpr std::string_view report_schema_version() noexcept { return "1.0.0"; }

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t v);

/// Where the analysed graph came from. Exactly one of file / generator.
struct GraphProvenance {
  std::string kind;  // "file", "generator" or "none"
  std::string path;
  std::uint64_t file_hash = 0;
  GenSpec spec;
  std::string regular_method;  // random regular sampling only
  std::size_t attempts = 0;
};

Json to_json(const GraphProvenance& p);
Json to_json(const GenSpec& s);
Json to_json(const CheegerReport& r, const Graph& g);
Json to_json(const SpectrumReport& r);
Json to_json(const OrientationCensus& c);
Json to_json(const MCEstimate& e);
Json to_json(const SinkStatistics& s);
Json to_json(const HypothesisReport& h);
Json to_json(const Regime2Chain& c);
Json to_json(const BoundTable& t);
Json to_json(const ExposureSequence& s);
Json to_json(const LemmaCheck& l);
Json to_json(const SieveReport& r);
Json to_json(const Example1Result& r);

/// Exact rational as "num/den" (or "num" for integers).
std::string rational_string(const BigRational& r);

/// Header common to every report: schema_version, command, graph_provenance.
Json report_header(std::string_view command, const GraphProvenance& p);

std::string bounds_table_csv(const BoundTable& t);

}  // namespace rso
