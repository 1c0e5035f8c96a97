#pragma once

#include <json.hpp>

#include "hyperchroma/coloring/coloring.hpp"
#include "hyperchroma/coloring/pipeline.hpp"
#include "hyperchroma/core/hypergraph.hpp"
#include "hyperchroma/core/line_graph.hpp"
#include "hyperchroma/instances/generators.hpp"

namespace hyperchroma {

// JSON views of the library's reports. Field names are the schema documented
// in docs/formats.md; keep them in sync.

nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const ColoringFailure& failure);
nlohmann::ordered_json to_json(const PipelineReport& report);
nlohmann::ordered_json to_json(const LowerBoundCertificate& certificate);

/// Flattens a JSON tree into `key=value` lines, nested keys joined with '.'.
std::string to_key_values(const nlohmann::ordered_json& tree);

} // namespace hyperchroma
