#pragma once

#include <json.hpp>

#include "bilin/cuts.hpp"
#include "bilin/envelopes.hpp"
#include "bilin/hull_check.hpp"
#include "bilin/instances.hpp"

namespace bilin {

using Json = nlohmann::ordered_json;

/// Vertex array, ascending.
Json to_json(VertexSubset s);

/// {"point", "mcu", "mcl", "cav", "vex", "mcgap", "chgap", "ratio",
///  "ratio_infinite", "degenerate", "method"}; ratio is null when infinite.
Json to_json(const GapReport& report);

/// {"side", "weight", "bound", "meets_guarantee", "trials_used", "case",
///  "sampling_succeeded"}.
Json to_json(const CutSearchResult& result);

/// {"exact", "positive_coloring", "negative_coloring", "violating_cycle",
///  "cycle_positive_edges", "cycle_negative_edges"}; colorings are
/// vertex -> 0/1 maps keyed by the decimal vertex label.
Json to_json(const HullExactness& h);

/// {"mu_plus", "max_witness", "mu_minus", "min_witness", "ground_set"}.
Json to_json(const CutExtremes& ext);

Json to_json(const DualCertificate& cert);

/// {"family", "n", "seed", "signs"} (+ "path" for custom_file); absent
/// optional fields are omitted.
Json to_json(const InstanceSpec& spec);
InstanceSpec instance_spec_from_json(const nlohmann::json& j);

}  // namespace bilin
