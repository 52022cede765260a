#pragma once

#include "subthresh/census.hpp"
#include "subthresh/families.hpp"
#include "subthresh/mc.hpp"
#include "subthresh/spread.hpp"
#include "subthresh/thresholds.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace subthresh {

using Json = nlohmann::ordered_json;

/// "%.17g"; non-finite values become "null" in JSON and "NA" in CSV callers.
std::string format_double(double v);

/// Deterministic serialisation: insertion-ordered keys, doubles with 17
/// significant digits, no whitespace.
std::string dump_json(const Json& value);

Json census_json(std::span<const SubgraphClass> census);
Json threshold_json(const ThresholdReport& report);
Json certificate_json(const SpreadCertificate& cert);
Json estimate_json(const PcEstimate& est);
Json family_thresholds_json(const FamilyThresholds& t);
Json scaling_json(std::span<const ScalingRow> rows);
Json edge_list_json(const Graph& g);

} // namespace subthresh
