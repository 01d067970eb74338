#pragma once

#include <string>

#include "probgeo/distribution.hpp"

namespace probgeo::cli {

/// Parses "family:param1[,param2]" specs, e.g. "normal:0,1", "pareto:1,2.5",
/// "studentt:4". Throws UsageError for unknown families or malformed
/// parameter lists, InvalidParameter for constraint violations.
[[nodiscard]] Distribution parse_distribution_spec(const std::string& spec);

/// True for the chart specs that are built from the data/distribution at
/// hand rather than from a parametric family.
[[nodiscard]] bool is_self_chart_spec(const std::string& spec);

}  // namespace probgeo::cli
