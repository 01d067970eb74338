#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "probgeo/asymptotics.hpp"
#include "probgeo/barycenter.hpp"
#include "probgeo/moments.hpp"
#include "probgeo/multivariate.hpp"
#include "probgeo/tails.hpp"

namespace probgeo::cli {

enum class OutputFormat { json, csv, text };

[[nodiscard]] OutputFormat parse_format(const std::string& name);

/// %.17g rendering used for every float in every emitted report, so a
/// given report serializes to identical bytes on every run.
[[nodiscard]] std::string format_double(double v);

void emit_report(const BarycenterReport& report, OutputFormat format, std::ostream& out);
void emit_report(const MomentReport& report, const std::string& chart, OutputFormat format,
                 std::ostream& out);
void emit_report(const SimulationReport& report, OutputFormat format, std::ostream& out);
void emit_report(const BoundaryReport& report, OutputFormat format, std::ostream& out);
void emit_copula_report(const CubeReport& report, double epsilon,
                        const std::vector<std::string>& charts, OutputFormat format,
                        std::ostream& out);

/// The per-replicate table behind `simulate --csv`.
void write_replicate_csv(const SimulationReport& report, std::ostream& out);

}  // namespace probgeo::cli
