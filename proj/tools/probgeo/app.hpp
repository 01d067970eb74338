#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "reports.hpp"

namespace probgeo::cli {

/// Validated invocation of one subcommand.
struct RunConfig {
    enum class Command { barycenter, moments, simulate, tails, copula };

    Command command = Command::barycenter;
    std::string input_path;  // empty when driven by --dist
    std::string dist_spec;   // empty when driven by --input
    std::string chart_spec = "empirical";
    std::vector<std::string> chart_specs;  // copula --charts
    bool intrinsic = false;                // copula --intrinsic
    std::size_t column = 0;
    std::vector<std::size_t> columns;  // copula --columns
    int order = 1;
    bool centred = false;
    bool absolute = false;
    std::string sim_kind = "clt";       // simulate positional: lln | clt
    std::vector<std::size_t> n_values;  // simulate --n (list = lln grid)
    std::size_t reps = 1;
    double epsilon = 0.1;
    std::vector<int> orders = {2, 4, 8};  // tails --orders
    std::uint64_t seed = 0;
    double tail_slope = 1.0;
    OutputFormat format = OutputFormat::text;
    std::string replicate_csv_path;  // simulate --csv
};

/// argv -> validated RunConfig. Throws UsageError with the offending flag
/// named in the message.
[[nodiscard]] RunConfig parse_args(const std::vector<std::string>& args);

/// Runs one validated invocation, writing the report to `out`.
void execute(const RunConfig& config, std::ostream& out);

/// Full front end: parse, execute, map errors to exit codes
/// (0 success, 1 computation/input error, 2 usage error).
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream& err);

}  // namespace probgeo::cli
