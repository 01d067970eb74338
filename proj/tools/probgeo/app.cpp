#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "cli_errors.hpp"
#include "csv.hpp"
#include "probgeo/probgeo.hpp"
#include "specs.hpp"

namespace probgeo::cli {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

struct ResolvedInput {
    std::optional<Sample> sample;
    std::optional<Distribution> dist;
};

/// Splits a comma-joined chart list ("normal:0,1,cauchy:5,2,empirical")
/// into specs. A token opens a new spec when it names a family (contains
/// ':') or is a self-generated-chart keyword; bare numeric tokens continue
/// the parameter list of the spec before them.
std::vector<std::string> split_chart_list(const std::string& list) {
    std::vector<std::string> specs;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string token =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.find(':') != std::string::npos || is_self_chart_spec(token) ||
            specs.empty()) {
            specs.push_back(token);
        } else {
            specs.back() += "," + token;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return specs;
}

ResolvedInput resolve_input(const RunConfig& config, bool allow_dist, bool allow_input) {
    require(!(config.input_path.empty() && config.dist_spec.empty()),
            "exactly one of --input/--dist is required");
    require(config.input_path.empty() || config.dist_spec.empty(),
            "--input and --dist are mutually exclusive");
    ResolvedInput resolved;
    if (!config.input_path.empty()) {
        require(allow_input, "--input is not accepted by this subcommand");
        resolved.sample = ingest_csv(config.input_path, config.column);
    } else {
        require(allow_dist, "--dist is not accepted by this subcommand");
        resolved.dist = parse_distribution_spec(config.dist_spec);
    }
    return resolved;
}

/// Chart named by --chart. Self-generated specs resolve against the data
/// (empirical chart) or against --dist (that law's own chart).
Chart resolve_chart(const RunConfig& config, const ResolvedInput& input) {
    if (is_self_chart_spec(config.chart_spec)) {
        if (input.sample) return chart_from_sample(*input.sample, config.tail_slope);
        if (input.dist) return chart_from_distribution(*input.dist);
        throw UsageError("--chart " + config.chart_spec + " requires --input or --dist");
    }
    return chart_from_distribution(parse_distribution_spec(config.chart_spec));
}

void run_barycenter(const RunConfig& config, std::ostream& out) {
    const ResolvedInput input = resolve_input(config, true, true);
    const Chart chart = resolve_chart(config, input);
    const BarycenterReport report = input.sample
                                        ? barycenter_of_sample(*input.sample, chart)
                                        : barycenter_of_distribution(*input.dist, chart);
    emit_report(report, config.format, out);
}

void run_moments(const RunConfig& config, std::ostream& out) {
    require(!(config.centred && config.absolute), "--centred and --absolute are exclusive");
    const ResolvedInput input = resolve_input(config, true, true);
    const Chart chart = resolve_chart(config, input);
    MomentReport report;
    if (input.sample) {
        report = config.absolute ? absolute_centred_moment(*input.sample, chart, config.order)
                 : config.centred ? centred_moment(*input.sample, chart, config.order)
                                  : initial_moment(*input.sample, chart, config.order);
    } else {
        report = config.absolute ? absolute_centred_moment(*input.dist, chart, config.order)
                 : config.centred ? centred_moment(*input.dist, chart, config.order)
                                  : initial_moment(*input.dist, chart, config.order);
    }
    emit_report(report, chart.description(), config.format, out);
}

void run_simulate(const RunConfig& config, std::ostream& out) {
    const ResolvedInput input = resolve_input(config, true, false);
    require(!is_self_chart_spec(config.chart_spec) || config.chart_spec == "intrinsic",
            "--chart empirical needs data; use intrinsic or an analytic chart");
    const Chart chart = resolve_chart(config, input);
    require(!config.n_values.empty(), "--n is required");

    SimulationReport report;
    if (config.sim_kind == "lln") {
        report = run_lln_experiment(*input.dist, chart, config.n_values, config.seed);
    } else if (config.sim_kind == "clt") {
        require(config.n_values.size() == 1, "clt expects a single --n value");
        report = run_clt_experiment(*input.dist, chart, config.n_values.front(), config.reps,
                                    config.seed);
    } else {
        throw UsageError("simulate: expected lln or clt, got '" + config.sim_kind + "'");
    }

    if (!config.replicate_csv_path.empty()) {
        std::ofstream csv_out(config.replicate_csv_path);
        if (!csv_out) throw IoError("cannot open '" + config.replicate_csv_path + "'");
        write_replicate_csv(report, csv_out);
    }
    emit_report(report, config.format, out);
}

void run_tails(const RunConfig& config, std::ostream& out) {
    const ResolvedInput input = resolve_input(config, true, true);
    const Chart chart = resolve_chart(config, input);
    const BoundaryReport report =
        input.sample ? boundary_report(*input.sample, chart, config.epsilon, config.orders)
                     : boundary_report(*input.dist, chart, config.epsilon, config.orders);
    emit_report(report, config.format, out);
}

void run_copula(const RunConfig& config, std::ostream& out) {
    require(!config.input_path.empty(), "copula requires --input");
    require(config.columns.size() >= 2, "copula requires at least two --columns");
    const VectorSample vs = ingest_csv_columns(config.input_path, config.columns);

    Matrix coords;
    CubeReport report;
    std::vector<std::string> chart_names;
    if (config.intrinsic || config.chart_specs.empty()) {
        // rank-based coordinates; the coordinate means are the exact rank
        // means and the pullback is the identity on the pseudo-observations
        coords = pseudo_observations(vs);
        chart_names.assign(vs.dimension(), "pseudo-observations");
        report.n = vs.size();
        for (std::size_t c = 0; c < coords.cols; ++c) {
            CompensatedSum acc;
            for (std::size_t r = 0; r < coords.rows; ++r) acc.add(coords(r, c));
            const double mean = acc.value() / static_cast<double>(coords.rows);
            report.coordinate_mean.push_back(mean);
            // margin-i representative: empirical quantile of the rank mean
            std::vector<double> column;
            column.reserve(coords.rows);
            for (std::size_t r = 0; r < vs.size(); ++r) column.push_back(vs.values(r, c));
            report.barycenter.push_back(
                chart_from_sample(column, config.tail_slope).inverse(mean));
        }
    } else {
        require(config.chart_specs.size() == vs.dimension(),
                "--charts must list one chart per selected column");
        ChartBundle bundle;
        for (std::size_t c = 0; c < config.chart_specs.size(); ++c) {
            const std::string& spec = config.chart_specs[c];
            if (is_self_chart_spec(spec)) {
                std::vector<double> column;
                column.reserve(vs.size());
                for (std::size_t r = 0; r < vs.size(); ++r) column.push_back(vs.values(r, c));
                bundle.push_back(chart_from_sample(column, config.tail_slope));
            } else {
                bundle.push_back(chart_from_distribution(parse_distribution_spec(spec)));
            }
            chart_names.push_back(bundle.back().description());
        }
        coords = pushforward(vs, bundle);
        report = multivariate_barycenter(vs, bundle);
    }
    report.corner_masses = all_corner_masses(coords, config.epsilon);
    emit_copula_report(report, config.epsilon, chart_names, config.format, out);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig config;
    std::string format_name = "text";
    bool json_flag = false;

    CLI::App app{"probability-coordinate geometry toolkit"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--chart", config.chart_spec,
                        "chart spec: normal:m,s | logistic:m,s | cauchy:x0,g | uniform:a,b | "
                        "studentt:nu | pareto:xm,a | exponential:l | empirical | intrinsic");
        cmd->add_option("--seed", config.seed, "deterministic seed (default 0)");
        cmd->add_option("--tail-slope", config.tail_slope,
                        "empirical chart tail slope (default 1)");
        cmd->add_option("--format", format_name, "json | csv | text (default text)");
        cmd->add_flag("--json", json_flag, "shorthand for --format json");
    };

    auto* barycenter = app.add_subcommand("barycenter", "probability barycenter of a sample");
    barycenter->add_option("--input", config.input_path, "CSV input path");
    barycenter->add_option("--column", config.column, "0-based CSV column (default 0)");
    barycenter->add_option("--dist", config.dist_spec, "distribution spec instead of data");
    add_common(barycenter);
    barycenter->callback([&] { config.command = RunConfig::Command::barycenter; });

    auto* moments = app.add_subcommand("moments", "Kolmogorov moments in chart coordinates");
    moments->add_option("--input", config.input_path, "CSV input path");
    moments->add_option("--column", config.column, "0-based CSV column (default 0)");
    moments->add_option("--dist", config.dist_spec, "distribution spec instead of data");
    moments->add_option("--order", config.order, "moment order r >= 1")->required();
    moments->add_flag("--centred", config.centred, "centred moment");
    moments->add_flag("--absolute", config.absolute, "absolute centred moment");
    add_common(moments);
    moments->callback([&] { config.command = RunConfig::Command::moments; });

    auto* simulate = app.add_subcommand("simulate", "LLN/CLT verification experiments");
    simulate->add_option("kind", config.sim_kind, "lln | clt")->required();
    simulate->add_option("--dist", config.dist_spec, "data-generating distribution")
        ->required();
    simulate
        ->add_option("--n", config.n_values,
                     "sample size (clt) or increasing grid of sizes (lln)")
        ->required()
        ->delimiter(',');
    simulate->add_option("--reps", config.reps, "replicates (clt)");
    simulate->add_option("--csv", config.replicate_csv_path, "write per-replicate CSV here");
    add_common(simulate);
    simulate->callback([&] { config.command = RunConfig::Command::simulate; });

    auto* tails = app.add_subcommand("tails", "boundary-concentration diagnostics");
    tails->add_option("--input", config.input_path, "CSV input path");
    tails->add_option("--column", config.column, "0-based CSV column (default 0)");
    tails->add_option("--dist", config.dist_spec, "distribution spec instead of data");
    tails->add_option("--epsilon", config.epsilon, "boundary band width in (0, 1/2)");
    tails->add_option("--orders", config.orders, "moment orders, e.g. 2,4,8")->delimiter(',');
    add_common(tails);
    tails->callback([&] { config.command = RunConfig::Command::tails; });

    auto* copula = app.add_subcommand("copula", "multivariate copula coordinates");
    copula->add_option("--input", config.input_path, "CSV input path")->required();
    copula->add_option("--columns", config.columns, "0-based CSV columns, e.g. 0,1")
        ->required()
        ->delimiter(',');
    std::string chart_list;
    copula->add_option("--charts", chart_list,
                       "comma-joined chart specs, one per column "
                       "(default: pseudo-observations)");
    copula->add_flag("--intrinsic", config.intrinsic,
                     "rank-based pseudo-observation coordinates");
    copula->add_option("--epsilon", config.epsilon, "corner band width in (0, 1/2)");
    copula->add_option("--seed", config.seed, "deterministic seed (default 0)");
    copula->add_option("--tail-slope", config.tail_slope,
                       "empirical chart tail slope (default 1)");
    copula->add_option("--format", format_name, "json | csv | text (default text)");
    copula->add_flag("--json", json_flag, "shorthand for --format json");
    copula->callback([&] { config.command = RunConfig::Command::copula; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (!chart_list.empty()) config.chart_specs = split_chart_list(chart_list);
    config.format = json_flag ? OutputFormat::json : parse_format(format_name);
    return config;
}

void execute(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
        case RunConfig::Command::barycenter: run_barycenter(config, out); break;
        case RunConfig::Command::moments: run_moments(config, out); break;
        case RunConfig::Command::simulate: run_simulate(config, out); break;
        case RunConfig::Command::tails: run_tails(config, out); break;
        case RunConfig::Command::copula: run_copula(config, out); break;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig config = parse_args(args);
        execute(config, out);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParameter& e) {
        // bad parameters reaching us through flag values are usage errors
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace probgeo::cli
