#include "reports.hpp"

#include <cstdio>
#include <iomanip>

#include "cli_errors.hpp"

namespace probgeo::cli {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return '"' + json_escape(s) + '"'; }

std::string json_array(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out + "]";
}

std::string json_array(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string json_array(const std::vector<std::size_t>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "]";
}

const char* bool_name(bool b) { return b ? "true" : "false"; }

void text_row(std::ostream& out, const std::string& key, const std::string& value) {
    out << std::left << std::setw(24) << key << value << '\n';
}

std::string summarize(const std::vector<double>& values) {
    return "[" + std::to_string(values.size()) + " values]";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "text") return OutputFormat::text;
    throw UsageError("--format: expected json, csv or text, got '" + name + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_report(const BarycenterReport& report, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json:
            out << "{\"coordinate_mean\":" << format_double(report.coordinate_mean)
                << ",\"barycenter\":" << format_double(report.barycenter)
                << ",\"n\":" << report.n
                << ",\"boundary_flag\":" << bool_name(report.boundary_flag);
            if (report.boundary_flag) out << ",\"warning\":" << quoted(report.warning);
            out << ",\"chart\":" << quoted(report.chart) << "}\n";
            break;
        case OutputFormat::csv:
            out << "coordinate_mean,barycenter,n,boundary_flag,chart\n"
                << format_double(report.coordinate_mean) << ','
                << format_double(report.barycenter) << ',' << report.n << ','
                << bool_name(report.boundary_flag) << ',' << report.chart << '\n';
            break;
        case OutputFormat::text:
            text_row(out, "coordinate_mean", format_double(report.coordinate_mean));
            text_row(out, "barycenter", format_double(report.barycenter));
            text_row(out, "n", std::to_string(report.n));
            text_row(out, "boundary_flag", bool_name(report.boundary_flag));
            if (report.boundary_flag) text_row(out, "warning", report.warning);
            text_row(out, "chart", report.chart);
            break;
    }
}

void emit_report(const MomentReport& report, const std::string& chart, OutputFormat format,
                 std::ostream& out) {
    const std::string pulled =
        report.defined ? format_double(*report.pulled_back) : std::string("null");
    switch (format) {
        case OutputFormat::json:
            out << "{\"order\":" << report.order
                << ",\"raw_coordinate_moment\":" << format_double(report.raw_coordinate_moment)
                << ",\"pulled_back\":" << pulled
                << ",\"centred\":" << bool_name(report.centred)
                << ",\"absolute\":" << bool_name(report.absolute)
                << ",\"defined\":" << bool_name(report.defined)
                << ",\"chart\":" << quoted(chart) << "}\n";
            break;
        case OutputFormat::csv:
            out << "order,raw_coordinate_moment,pulled_back,centred,absolute,defined,chart\n"
                << report.order << ',' << format_double(report.raw_coordinate_moment) << ','
                << pulled << ',' << bool_name(report.centred) << ','
                << bool_name(report.absolute) << ',' << bool_name(report.defined) << ','
                << chart << '\n';
            break;
        case OutputFormat::text:
            text_row(out, "order", std::to_string(report.order));
            text_row(out, "raw_coordinate_moment",
                     format_double(report.raw_coordinate_moment));
            text_row(out, "pulled_back", pulled);
            text_row(out, "centred", bool_name(report.centred));
            text_row(out, "absolute", bool_name(report.absolute));
            text_row(out, "defined", bool_name(report.defined));
            text_row(out, "chart", chart);
            break;
    }
}

void emit_report(const SimulationReport& report, OutputFormat format, std::ostream& out) {
    const bool lln = report.mode == SimulationReport::Mode::lln;
    const std::string empirical_variance = report.empirical_variance_defined
                                               ? format_double(report.empirical_variance)
                                               : std::string("null");
    switch (format) {
        case OutputFormat::json:
            out << "{\"mode\":" << quoted(lln ? "lln" : "clt") << ",\"seed\":" << report.seed
                << ",\"reps\":" << report.reps << ",\"n\":" << report.n;
            if (lln) out << ",\"n_grid\":" << json_array(report.n_grid);
            out << ",\"target\":" << format_double(report.target)
                << ",\"target_variance\":" << format_double(report.target_variance)
                << ",\"empirical_variance\":" << empirical_variance
                << ",\"estimates\":" << json_array(report.estimates)
                << ",\"scaled_errors\":" << json_array(report.scaled_errors) << "}\n";
            break;
        case OutputFormat::csv:
            write_replicate_csv(report, out);
            break;
        case OutputFormat::text:
            text_row(out, "mode", lln ? "lln" : "clt");
            text_row(out, "seed", std::to_string(report.seed));
            text_row(out, "reps", std::to_string(report.reps));
            text_row(out, "n", std::to_string(report.n));
            text_row(out, "target", format_double(report.target));
            text_row(out, "target_variance", format_double(report.target_variance));
            text_row(out, "empirical_variance", empirical_variance);
            text_row(out, "estimates", summarize(report.estimates));
            text_row(out, "scaled_errors", summarize(report.scaled_errors));
            break;
    }
}

void emit_report(const BoundaryReport& report, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json:
            out << "{\"epsilon\":" << format_double(report.epsilon)
                << ",\"lower_mass\":" << format_double(report.lower_mass)
                << ",\"upper_mass\":" << format_double(report.upper_mass)
                << ",\"orders\":" << json_array(report.orders)
                << ",\"coordinate_moments\":" << json_array(report.coordinate_moments)
                << ",\"concentration_indices\":" << json_array(report.concentration_indices)
                << ",\"chart\":" << quoted(report.chart) << "}\n";
            break;
        case OutputFormat::csv:
            out << "epsilon,lower_mass,upper_mass,order,coordinate_moment,concentration_index\n";
            for (std::size_t i = 0; i < report.orders.size(); ++i) {
                out << format_double(report.epsilon) << ','
                    << format_double(report.lower_mass) << ','
                    << format_double(report.upper_mass) << ',' << report.orders[i] << ','
                    << format_double(report.coordinate_moments[i]) << ','
                    << format_double(report.concentration_indices[i]) << '\n';
            }
            break;
        case OutputFormat::text:
            text_row(out, "epsilon", format_double(report.epsilon));
            text_row(out, "lower_mass", format_double(report.lower_mass));
            text_row(out, "upper_mass", format_double(report.upper_mass));
            for (std::size_t i = 0; i < report.orders.size(); ++i) {
                text_row(out, "moment[r=" + std::to_string(report.orders[i]) + "]",
                         format_double(report.coordinate_moments[i]));
                text_row(out, "index[r=" + std::to_string(report.orders[i]) + "]",
                         format_double(report.concentration_indices[i]));
            }
            text_row(out, "chart", report.chart);
            break;
    }
}

void emit_copula_report(const CubeReport& report, double epsilon,
                        const std::vector<std::string>& charts, OutputFormat format,
                        std::ostream& out) {
    switch (format) {
        case OutputFormat::json: {
            out << "{\"n\":" << report.n << ",\"d\":" << report.coordinate_mean.size()
                << ",\"epsilon\":" << format_double(epsilon)
                << ",\"coordinate_mean\":" << json_array(report.coordinate_mean)
                << ",\"barycenter\":" << json_array(report.barycenter)
                << ",\"corner_masses\":{";
            bool first = true;
            for (const auto& [label, mass] : report.corner_masses) {
                if (!first) out << ',';
                first = false;
                out << quoted(label) << ':' << format_double(mass);
            }
            out << "},\"charts\":[";
            for (std::size_t i = 0; i < charts.size(); ++i) {
                if (i) out << ',';
                out << quoted(charts[i]);
            }
            out << "]}\n";
            break;
        }
        case OutputFormat::csv:
            out << "field,key,value\n";
            for (std::size_t i = 0; i < report.coordinate_mean.size(); ++i) {
                out << "coordinate_mean," << i << ','
                    << format_double(report.coordinate_mean[i]) << '\n';
            }
            for (std::size_t i = 0; i < report.barycenter.size(); ++i) {
                out << "barycenter," << i << ',' << format_double(report.barycenter[i]) << '\n';
            }
            for (const auto& [label, mass] : report.corner_masses) {
                out << "corner_mass," << label << ',' << format_double(mass) << '\n';
            }
            break;
        case OutputFormat::text:
            text_row(out, "n", std::to_string(report.n));
            text_row(out, "d", std::to_string(report.coordinate_mean.size()));
            text_row(out, "epsilon", format_double(epsilon));
            for (std::size_t i = 0; i < report.coordinate_mean.size(); ++i) {
                text_row(out, "coordinate_mean[" + std::to_string(i) + "]",
                         format_double(report.coordinate_mean[i]));
                text_row(out, "barycenter[" + std::to_string(i) + "]",
                         format_double(report.barycenter[i]));
            }
            for (const auto& [label, mass] : report.corner_masses) {
                text_row(out, "corner_mass[" + label + "]", format_double(mass));
            }
            break;
    }
}

void write_replicate_csv(const SimulationReport& report, std::ostream& out) {
    if (report.mode == SimulationReport::Mode::lln) {
        out << "n,estimate,scaled_error\n";
        for (std::size_t i = 0; i < report.estimates.size(); ++i) {
            out << report.n_grid[i] << ',' << format_double(report.estimates[i]) << ','
                << format_double(report.scaled_errors[i]) << '\n';
        }
        return;
    }
    out << "replicate,estimate,scaled_error\n";
    for (std::size_t i = 0; i < report.estimates.size(); ++i) {
        out << i << ',' << format_double(report.estimates[i]) << ','
            << format_double(report.scaled_errors[i]) << '\n';
    }
}

}  // namespace probgeo::cli
