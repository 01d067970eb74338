#include "specs.hpp"

#include <cstdlib>
#include <vector>

#include "cli_errors.hpp"

namespace probgeo::cli {

namespace {

std::vector<double> parse_params(const std::string& spec, const std::string& list,
                                 std::size_t expected) {
    std::vector<double> params;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = list.find(',', start);
        const std::string token =
            list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) {
            throw UsageError("spec '" + spec + "': empty parameter");
        }
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size()) {
            throw UsageError("spec '" + spec + "': bad parameter '" + token + "'");
        }
        params.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (params.size() != expected) {
        throw UsageError("spec '" + spec + "': expected " + std::to_string(expected) +
                         " parameter(s), got " + std::to_string(params.size()));
    }
    return params;
}

}  // namespace

Distribution parse_distribution_spec(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size()) {
        throw UsageError("spec '" + spec + "': expected family:param1[,param2]");
    }
    const std::string family = spec.substr(0, colon);
    const std::string list = spec.substr(colon + 1);

    if (family == "uniform") {
        const auto p = parse_params(spec, list, 2);
        return Distribution::uniform(p[0], p[1]);
    }
    if (family == "normal") {
        const auto p = parse_params(spec, list, 2);
        return Distribution::normal(p[0], p[1]);
    }
    if (family == "logistic") {
        const auto p = parse_params(spec, list, 2);
        return Distribution::logistic(p[0], p[1]);
    }
    if (family == "cauchy") {
        const auto p = parse_params(spec, list, 2);
        return Distribution::cauchy(p[0], p[1]);
    }
    if (family == "studentt") {
        const auto p = parse_params(spec, list, 1);
        return Distribution::student_t(p[0]);
    }
    if (family == "pareto") {
        const auto p = parse_params(spec, list, 2);
        return Distribution::pareto(p[0], p[1]);
    }
    if (family == "exponential") {
        const auto p = parse_params(spec, list, 1);
        return Distribution::exponential(p[0]);
    }
    throw UsageError("spec '" + spec + "': unknown family '" + family + "'");
}

bool is_self_chart_spec(const std::string& spec) {
    return spec == "empirical" || spec == "intrinsic";
}

}  // namespace probgeo::cli
