#include "probgeo/moments.hpp"

#include <cmath>
#include <vector>

#include "probgeo/errors.hpp"
#include "probgeo/numerics.hpp"

namespace probgeo {

namespace {

constexpr double kInteriorTol = 1e-12;

double power(double u, int r) {
    double out = 1.0;
    for (int i = 0; i < r; ++i) out *= u;
    return out;
}

MomentReport finish(int order, double raw, bool centred, bool absolute, const Chart& chart) {
    MomentReport report;
    report.order = order;
    report.raw_coordinate_moment = raw;
    report.centred = centred;
    report.absolute = absolute;
    if (raw > kInteriorTol && raw < 1.0 - kInteriorTol) {
        report.pulled_back = chart.inverse(raw);
        report.defined = true;
    }
    return report;
}

void check_order(int order) {
    if (order < 1) throw OutOfRange("moments: order must be >= 1");
}

std::vector<double> coordinates(std::span<const double> sample, const Chart& chart) {
    if (sample.empty()) throw InsufficientData("moments: empty sample");
    std::vector<double> coords;
    coords.reserve(sample.size());
    for (double x : sample) coords.push_back(chart.forward(x));
    return coords;
}

double coordinate_mean_of(const std::vector<double>& coords) {
    CompensatedSum acc;
    for (double u : coords) acc.add(u);
    return acc.value() / static_cast<double>(coords.size());
}

double distribution_coordinate_mean(const Distribution& d, const Chart& chart,
                                    const QuadratureSpec& quad) {
    return integrate_unit([&](double p) { return chart.forward(d.quantile(p)); }, quad).value;
}

}  // namespace

MomentReport initial_moment(std::span<const double> sample, const Chart& chart, int order) {
    check_order(order);
    const auto coords = coordinates(sample, chart);
    CompensatedSum acc;
    for (double u : coords) acc.add(power(u, order));
    const double raw = acc.value() / static_cast<double>(coords.size());
    return finish(order, raw, false, false, chart);
}

MomentReport initial_moment(const Distribution& d, const Chart& chart, int order,
                            const QuadratureSpec& quad) {
    check_order(order);
    const double raw = integrate_unit(
        [&](double p) { return power(chart.forward(d.quantile(p)), order); }, quad).value;
    return finish(order, raw, false, false, chart);
}

MomentReport centred_moment(std::span<const double> sample, const Chart& chart, int order) {
    check_order(order);
    const auto coords = coordinates(sample, chart);
    const double mean = coordinate_mean_of(coords);
    CompensatedSum acc;
    for (double u : coords) acc.add(power(u - mean, order));
    const double raw = acc.value() / static_cast<double>(coords.size());
    return finish(order, raw, true, false, chart);
}

MomentReport centred_moment(const Distribution& d, const Chart& chart, int order,
                            const QuadratureSpec& quad) {
    check_order(order);
    const double mean = distribution_coordinate_mean(d, chart, quad);
    const double raw = integrate_unit(
        [&](double p) { return power(chart.forward(d.quantile(p)) - mean, order); }, quad).value;
    return finish(order, raw, true, false, chart);
}

MomentReport absolute_centred_moment(std::span<const double> sample, const Chart& chart,
                                     int order) {
    check_order(order);
    const auto coords = coordinates(sample, chart);
    const double mean = coordinate_mean_of(coords);
    CompensatedSum acc;
    for (double u : coords) acc.add(power(std::abs(u - mean), order));
    const double raw = acc.value() / static_cast<double>(coords.size());
    return finish(order, raw, true, true, chart);
}

MomentReport absolute_centred_moment(const Distribution& d, const Chart& chart, int order,
                                     const QuadratureSpec& quad) {
    check_order(order);
    const double mean = distribution_coordinate_mean(d, chart, quad);
    const double raw = integrate_unit(
        [&](double p) { return power(std::abs(chart.forward(d.quantile(p)) - mean), order); },
        quad).value;
    return finish(order, raw, true, true, chart);
}

MomentReport kolmogorov_variance(std::span<const double> sample, const Chart& chart) {
    return centred_moment(sample, chart, 2);
}

MomentReport kolmogorov_variance(const Distribution& d, const Chart& chart,
                                 const QuadratureSpec& quad) {
    return centred_moment(d, chart, 2, quad);
}

double pseudo_mgf(std::span<const double> sample, const Chart& chart, double t) {
    const auto coords = coordinates(sample, chart);
    CompensatedSum acc;
    for (double u : coords) acc.add(std::exp(t * u));
    return acc.value() / static_cast<double>(coords.size());
}

double pseudo_mgf(const Distribution& d, const Chart& chart, double t,
                  const QuadratureSpec& quad) {
    // scale the tolerance with exp(|t|) so large t does not spuriously fail
    QuadratureSpec scaled = quad;
    scaled.abs_tol = quad.abs_tol * std::max(1.0, std::exp(std::abs(t)) * 0.5);
    return integrate_unit(
        [&](double p) { return std::exp(t * chart.forward(d.quantile(p))); }, scaled).value;
}

double pseudo_mgf_derivative(std::span<const double> sample, const Chart& chart, int k) {
    check_order(k);
    return initial_moment(sample, chart, k).raw_coordinate_moment;
}

double pseudo_mgf_derivative(const Distribution& d, const Chart& chart, int k,
                             const QuadratureSpec& quad) {
    check_order(k);
    return initial_moment(d, chart, k, quad).raw_coordinate_moment;
}

}  // namespace probgeo
