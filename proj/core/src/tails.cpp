#include "probgeo/tails.hpp"

#include <cmath>

#include "probgeo/errors.hpp"
#include "probgeo/moments.hpp"
#include "probgeo/numerics.hpp"

namespace probgeo {

namespace {

void check_eps(double eps) {
    if (!(eps > 0.0 && eps < 0.5)) {
        throw OutOfRange("boundary diagnostics: epsilon must lie in (0, 1/2)");
    }
}

void check_order(int order) {
    if (order < 1) throw OutOfRange("boundary diagnostics: order must be >= 1");
}

}  // namespace

BoundaryReport boundary_mass(std::span<const double> sample, const Chart& chart, double eps) {
    check_eps(eps);
    if (sample.empty()) throw InsufficientData("boundary_mass: empty sample");
    std::size_t below = 0;
    std::size_t above = 0;
    for (double x : sample) {
        const double u = chart.forward(x);
        if (u < eps) ++below;
        if (u > 1.0 - eps) ++above;
    }
    BoundaryReport report;
    report.epsilon = eps;
    report.lower_mass = static_cast<double>(below) / static_cast<double>(sample.size());
    report.upper_mass = static_cast<double>(above) / static_cast<double>(sample.size());
    report.chart = chart.description();
    return report;
}

BoundaryReport boundary_mass(const Distribution& d, const Chart& chart, double eps) {
    check_eps(eps);
    BoundaryReport report;
    report.epsilon = eps;
    // P(U < eps) = P(X < G^-1(eps)); no quadrature needed
    report.lower_mass = d.cdf(chart.inverse(eps));
    report.upper_mass = 1.0 - d.cdf(chart.inverse(1.0 - eps));
    report.chart = chart.description();
    return report;
}

double boundary_concentration_index(std::span<const double> sample, const Chart& chart,
                                    int order) {
    check_order(order);
    if (sample.empty()) throw InsufficientData("boundary_concentration_index: empty sample");
    CompensatedSum acc;
    for (double x : sample) {
        const double u = chart.forward(x);
        acc.add(std::pow(u, order) + std::pow(1.0 - u, order));
    }
    return acc.value() / static_cast<double>(sample.size());
}

double boundary_concentration_index(const Distribution& d, const Chart& chart, int order,
                                    const QuadratureSpec& quad) {
    check_order(order);
    return integrate_unit(
               [&](double p) {
                   const double u = chart.forward(d.quantile(p));
                   return std::pow(u, order) + std::pow(1.0 - u, order);
               },
               quad)
        .value;
}

BoundaryReport boundary_report(std::span<const double> sample, const Chart& chart, double eps,
                               std::span<const int> orders) {
    BoundaryReport report = boundary_mass(sample, chart, eps);
    for (int r : orders) {
        report.orders.push_back(r);
        report.coordinate_moments.push_back(
            initial_moment(sample, chart, r).raw_coordinate_moment);
        report.concentration_indices.push_back(boundary_concentration_index(sample, chart, r));
    }
    return report;
}

BoundaryReport boundary_report(const Distribution& d, const Chart& chart, double eps,
                               std::span<const int> orders, const QuadratureSpec& quad) {
    BoundaryReport report = boundary_mass(d, chart, eps);
    for (int r : orders) {
        report.orders.push_back(r);
        report.coordinate_moments.push_back(
            initial_moment(d, chart, r, quad).raw_coordinate_moment);
        report.concentration_indices.push_back(
            boundary_concentration_index(d, chart, r, quad));
    }
    return report;
}

}  // namespace probgeo
