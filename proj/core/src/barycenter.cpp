#include "probgeo/barycenter.hpp"

#include <cmath>
#include <vector>

#include "probgeo/errors.hpp"

namespace probgeo {

namespace {

BarycenterReport pull_back(double coordinate_mean, std::size_t n, const Chart& chart) {
    // position of the mean inside the chart's coordinate range, on a unit
    // scale; (0,1) itself for proper charts
    const Interval range = chart.coordinate_range();
    const double scaled = (coordinate_mean - range.lo) / (range.hi - range.lo);
    if (!(scaled > kBoundaryErrorTol && scaled < 1.0 - kBoundaryErrorTol)) {
        throw BoundaryValue("barycenter: coordinate mean " + std::to_string(coordinate_mean) +
                            " is on the boundary of the coordinate range; pullback is not "
                            "meaningful");
    }
    BarycenterReport report;
    report.coordinate_mean = coordinate_mean;
    report.barycenter = chart.inverse(coordinate_mean);
    report.n = n;
    report.boundary_flag = scaled < kBoundaryWarnTol || scaled > 1.0 - kBoundaryWarnTol;
    if (report.boundary_flag) report.warning = "near-boundary";
    report.chart = chart.description();
    return report;
}

}  // namespace

BarycenterReport barycenter_of_sample(std::span<const double> sample, const Chart& chart) {
    if (sample.empty()) {
        throw InsufficientData("barycenter_of_sample: empty sample");
    }
    CompensatedSum acc;
    for (double x : sample) acc.add(chart.forward(x));
    const double mean = acc.value() / static_cast<double>(sample.size());
    return pull_back(mean, sample.size(), chart);
}

BarycenterReport barycenter_of_distribution(const Distribution& d, const Chart& chart,
                                            const QuadratureSpec& quad) {
    const QuadratureResult integral = integrate_unit(
        [&](double p) { return chart.forward(d.quantile(p)); }, quad);
    return pull_back(integral.value, integral.evaluations, chart);
}

bool kolmogorov_equivalent(std::span<const double> s1, std::span<const double> s2,
                           const Chart& chart, double tol) {
    if (s1.empty() || s2.empty()) {
        throw InsufficientData("kolmogorov_equivalent: empty sample");
    }
    CompensatedSum a1;
    for (double x : s1) a1.add(chart.forward(x));
    CompensatedSum a2;
    for (double x : s2) a2.add(chart.forward(x));
    const double m1 = a1.value() / static_cast<double>(s1.size());
    const double m2 = a2.value() / static_cast<double>(s2.size());
    return std::abs(m1 - m2) <= tol;
}

double argmin_characterization_check(std::span<const double> sample, const Chart& chart,
                                     const GridSpec& grid) {
    if (sample.empty()) {
        throw InsufficientData("argmin_characterization_check: empty sample");
    }
    if (!(grid.step > 0.0) || !(grid.lo < grid.hi)) {
        throw InvalidParameter("argmin_characterization_check: malformed grid");
    }
    std::vector<double> coords;
    coords.reserve(sample.size());
    for (double x : sample) coords.push_back(chart.forward(x));

    double best_c = grid.lo;
    double best_objective = std::numeric_limits<double>::infinity();
    const std::size_t steps = static_cast<std::size_t>((grid.hi - grid.lo) / grid.step);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double c = grid.lo + static_cast<double>(k) * grid.step;
        if (c > grid.hi) break;
        const double gc = chart.forward(c);
        CompensatedSum objective;
        for (double u : coords) {
            const double diff = u - gc;
            objective.add(diff * diff);
        }
        const double value = objective.value();
        if (value < best_objective) {
            best_objective = value;
            best_c = c;
        }
    }
    return best_c;
}

}  // namespace probgeo
