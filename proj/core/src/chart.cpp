#include "probgeo/chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "probgeo/errors.hpp"

namespace probgeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Knot table of an empirical chart, shared by its closures.
struct EmpiricalTable {
    std::vector<double> knots;   // strictly increasing distinct values
    std::vector<double> levels;  // strictly increasing, in (0,1)
    double tail_slope;

    [[nodiscard]] double forward(double x) const {
        const std::size_t k = knots.size();
        if (x < knots.front()) {
            // rational taper: value levels[0] and slope tail_slope*levels[0]
            // at the edge, decaying to 0 as x -> -inf
            return levels.front() / (1.0 + tail_slope * (knots.front() - x));
        }
        if (x > knots.back()) {
            const double gap = 1.0 - levels.back();
            return 1.0 - gap / (1.0 + tail_slope * (x - knots.back()));
        }
        const auto it = std::upper_bound(knots.begin(), knots.end(), x);
        if (it == knots.begin()) return levels.front();  // x == knots.front()
        const std::size_t j = static_cast<std::size_t>(it - knots.begin());
        if (j == k) return levels.back();  // x == knots.back()
        const double t = (x - knots[j - 1]) / (knots[j] - knots[j - 1]);
        return levels[j - 1] + t * (levels[j] - levels[j - 1]);
    }

    [[nodiscard]] double inverse(double u) const {
        if (u < levels.front()) {
            // invert the lower taper on (0, levels[0])
            return knots.front() - (levels.front() / u - 1.0) / tail_slope;
        }
        if (u > levels.back()) {
            const double gap = 1.0 - levels.back();
            return knots.back() + (gap / (1.0 - u) - 1.0) / tail_slope;
        }
        const auto it = std::lower_bound(levels.begin(), levels.end(), u);
        const std::size_t j = static_cast<std::size_t>(it - levels.begin());
        if (j == 0 || levels[j] == u) return knots[j];
        const double t = (u - levels[j - 1]) / (levels[j] - levels[j - 1]);
        return knots[j - 1] + t * (knots[j] - knots[j - 1]);
    }

    [[nodiscard]] double slope_between(std::size_t j) const {
        // slope of segment (knots[j], knots[j+1])
        return (levels[j + 1] - levels[j]) / (knots[j + 1] - knots[j]);
    }

    [[nodiscard]] double derivative(double x) const {
        const std::size_t k = knots.size();
        const double lower_edge_slope = tail_slope * levels.front();
        const double upper_edge_slope = tail_slope * (1.0 - levels.back());
        if (x < knots.front()) {
            const double denom = 1.0 + tail_slope * (knots.front() - x);
            return lower_edge_slope / (denom * denom);
        }
        if (x > knots.back()) {
            const double denom = 1.0 + tail_slope * (x - knots.back());
            return upper_edge_slope / (denom * denom);
        }
        // at a knot: average of the one-sided slopes
        const auto it = std::lower_bound(knots.begin(), knots.end(), x);
        if (it != knots.end() && *it == x) {
            const std::size_t j = static_cast<std::size_t>(it - knots.begin());
            const double left = (j == 0) ? lower_edge_slope : slope_between(j - 1);
            const double right = (j == k - 1) ? upper_edge_slope : slope_between(j);
            return 0.5 * (left + right);
        }
        const std::size_t j = static_cast<std::size_t>(std::upper_bound(knots.begin(),
                                                                        knots.end(), x) -
                                                       knots.begin());
        return slope_between(j - 1);
    }
};

}  // namespace

Chart::Chart(Interval domain, std::function<double(double)> forward,
             std::function<double(double)> inverse, std::function<double(double)> derivative,
             Kind kind, std::string description, Interval coordinate_range)
    : domain_(domain),
      fwd_(std::move(forward)),
      inv_(std::move(inverse)),
      deriv_(std::move(derivative)),
      kind_(kind),
      description_(std::move(description)),
      coordinate_range_(coordinate_range) {}

double Chart::forward(double x) const {
    if (!domain_.contains(x)) {
        throw DomainViolation("chart '" + description_ + "': value " + std::to_string(x) +
                              " outside domain");
    }
    return fwd_(x);
}

double Chart::inverse(double u) const { return inv_(u); }

double Chart::derivative(double x) const {
    if (!deriv_) {
        throw DerivativeUnavailable("chart '" + description_ + "' has no derivative");
    }
    if (!domain_.contains(x)) {
        throw DomainViolation("chart '" + description_ + "': value " + std::to_string(x) +
                              " outside domain");
    }
    return deriv_(x);
}

Chart chart_from_distribution(const Distribution& d) {
    const Interval support = d.support();
    Distribution law = d;
    auto forward = [law](double x) { return law.cdf(x); };
    auto inverse = [law](double u) {
        if (!(u > 0.0 && u < 1.0)) throw OutOfRange("chart inverse: u must lie in (0,1)");
        return law.quantile(u);
    };
    auto derivative = [law](double x) { return law.pdf(x); };
    return {support, forward, inverse, derivative, Chart::Kind::analytic, d.description()};
}

Chart chart_from_sample(std::span<const double> sample, double tail_slope) {
    if (!(tail_slope > 0.0) || !std::isfinite(tail_slope)) {
        throw InvalidParameter("chart_from_sample: tail_slope must be positive and finite");
    }
    std::vector<double> sorted(sample.begin(), sample.end());
    for (double v : sorted) {
        if (!std::isfinite(v)) {
            throw InvalidParameter("chart_from_sample: observations must be finite");
        }
    }
    std::sort(sorted.begin(), sorted.end());

    const double n = static_cast<double>(sorted.size());
    auto table = std::make_shared<EmpiricalTable>();
    table->tail_slope = tail_slope;

    // mid-rank plotting positions: (cumulative count - multiplicity/2) / n
    std::size_t i = 0;
    std::size_t cumulative = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const std::size_t multiplicity = j - i;
        cumulative += multiplicity;
        table->knots.push_back(sorted[i]);
        table->levels.push_back(
            (static_cast<double>(cumulative) - static_cast<double>(multiplicity) / 2.0) / n);
        i = j;
    }
    if (table->knots.size() < 2) {
        throw InsufficientData("chart_from_sample: needs at least 2 distinct values");
    }

    auto forward = [table](double x) { return table->forward(x); };
    auto inverse = [table](double u) {
        if (!(u > 0.0 && u < 1.0)) throw OutOfRange("chart inverse: u must lie in (0,1)");
        return table->inverse(u);
    };
    auto derivative = [table](double x) { return table->derivative(x); };
    return {Interval{-kInf, kInf}, forward, inverse, derivative, Chart::Kind::empirical,
            "empirical[" + std::to_string(table->knots.size()) + " knots]"};
}

Chart affine_transform(const Chart& c, double a, double b) {
    if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidParameter("affine_transform: requires finite a != 0");
    }
    auto base_fwd = [c](double x) { return c.forward(x); };
    auto forward = [base_fwd, a, b](double x) { return a * base_fwd(x) + b; };
    auto inverse = [c, a, b](double u) { return c.inverse((u - b) / a); };
    std::function<double(double)> derivative;
    if (c.has_derivative()) {
        derivative = [c, a](double x) { return a * c.derivative(x); };
    }
    const Interval base_range = c.coordinate_range();
    const double lo = a * base_range.lo + b;
    const double hi = a * base_range.hi + b;
    const Interval range{std::min(lo, hi), std::max(lo, hi)};
    const bool identity = (a == 1.0 && b == 0.0);
    return {c.domain(),
            forward,
            inverse,
            derivative,
            identity ? c.kind() : Chart::Kind::composed,
            identity ? c.description()
                     : "affine(" + std::to_string(a) + "," + std::to_string(b) + ")o" +
                           c.description(),
            range};
}

Chart compose_monotone(const Chart& c, const std::function<double(double)>& t,
                       const std::function<double(double)>& t_inverse) {
    // round-trip check of the supplied pair on an interior grid
    for (int k = 1; k < 32; ++k) {
        const double u = static_cast<double>(k) / 32.0;
        const double v = t(u);
        const double back = t_inverse(v);
        if (!std::isfinite(v) || std::abs(back - u) > 1e-8) {
            throw NonInvertible("compose_monotone: t_inverse fails round-trip at u=" +
                                std::to_string(u));
        }
    }
    auto forward = [c, t](double x) { return t(c.forward(x)); };
    auto inverse = [c, t_inverse](double u) { return c.inverse(t_inverse(u)); };
    return {c.domain(), forward, inverse, nullptr, Chart::Kind::composed,
            "composed o " + c.description()};
}

double induced_distance(const Chart& c, double x, double y) {
    return std::abs(c.forward(x) - c.forward(y));
}

}  // namespace probgeo
