#include "probgeo/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "probgeo/barycenter.hpp"
#include "probgeo/errors.hpp"
#include "probgeo/moments.hpp"
#include "probgeo/numerics.hpp"
#include "probgeo/rng.hpp"
#include "probgeo/special_functions.hpp"

namespace probgeo {

namespace {

double chart_slope_at(const Chart& chart, double b) {
    if (!chart.has_derivative()) {
        throw DerivativeUnavailable("delta method: chart '" + chart.description() +
                                    "' exposes no derivative");
    }
    const double slope = chart.derivative(b);
    if (!(slope > 0.0) || !std::isfinite(slope)) {
        throw DerivativeUnavailable("delta method: chart slope at barycenter is not positive");
    }
    return slope;
}

struct ExactTarget {
    double barycenter;
    double variance;  // delta-method asymptotic variance
};

ExactTarget exact_target(const Distribution& d, const Chart& chart, const QuadratureSpec& quad) {
    const BarycenterReport truth = barycenter_of_distribution(d, chart, quad);
    const double coord_var =
        centred_moment(d, chart, 2, quad).raw_coordinate_moment;
    const double slope = chart_slope_at(chart, truth.barycenter);
    return {truth.barycenter, coord_var / (slope * slope)};
}

/// Run f(i) for i in [0, count) over the thread budget; f writes only to
/// index-i slots, so the result does not depend on the schedule.
template <typename F>
void indexed_parallel_for(std::size_t count, F&& f) {
    const unsigned budget = thread_budget();
    if (budget <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(budget, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

unsigned thread_budget() {
    if (const char* env = std::getenv("PROBGEO_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

AsymptoticReport delta_method_stderr(std::span<const double> sample, const Chart& chart) {
    if (sample.size() < 2) {
        throw DegenerateSample("delta_method_stderr: needs at least 2 observations");
    }
    std::vector<double> coords;
    coords.reserve(sample.size());
    for (double x : sample) coords.push_back(chart.forward(x));

    const bool all_equal =
        std::all_of(coords.begin(), coords.end(), [&](double u) { return u == coords.front(); });
    const double coord_var = sample_variance(coords);
    if (all_equal || coord_var <= 0.0) {
        throw DegenerateSample("delta_method_stderr: zero coordinate variance");
    }
    const double coord_mean = compensated_mean(coords);
    const double b = chart.inverse(coord_mean);
    const double slope = chart_slope_at(chart, b);

    AsymptoticReport report;
    report.barycenter = b;
    report.coordinate_variance = coord_var;
    report.chart_derivative_at_b = slope;
    report.asymptotic_variance = coord_var / (slope * slope);
    report.standard_error =
        std::sqrt(report.asymptotic_variance / static_cast<double>(sample.size()));
    report.n = sample.size();
    report.smoothed_derivative = chart.kind() == Chart::Kind::empirical;
    return report;
}

double intrinsic_clt_variance(const Distribution& d) {
    const double m = d.median();
    const double density = d.pdf(m);
    if (!(density > 0.0)) {
        throw InvalidParameter("intrinsic_clt_variance: pdf vanishes at the median");
    }
    return 1.0 / (12.0 * density * density);
}

double median_clt_variance(const Distribution& d) {
    const double m = d.median();
    const double density = d.pdf(m);
    if (!(density > 0.0)) {
        throw InvalidParameter("median_clt_variance: pdf vanishes at the median");
    }
    return 1.0 / (4.0 * density * density);
}

SimulationReport run_lln_experiment(const Distribution& d, const Chart& chart,
                                    std::span<const std::size_t> n_grid, std::uint64_t seed,
                                    const QuadratureSpec& quad) {
    if (n_grid.empty()) throw InvalidParameter("run_lln_experiment: empty n grid");
    for (std::size_t i = 0; i + 1 < n_grid.size(); ++i) {
        if (n_grid[i] >= n_grid[i + 1]) {
            throw InvalidParameter("run_lln_experiment: n grid must be strictly increasing");
        }
    }
    if (n_grid.front() == 0) throw InvalidParameter("run_lln_experiment: n must be >= 1");

    const ExactTarget target = exact_target(d, chart, quad);

    SimulationReport report;
    report.mode = SimulationReport::Mode::lln;
    report.seed = seed;
    report.reps = 1;
    report.n = n_grid.back();
    report.n_grid.assign(n_grid.begin(), n_grid.end());
    report.target = target.barycenter;
    report.target_variance = target.variance;

    CounterRng rng(seed);
    CompensatedSum coordinate_sum;
    std::size_t drawn = 0;
    for (std::size_t n : n_grid) {
        while (drawn < n) {
            coordinate_sum.add(chart.forward(d.quantile(rng.next_open_unit())));
            ++drawn;
        }
        const double mean = coordinate_sum.value() / static_cast<double>(n);
        const double estimate = chart.inverse(mean);
        report.estimates.push_back(estimate);
        report.scaled_errors.push_back(std::sqrt(static_cast<double>(n)) *
                                       (estimate - target.barycenter));
    }

    report.empirical_variance_defined = report.scaled_errors.size() >= 2;
    if (report.empirical_variance_defined) {
        report.empirical_variance = sample_variance(report.scaled_errors);
    }
    return report;
}

SimulationReport run_clt_experiment(const Distribution& d, const Chart& chart, std::size_t n,
                                    std::size_t reps, std::uint64_t seed,
                                    const QuadratureSpec& quad) {
    if (n < 1 || reps < 1) throw InvalidParameter("run_clt_experiment: n and reps must be >= 1");

    const ExactTarget target = exact_target(d, chart, quad);

    SimulationReport report;
    report.mode = SimulationReport::Mode::clt;
    report.seed = seed;
    report.reps = reps;
    report.n = n;
    report.target = target.barycenter;
    report.target_variance = target.variance;
    report.estimates.assign(reps, 0.0);
    report.scaled_errors.assign(reps, 0.0);

    const double sqrt_n = std::sqrt(static_cast<double>(n));
    indexed_parallel_for(reps, [&](std::size_t r) {
        CounterRng rng(derive_substream(seed, r));
        CompensatedSum acc;
        for (std::size_t i = 0; i < n; ++i) {
            acc.add(chart.forward(d.quantile(rng.next_open_unit())));
        }
        const double estimate = chart.inverse(acc.value() / static_cast<double>(n));
        report.estimates[r] = estimate;
        report.scaled_errors[r] = sqrt_n * (estimate - target.barycenter);
    });

    report.empirical_variance_defined = reps >= 2;
    if (report.empirical_variance_defined) {
        report.empirical_variance = sample_variance(report.scaled_errors);
    }
    return report;
}

double ks_normality_statistic(std::span<const double> values) {
    if (values.empty()) throw InsufficientData("ks_normality_statistic: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d_stat = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = normal_cdf(sorted[i]);
        const double upper = (static_cast<double>(i) + 1.0) / n - cdf;
        const double lower = cdf - static_cast<double>(i) / n;
        d_stat = std::max({d_stat, upper, lower});
    }
    return d_stat;
}

}  // namespace probgeo
