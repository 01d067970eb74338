#include <doctest.h>

#include <cmath>
#include <vector>

#include "probgeo/asymptotics.hpp"
#include "probgeo/barycenter.hpp"
#include "probgeo/errors.hpp"
#include "probgeo/rng.hpp"
#include "support/oracles.hpp"

using namespace probgeo;

namespace {

constexpr double kPi = 3.141592653589793;

Chart gaussian_chart() { return chart_from_distribution(Distribution::normal(0, 1)); }

}  // namespace

TEST_CASE("delta method error paths") {
    const Chart gauss = gaussian_chart();
    const std::vector<double> constant = {1.5, 1.5, 1.5};
    CHECK_THROWS_AS((void)delta_method_stderr(constant, gauss), DegenerateSample);
    const std::vector<double> single = {1.5};
    CHECK_THROWS_AS((void)delta_method_stderr(single, gauss), DegenerateSample);

    // monotone compositions carry no derivative
    const Chart squared = compose_monotone(
        gauss, [](double u) { return u * u; }, [](double u) { return std::sqrt(u); });
    const std::vector<double> data = {-1.0, 0.5, 2.0};
    CHECK_THROWS_AS((void)delta_method_stderr(data, squared), DerivativeUnavailable);
}

TEST_CASE("delta method closed form on a two-point sample") {
    // coordinates Phi(-1), Phi(1): mean 1/2, n-1 variance 2 (Phi(1)-1/2)^2,
    // slope at the pulled-back mean is the standard normal density at 0
    const std::vector<double> sym = {-1, 1};
    const auto rep = delta_method_stderr(sym, gaussian_chart());

    const long double dev = oracle::normal_cdf(1.0L) - 0.5L;
    const double coord_var = static_cast<double>(2.0L * dev * dev);
    CHECK(rep.coordinate_variance == doctest::Approx(coord_var).epsilon(1e-13));

    const double slope = static_cast<double>(oracle::normal_pdf(0.0L));
    CHECK(rep.chart_derivative_at_b == doctest::Approx(slope).epsilon(1e-13));
    CHECK(rep.asymptotic_variance ==
          doctest::Approx(coord_var / (slope * slope)).epsilon(1e-12));
    CHECK(rep.standard_error ==
          doctest::Approx(std::sqrt(rep.asymptotic_variance / 2.0)).epsilon(1e-13));
    CHECK_FALSE(rep.smoothed_derivative);
}

TEST_CASE("delta method approaches the intrinsic limit pi/6") {
    const Distribution normal = Distribution::normal(0, 1);
    const auto sample = normal.sample(20000, 321);
    const auto rep = delta_method_stderr(sample, chart_from_distribution(normal));
    CHECK(rep.asymptotic_variance == doctest::Approx(kPi / 6.0).epsilon(0.05));
    CHECK(rep.coordinate_variance <= 0.25 * 20000.0 / 19999.0);
}

TEST_CASE("intrinsic and median limit variances") {
    CHECK(intrinsic_clt_variance(Distribution::normal(0, 1)) ==
          doctest::Approx(kPi / 6.0).epsilon(1e-14));
    CHECK(intrinsic_clt_variance(Distribution::uniform(0, 1)) ==
          doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(intrinsic_clt_variance(Distribution::cauchy(0, 1)) ==
          doctest::Approx(kPi * kPi / 12.0).epsilon(1e-14));

    CHECK(median_clt_variance(Distribution::normal(0, 1)) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-14));
    CHECK(median_clt_variance(Distribution::uniform(0, 1)) ==
          doctest::Approx(0.25).epsilon(1e-14));

    for (const auto& d : {Distribution::uniform(-1, 2), Distribution::normal(3, 0.5),
                          Distribution::logistic(0, 2), Distribution::cauchy(1, 3),
                          Distribution::student_t(5), Distribution::pareto(2, 1.5),
                          Distribution::exponential(0.25)}) {
        const double ratio = intrinsic_clt_variance(d) / median_clt_variance(d);
        CHECK(std::abs(ratio - 1.0 / 3.0) <= 1e-15);
    }
}

TEST_CASE("lln experiment") {
    const std::vector<std::size_t> grid = {10, 100, 1000, 10000, 100000};

    // heavy-tailed data, benchmark chart: the barycenter still settles
    const auto rep =
        run_lln_experiment(Distribution::cauchy(0, 1), gaussian_chart(), grid, 11);
    REQUIRE(rep.estimates.size() == grid.size());
    CHECK(std::abs(rep.estimates.back() - rep.target) < 0.05);
    CHECK(std::abs(rep.target) < 1e-9);

    // identity chart on U(0,1): estimates converge to 1/2
    const Chart unit = chart_from_distribution(Distribution::uniform(0, 1));
    const auto urep = run_lln_experiment(Distribution::uniform(0, 1), unit, grid, 5);
    CHECK(std::abs(urep.estimates.back() - 0.5) < 0.003);
    CHECK(urep.target == doctest::Approx(0.5).epsilon(1e-10));

    // deterministic replay
    const auto replay =
        run_lln_experiment(Distribution::cauchy(0, 1), gaussian_chart(), grid, 11);
    CHECK(replay.estimates == rep.estimates);
    CHECK(replay.scaled_errors == rep.scaled_errors);

    // envelope: max_{k >= j} |b_k - b| below 3 sqrt(av / n_j)
    for (std::size_t j = 0; j < grid.size(); ++j) {
        double worst = 0.0;
        for (std::size_t k = j; k < grid.size(); ++k) {
            worst = std::max(worst, std::abs(rep.estimates[k] - rep.target));
        }
        CHECK(worst <= 3.0 * std::sqrt(rep.target_variance / static_cast<double>(grid[j])));
    }

    const std::vector<std::size_t> bad_grid = {100, 100};
    CHECK_THROWS_AS(
        (void)run_lln_experiment(Distribution::cauchy(0, 1), gaussian_chart(), bad_grid, 1),
        InvalidParameter);
}

TEST_CASE("clt experiment") {
    const Distribution normal = Distribution::normal(0, 1);
    const Chart intrinsic = chart_from_distribution(normal);

    const auto rep = run_clt_experiment(normal, intrinsic, 400, 600, 2024);
    REQUIRE(rep.estimates.size() == 600);
    CHECK(rep.target_variance == doctest::Approx(kPi / 6.0).epsilon(1e-9));
    CHECK(rep.empirical_variance_defined);
    // reps = 600: sd of the variance estimate is about 6%, allow 4 sigma
    CHECK(rep.empirical_variance == doctest::Approx(kPi / 6.0).epsilon(0.25));

    // single replicate: variance undefined but flagged, not an error
    const auto one = run_clt_experiment(normal, intrinsic, 50, 1, 9);
    CHECK_FALSE(one.empirical_variance_defined);
    REQUIRE(one.scaled_errors.size() == 1);

    // deterministic replay
    const auto replay = run_clt_experiment(normal, intrinsic, 400, 600, 2024);
    CHECK(replay.estimates == rep.estimates);
}

TEST_CASE("clt replicates are identical under any thread budget") {
    const Distribution cauchy = Distribution::cauchy(0, 1);
    const Chart gauss = gaussian_chart();

    setenv("PROBGEO_THREADS", "1", 1);
    const auto serial = run_clt_experiment(cauchy, gauss, 100, 64, 31);
    setenv("PROBGEO_THREADS", "4", 1);
    const auto parallel = run_clt_experiment(cauchy, gauss, 100, 64, 31);
    unsetenv("PROBGEO_THREADS");

    CHECK(serial.estimates == parallel.estimates);
    CHECK(serial.scaled_errors == parallel.scaled_errors);
    CHECK(serial.empirical_variance == parallel.empirical_variance);
}

TEST_CASE("coordinate variance bound") {
    CounterRng rng(555);
    const Chart gauss = gaussian_chart();
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 2 + rng.next_u64() % 50;
        std::vector<double> sample;
        for (std::size_t i = 0; i < n; ++i) {
            sample.push_back(gauss.inverse(0.001 + 0.998 * rng.next_open_unit()));
        }
        try {
            const auto report = delta_method_stderr(sample, gauss);
            // n-1 normalization: the Popoviciu bound scales by n/(n-1)
            CHECK(report.coordinate_variance <=
                  0.25 * static_cast<double>(n) / static_cast<double>(n - 1) + 1e-15);
            CHECK(report.asymptotic_variance > 0.0);
        } catch (const DegenerateSample&) {
            // permissible for unlucky constant draws
        }
    }
}

TEST_CASE("standardized scaled errors are normal for light and heavy tails") {
    const Chart gauss = gaussian_chart();
    const double critical = 1.6276 / std::sqrt(2000.0);  // 1% asymptotic KS level
    for (const auto& d : {Distribution::normal(0, 1), Distribution::cauchy(0, 1)}) {
        const auto rep = run_clt_experiment(d, gauss, 500, 2000, 606);
        std::vector<double> standardized;
        const double sd = std::sqrt(rep.target_variance);
        for (double e : rep.scaled_errors) standardized.push_back(e / sd);
        CHECK(ks_normality_statistic(standardized) < critical);
    }
}

TEST_CASE("ks statistic distinguishes normal from uniform") {
    std::vector<double> normal_like;
    std::vector<double> uniform_like;
    CounterRng rng(8);
    for (int i = 0; i < 4000; ++i) {
        const double u = rng.next_open_unit();
        normal_like.push_back(static_cast<double>(oracle::normal_quantile(u)));
        uniform_like.push_back(u);
    }
    CHECK(ks_normality_statistic(normal_like) < 0.03);
    CHECK(ks_normality_statistic(uniform_like) > 0.1);
}
