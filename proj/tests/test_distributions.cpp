#include <doctest.h>

#include <cmath>

#include "probgeo/distribution.hpp"
#include "probgeo/errors.hpp"
#include "probgeo/quadrature.hpp"
#include "probgeo/rng.hpp"
#include "support/oracles.hpp"

using namespace probgeo;

namespace {

const Distribution kFamilies[] = {
    Distribution::uniform(-1, 2),   Distribution::normal(0, 1),
    Distribution::logistic(0.5, 2), Distribution::cauchy(0, 1),
    Distribution::student_t(4),     Distribution::pareto(1, 2),
    Distribution::exponential(1.5),
};

}  // namespace

TEST_CASE("cdf spot values") {
    CHECK(Distribution::normal(0, 1).cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(Distribution::cauchy(0, 1).cdf(1.0) == doctest::Approx(0.75).epsilon(1e-15));

    // high-precision erf oracle
    const double phi = Distribution::normal(0, 1).cdf(1.959964);
    CHECK(std::abs(phi - static_cast<double>(oracle::normal_cdf(1.959964L))) < 1e-15);
    CHECK(phi == doctest::Approx(0.975).epsilon(1e-8));

    // both tails keep relative accuracy
    const double tail = Distribution::normal(0, 1).cdf(-8.0);
    const double tail_oracle = static_cast<double>(oracle::normal_cdf(-8.0L));
    CHECK(std::abs(tail / tail_oracle - 1.0) < 1e-12);
}

TEST_CASE("quantile spot values") {
    CHECK(Distribution::uniform(0, 1).quantile(0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(Distribution::cauchy(0, 1).quantile(0.75) == doctest::Approx(1.0).epsilon(1e-14));
    // invert 1 - x^-2 = 0.5 by hand
    CHECK(Distribution::pareto(1, 2).quantile(0.5) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS((void)Distribution::normal(0, 1).quantile(0.0), OutOfRange);
    CHECK_THROWS_AS((void)Distribution::normal(0, 1).quantile(1.0), OutOfRange);
    CHECK_THROWS_AS((void)Distribution::normal(0, 1).quantile(-0.2), OutOfRange);
}

TEST_CASE("student-t cdf agrees with closed forms at nu = 1, 2") {
    const Distribution t1 = Distribution::student_t(1);
    const Distribution t2 = Distribution::student_t(2);
    for (double x : {-7.0, -2.5, -0.3, 0.0, 0.4, 1.8, 6.0}) {
        const double cauchy_form = 0.5 + std::atan(x) / 3.141592653589793;
        CHECK(t1.cdf(x) == doctest::Approx(cauchy_form).epsilon(1e-13));
        const double nu2_form = 0.5 + x / (2.0 * std::sqrt(2.0 + x * x));
        CHECK(t2.cdf(x) == doctest::Approx(nu2_form).epsilon(1e-13));
    }
}

TEST_CASE("quantile round-trip on the p grid") {
    for (const auto& d : kFamilies) {
        for (int k = 1; k <= 999; ++k) {
            const double p = k / 1000.0;
            CHECK(std::abs(d.cdf(d.quantile(p)) - p) <= 1e-10);
        }
    }
}

TEST_CASE("cdf is monotone") {
    CounterRng rng(17);
    for (const auto& d : kFamilies) {
        for (int i = 0; i < 300; ++i) {
            const double x = d.quantile(rng.next_open_unit());
            const double y = d.quantile(rng.next_open_unit());
            const double lo = std::min(x, y);
            const double hi = std::max(x, y);
            CHECK(d.cdf(lo) <= d.cdf(hi));
        }
    }
}

TEST_CASE("pdf matches central finite difference of cdf") {
    for (const auto& d : kFamilies) {
        for (int k = 1; k <= 19; ++k) {
            const double x = d.quantile(k / 20.0);
            const double h = 1e-5 * (1.0 + std::abs(x));
            const double fd = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
            CHECK(fd == doctest::Approx(d.pdf(x)).epsilon(1e-6));
        }
    }
}

TEST_CASE("sampling is deterministic and inverse-transform") {
    const auto a = Distribution::uniform(0, 1).sample(3, 7);
    const auto b = Distribution::uniform(0, 1).sample(3, 7);
    REQUIRE(a.size() == 3);
    CHECK(a == b);  // bit-for-bit
    for (double v : a) {
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }

    // k-th draw is quantile of the k-th generator output
    CounterRng rng(7);
    for (double v : a) {
        CHECK(v == Distribution::uniform(0, 1).quantile(rng.next_open_unit()));
    }

    // different seeds differ
    CHECK(Distribution::uniform(0, 1).sample(3, 8) != a);
}

TEST_CASE("sample statistics of seeded streams") {
    const auto normal_draws = Distribution::normal(0, 1).sample(100000, 1);
    CompensatedSum acc;
    for (double v : normal_draws) acc.add(v);
    // CLT bound 4/sqrt(n) = 0.0126, stated tolerance 0.02
    CHECK(std::abs(acc.value() / 1e5) < 0.02);

    auto cauchy_draws = Distribution::cauchy(0, 1).sample(10000, 1);
    std::sort(cauchy_draws.begin(), cauchy_draws.end());
    const double median = 0.5 * (cauchy_draws[4999] + cauchy_draws[5000]);
    // order-statistic sd ~ pi/(2 sqrt(n)) = 0.0157
    CHECK(std::abs(median) < 0.05);
}

TEST_CASE("pdf is nonnegative and integrates to one") {
    for (const auto& d : kFamilies) {
        // integrate the density between extreme quantiles; the remaining
        // tail mass is 2e-9 by construction
        const double lo = d.quantile(1e-9);
        const double hi = d.quantile(1.0 - 1e-9);
        QuadratureSpec spec;
        spec.abs_tol = 1e-9;
        const double mass = integrate([&](double x) { return d.pdf(x); }, lo, hi, spec).value;
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
        for (int k = 1; k <= 39; ++k) {
            CHECK(d.pdf(d.quantile(k / 40.0)) >= 0.0);
        }
    }
}

TEST_CASE("parameter constraints are enforced at construction") {
    CHECK_THROWS_AS((void)Distribution::normal(0, 0), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::normal(0, -1), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::logistic(0, 0), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::cauchy(0, -2), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::student_t(0), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::pareto(0, 1), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::pareto(1, 0), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::exponential(0), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::uniform(1, 1), InvalidParameter);
    CHECK_THROWS_AS((void)Distribution::uniform(2, 1), InvalidParameter);
    const double nan = std::nan("");
    CHECK_THROWS_AS((void)Distribution::normal(nan, 1), InvalidParameter);
}

TEST_CASE("support intervals") {
    CHECK(Distribution::pareto(1, 2).support().lo == 1.0);
    CHECK(std::isinf(Distribution::pareto(1, 2).support().hi));
    CHECK(Distribution::uniform(-1, 2).support().lo == -1.0);
    CHECK(Distribution::uniform(-1, 2).support().hi == 2.0);
    CHECK(Distribution::exponential(1).support().lo == 0.0);
}

TEST_CASE("substream derivation is stable and spreads seeds") {
    CHECK(derive_substream(42, 0) == derive_substream(42, 0));
    CHECK(derive_substream(42, 0) != derive_substream(42, 1));
    CHECK(derive_substream(42, 0) != derive_substream(43, 0));
}
