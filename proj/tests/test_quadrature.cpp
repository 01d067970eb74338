#include <doctest.h>

#include <cmath>

#include "probgeo/errors.hpp"
#include "probgeo/quadrature.hpp"
#include "support/oracles.hpp"

using namespace probgeo;

TEST_CASE("known integrals on the unit interval") {
    CHECK(integrate_unit([](double p) { return p; }).value ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(integrate_unit([](double p) { return p * p * p; }).value ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(integrate_unit([](double p) { return std::exp(p); }).value ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

    // integrable endpoint singularity in the derivative
    CHECK(integrate_unit([](double p) { return std::sqrt(p); }).value ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-11));

    // a kink forces subdivision but converges
    const auto kinked = integrate_unit([](double p) { return std::abs(p - 0.37); });
    const double expected = 0.5 * (0.37 * 0.37 + 0.63 * 0.63);
    CHECK(kinked.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(kinked.evaluations > 15);  // more than a single panel
}

TEST_CASE("general interval and error accounting") {
    const auto r = integrate([](double x) { return std::cos(x); }, -1.0, 2.5);
    CHECK(r.value == doctest::Approx(std::sin(2.5) - std::sin(-1.0)).epsilon(1e-13));
    CHECK(r.error_estimate <= 1e-11);
    CHECK(r.evaluations % 15 == 0);

    CHECK_THROWS_AS((void)integrate([](double) { return 1.0; }, 1.0, 1.0),
                    QuadratureFailure);
}

TEST_CASE("unreachable tolerance raises QuadratureFailure") {
    QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.max_evaluations = 20000;
    CHECK_THROWS_AS(
        (void)integrate_unit([](double p) { return std::sin(1.0 / (p + 1e-14)); }, spec),
        QuadratureFailure);
}
