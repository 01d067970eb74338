#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "probgeo/barycenter.hpp"
#include "probgeo/errors.hpp"
#include "probgeo/multivariate.hpp"
#include "probgeo/numerics.hpp"
#include "probgeo/rng.hpp"

using namespace probgeo;

namespace {

Chart gaussian_chart() { return chart_from_distribution(Distribution::normal(0, 1)); }

VectorSample two_column_sample(std::size_t n, std::uint64_t seed) {
    const auto x = Distribution::normal(0, 1).sample(n, seed);
    const auto y = Distribution::cauchy(0, 1).sample(n, seed + 1);
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back({x[i], y[i]});
    return VectorSample::from_rows(rows);
}

}  // namespace

TEST_CASE("pushforward") {
    const ChartBundle bundle = {gaussian_chart(), gaussian_chart()};
    const VectorSample origin = VectorSample::from_rows({{0.0, 0.0}});
    const Matrix coords = pushforward(origin, bundle);
    CHECK(coords(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(coords(0, 1) == doctest::Approx(0.5).epsilon(1e-15));

    // comonotone rows under equal charts have equal coordinates
    const VectorSample comonotone =
        VectorSample::from_rows({{-1.0, -1.0}, {0.3, 0.3}, {2.0, 2.0}});
    const Matrix cm = pushforward(comonotone, bundle);
    for (std::size_t r = 0; r < cm.rows; ++r) {
        CHECK(cm(r, 0) == cm(r, 1));
        CHECK(cm(r, 0) > 0.0);
        CHECK(cm(r, 0) < 1.0);
    }

    // dimension mismatch
    const ChartBundle one_chart = {gaussian_chart()};
    CHECK_THROWS_AS((void)pushforward(comonotone, one_chart), InvalidParameter);

    // domain violations carry the column index
    const ChartBundle with_unit = {gaussian_chart(),
                                   chart_from_distribution(Distribution::uniform(0, 1))};
    const VectorSample outside = VectorSample::from_rows({{0.0, 3.0}});
    try {
        (void)pushforward(outside, with_unit);
        FAIL("expected DomainViolation");
    } catch (const DomainViolation& e) {
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
}

TEST_CASE("pseudo observations") {
    const VectorSample vs = VectorSample::from_rows({{10.0}, {20.0}, {30.0}});
    const Matrix u = pseudo_observations(vs);
    CHECK(u(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(u(1, 0) == doctest::Approx(0.50).epsilon(1e-15));
    CHECK(u(2, 0) == doctest::Approx(0.75).epsilon(1e-15));

    // ties share the average rank: (1+2)/2 / 3
    const VectorSample tied = VectorSample::from_rows({{5.0}, {5.0}});
    const Matrix tu = pseudo_observations(tied);
    CHECK(tu(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(tu(1, 0) == doctest::Approx(0.5).epsilon(1e-15));

    // without ties every column is a permutation of {k/(n+1)}
    const VectorSample vs2 = two_column_sample(200, 77);
    const Matrix u2 = pseudo_observations(vs2);
    for (std::size_t c = 0; c < u2.cols; ++c) {
        std::vector<double> column;
        for (std::size_t r = 0; r < u2.rows; ++r) column.push_back(u2(r, c));
        std::sort(column.begin(), column.end());
        for (std::size_t k = 0; k < column.size(); ++k) {
            CHECK(column[k] ==
                  doctest::Approx(static_cast<double>(k + 1) / 201.0).epsilon(1e-14));
        }
    }

    const VectorSample single = VectorSample::from_rows({{1.0, 2.0}});
    CHECK_THROWS_AS((void)pseudo_observations(single), InsufficientData);
}

TEST_CASE("pseudo observation margins average exactly one half") {
    const VectorSample vs = two_column_sample(501, 3);
    const Matrix u = pseudo_observations(vs);
    for (std::size_t c = 0; c < u.cols; ++c) {
        CompensatedSum acc;
        for (std::size_t r = 0; r < u.rows; ++r) acc.add(u(r, c));
        CHECK(std::abs(acc.value() / static_cast<double>(u.rows) - 0.5) <= 1e-13);
    }
}

TEST_CASE("multivariate barycenter") {
    const ChartBundle bundle = {gaussian_chart(), gaussian_chart()};
    const VectorSample sym = VectorSample::from_rows({{-1.0, 2.0}, {1.0, -2.0}});
    const CubeReport rep = multivariate_barycenter(sym, bundle);
    REQUIRE(rep.barycenter.size() == 2);
    CHECK(std::abs(rep.barycenter[0]) < 1e-12);
    CHECK(std::abs(rep.barycenter[1]) < 1e-12);
    CHECK(rep.coordinate_mean[0] == doctest::Approx(0.5).epsilon(1e-15));

    // d = 1 agrees with the univariate operation
    const VectorSample column = VectorSample::from_rows({{0.4}, {1.3}, {-0.2}});
    const ChartBundle one = {gaussian_chart()};
    const std::vector<double> flat = {0.4, 1.3, -0.2};
    CHECK(multivariate_barycenter(column, one).barycenter[0] ==
          doctest::Approx(barycenter_of_sample(flat, gaussian_chart()).barycenter)
              .epsilon(1e-14));

    // intrinsic margins: each component recovers its margin's median
    const Distribution mx = Distribution::logistic(2, 1);
    const Distribution my = Distribution::cauchy(-1, 2);
    const auto xs = mx.sample(4001, 13);
    const auto ys = my.sample(4001, 14);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < xs.size(); ++i) rows.push_back({xs[i], ys[i]});
    const CubeReport intrinsic = multivariate_barycenter(
        VectorSample::from_rows(rows),
        {chart_from_distribution(mx), chart_from_distribution(my)});
    // coordinate means are means of uniforms: sd = 1/sqrt(12 n) ~ 0.0046
    CHECK(intrinsic.barycenter[0] == doctest::Approx(2.0).epsilon(0.05));
    CHECK(intrinsic.barycenter[1] == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("corner masses") {
    // comonotone pseudo-observations: joint band equals the marginal band
    const std::size_t n = 999;
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        rows.push_back({x, 2.0 * x + 1.0});
    }
    const Matrix u = pseudo_observations(VectorSample::from_rows(rows));
    const double eps = 0.1;
    const double mass = corner_mass(u, eps, {CornerSide::hi, CornerSide::hi});
    CHECK(std::abs(mass - eps) <= 2.0 / static_cast<double>(n + 1));

    // anti-comonotone data puts nothing in the (hi,hi) corner
    std::vector<std::vector<double>> anti;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = static_cast<double>(i);
        anti.push_back({x, -x});
    }
    const Matrix au = pseudo_observations(VectorSample::from_rows(anti));
    CHECK(corner_mass(au, eps, {CornerSide::hi, CornerSide::hi}) == 0.0);
    CHECK(corner_mass(au, eps, {CornerSide::lo, CornerSide::hi}) ==
          doctest::Approx(eps).epsilon(0.02));

    // small epsilon drives every corner mass to zero
    CHECK(corner_mass(u, 1e-9, {CornerSide::hi, CornerSide::hi}) == 0.0);

    CHECK_THROWS_AS((void)corner_mass(u, 0.7, {CornerSide::hi, CornerSide::hi}), OutOfRange);
    CHECK_THROWS_AS((void)corner_mass(u, 0.1, {CornerSide::hi}), InvalidParameter);
}

TEST_CASE("corner masses sum to at most one") {
    const VectorSample vs = two_column_sample(500, 41);
    const Matrix u = pseudo_observations(vs);
    for (double eps : {0.05, 0.2, 0.45}) {
        const auto masses = all_corner_masses(u, eps);
        REQUIRE(masses.size() == 4);
        double total = 0.0;
        for (const auto& [label, mass] : masses) total += mass;
        CHECK(total <= 1.0 + 1e-15);
    }
}

TEST_CASE("row permutations leave reports unchanged, column permutations commute") {
    const VectorSample vs = two_column_sample(64, 9);
    const ChartBundle bundle = {gaussian_chart(),
                                chart_from_distribution(Distribution::cauchy(0, 1))};
    const CubeReport base = multivariate_barycenter(vs, bundle);

    // reverse the rows
    std::vector<std::vector<double>> reversed_rows;
    for (std::size_t r = vs.size(); r-- > 0;) {
        reversed_rows.push_back({vs.values(r, 0), vs.values(r, 1)});
    }
    const CubeReport permuted =
        multivariate_barycenter(VectorSample::from_rows(reversed_rows), bundle);
    CHECK(permuted.barycenter[0] == doctest::Approx(base.barycenter[0]).epsilon(1e-13));
    CHECK(permuted.barycenter[1] == doctest::Approx(base.barycenter[1]).epsilon(1e-13));

    // swap the columns and the bundle
    std::vector<std::vector<double>> swapped_rows;
    for (std::size_t r = 0; r < vs.size(); ++r) {
        swapped_rows.push_back({vs.values(r, 1), vs.values(r, 0)});
    }
    const CubeReport swapped = multivariate_barycenter(
        VectorSample::from_rows(swapped_rows), {bundle[1], bundle[0]});
    CHECK(swapped.barycenter[0] == doctest::Approx(base.barycenter[1]).epsilon(1e-13));
    CHECK(swapped.barycenter[1] == doctest::Approx(base.barycenter[0]).epsilon(1e-13));
}

TEST_CASE("componentwise affine invariance") {
    CounterRng rng(31415);
    const VectorSample vs = two_column_sample(40, 123);
    const ChartBundle bundle = {gaussian_chart(),
                                chart_from_distribution(Distribution::logistic(0, 1))};
    const CubeReport base = multivariate_barycenter(vs, bundle);
    for (int rep = 0; rep < 30; ++rep) {
        ChartBundle transformed;
        for (const Chart& c : bundle) {
            const double a = (rng.next_open_unit() < 0.5 ? -1.0 : 1.0) *
                             (0.5 + 2.0 * rng.next_open_unit());
            const double b = 2.0 * (rng.next_open_unit() - 0.5);
            transformed.push_back(affine_transform(c, a, b));
        }
        const CubeReport moved = multivariate_barycenter(vs, transformed);
        CHECK(moved.barycenter[0] == doctest::Approx(base.barycenter[0]).epsilon(1e-10));
        CHECK(moved.barycenter[1] == doctest::Approx(base.barycenter[1]).epsilon(1e-10));
    }
}
