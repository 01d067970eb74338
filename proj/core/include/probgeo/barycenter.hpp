#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "probgeo/chart.hpp"
#include "probgeo/distribution.hpp"
#include "probgeo/numerics.hpp"
#include "probgeo/quadrature.hpp"

namespace probgeo {

struct BarycenterReport {
    double coordinate_mean = 0.0;  ///< mean of G(X) in (0,1)
    double barycenter = 0.0;       ///< G^-1(coordinate_mean)
    std::size_t n = 0;             ///< sample size, or quadrature evaluations
    bool boundary_flag = false;    ///< coordinate mean within 1e-9 of {0,1}
    std::string warning;           ///< "near-boundary" when flagged, else empty
    std::string chart;             ///< chart description
};

/// Coordinate mean within this distance of {0,1} raises BoundaryValue.
inline constexpr double kBoundaryErrorTol = 1e-12;
/// Coordinate mean within this distance of {0,1} sets the boundary flag.
inline constexpr double kBoundaryWarnTol = 1e-9;

/// Pullback of the arithmetic mean taken in chart coordinates:
/// G^-1(mean of G(x_i)). The coordinate mean is accumulated with
/// compensated summation in input order.
[[nodiscard]] BarycenterReport barycenter_of_sample(std::span<const double> sample,
                                                    const Chart& chart);

/// Population version: E[G(X)] evaluated as the integral over p in (0,1)
/// of G(quantile_d(p)), then pulled back. The substitution keeps the
/// integrand bounded for arbitrarily heavy tails.
[[nodiscard]] BarycenterReport barycenter_of_distribution(const Distribution& d,
                                                          const Chart& chart,
                                                          const QuadratureSpec& quad = {});

/// True iff the two samples share the same coordinate mean up to tol; in
/// that case their barycenters agree within the induced tolerance.
[[nodiscard]] bool kolmogorov_equivalent(std::span<const double> s1, std::span<const double> s2,
                                         const Chart& chart, double tol);

/// Grid search of the quadratic functional c -> mean of (G(x_i) - G(c))^2.
/// Serves as an independent optimization-side check of the closed form;
/// returns the grid argmin.
[[nodiscard]] double argmin_characterization_check(std::span<const double> sample,
                                                   const Chart& chart, const GridSpec& grid);

}  // namespace probgeo
