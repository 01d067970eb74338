#pragma once

#include <span>
#include <string>
#include <vector>

#include "probgeo/chart.hpp"
#include "probgeo/distribution.hpp"
#include "probgeo/quadrature.hpp"

namespace probgeo {

/// Boundary-concentration diagnostics of the coordinate variable
/// U = G(X). Everything here lives on (0,1); nothing is pulled back.
struct BoundaryReport {
    double epsilon = 0.0;
    double lower_mass = 0.0;  ///< P(U < epsilon)
    double upper_mass = 0.0;  ///< P(U > 1 - epsilon)
    std::vector<int> orders;
    std::vector<double> coordinate_moments;     ///< E[U^r] per requested order
    std::vector<double> concentration_indices;  ///< E[U^r] + E[(1-U)^r]
    std::string chart;
};

/// Mass of the coordinate variable within epsilon of the boundary.
/// Sample inputs give empirical frequencies; distribution inputs use the
/// exact identity P(U < eps) = F(G^-1(eps)). Requires 0 < eps < 1/2.
[[nodiscard]] BoundaryReport boundary_mass(std::span<const double> sample, const Chart& chart,
                                           double eps);
[[nodiscard]] BoundaryReport boundary_mass(const Distribution& d, const Chart& chart,
                                           double eps);

/// Symmetric boundary-concentration index E[U^r] + E[(1-U)^r], in (0, 2].
/// Higher orders weight the neighbourhoods of 0 and 1 more strongly, so at
/// fixed r a larger index means more boundary concentration.
[[nodiscard]] double boundary_concentration_index(std::span<const double> sample,
                                                  const Chart& chart, int order);
[[nodiscard]] double boundary_concentration_index(const Distribution& d, const Chart& chart,
                                                  int order, const QuadratureSpec& quad = {});

/// Full diagnostic report: boundary masses plus moments and indices for
/// each requested order.
[[nodiscard]] BoundaryReport boundary_report(std::span<const double> sample, const Chart& chart,
                                             double eps, std::span<const int> orders);
[[nodiscard]] BoundaryReport boundary_report(const Distribution& d, const Chart& chart,
                                             double eps, std::span<const int> orders,
                                             const QuadratureSpec& quad = {});

}  // namespace probgeo
