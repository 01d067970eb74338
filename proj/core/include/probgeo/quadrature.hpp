#pragma once

#include <cstddef>
#include <functional>

namespace probgeo {

struct QuadratureSpec {
    double abs_tol = 1e-11;
    int max_depth = 52;
    std::size_t max_evaluations = 4'000'000;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over the open interval
/// (lo, hi). All abscissae are interior, so integrands defined only on the
/// open interval are safe. Throws QuadratureFailure when the accumulated
/// error estimate exceeds spec.abs_tol.
[[nodiscard]] QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                                         double hi, const QuadratureSpec& spec = {});

/// integrate() over (0,1); the common case for probability-coordinate
/// integrands after the quantile substitution.
[[nodiscard]] QuadratureResult integrate_unit(const std::function<double(double)>& f,
                                              const QuadratureSpec& spec = {});

}  // namespace probgeo
