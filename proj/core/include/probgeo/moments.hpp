#pragma once

#include <optional>
#include <span>

#include "probgeo/chart.hpp"
#include "probgeo/distribution.hpp"
#include "probgeo/quadrature.hpp"

namespace probgeo {

/// A moment taken in chart coordinates. The raw value always exists (the
/// coordinate variable is bounded); the pullback through G^-1 is attached
/// only when the raw value lies strictly inside (0,1).
struct MomentReport {
    int order = 1;
    double raw_coordinate_moment = 0.0;
    std::optional<double> pulled_back;
    bool centred = false;
    bool absolute = false;
    bool defined = false;  ///< pulled_back.has_value()
};

/// E[(G(X))^r], r >= 1.
[[nodiscard]] MomentReport initial_moment(std::span<const double> sample, const Chart& chart,
                                          int order);
[[nodiscard]] MomentReport initial_moment(const Distribution& d, const Chart& chart, int order,
                                          const QuadratureSpec& quad = {});

/// E[(G(X) - E[G(X)])^r].
[[nodiscard]] MomentReport centred_moment(std::span<const double> sample, const Chart& chart,
                                          int order);
[[nodiscard]] MomentReport centred_moment(const Distribution& d, const Chart& chart, int order,
                                          const QuadratureSpec& quad = {});

/// E[|G(X) - E[G(X)]|^r].
[[nodiscard]] MomentReport absolute_centred_moment(std::span<const double> sample,
                                                   const Chart& chart, int order);
[[nodiscard]] MomentReport absolute_centred_moment(const Distribution& d, const Chart& chart,
                                                   int order, const QuadratureSpec& quad = {});

/// Centred moment of order two, pulled back when inside (0,1).
[[nodiscard]] MomentReport kolmogorov_variance(std::span<const double> sample,
                                               const Chart& chart);
[[nodiscard]] MomentReport kolmogorov_variance(const Distribution& d, const Chart& chart,
                                               const QuadratureSpec& quad = {});

/// phi(t) = E[exp(t G(X))]; finite for every t since G(X) is bounded.
[[nodiscard]] double pseudo_mgf(std::span<const double> sample, const Chart& chart, double t);
[[nodiscard]] double pseudo_mgf(const Distribution& d, const Chart& chart, double t,
                                const QuadratureSpec& quad = {});

/// k-th derivative of phi at t = 0. Evaluated through the moment identity
/// phi^(k)(0) = E[(G(X))^k] rather than numerical differentiation.
[[nodiscard]] double pseudo_mgf_derivative(std::span<const double> sample, const Chart& chart,
                                           int k);
[[nodiscard]] double pseudo_mgf_derivative(const Distribution& d, const Chart& chart, int k,
                                           const QuadratureSpec& quad = {});

}  // namespace probgeo
