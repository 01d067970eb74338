#pragma once

#include <functional>
#include <span>
#include <string>

#include "probgeo/distribution.hpp"
#include "probgeo/numerics.hpp"

namespace probgeo {

/// A probability coordinate chart: a continuous, strictly increasing map
/// G from an open interval I onto (a subinterval of) (0,1), together with
/// its inverse and, when known, its derivative.
///
/// Charts are immutable values; copies share the underlying closures and
/// are safe to use concurrently.
class Chart {
public:
    enum class Kind { analytic, empirical, composed };

    /// G(x). Throws DomainViolation if x lies outside the domain interval.
    [[nodiscard]] double forward(double x) const;

    /// G^-1(u). The argument must lie in the forward range; analytic and
    /// empirical charts require u in (0,1) and throw OutOfRange otherwise.
    [[nodiscard]] double inverse(double u) const;

    [[nodiscard]] bool has_derivative() const noexcept { return static_cast<bool>(deriv_); }

    /// G'(x) > 0. Throws DerivativeUnavailable when no derivative is
    /// attached (monotone compositions with unknown slope).
    [[nodiscard]] double derivative(double x) const;

    [[nodiscard]] const Interval& domain() const noexcept { return domain_; }

    /// Range of forward: (0,1) for proper charts, the affine image for
    /// affine-transformed ones. Boundary checks normalize against this.
    [[nodiscard]] const Interval& coordinate_range() const noexcept {
        return coordinate_range_;
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string& description() const noexcept { return description_; }

    Chart(Interval domain, std::function<double(double)> forward,
          std::function<double(double)> inverse, std::function<double(double)> derivative,
          Kind kind, std::string description, Interval coordinate_range = {0.0, 1.0});

private:
    Interval domain_;
    std::function<double(double)> fwd_;
    std::function<double(double)> inv_;
    std::function<double(double)> deriv_;
    Kind kind_;
    std::string description_;
    Interval coordinate_range_;
};

/// Canonical chart of a continuous strictly increasing law: forward = cdf
/// on the support interior, inverse = quantile, derivative = pdf.
[[nodiscard]] Chart chart_from_distribution(const Distribution& d);

/// Empirical chart through the mid-rank plotting positions of the sample:
/// piecewise linear between distinct sorted values, extended beyond the
/// extreme knots by a rational taper with edge slope tail_slope * level
/// so the range stays inside (0,1). Needs at least two distinct values
/// (InsufficientData otherwise).
[[nodiscard]] Chart chart_from_sample(std::span<const double> sample, double tail_slope = 1.0);

/// a*G + b with a != 0. For a < 0 (or ranges leaving (0,1)) the result is
/// only meaningful for invariance checks and is flagged Kind::composed.
[[nodiscard]] Chart affine_transform(const Chart& c, double a, double b);

/// T o G for a strictly monotone T on (0,1) with supplied inverse. The
/// pair (t, t_inverse) is round-trip checked on a grid; NonInvertible on
/// failure.
[[nodiscard]] Chart compose_monotone(const Chart& c, const std::function<double(double)>& t,
                                     const std::function<double(double)>& t_inverse);

/// Pullback of the Euclidean distance: |G(x) - G(y)|.
[[nodiscard]] double induced_distance(const Chart& c, double x, double y);

}  // namespace probgeo
