#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "probgeo/numerics.hpp"

namespace probgeo {

enum class Family { uniform, normal, logistic, cauchy, student_t, pareto, exponential };

/// A univariate sample is just an ordered sequence of observations.
using Sample = std::vector<double>;

/// Parametric probability law with cdf, pdf, quantile and inverse-transform
/// sampling. Immutable after construction; parameter constraints are
/// enforced at construction (InvalidParameter otherwise).
///
/// Sampling uses a deterministic counter generator, so equal (seed, n)
/// always reproduces the same draws bit-for-bit.
class Distribution {
public:
    static Distribution uniform(double a, double b);
    static Distribution normal(double mu, double sigma);
    static Distribution logistic(double mu, double s);
    static Distribution cauchy(double x0, double gamma);
    static Distribution student_t(double nu);
    static Distribution pareto(double x_m, double alpha);
    static Distribution exponential(double lambda);

    [[nodiscard]] Family family() const noexcept { return family_; }
    [[nodiscard]] double param1() const noexcept { return p1_; }
    [[nodiscard]] double param2() const noexcept { return p2_; }

    /// P(X <= x); non-decreasing, limits 0 and 1.
    [[nodiscard]] double cdf(double x) const;

    /// Density; zero outside the support.
    [[nodiscard]] double pdf(double x) const;

    /// Inverse cdf on (0,1). Closed form where the family admits one,
    /// otherwise bracketed root search to width 1e-13. Throws OutOfRange
    /// for p outside (0,1).
    [[nodiscard]] double quantile(double p) const;

    [[nodiscard]] double median() const { return quantile(0.5); }

    /// Open interior of the support.
    [[nodiscard]] Interval support() const noexcept;

    /// n i.i.d. draws by inverse-transform sampling from CounterRng(seed).
    [[nodiscard]] Sample sample(std::size_t n, std::uint64_t seed) const;

    /// Spec string, e.g. "normal:0,1" or "studentt:4".
    [[nodiscard]] std::string description() const;

private:
    Distribution(Family family, double p1, double p2) noexcept
        : family_(family), p1_(p1), p2_(p2) {}

    Family family_;
    double p1_;
    double p2_;
};

}  // namespace probgeo
