#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>

namespace probgeo {

/// Neumaier-compensated accumulator. Fixed evaluation order, so reductions
/// are reproducible bit-for-bit across runs.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

[[nodiscard]] double compensated_mean(std::span<const double> values) noexcept;

/// Sample variance with the n-1 denominator (two-pass, compensated).
[[nodiscard]] double sample_variance(std::span<const double> values) noexcept;

struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    [[nodiscard]] bool contains(double x) const noexcept { return x > lo && x < hi; }
};

/// Root of a continuous increasing function f on the real line: returns x
/// with f(x) = target, located by exponential bracket expansion around
/// `guess` followed by bisection to absolute width `width`.
[[nodiscard]] double invert_increasing(const std::function<double(double)>& f, double target,
                                       double guess, double initial_step, double width = 1e-13);

struct GridSpec {
    double lo = 0.0;
    double hi = 1.0;
    double step = 1e-3;
};

}  // namespace probgeo
