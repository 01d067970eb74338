#include "probgeo/numerics.hpp"

#include <cstddef>

#include "probgeo/errors.hpp"

namespace probgeo {

double compensated_mean(std::span<const double> values) noexcept {
    CompensatedSum acc;
    for (double v : values) acc.add(v);
    return acc.value() / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) noexcept {
    const std::size_t n = values.size();
    if (n < 2) return 0.0;
    const double m = compensated_mean(values);
    CompensatedSum acc;
    for (double v : values) {
        const double d = v - m;
        acc.add(d * d);
    }
    return acc.value() / static_cast<double>(n - 1);
}

double invert_increasing(const std::function<double(double)>& f, double target, double guess,
                         double initial_step, double width) {
    double lo = guess;
    double hi = guess;
    double step = initial_step > 0 ? initial_step : 1.0;
    double flo = f(lo);
    double fhi = flo;

    for (int i = 0; i < 2048 && flo > target; ++i) {
        hi = lo;
        lo -= step;
        step *= 2;
        flo = f(lo);
    }
    step = initial_step > 0 ? initial_step : 1.0;
    for (int i = 0; i < 2048 && fhi < target; ++i) {
        lo = hi;
        hi += step;
        step *= 2;
        fhi = f(hi);
    }
    if (!(f(lo) <= target && f(hi) >= target)) {
        throw NonInvertible("invert_increasing: failed to bracket target");
    }

    while (hi - lo > width) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
        if (f(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2;
}

}  // namespace probgeo
