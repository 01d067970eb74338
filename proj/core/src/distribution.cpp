#include "probgeo/distribution.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "probgeo/errors.hpp"
#include "probgeo/rng.hpp"
#include "probgeo/special_functions.hpp"

namespace probgeo {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* message) {
    if (!ok) throw InvalidParameter(message);
}

void require_finite(double x, const char* message) {
    if (!std::isfinite(x)) throw InvalidParameter(message);
}

std::string format_param(double v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

}  // namespace

Distribution Distribution::uniform(double a, double b) {
    require_finite(a, "uniform: a must be finite");
    require_finite(b, "uniform: b must be finite");
    require(a < b, "uniform: requires a < b");
    return {Family::uniform, a, b};
}

Distribution Distribution::normal(double mu, double sigma) {
    require_finite(mu, "normal: mu must be finite");
    require(std::isfinite(sigma) && sigma > 0, "normal: requires sigma > 0");
    return {Family::normal, mu, sigma};
}

Distribution Distribution::logistic(double mu, double s) {
    require_finite(mu, "logistic: mu must be finite");
    require(std::isfinite(s) && s > 0, "logistic: requires s > 0");
    return {Family::logistic, mu, s};
}

Distribution Distribution::cauchy(double x0, double gamma) {
    require_finite(x0, "cauchy: x0 must be finite");
    require(std::isfinite(gamma) && gamma > 0, "cauchy: requires gamma > 0");
    return {Family::cauchy, x0, gamma};
}

Distribution Distribution::student_t(double nu) {
    require(std::isfinite(nu) && nu > 0, "studentt: requires nu > 0");
    return {Family::student_t, nu, 0.0};
}

Distribution Distribution::pareto(double x_m, double alpha) {
    require(std::isfinite(x_m) && x_m > 0, "pareto: requires x_m > 0");
    require(std::isfinite(alpha) && alpha > 0, "pareto: requires alpha > 0");
    return {Family::pareto, x_m, alpha};
}

Distribution Distribution::exponential(double lambda) {
    require(std::isfinite(lambda) && lambda > 0, "exponential: requires lambda > 0");
    return {Family::exponential, lambda, 0.0};
}

double Distribution::cdf(double x) const {
    switch (family_) {
        case Family::uniform:
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        case Family::normal:
            return normal_cdf((x - p1_) / p2_);
        case Family::logistic: {
            const double z = (x - p1_) / p2_;
            // split to keep both tails accurate
            return z >= 0 ? 1.0 / (1.0 + std::exp(-z))
                          : std::exp(z) / (1.0 + std::exp(z));
        }
        case Family::cauchy:
            return 0.5 + std::atan((x - p1_) / p2_) / kPi;
        case Family::student_t: {
            if (x == 0.0) return 0.5;
            const double half_tail = 0.5 * incomplete_beta(p1_ / 2.0, 0.5, p1_ / (p1_ + x * x));
            return x < 0 ? half_tail : 1.0 - half_tail;
        }
        case Family::pareto:
            if (x <= p1_) return 0.0;
            return -std::expm1(p2_ * std::log(p1_ / x));
        case Family::exponential:
            if (x <= 0.0) return 0.0;
            return -std::expm1(-p1_ * x);
    }
    return 0.0;  // unreachable
}

double Distribution::pdf(double x) const {
    switch (family_) {
        case Family::uniform:
            return (x > p1_ && x < p2_) ? 1.0 / (p2_ - p1_) : 0.0;
        case Family::normal:
            return normal_pdf((x - p1_) / p2_) / p2_;
        case Family::logistic: {
            const double z = std::abs(x - p1_) / p2_;
            const double ez = std::exp(-z);
            return ez / (p2_ * (1.0 + ez) * (1.0 + ez));
        }
        case Family::cauchy: {
            const double z = (x - p1_) / p2_;
            return 1.0 / (kPi * p2_ * (1.0 + z * z));
        }
        case Family::student_t: {
            const double nu = p1_;
            const double log_norm = std::lgamma((nu + 1.0) / 2.0) - std::lgamma(nu / 2.0) -
                                    0.5 * std::log(nu * kPi);
            return std::exp(log_norm - (nu + 1.0) / 2.0 * std::log1p(x * x / nu));
        }
        case Family::pareto:
            if (x <= p1_) return 0.0;
            return p2_ * std::exp(p2_ * std::log(p1_) - (p2_ + 1.0) * std::log(x));
        case Family::exponential:
            return x > 0.0 ? p1_ * std::exp(-p1_ * x) : 0.0;
    }
    return 0.0;  // unreachable
}

double Distribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) {
        throw OutOfRange("quantile: p must lie in (0,1)");
    }
    switch (family_) {
        case Family::uniform:
            return p1_ + p * (p2_ - p1_);
        case Family::normal:
            return p1_ + p2_ * normal_quantile(p);
        case Family::logistic:
            return p1_ + p2_ * (std::log(p) - std::log1p(-p));
        case Family::cauchy:
            return p1_ + p2_ * std::tan(kPi * (p - 0.5));
        case Family::student_t: {
            const double nu = p1_;
            if (p == 0.5) return 0.0;
            // closed forms for nu = 1, 2; root search seeded by the normal
            // quantile otherwise
            if (nu == 1.0) return std::tan(kPi * (p - 0.5));
            if (nu == 2.0) {
                const double s = 2.0 * p - 1.0;
                return s * std::sqrt(2.0 / (1.0 - s * s));
            }
            const double seed = normal_quantile(p);
            return invert_increasing([this](double x) { return cdf(x); }, p, seed,
                                     1.0 + std::abs(seed));
        }
        case Family::pareto:
            return p1_ * std::exp(-std::log1p(-p) / p2_);
        case Family::exponential:
            return -std::log1p(-p) / p1_;
    }
    return 0.0;  // unreachable
}

Interval Distribution::support() const noexcept {
    switch (family_) {
        case Family::uniform:
            return {p1_, p2_};
        case Family::pareto:
            return {p1_, kInf};
        case Family::exponential:
            return {0.0, kInf};
        default:
            return {-kInf, kInf};
    }
}

Sample Distribution::sample(std::size_t n, std::uint64_t seed) const {
    CounterRng rng(seed);
    Sample draws;
    draws.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        draws.push_back(quantile(rng.next_open_unit()));
    }
    return draws;
}

std::string Distribution::description() const {
    switch (family_) {
        case Family::uniform:
            return "uniform:" + format_param(p1_) + "," + format_param(p2_);
        case Family::normal:
            return "normal:" + format_param(p1_) + "," + format_param(p2_);
        case Family::logistic:
            return "logistic:" + format_param(p1_) + "," + format_param(p2_);
        case Family::cauchy:
            return "cauchy:" + format_param(p1_) + "," + format_param(p2_);
        case Family::student_t:
            return "studentt:" + format_param(p1_);
        case Family::pareto:
            return "pareto:" + format_param(p1_) + "," + format_param(p2_);
        case Family::exponential:
            return "exponential:" + format_param(p1_);
    }
    return {};
}

}  // namespace probgeo
