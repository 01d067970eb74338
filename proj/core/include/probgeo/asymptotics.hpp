#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "probgeo/chart.hpp"
#include "probgeo/distribution.hpp"
#include "probgeo/quadrature.hpp"

namespace probgeo {

struct AsymptoticReport {
    double barycenter = 0.0;
    double coordinate_variance = 0.0;     ///< Var(G(X)), always in [0, 1/4]
    double chart_derivative_at_b = 0.0;   ///< G'(barycenter)
    double asymptotic_variance = 0.0;     ///< coordinate_variance / G'(b)^2
    double standard_error = 0.0;          ///< sqrt(asymptotic_variance / n)
    std::size_t n = 0;
    bool smoothed_derivative = false;  ///< empirical chart: averaged one-sided slopes
};

struct SimulationReport {
    enum class Mode { lln, clt };
    Mode mode = Mode::clt;
    std::uint64_t seed = 0;
    std::size_t reps = 0;  ///< clt: replicate count; lln: 1 (single path)
    std::size_t n = 0;     ///< clt: per-replicate size; lln: largest grid point
    std::vector<std::size_t> n_grid;     ///< lln only
    std::vector<double> estimates;       ///< clt: per replicate; lln: per grid point
    std::vector<double> scaled_errors;   ///< sqrt(n) * (estimate - target)
    double target = 0.0;                 ///< quadrature barycenter
    double target_variance = 0.0;        ///< delta-method variance with exact quantities
    double empirical_variance = 0.0;     ///< variance of scaled errors (n-1 denominator)
    bool empirical_variance_defined = false;
};

/// Plug-in delta-method standard error for the empirical barycenter:
/// sample variance (n-1) of the coordinates over the squared chart slope
/// at the plug-in barycenter.
[[nodiscard]] AsymptoticReport delta_method_stderr(std::span<const double> sample,
                                                   const Chart& chart);

/// Limit variance of the self-chart barycenter: 1 / (12 f(m)^2) at the
/// median m.
[[nodiscard]] double intrinsic_clt_variance(const Distribution& d);

/// Limit variance of the classical sample median: 1 / (4 f(m)^2). The
/// ratio intrinsic/median is 1/3 for every admissible law.
[[nodiscard]] double median_clt_variance(const Distribution& d);

/// One sample path, reporting the empirical barycenter along n_grid
/// together with the quadrature truth.
[[nodiscard]] SimulationReport run_lln_experiment(const Distribution& d, const Chart& chart,
                                                  std::span<const std::size_t> n_grid,
                                                  std::uint64_t seed,
                                                  const QuadratureSpec& quad = {});

/// reps independent replicates of the size-n empirical barycenter,
/// sub-seeded as derive_substream(seed, r). Replicates may run on several
/// threads (PROBGEO_THREADS caps the pool); results are collected by
/// replicate index, so the report is identical regardless of thread count.
[[nodiscard]] SimulationReport run_clt_experiment(const Distribution& d, const Chart& chart,
                                                  std::size_t n, std::size_t reps,
                                                  std::uint64_t seed,
                                                  const QuadratureSpec& quad = {});

/// Kolmogorov-Smirnov distance between the empirical law of `values` and
/// the standard normal cdf.
[[nodiscard]] double ks_normality_statistic(std::span<const double> values);

/// Thread pool width: PROBGEO_THREADS when set, otherwise the hardware
/// concurrency (at least 1).
[[nodiscard]] unsigned thread_budget();

}  // namespace probgeo
