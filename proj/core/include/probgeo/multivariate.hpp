#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "probgeo/chart.hpp"

namespace probgeo {

/// Row-major matrix of observations; rows are d-dimensional vectors.
struct Matrix {
    std::vector<double> data;
    std::size_t rows = 0;
    std::size_t cols = 0;

    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const {
        return data[r * cols + c];
    }
    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

/// Ordered multivariate sample.
struct VectorSample {
    Matrix values;

    [[nodiscard]] std::size_t size() const noexcept { return values.rows; }
    [[nodiscard]] std::size_t dimension() const noexcept { return values.cols; }

    /// Builds from row vectors; all rows must share one dimension >= 1.
    static VectorSample from_rows(const std::vector<std::vector<double>>& rows);
};

/// One chart per component.
using ChartBundle = std::vector<Chart>;

/// Corner of the unit hypercube, one entry per component.
enum class CornerSide { lo, hi };

/// Label such as "hl": 'l' = near 0, 'h' = near 1, one character per
/// component.
[[nodiscard]] std::string corner_label(const std::vector<CornerSide>& corner);

struct CubeReport {
    std::vector<double> coordinate_mean;          ///< componentwise mean of G_i(X_i)
    std::vector<double> barycenter;               ///< componentwise pullback
    std::map<std::string, double> corner_masses;  ///< label -> empirical mass
    std::size_t n = 0;
};

/// Componentwise coordinates U_i = G_i(X_i); output rows lie in the open
/// unit cube. DomainViolation messages name the offending column.
[[nodiscard]] Matrix pushforward(const VectorSample& vs, const ChartBundle& bundle);

/// Rank-based copula coordinates: componentwise rank/(n+1), ties resolved
/// by average rank. Needs n >= 2 rows.
[[nodiscard]] Matrix pseudo_observations(const VectorSample& vs);

/// Componentwise coordinate means and pullbacks. BoundaryValue names the
/// component whose mean degenerates.
[[nodiscard]] CubeReport multivariate_barycenter(const VectorSample& vs,
                                                 const ChartBundle& bundle);

/// Fraction of coordinate rows with every component inside its corner
/// band (u < eps for lo, u > 1-eps for hi). Requires 0 < eps < 1/2.
[[nodiscard]] double corner_mass(const Matrix& coords, double eps,
                                 const std::vector<CornerSide>& corner);

/// All 2^d corner masses of a coordinate matrix, keyed by label.
[[nodiscard]] std::map<std::string, double> all_corner_masses(const Matrix& coords, double eps);

}  // namespace probgeo
