#include "probgeo/multivariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "probgeo/barycenter.hpp"
#include "probgeo/errors.hpp"
#include "probgeo/numerics.hpp"

namespace probgeo {

VectorSample VectorSample::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw InsufficientData("VectorSample: no rows");
    const std::size_t d = rows.front().size();
    if (d < 1) throw InvalidParameter("VectorSample: dimension must be >= 1");
    VectorSample vs;
    vs.values.rows = rows.size();
    vs.values.cols = d;
    vs.values.data.reserve(rows.size() * d);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != d) {
            throw InvalidParameter("VectorSample: row " + std::to_string(r) +
                                   " has mismatched dimension");
        }
        for (double v : rows[r]) {
            if (!std::isfinite(v)) {
                throw InvalidParameter("VectorSample: observations must be finite");
            }
            vs.values.data.push_back(v);
        }
    }
    return vs;
}

std::string corner_label(const std::vector<CornerSide>& corner) {
    std::string label;
    label.reserve(corner.size());
    for (CornerSide side : corner) label.push_back(side == CornerSide::lo ? 'l' : 'h');
    return label;
}

Matrix pushforward(const VectorSample& vs, const ChartBundle& bundle) {
    if (bundle.size() != vs.dimension()) {
        throw InvalidParameter("pushforward: bundle has " + std::to_string(bundle.size()) +
                               " charts but the sample has dimension " +
                               std::to_string(vs.dimension()));
    }
    Matrix out;
    out.rows = vs.size();
    out.cols = vs.dimension();
    out.data.resize(out.rows * out.cols);
    for (std::size_t c = 0; c < out.cols; ++c) {
        for (std::size_t r = 0; r < out.rows; ++r) {
            try {
                out(r, c) = bundle[c].forward(vs.values(r, c));
            } catch (const DomainViolation& e) {
                throw DomainViolation("pushforward: column " + std::to_string(c) + ": " +
                                      e.what());
            }
        }
    }
    return out;
}

Matrix pseudo_observations(const VectorSample& vs) {
    const std::size_t n = vs.size();
    if (n < 2) throw InsufficientData("pseudo_observations: needs at least 2 rows");
    const std::size_t d = vs.dimension();

    Matrix out;
    out.rows = n;
    out.cols = d;
    out.data.resize(n * d);

    std::vector<std::size_t> order(n);
    for (std::size_t c = 0; c < d; ++c) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return vs.values(a, c) < vs.values(b, c);
        });
        // average rank over tied runs, then rank/(n+1)
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && vs.values(order[j], c) == vs.values(order[i], c)) ++j;
            const double avg_rank =
                (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
            const double u = avg_rank / static_cast<double>(n + 1);
            for (std::size_t k = i; k < j; ++k) out(order[k], c) = u;
            i = j;
        }
    }
    return out;
}

CubeReport multivariate_barycenter(const VectorSample& vs, const ChartBundle& bundle) {
    const Matrix coords = pushforward(vs, bundle);
    CubeReport report;
    report.n = vs.size();
    report.coordinate_mean.reserve(coords.cols);
    report.barycenter.reserve(coords.cols);
    for (std::size_t c = 0; c < coords.cols; ++c) {
        CompensatedSum acc;
        for (std::size_t r = 0; r < coords.rows; ++r) acc.add(coords(r, c));
        const double mean = acc.value() / static_cast<double>(coords.rows);
        const Interval range = bundle[c].coordinate_range();
        const double scaled = (mean - range.lo) / (range.hi - range.lo);
        if (!(scaled > kBoundaryErrorTol && scaled < 1.0 - kBoundaryErrorTol)) {
            throw BoundaryValue("multivariate_barycenter: component " + std::to_string(c) +
                                " coordinate mean sits on the boundary of its range");
        }
        report.coordinate_mean.push_back(mean);
        report.barycenter.push_back(bundle[c].inverse(mean));
    }
    return report;
}

double corner_mass(const Matrix& coords, double eps, const std::vector<CornerSide>& corner) {
    if (!(eps > 0.0 && eps < 0.5)) {
        throw OutOfRange("corner_mass: epsilon must lie in (0, 1/2)");
    }
    if (corner.size() != coords.cols) {
        throw InvalidParameter("corner_mass: corner dimension mismatch");
    }
    if (coords.rows == 0) throw InsufficientData("corner_mass: empty coordinate matrix");

    std::size_t hits = 0;
    for (std::size_t r = 0; r < coords.rows; ++r) {
        bool inside = true;
        for (std::size_t c = 0; c < coords.cols && inside; ++c) {
            const double u = coords(r, c);
            inside = corner[c] == CornerSide::lo ? (u < eps) : (u > 1.0 - eps);
        }
        if (inside) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(coords.rows);
}

std::map<std::string, double> all_corner_masses(const Matrix& coords, double eps) {
    if (coords.cols > 16) {
        throw InvalidParameter("all_corner_masses: dimension too large to enumerate corners");
    }
    std::map<std::string, double> masses;
    const std::size_t total = std::size_t{1} << coords.cols;
    std::vector<CornerSide> corner(coords.cols);
    for (std::size_t mask = 0; mask < total; ++mask) {
        for (std::size_t c = 0; c < coords.cols; ++c) {
            corner[c] = (mask >> c) & 1 ? CornerSide::hi : CornerSide::lo;
        }
        masses[corner_label(corner)] = corner_mass(coords, eps, corner);
    }
    return masses;
}

}  // namespace probgeo
