#pragma once

// Degree-d polynomial fitting of sliding windows. The design matrix Z and its
// least-squares projection P are built once per (n, d); each window's
// coefficients then cost a single (d+1) x n matrix-vector product, giving an
// overall O(M * d * n * N) extraction over a dataset.

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sympol/parallel.hpp"
#include "sympol/timeseries.hpp"

namespace sympol {

// Window time axis. `unit` rescales indices to x = t/(n-1) in [0,1], which
// keeps Z^T Z well conditioned at large n and high degree. Rescaling
// multiplies coefficient j by the constant (n-1)^j for every window alike, a
// strictly monotone per-coefficient map, so downstream quantile words are
// unchanged. `raw` keeps indices 0..n-1; usable only for small n and degree.
enum class TimeAxis { unit, raw };

// n x (d+1) matrix whose row t holds powers 0..d of the window time axis.
struct DesignMatrix {
    int n = 0;
    int degree = 0;
    TimeAxis axis = TimeAxis::unit;
    Eigen::MatrixXd m;
};

// (d+1) x n left inverse of the design matrix: beta = P * y solves
// min ||y - Z beta||^2.
struct ProjectionMatrix {
    int n = 0;
    int degree = 0;
    Eigen::MatrixXd m;
};

// Fitted coefficients of every sliding window of every series. Coefficient
// index j is the monomial degree, ascending. Each series contributes exactly
// N - n vectors stored window-major.
struct CoefficientBag {
    int degree = 0;
    std::size_t windows_per_series = 0;
    std::vector<std::vector<double>> series;  // [i]: (N-n) * (d+1) doubles

    std::span<const double> at(std::size_t i, std::size_t t) const {
        const std::size_t width = static_cast<std::size_t>(degree) + 1;
        return {series[i].data() + t * width, width};
    }
    std::size_t total_vectors() const { return series.size() * windows_per_series; }
};

inline DesignMatrix build_design_matrix(int n, int degree, TimeAxis axis = TimeAxis::unit) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (n <= degree) throw std::invalid_argument("underdetermined fit: need n >= degree + 1");
    DesignMatrix z;
    z.n = n;
    z.degree = degree;
    z.axis = axis;
    z.m.resize(n, degree + 1);
    for (int t = 0; t < n; ++t) {
        double x = static_cast<double>(t);
        if (axis == TimeAxis::unit) x = n > 1 ? x / static_cast<double>(n - 1) : 0.0;
        double pow = 1.0;  // 0^0 == 1
        for (int j = 0; j <= degree; ++j) {
            z.m(t, j) = pow;
            pow *= x;
        }
    }
    return z;
}

// Mathematically (Z^T Z)^{-1} Z^T; computed through a rank-revealing
// orthogonal decomposition instead of explicit normal-equation inversion.
inline ProjectionMatrix build_projection(const DesignMatrix& z) {
    ProjectionMatrix p;
    p.n = z.n;
    p.degree = z.degree;
    auto cod = z.m.completeOrthogonalDecomposition();
    if (cod.rank() < z.degree + 1)
        throw std::runtime_error("design matrix is rank deficient");
    p.m = cod.pseudoInverse();
    return p;
}

inline std::vector<double> fit_window(const ProjectionMatrix& p, std::span<const double> y) {
    if (static_cast<int>(y.size()) != p.n)
        throw std::invalid_argument("window length does not match projection");
    Eigen::Map<const Eigen::VectorXd> ym(y.data(), y.size());
    Eigen::VectorXd beta = p.m * ym;
    return {beta.data(), beta.data() + beta.size()};
}

// Fit every z-normalized sliding window of every series. Output order is
// fixed (series index, then window start) for any jobs count.
inline CoefficientBag extract_coefficients(const SeriesDataset& dataset, int n, int degree,
                                           TimeAxis axis = TimeAxis::unit, int jobs = 1) {
    if (static_cast<std::size_t>(n) >= dataset.length())
        throw std::invalid_argument("window exceeds series");
    const DesignMatrix z = build_design_matrix(n, degree, axis);
    const ProjectionMatrix p = build_projection(z);

    CoefficientBag bag;
    bag.degree = degree;
    bag.windows_per_series = dataset.length() - static_cast<std::size_t>(n);
    bag.series.resize(dataset.size());

    const std::size_t width = static_cast<std::size_t>(degree) + 1;
    parallel_for(0, dataset.size(), jobs, [&](std::size_t i) {
        const std::vector<double>& values = dataset[i].values;
        std::vector<double>& out = bag.series[i];
        out.resize(bag.windows_per_series * width);
        std::vector<double> norm(static_cast<std::size_t>(n));
        for (std::size_t t = 0; t < bag.windows_per_series; ++t) {
            znormalize_window({values.data() + t, static_cast<std::size_t>(n)}, norm);
            Eigen::Map<const Eigen::VectorXd> ym(norm.data(), n);
            Eigen::Map<Eigen::VectorXd> beta(out.data() + t * width, width);
            beta.noalias() = p.m * ym;
        }
    });
    return bag;
}

}  // namespace sympol
