#include <catch2/catch.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "oracle_lsq.hpp"
#include "sympol/polyfit.hpp"
#include "sympol/symbolic.hpp"

using namespace sympol;

namespace {

std::vector<std::vector<double>> rows_of(const DesignMatrix& z) {
    std::vector<std::vector<double>> rows(z.n, std::vector<double>(z.degree + 1));
    for (int r = 0; r < z.n; ++r)
        for (int c = 0; c <= z.degree; ++c) rows[r][c] = z.m(r, c);
    return rows;
}

}  // namespace

TEST_CASE("oracle solver handles known systems") {
    // exact square solve: [[1,0],[1,1]] beta = [2,-1]
    const std::vector<std::vector<double>> z{{1, 0}, {1, 1}};
    const auto beta = oracle::least_squares(z, {2, -1});
    CHECK(beta[0] == Approx(2.0).margin(1e-14));
    CHECK(beta[1] == Approx(-3.0).margin(1e-14));

    // overdetermined consistent system recovers the generating line
    std::vector<std::vector<double>> z2;
    std::vector<double> y2;
    for (int t = 0; t < 9; ++t) {
        const double x = t / 8.0;
        z2.push_back({1.0, x});
        y2.push_back(0.5 - 2.0 * x);
    }
    const auto beta2 = oracle::least_squares(z2, y2);
    CHECK(beta2[0] == Approx(0.5).margin(1e-12));
    CHECK(beta2[1] == Approx(-2.0).margin(1e-12));
    CHECK(oracle::residual_norm(z2, y2, beta2) < 1e-12);
}

TEST_CASE("design matrix entries for small configurations") {
    const auto z1 = build_design_matrix(2, 1);
    CHECK(z1.m(0, 0) == 1.0);
    CHECK(z1.m(0, 1) == 0.0);
    CHECK(z1.m(1, 0) == 1.0);
    CHECK(z1.m(1, 1) == 1.0);

    const auto z2 = build_design_matrix(3, 2);
    const double expect[3][3] = {{1, 0, 0}, {1, 0.5, 0.25}, {1, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(z2.m(r, c) == Approx(expect[r][c]).margin(1e-15));

    const auto z0 = build_design_matrix(5, 0);
    for (int r = 0; r < 5; ++r) CHECK(z0.m(r, 0) == 1.0);

    CHECK_THROWS_WITH(build_design_matrix(3, 3), Catch::Contains("underdetermined"));
}

TEST_CASE("projection matrix exact values") {
    const auto p1 = build_projection(build_design_matrix(2, 1));
    CHECK(p1.m(0, 0) == Approx(1.0).margin(1e-12));
    CHECK(p1.m(0, 1) == Approx(0.0).margin(1e-12));
    CHECK(p1.m(1, 0) == Approx(-1.0).margin(1e-12));
    CHECK(p1.m(1, 1) == Approx(1.0).margin(1e-12));

    const auto p0 = build_projection(build_design_matrix(3, 0));
    for (int c = 0; c < 3; ++c) CHECK(p0.m(0, c) == Approx(1.0 / 3.0).margin(1e-14));
}

TEST_CASE("projection is a left inverse across the hyperparameter grid") {
    for (int n : {100, 200, 300, 400}) {
        for (int d = 1; d <= 8; ++d) {
            const auto z = build_design_matrix(n, d);
            const auto p = build_projection(z);
            const Eigen::MatrixXd eye = p.m * z.m;
            for (int r = 0; r <= d; ++r)
                for (int c = 0; c <= d; ++c)
                    CHECK(std::fabs(eye(r, c) - (r == c ? 1.0 : 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("fit_window basics") {
    const auto p = build_projection(build_design_matrix(100, 1));

    std::vector<double> zeros(100, 0.0);
    for (double b : fit_window(p, zeros)) CHECK(b == 0.0);

    // in-model signal y = 2 - 3x is recovered exactly
    std::vector<double> y(100);
    for (int t = 0; t < 100; ++t) y[t] = 2.0 - 3.0 * (t / 99.0);
    const auto beta = fit_window(p, y);
    CHECK(beta[0] == Approx(2.0).margin(1e-10));
    CHECK(beta[1] == Approx(-3.0).margin(1e-10));

    const std::vector<double> wrong_length(7, 0.0);
    CHECK_THROWS(fit_window(p, wrong_length));
}

TEST_CASE("fit matches the brute-force oracle on random windows") {
    const auto z = build_design_matrix(100, 8);
    const auto p = build_projection(z);
    const auto z_rows = rows_of(z);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> y(100);
        for (auto& v : y) v = dist(rng);
        const auto beta = fit_window(p, y);
        const auto beta_oracle = oracle::least_squares(z_rows, y);
        const double r = oracle::residual_norm(z_rows, y, beta);
        const double r_oracle = oracle::residual_norm(z_rows, y, beta_oracle);
        CHECK(std::fabs(r - r_oracle) < 1e-9);
        CHECK(r * r <= r_oracle * r_oracle + 1e-9);  // loss optimality
    }
}

TEST_CASE("residuals are orthogonal to the design columns") {
    const auto z = build_design_matrix(100, 8);
    const auto p = build_projection(z);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> dist(0.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXd y(100);
        for (int i = 0; i < 100; ++i) y(i) = dist(rng);
        const auto beta = fit_window(p, {y.data(), 100});
        Eigen::Map<const Eigen::VectorXd> bm(beta.data(), beta.size());
        const Eigen::VectorXd grad = z.m.transpose() * (y - z.m * bm);
        CHECK(grad.norm() < 1e-6 * y.norm());
    }
}

TEST_CASE("extract_coefficients shapes and degenerate content") {
    // single series, N=5, n=4 -> exactly one window
    SeriesDataset one(std::vector<LabeledSeries>{{0, {1, 2, 3, 2, 1}}});
    const auto bag = extract_coefficients(one, 4, 1);
    REQUIRE(bag.series.size() == 1);
    CHECK(bag.windows_per_series == 1);
    CHECK(bag.total_vectors() == 1);
    CHECK(bag.at(0, 0).size() == 2);

    // constant series: normalization yields zeros, so every beta is zero
    SeriesDataset flat(std::vector<LabeledSeries>{{0, std::vector<double>(20, 3.5)}});
    const auto fbag = extract_coefficients(flat, 6, 2);
    for (std::size_t t = 0; t < fbag.windows_per_series; ++t)
        for (double b : fbag.at(0, t)) CHECK(b == 0.0);

    CHECK_THROWS_WITH(extract_coefficients(one, 5, 1), Catch::Contains("window exceeds series"));
}

TEST_CASE("extract_coefficients is deterministic across worker counts") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<LabeledSeries> series(6);
    for (std::size_t i = 0; i < series.size(); ++i) {
        series[i].label = static_cast<int>(i % 2);
        series[i].values.resize(120);
        for (auto& v : series[i].values) v = dist(rng);
    }
    SeriesDataset ds(series);
    const auto a = extract_coefficients(ds, 20, 3, TimeAxis::unit, 1);
    const auto b = extract_coefficients(ds, 20, 3, TimeAxis::unit, 4);
    REQUIRE(a.series.size() == b.series.size());
    for (std::size_t i = 0; i < a.series.size(); ++i) CHECK(a.series[i] == b.series[i]);
}

TEST_CASE("windows aligned on a repeated cubic pattern share a word downstream") {
    // series = the same cubic pattern three times; windows at t=0 and t=n see
    // identical content and must map to the same word
    const int n = 30;
    std::vector<double> pattern(n);
    for (int t = 0; t < n; ++t) {
        const double x = -2.0 + 4.0 * t / (n - 1);
        pattern[t] = 0.25 * x * x * x;
    }
    std::vector<double> values;
    for (int rep = 0; rep < 3; ++rep) values.insert(values.end(), pattern.begin(), pattern.end());
    SeriesDataset ds(std::vector<LabeledSeries>{{0, values}});

    const auto bag = extract_coefficients(ds, n, 3);
    const auto thresholds = compute_thresholds(bag, 4);
    const auto words = coefficients_to_words(bag, thresholds, Alphabet(4));
    CHECK(words.series[0][0] == words.series[0][n]);
}
