#include <catch2/catch.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "sympol/baselines.hpp"

using namespace sympol;

TEST_CASE("paa chunk means") {
    CHECK(paa(std::vector<double>{1, 1, 3, 3}, 2) == std::vector<double>{1, 3});
    CHECK(paa(std::vector<double>(12, 2.5), 3) == std::vector<double>{2.5, 2.5, 2.5});
    CHECK(paa(std::vector<double>{0, 2, 4, 6}, 4) == std::vector<double>{0, 2, 4, 6});
    CHECK_THROWS(paa(std::vector<double>{1, 2, 3}, 2));
}

TEST_CASE("alpha=4 SAX breakpoints are the classical values") {
    CHECK(sax_breakpoints(4) == std::vector<double>{-0.67, 0.0, 0.67});
    CHECK(sax_breakpoints(6).size() == 5);
    CHECK(sax_breakpoints(8).size() == 7);
    CHECK_THROWS(sax_breakpoints(5));
}

TEST_CASE("sax_word characters") {
    const auto bp = sax_breakpoints(4);

    // rising normalized ramp -> one symbol per quartile
    std::vector<double> ramp(100);
    for (int t = 0; t < 100; ++t) ramp[t] = static_cast<double>(t);
    const auto norm = znormalize_window(ramp);
    CHECK(sax_word(paa(norm, 4), bp) == "ABCD");

    // zero means sit on the middle breakpoint and go right
    CHECK(sax_word(std::vector<double>{0, 0, 0, 0}, bp) == "CCCC");

    CHECK(sax_word(std::vector<double>{-1, -2, -0.7}, bp) == "AAA");
}

TEST_CASE("bsax window rounding and word length") {
    const auto cfg = SaxConfig::make(100, 3, 4);
    CHECK(cfg.window == 102);
    CHECK(SaxConfig::make(100, 4, 4).window == 100);
    CHECK(SaxConfig::make(101, 5, 4).window == 105);

    std::mt19937_64 rng(6);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<LabeledSeries> series(3);
    for (auto& s : series) {
        s.values.resize(300);
        for (auto& v : s.values) v = dist(rng);
    }
    SeriesDataset ds(series);
    const auto result = bsax_transform(ds, cfg);
    for (const auto& w : result.dictionary.words()) CHECK(w.size() == 3);

    // one word per window: rows sum to N - rounded n
    for (const auto& row : result.histogram.rows) {
        long sum = 0;
        for (int c : row) sum += c;
        CHECK(sum == static_cast<long>(ds.length()) - cfg.window);
    }
}

TEST_CASE("a constant series produces a single-word dictionary") {
    SeriesDataset ds(std::vector<LabeledSeries>{{0, std::vector<double>(64, 1.25)}});
    const auto result = bsax_transform(ds, SaxConfig::make(16, 4, 4));
    CHECK(result.dictionary.size() == 1);
}

TEST_CASE("euclidean distance") {
    const std::vector<double> a{0, 0}, b{3, 4};
    CHECK(euclidean_distance(a, a) == 0.0);
    CHECK(euclidean_distance(a, b) == Approx(5.0));
    CHECK(euclidean_distance(b, a) == euclidean_distance(a, b));
    CHECK_THROWS(euclidean_distance(a, std::vector<double>{1, 2, 3}));
}

TEST_CASE("dtw distance hand cases") {
    const std::vector<double> x{0.3, -1.2, 4.0, 0.0};
    CHECK(dtw_distance(x, x) == 0.0);
    CHECK(dtw_distance(std::vector<double>{0}, std::vector<double>{3}) == Approx(9.0));
    CHECK(dtw_distance(std::vector<double>{0, 0, 1}, std::vector<double>{0, 1}) == 0.0);
}

TEST_CASE("dtw is symmetric and no worse than the diagonal alignment") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> a(30), b(30);
        for (auto& v : a) v = dist(rng);
        for (auto& v : b) v = dist(rng);
        const double ab = dtw_distance(a, b);
        CHECK(ab == Approx(dtw_distance(b, a)));
        double diagonal = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) diagonal += (a[i] - b[i]) * (a[i] - b[i]);
        CHECK(ab <= diagonal + 1e-12);
    }
}
