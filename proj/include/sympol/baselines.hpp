#pragma once

// Comparison methods: SAX word histograms over sliding windows (BSAX),
// whole-series Euclidean nearest neighbor, and dynamic time warping.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympol/bagging.hpp"
#include "sympol/timeseries.hpp"

namespace sympol {

// Equiprobable standard-normal quantile breakpoints. The alpha = 4 row uses
// the classical two-decimal SAX values.
inline std::vector<double> sax_breakpoints(int alpha) {
    switch (alpha) {
        case 4: return {-0.67, 0.0, 0.67};
        case 6: return {-0.9674215661, -0.4307272993, 0.0, 0.4307272993, 0.9674215661};
        case 8:
            return {-1.1503493804, -0.6744897502, -0.3186393640, 0.0,
                    0.3186393640,  0.6744897502,  1.1503493804};
        default:
            throw std::invalid_argument("no SAX breakpoint table for alphabet size " +
                                        std::to_string(alpha));
    }
}

struct SaxConfig {
    int window = 0;       // effective window, divisible by word_length
    int word_length = 0;  // |w|
    int alphabet = 0;
    std::vector<double> breakpoints;

    // Requested window is rounded UP to the nearest multiple of |w|
    // (e.g. 100 -> 102 for |w| = 3).
    static SaxConfig make(int requested_window, int word_length, int alphabet) {
        if (word_length < 1) throw std::invalid_argument("word length must be >= 1");
        if (requested_window < word_length)
            throw std::invalid_argument("window shorter than word length");
        SaxConfig c;
        c.word_length = word_length;
        c.alphabet = alphabet;
        c.window = ((requested_window + word_length - 1) / word_length) * word_length;
        c.breakpoints = sax_breakpoints(alphabet);
        return c;
    }
};

// Piecewise aggregate approximation: means of |w| consecutive equal chunks.
inline std::vector<double> paa(std::span<const double> y, int segments) {
    if (segments < 1) throw std::invalid_argument("segment count must be >= 1");
    if (y.size() % static_cast<std::size_t>(segments) != 0)
        throw std::invalid_argument("window length not divisible by segment count");
    const std::size_t chunk = y.size() / static_cast<std::size_t>(segments);
    std::vector<double> means(static_cast<std::size_t>(segments));
    for (std::size_t k = 0; k < means.size(); ++k) {
        double acc = 0.0;
        for (std::size_t i = k * chunk; i < (k + 1) * chunk; ++i) acc += y[i];
        means[k] = acc / static_cast<double>(chunk);
    }
    return means;
}

// Character k for the smallest k with v < breakpoint[k]; a value at or above
// the last breakpoint takes the final symbol.
inline std::string sax_word(std::span<const double> means, std::span<const double> breakpoints) {
    std::string w(means.size(), '?');
    for (std::size_t i = 0; i < means.size(); ++i) {
        std::size_t k = 0;
        while (k < breakpoints.size() && !(means[i] < breakpoints[k])) ++k;
        w[i] = static_cast<char>('A' + k);
    }
    return w;
}

// One SAX word per z-normalized sliding window of each series.
inline WordBag bsax_wordbags(const SeriesDataset& dataset, const SaxConfig& cfg, int jobs = 1) {
    const std::size_t windows = window_count(dataset.length(), static_cast<std::size_t>(cfg.window));
    WordBag bags;
    bags.series.resize(dataset.size());
    parallel_for(0, dataset.size(), jobs, [&](std::size_t i) {
        const auto& values = dataset[i].values;
        auto& out = bags.series[i];
        out.resize(windows);
        std::vector<double> norm(static_cast<std::size_t>(cfg.window));
        for (std::size_t t = 0; t < windows; ++t) {
            znormalize_window({values.data() + t, static_cast<std::size_t>(cfg.window)}, norm);
            out[t] = sax_word(paa(norm, cfg.word_length), cfg.breakpoints);
        }
    });
    return bags;
}

struct BsaxResult {
    SaxConfig config;
    Dictionary dictionary;
    Histogram histogram;
};

// Dictionary + histogram from SAX words, exactly as the polynomial pipeline.
inline BsaxResult bsax_transform(const SeriesDataset& dataset, const SaxConfig& cfg,
                                 bool numerosity_reduction = false, int jobs = 1) {
    BsaxResult r;
    r.config = cfg;
    WordBag bags = bsax_wordbags(dataset, cfg, jobs);
    if (numerosity_reduction) bags = reduce_numerosity(bags);
    r.dictionary = build_dictionary(bags);
    r.histogram = populate_histogram(bags, r.dictionary, jobs);
    return r;
}

inline double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

// Unconstrained dynamic time warping over all monotone alignments; local cost
// is the squared difference and the accumulated optimum is returned. Any
// strictly monotone final transform leaves nearest-neighbor decisions
// unchanged, so no square root is applied. O(|a| * |b|) time, O(|b|) space.
inline double dtw_distance(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("dtw over empty series");
    const std::size_t cols = b.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(cols + 1, inf), cur(cols + 1, inf);
    prev[0] = 0.0;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = inf;
        for (std::size_t j = 1; j <= cols; ++j) {
            const double d = a[i - 1] - b[j - 1];
            const double best = std::min(prev[j], std::min(cur[j - 1], prev[j - 1]));
            cur[j] = d * d + best;
        }
        std::swap(prev, cur);
    }
    return prev[cols];
}

}  // namespace sympol
