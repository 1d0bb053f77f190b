#pragma once

// Synthetic long-series benchmark: each class owns a small vocabulary of
// smooth local patterns (random low-degree polynomials plus a sinusoid);
// a series concatenates patterns drawn from its class vocabulary in random
// order and frequency, plus Gaussian noise. Desk-scale surrogate for the
// "local patterns at unpredictable positions" regime.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sympol/timeseries.hpp"

namespace sympol {

struct BagOfPatternsSpec {
    int classes = 2;
    int patterns_per_class = 3;
    int pattern_length = 100;
    int series_length = 1000;  // N
    int instances = 40;        // M, dealt round-robin across classes
    double noise_sigma = 0.05;
    std::uint64_t seed = 1;
};

inline SeriesDataset generate_bag_of_patterns(const BagOfPatternsSpec& spec) {
    if (spec.classes < 2) throw std::invalid_argument("need at least 2 classes");
    if (spec.patterns_per_class < 1) throw std::invalid_argument("need at least 1 pattern per class");
    if (spec.pattern_length < 2 || spec.pattern_length >= spec.series_length)
        throw std::invalid_argument("pattern length must be in [2, series length)");
    if (spec.instances < spec.classes) throw std::invalid_argument("need at least one series per class");
    if (spec.noise_sigma < 0) throw std::invalid_argument("noise sigma must be >= 0");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> amplitude(0.5, 1.5);
    std::uniform_int_distribution<int> cycles(1, 3);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);

    // Class vocabularies: z-normalized templates so every pattern carries the
    // same scale and noise_sigma has a consistent meaning.
    std::vector<std::vector<std::vector<double>>> vocab(static_cast<std::size_t>(spec.classes));
    for (auto& cls : vocab) {
        cls.resize(static_cast<std::size_t>(spec.patterns_per_class));
        for (auto& pattern : cls) {
            const double c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng), c3 = coeff(rng);
            const double a = amplitude(rng);
            const double f = static_cast<double>(cycles(rng));
            const double ph = phase(rng);
            pattern.resize(static_cast<std::size_t>(spec.pattern_length));
            for (int t = 0; t < spec.pattern_length; ++t) {
                const double u = static_cast<double>(t) / static_cast<double>(spec.pattern_length - 1);
                pattern[static_cast<std::size_t>(t)] =
                    c0 + c1 * u + c2 * u * u + c3 * u * u * u + a * std::sin(2.0 * M_PI * f * u + ph);
            }
            pattern = znormalize_window(pattern);
        }
    }

    std::normal_distribution<double> noise(0.0, spec.noise_sigma);
    std::uniform_int_distribution<int> offset(0, spec.pattern_length - 1);
    std::vector<LabeledSeries> series(static_cast<std::size_t>(spec.instances));
    for (int i = 0; i < spec.instances; ++i) {
        const int cls = i % spec.classes;
        LabeledSeries& s = series[static_cast<std::size_t>(i)];
        s.label = cls;
        std::uniform_int_distribution<int> pick(0, spec.patterns_per_class - 1);
        // start at a random phase into the first pattern so slot boundaries do
        // not line up across series
        const std::size_t skip = static_cast<std::size_t>(offset(rng));
        std::vector<double> buffer;
        while (buffer.size() < skip + static_cast<std::size_t>(spec.series_length)) {
            const auto& pattern = vocab[static_cast<std::size_t>(cls)][static_cast<std::size_t>(pick(rng))];
            buffer.insert(buffer.end(), pattern.begin(), pattern.end());
        }
        s.values.assign(buffer.begin() + static_cast<std::ptrdiff_t>(skip),
                        buffer.begin() + static_cast<std::ptrdiff_t>(skip) +
                            spec.series_length);
        if (spec.noise_sigma > 0)
            for (double& v : s.values) v += noise(rng);
    }
    return SeriesDataset(std::move(series));
}

}  // namespace sympol
