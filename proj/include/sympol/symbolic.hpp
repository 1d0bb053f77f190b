#pragma once

// Equivolume discretization of polynomial coefficients into alphabet words.
// Thresholds are empirical quantiles of each coefficient index's value
// distribution; every coefficient vector becomes a word of d+1 characters.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympol/parallel.hpp"
#include "sympol/polyfit.hpp"

namespace sympol {

// Ordered symbols A.. drawn from the Latin alphabet.
struct Alphabet {
    int size = 0;

    explicit Alphabet(int alpha) : size(alpha) {
        if (alpha < 2 || alpha > 26)
            throw std::invalid_argument("alphabet size must be in [2, 26]");
    }
    // k is the 1-based region index.
    char symbol(int k) const { return static_cast<char>('A' + k - 1); }
};

// (d+1) x alpha quantile boundaries; each row is non-decreasing and ends in
// +infinity so every value falls in some region.
struct ThresholdTable {
    std::vector<std::vector<double>> mu;

    int alphabet_size() const { return mu.empty() ? 0 : static_cast<int>(mu.front().size()); }
    int degree() const { return static_cast<int>(mu.size()) - 1; }
};

// One word per window per series, preserving window order.
struct WordBag {
    std::vector<std::vector<std::string>> series;
};

// Smallest 1-based k with v < mu_row[k]; the +inf sentinel guarantees a hit.
// Values equal to a threshold fall in the region to the right.
inline int symbol_index(double v, std::span<const double> mu_row) {
    const auto it = std::upper_bound(mu_row.begin(), mu_row.end(), v);
    return static_cast<int>(it - mu_row.begin()) + 1;
}

// Per coefficient index j: sort all j-th coefficients across the given series
// (all of them by default) and place thresholds at the 1-based sorted indexes
// floor(s*k/alpha), k = 1..alpha-1, clamped up to 1 when s < alpha.
inline ThresholdTable compute_thresholds(const CoefficientBag& bag, int alpha,
                                         std::span<const std::size_t> series_subset = {}) {
    if (alpha < 2) throw std::invalid_argument("alphabet size must be >= 2");
    std::vector<std::size_t> all;
    if (series_subset.empty()) {
        all.resize(bag.series.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        series_subset = all;
    }

    const std::size_t width = static_cast<std::size_t>(bag.degree) + 1;
    ThresholdTable table;
    table.mu.assign(width, std::vector<double>(alpha, 0.0));

    std::vector<double> sorted;
    for (std::size_t j = 0; j < width; ++j) {
        sorted.clear();
        for (std::size_t i : series_subset)
            for (std::size_t t = 0; t < bag.windows_per_series; ++t)
                sorted.push_back(bag.at(i, t)[j]);
        if (sorted.empty()) throw std::runtime_error("empty coefficient bag");
        std::sort(sorted.begin(), sorted.end());

        const std::size_t s = sorted.size();
        for (int k = 1; k <= alpha - 1; ++k) {
            std::size_t idx = s * static_cast<std::size_t>(k) / static_cast<std::size_t>(alpha);
            if (idx < 1) idx = 1;
            table.mu[j][k - 1] = sorted[idx - 1];
        }
        table.mu[j][alpha - 1] = std::numeric_limits<double>::infinity();
    }
    return table;
}

// Concatenate one symbol per coefficient, ascending monomial order.
inline WordBag coefficients_to_words(const CoefficientBag& bag, const ThresholdTable& table,
                                     const Alphabet& alphabet, int jobs = 1) {
    const std::size_t width = static_cast<std::size_t>(bag.degree) + 1;
    if (table.mu.size() != width)
        throw std::invalid_argument("threshold table does not match coefficient degree");
    if (table.alphabet_size() != alphabet.size)
        throw std::invalid_argument("threshold table does not match alphabet");

    WordBag words;
    words.series.resize(bag.series.size());
    parallel_for(0, bag.series.size(), jobs, [&](std::size_t i) {
        auto& out = words.series[i];
        out.resize(bag.windows_per_series);
        std::string w(width, '?');
        for (std::size_t t = 0; t < bag.windows_per_series; ++t) {
            const std::span<const double> beta = bag.at(i, t);
            for (std::size_t j = 0; j < width; ++j)
                w[j] = alphabet.symbol(symbol_index(beta[j], table.mu[j]));
            out[t] = w;
        }
    });
    return words;
}

}  // namespace sympol
