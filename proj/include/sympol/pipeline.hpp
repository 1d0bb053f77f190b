#pragma once

// End-to-end symbolic-polynomial transform: sliding-window fitting,
// equivolume discretization, dictionary and histogram.

#include <cstddef>
#include <span>
#include <vector>

#include "sympol/bagging.hpp"
#include "sympol/polyfit.hpp"
#include "sympol/symbolic.hpp"

namespace sympol {

struct SymPolParams {
    int window = 0;     // n
    int alphabet = 0;   // alpha
    int degree = 0;     // d
    TimeAxis axis = TimeAxis::unit;
};

struct SymPolResult {
    ThresholdTable thresholds;
    Dictionary dictionary;
    Histogram histogram;  // one row per dataset series
};

// Transform over pre-extracted coefficients; lets callers reuse one
// extraction across alphabet sizes or fit subsets. When fit_subset is empty
// the thresholds and dictionary are computed over the whole dataset
// (transductive, the formulation's default). Otherwise they come from the
// given series only and the remaining series are mapped onto that
// vocabulary, dropping unseen words.
inline SymPolResult sympol_transform(const CoefficientBag& bag, const SymPolParams& params,
                                     bool numerosity_reduction = false, int jobs = 1,
                                     std::span<const std::size_t> fit_subset = {}) {
    SymPolResult r;
    r.thresholds = compute_thresholds(bag, params.alphabet, fit_subset);
    WordBag words = coefficients_to_words(bag, r.thresholds, Alphabet(params.alphabet), jobs);
    if (numerosity_reduction) words = reduce_numerosity(words);
    r.dictionary = build_dictionary(words, fit_subset);
    r.histogram = populate_histogram(words, r.dictionary, jobs);
    return r;
}

inline SymPolResult sympol_transform(const SeriesDataset& dataset, const SymPolParams& params,
                                     bool numerosity_reduction = false, int jobs = 1,
                                     std::span<const std::size_t> fit_subset = {}) {
    const CoefficientBag bag =
        extract_coefficients(dataset, params.window, params.degree, params.axis, jobs);
    return sympol_transform(bag, params, numerosity_reduction, jobs, fit_subset);
}

}  // namespace sympol
