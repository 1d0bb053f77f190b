#pragma once

// 1-NN classification over histogram rows or raw series, stratified k-fold
// splits, grid search, and the nested cross-validation protocol: per
// rotation one test fold, one validation fold, and k-2 training folds; the
// grid is scored on the validation fold and the winner is evaluated on the
// test fold with the training folds only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympol/baselines.hpp"
#include "sympol/parallel.hpp"
#include "sympol/pipeline.hpp"

namespace sympol {

enum class Method { sympol, bsax, enn, dtwnn };
enum class ThresholdMode { transductive, inductive };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::sympol: return "sympol";
        case Method::bsax: return "bsax";
        case Method::enn: return "enn";
        case Method::dtwnn: return "dtwnn";
    }
    return "?";
}

inline std::string to_string(ThresholdMode m) {
    return m == ThresholdMode::transductive ? "transductive" : "inductive";
}

inline Method parse_method(const std::string& s) {
    if (s == "sympol") return Method::sympol;
    if (s == "bsax") return Method::bsax;
    if (s == "enn") return Method::enn;
    if (s == "dtwnn") return Method::dtwnn;
    throw std::invalid_argument("unknown method: " + s);
}

inline ThresholdMode parse_mode(const std::string& s) {
    if (s == "transductive") return ThresholdMode::transductive;
    if (s == "inductive") return ThresholdMode::inductive;
    throw std::invalid_argument("unknown threshold mode: " + s);
}

// One hyperparameter combination. Unused fields stay 0 (enn/dtwnn have none).
struct MethodConfig {
    Method method = Method::sympol;
    int window = 0;       // n, as requested (bsax rounds internally)
    int alphabet = 0;     // alpha
    int degree = 0;       // d, sympol only
    int word_length = 0;  // |w|, bsax only

    friend bool operator==(const MethodConfig&, const MethodConfig&) = default;
};

// Grid-search tie-break order: smaller n, then alpha, then d (or |w|).
inline bool config_less(const MethodConfig& a, const MethodConfig& b) {
    if (a.window != b.window) return a.window < b.window;
    if (a.alphabet != b.alphabet) return a.alphabet < b.alphabet;
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.word_length < b.word_length;
}

inline std::string config_key(const MethodConfig& c) {
    std::ostringstream os;
    os << to_string(c.method) << ":n=" << c.window << ":a=" << c.alphabet << ":d=" << c.degree
       << ":w=" << c.word_length;
    return os.str();
}

inline std::vector<MethodConfig> default_grid(Method method) {
    std::vector<MethodConfig> grid;
    const int windows[] = {100, 200, 300, 400};
    const int alphabets[] = {4, 6, 8};
    switch (method) {
        case Method::sympol:
            for (int n : windows)
                for (int d = 1; d <= 8; ++d)
                    for (int a : alphabets)
                        grid.push_back({Method::sympol, n, a, d, 0});
            break;
        case Method::bsax:
            for (int n : windows)
                for (int w = 2; w <= 9; ++w)
                    for (int a : alphabets)
                        grid.push_back({Method::bsax, n, a, 0, w});
            break;
        case Method::enn:
            grid.push_back({Method::enn, 0, 0, 0, 0});
            break;
        case Method::dtwnn:
            grid.push_back({Method::dtwnn, 0, 0, 0, 0});
            break;
    }
    return grid;
}

// Label of the training row nearest to the query under the Euclidean
// distance; ties go to the lowest training-row index.
inline int nn_classify(const std::vector<std::vector<double>>& train_rows,
                       std::span<const int> train_labels, std::span<const double> query) {
    if (train_rows.empty()) throw std::invalid_argument("empty training set");
    if (train_rows.size() != train_labels.size())
        throw std::invalid_argument("label count does not match training rows");
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < train_rows.size(); ++i) {
        const double d = euclidean_distance(train_rows[i], query);
        if (d < best) {
            best = d;
            best_i = i;
        }
    }
    return train_labels[best_i];
}

// Stratified k-fold split: per label, instances are shuffled and dealt
// round-robin, so per-class fold sizes differ by at most one. Deterministic
// for a given seed.
inline std::vector<std::vector<std::size_t>> make_folds(std::span<const int> labels, int k,
                                                        std::uint64_t seed,
                                                        std::vector<std::string>* warnings = nullptr) {
    if (k < 2) throw std::invalid_argument("fold count must be >= 2");
    if (labels.size() < static_cast<std::size_t>(k))
        throw std::invalid_argument("fewer instances than folds");

    std::map<int, std::vector<std::size_t>> by_label;
    for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);

    std::mt19937_64 rng(seed);
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
    std::size_t next = 0;  // rotate across classes so no fold stays empty
    for (auto& [label, members] : by_label) {
        if (members.size() < static_cast<std::size_t>(k) && warnings)
            warnings->push_back("class " + std::to_string(label) + " has fewer than " +
                                std::to_string(k) + " members; stratification is degenerate");
        std::shuffle(members.begin(), members.end(), rng);
        for (std::size_t member : members)
            folds[next++ % static_cast<std::size_t>(k)].push_back(member);
    }
    for (auto& f : folds) std::sort(f.begin(), f.end());
    return folds;
}

// Per-config feature rows for the whole dataset. Rows are histogram counts
// for sympol/bsax and (optionally z-normalized) raw values for enn/dtwnn.
struct FeatureSet {
    std::vector<std::vector<double>> rows;
    bool use_dtw = false;
};

// Misclassification rate of 1-NN over the eval indices, training rows taken
// from train indices in ascending order. Queries evaluated independently, so
// the result does not depend on the jobs count.
inline double nn_error_rate(const FeatureSet& features, std::span<const int> labels,
                            std::span<const std::size_t> train_idx,
                            std::span<const std::size_t> eval_idx, int jobs = 1) {
    if (train_idx.empty()) throw std::invalid_argument("empty training set");
    if (eval_idx.empty()) throw std::invalid_argument("empty evaluation set");
    std::vector<int> wrong(eval_idx.size(), 0);
    parallel_for(0, eval_idx.size(), jobs, [&](std::size_t q) {
        const std::vector<double>& query = features.rows[eval_idx[q]];
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = train_idx[0];
        for (std::size_t i : train_idx) {
            const double d = features.use_dtw ? dtw_distance(features.rows[i], query)
                                              : euclidean_distance(features.rows[i], query);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        wrong[q] = labels[best_i] != labels[eval_idx[q]] ? 1 : 0;
    });
    const int errors = std::accumulate(wrong.begin(), wrong.end(), 0);
    return static_cast<double>(errors) / static_cast<double>(eval_idx.size());
}

// Builds and caches feature sets per configuration. In transductive mode the
// vocabulary spans the whole dataset, so a config's features are shared
// across fold rotations; in inductive mode they are keyed by the training
// set as well. The most recent coefficient bag is kept so alphabet-only grid
// neighbors skip re-extraction.
class FeatureBuilder {
public:
    struct Options {
        ThresholdMode mode = ThresholdMode::transductive;
        bool numerosity_reduction = false;
        bool znorm_series = false;
        TimeAxis axis = TimeAxis::unit;
        int jobs = 1;
        std::size_t cache_budget_bytes = std::size_t{1} << 30;
    };

    FeatureBuilder(const SeriesDataset& dataset, Options options)
        : dataset_(dataset), opt_(options) {}

    const SeriesDataset& dataset() const { return dataset_; }
    const Options& options() const { return opt_; }

    // True when the config's (effective) window fits the series length.
    bool feasible(const MethodConfig& c) const {
        if (c.method == Method::enn || c.method == Method::dtwnn) return true;
        std::size_t window = static_cast<std::size_t>(c.window);
        if (c.method == Method::bsax)
            window = static_cast<std::size_t>(
                SaxConfig::make(c.window, c.word_length, c.alphabet).window);
        return window < dataset_.length();
    }

    const FeatureSet& features(const MethodConfig& c, std::span<const std::size_t> train_idx) {
        if (c.method == Method::enn || c.method == Method::dtwnn) return raw_features(c);

        std::string key = config_key(c);
        if (opt_.mode == ThresholdMode::inductive) key += ":fit=" + fingerprint(train_idx);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;

        FeatureSet fs;
        const std::span<const std::size_t> subset =
            opt_.mode == ThresholdMode::inductive ? train_idx : std::span<const std::size_t>{};
        if (c.method == Method::sympol) {
            const CoefficientBag& bag = coefficient_bag(c.window, c.degree);
            SymPolParams params{c.window, c.alphabet, c.degree, opt_.axis};
            SymPolResult res =
                sympol_transform(bag, params, opt_.numerosity_reduction, opt_.jobs, subset);
            fs.rows = to_double_rows(res.histogram);
        } else {
            const SaxConfig cfg = SaxConfig::make(c.window, c.word_length, c.alphabet);
            WordBag bags = bsax_wordbags(dataset_, cfg, opt_.jobs);
            if (opt_.numerosity_reduction) bags = reduce_numerosity(bags);
            const Dictionary dict = build_dictionary(bags, subset);
            const Histogram hist = populate_histogram(bags, dict, opt_.jobs);
            fs.rows = to_double_rows(hist);
        }
        cache_bytes_ += bytes_of(fs);
        if (cache_bytes_ > opt_.cache_budget_bytes && !cache_.empty()) {
            cache_.clear();
            cache_bytes_ = bytes_of(fs);
        }
        return cache_.emplace(std::move(key), std::move(fs)).first->second;
    }

private:
    static std::vector<std::vector<double>> to_double_rows(const Histogram& h) {
        std::vector<std::vector<double>> rows(h.rows.size());
        for (std::size_t i = 0; i < h.rows.size(); ++i)
            rows[i].assign(h.rows[i].begin(), h.rows[i].end());
        return rows;
    }

    static std::size_t bytes_of(const FeatureSet& fs) {
        std::size_t total = 0;
        for (const auto& r : fs.rows) total += r.size() * sizeof(double);
        return total;
    }

    static std::string fingerprint(std::span<const std::size_t> idx) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t v : idx) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return std::to_string(h);
    }

    const FeatureSet& raw_features(const MethodConfig& c) {
        FeatureSet& fs = c.method == Method::dtwnn ? dtw_features_ : euclid_features_;
        if (fs.rows.empty()) {
            fs.use_dtw = c.method == Method::dtwnn;
            fs.rows.resize(dataset_.size());
            for (std::size_t i = 0; i < dataset_.size(); ++i)
                fs.rows[i] = opt_.znorm_series ? znormalize_window(dataset_[i].values)
                                               : dataset_[i].values;
        }
        return fs;
    }

    const CoefficientBag& coefficient_bag(int window, int degree) {
        if (!bag_valid_ || bag_window_ != window || bag_degree_ != degree) {
            bag_ = extract_coefficients(dataset_, window, degree, opt_.axis, opt_.jobs);
            bag_window_ = window;
            bag_degree_ = degree;
            bag_valid_ = true;
        }
        return bag_;
    }

    const SeriesDataset& dataset_;
    Options opt_;
    std::map<std::string, FeatureSet> cache_;
    std::size_t cache_bytes_ = 0;
    CoefficientBag bag_;
    int bag_window_ = -1;
    int bag_degree_ = -1;
    bool bag_valid_ = false;
    FeatureSet euclid_features_;
    FeatureSet dtw_features_;
};

struct GridPointResult {
    MethodConfig config;
    double validation_error = 0.0;
    bool skipped = false;
};

struct GridSearchResult {
    MethodConfig best;
    double best_error = 0.0;
    std::vector<GridPointResult> points;
    std::vector<std::string> warnings;
};

// Scores every feasible grid point on the validation fold (training rows =
// the training folds) and returns the minimizer; ties break toward the
// simplest configuration via config_less, independent of grid order.
inline GridSearchResult grid_search(FeatureBuilder& builder, std::span<const int> labels,
                                    std::span<const std::size_t> train_idx,
                                    std::span<const std::size_t> val_idx,
                                    std::span<const MethodConfig> grid) {
    if (grid.empty()) throw std::invalid_argument("empty grid");
    GridSearchResult result;
    bool have_best = false;
    for (const MethodConfig& c : grid) {
        GridPointResult point;
        point.config = c;
        if (!builder.feasible(c)) {
            point.skipped = true;
            result.warnings.push_back("skipping " + config_key(c) +
                                      ": window does not fit series length");
            result.points.push_back(point);
            continue;
        }
        const FeatureSet& fs = builder.features(c, train_idx);
        point.validation_error =
            nn_error_rate(fs, labels, train_idx, val_idx, builder.options().jobs);
        result.points.push_back(point);
        const bool better =
            !have_best || point.validation_error < result.best_error ||
            (point.validation_error == result.best_error && config_less(c, result.best));
        if (better) {
            result.best = c;
            result.best_error = point.validation_error;
            have_best = true;
        }
    }
    if (!have_best) throw std::runtime_error("no feasible grid point for this dataset");
    return result;
}

struct FoldReport {
    int fold = 0;
    MethodConfig chosen;
    double validation_error = 0.0;
    double test_error = 0.0;
    double seconds = 0.0;
};

struct CvParams {
    Method method = Method::sympol;
    std::vector<MethodConfig> grid;
    ThresholdMode mode = ThresholdMode::transductive;
    std::uint64_t seed = 0;
    int folds = 5;
    int jobs = 1;
    bool numerosity_reduction = false;
    bool znorm_series = false;
    TimeAxis axis = TimeAxis::unit;
};

struct CvReport {
    Method method = Method::sympol;
    ThresholdMode mode = ThresholdMode::transductive;
    std::uint64_t seed = 0;
    std::vector<FoldReport> folds;
    double mean_error = 0.0;
    double stddev_error = 0.0;  // population form across folds
    std::vector<std::string> warnings;
};

inline CvReport cross_validate(const SeriesDataset& dataset, const CvParams& params) {
    if (params.grid.empty()) throw std::invalid_argument("empty grid");
    if (params.folds < 3)
        throw std::invalid_argument("nested validation needs at least 3 folds");
    if (dataset.size() < 2 || dataset.distinct_label_count() < 2)
        throw std::invalid_argument("classification needs >= 2 instances and >= 2 classes");

    CvReport report;
    report.method = params.method;
    report.mode = params.mode;
    report.seed = params.seed;

    const std::vector<int> labels = dataset.labels();
    const auto folds = make_folds(labels, params.folds, params.seed, &report.warnings);
    const int k = params.folds;

    FeatureBuilder::Options opts;
    opts.mode = params.mode;
    opts.numerosity_reduction = params.numerosity_reduction;
    opts.znorm_series = params.znorm_series;
    opts.axis = params.axis;
    opts.jobs = params.jobs;
    FeatureBuilder builder(dataset, opts);

    for (int r = 0; r < k; ++r) {
        const auto started = std::chrono::steady_clock::now();
        const std::vector<std::size_t>& test_idx = folds[static_cast<std::size_t>(r)];
        const std::vector<std::size_t>& val_idx = folds[static_cast<std::size_t>((r + 1) % k)];
        std::vector<std::size_t> train_idx;
        for (int f = 0; f < k; ++f) {
            if (f == r || f == (r + 1) % k) continue;
            const auto& fold = folds[static_cast<std::size_t>(f)];
            train_idx.insert(train_idx.end(), fold.begin(), fold.end());
        }
        std::sort(train_idx.begin(), train_idx.end());

        GridSearchResult gs = grid_search(builder, labels, train_idx, val_idx, params.grid);
        for (auto& w : gs.warnings) report.warnings.push_back("fold " + std::to_string(r) + ": " + w);

        FoldReport fr;
        fr.fold = r;
        fr.chosen = gs.best;
        fr.validation_error = gs.best_error;
        const FeatureSet& fs = builder.features(gs.best, train_idx);
        fr.test_error = nn_error_rate(fs, labels, train_idx, test_idx, params.jobs);
        fr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        report.folds.push_back(fr);
    }

    double mean = 0.0;
    for (const auto& f : report.folds) mean += f.test_error;
    mean /= static_cast<double>(report.folds.size());
    double var = 0.0;
    for (const auto& f : report.folds) {
        const double d = f.test_error - mean;
        var += d * d;
    }
    var /= static_cast<double>(report.folds.size());
    report.mean_error = mean;
    report.stddev_error = std::sqrt(var);
    return report;
}

}  // namespace sympol
