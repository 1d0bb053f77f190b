#pragma once

// Run orchestration shared by the CLI and tests: dataset acquisition,
// cross-validation or histogram export, JSON report assembly, and the
// printed summary. Reports exclude wall-clock data unless timing is
// requested, so identical run specifications produce byte-identical JSON
// at any worker count.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sympol/classify.hpp"
#include "sympol/synthetic.hpp"

namespace sympol {

enum class GridChoice { default_grid, none };

struct RunSpec {
    std::string data_path;        // exclusive with synthetic
    bool synthetic = false;
    BagOfPatternsSpec generator;

    Method method = Method::sympol;
    GridChoice grid = GridChoice::default_grid;
    int window = 0;       // fixed hyperparameters, used when grid == none
    int alphabet = 0;
    int degree = 0;
    int word_length = 0;

    ThresholdMode mode = ThresholdMode::transductive;
    bool numerosity_reduction = false;
    bool znorm_series = false;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool time = false;

    std::string out_path;               // JSON report destination ("" = none)
    std::string export_histogram_path;  // non-empty switches to export mode
};

struct RunResult {
    std::string report_json;
    std::string summary;
    CvReport cv;           // populated for cross-validation runs
    bool exported = false;
};

namespace detail {

inline bool has_fixed_params(const RunSpec& spec) {
    return spec.window != 0 || spec.alphabet != 0 || spec.degree != 0 || spec.word_length != 0;
}

inline MethodConfig fixed_config(const RunSpec& spec) {
    MethodConfig c;
    c.method = spec.method;
    switch (spec.method) {
        case Method::sympol:
            if (spec.window <= 0 || spec.alphabet <= 0 || spec.degree <= 0)
                throw std::invalid_argument("sympol needs --n, --alpha and --degree");
            c.window = spec.window;
            c.alphabet = spec.alphabet;
            c.degree = spec.degree;
            break;
        case Method::bsax:
            if (spec.window <= 0 || spec.alphabet <= 0 || spec.word_length <= 0)
                throw std::invalid_argument("bsax needs --n, --alpha and --word-len");
            c.window = spec.window;
            c.alphabet = spec.alphabet;
            c.word_length = spec.word_length;
            break;
        case Method::enn:
        case Method::dtwnn:
            break;
    }
    return c;
}

inline nlohmann::ordered_json config_json(const MethodConfig& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    switch (c.method) {
        case Method::sympol:
            j["n"] = c.window;
            j["alpha"] = c.alphabet;
            j["d"] = c.degree;
            break;
        case Method::bsax:
            j["n"] = c.window;
            j["word_length"] = c.word_length;
            j["alpha"] = c.alphabet;
            break;
        default:
            break;
    }
    return j;
}

inline nlohmann::ordered_json dataset_json(const RunSpec& spec, const SeriesDataset& ds) {
    nlohmann::ordered_json j;
    j["source"] = spec.synthetic ? "synthetic:bag-of-patterns" : spec.data_path;
    if (spec.synthetic) j["generator_seed"] = spec.generator.seed;
    j["instances"] = ds.size();
    j["length"] = ds.length();
    j["classes"] = ds.distinct_label_count();
    return j;
}

}  // namespace detail

inline SeriesDataset acquire_dataset(const RunSpec& spec) {
    if (spec.synthetic) return generate_bag_of_patterns(spec.generator);
    if (spec.data_path.empty()) throw std::invalid_argument("no dataset: pass --data or --synthetic");
    return load_dataset(spec.data_path);
}

// Transform with fixed parameters and write the histogram CSV. In inductive
// mode the vocabulary is fit on the training portion of the seeded split
// (every fold but the first) and all series are mapped onto it.
inline RunResult export_histogram(const RunSpec& spec, const SeriesDataset& dataset) {
    if (spec.method != Method::sympol && spec.method != Method::bsax)
        throw std::invalid_argument("histogram export needs --method sympol or bsax");
    const MethodConfig config = detail::fixed_config(spec);

    std::vector<std::size_t> fit_subset;
    if (spec.mode == ThresholdMode::inductive) {
        const auto folds = make_folds(dataset.labels(), 5, spec.seed);
        for (std::size_t f = 1; f < folds.size(); ++f)
            fit_subset.insert(fit_subset.end(), folds[f].begin(), folds[f].end());
        std::sort(fit_subset.begin(), fit_subset.end());
    }

    Dictionary dict;
    Histogram hist;
    if (spec.method == Method::sympol) {
        SymPolParams params{config.window, config.alphabet, config.degree, TimeAxis::unit};
        SymPolResult res = sympol_transform(dataset, params, spec.numerosity_reduction,
                                            spec.jobs, fit_subset);
        dict = std::move(res.dictionary);
        hist = std::move(res.histogram);
    } else {
        const SaxConfig cfg = SaxConfig::make(config.window, config.word_length, config.alphabet);
        WordBag bags = bsax_wordbags(dataset, cfg, spec.jobs);
        if (spec.numerosity_reduction) bags = reduce_numerosity(bags);
        dict = build_dictionary(bags, fit_subset);
        hist = populate_histogram(bags, dict, spec.jobs);
    }

    std::ofstream csv(spec.export_histogram_path);
    if (!csv) throw std::runtime_error("cannot write histogram CSV: " + spec.export_histogram_path);
    const std::vector<int> labels = dataset.labels();
    write_histogram_csv(csv, hist, dict, labels);
    if (!csv) throw std::runtime_error("write failed: " + spec.export_histogram_path);

    nlohmann::ordered_json j;
    j["action"] = "export-histogram";
    j["method"] = to_string(spec.method);
    j["mode"] = to_string(spec.mode);
    j["seed"] = spec.seed;
    j["dataset"] = detail::dataset_json(spec, dataset);
    j["config"] = detail::config_json(config);
    j["dictionary_size"] = dict.size();
    j["rows"] = hist.rows.size();
    j["csv"] = spec.export_histogram_path;

    RunResult result;
    result.exported = true;
    result.report_json = j.dump(2) + "\n";
    std::ostringstream os;
    os << "exported " << hist.rows.size() << " histogram rows x " << dict.size()
       << " words to " << spec.export_histogram_path << "\n";
    result.summary = os.str();
    return result;
}

inline RunResult run(const RunSpec& spec) {
    if (spec.grid == GridChoice::default_grid && detail::has_fixed_params(spec))
        throw std::invalid_argument("fixed hyperparameters require --grid none");
    if (!spec.data_path.empty() && spec.synthetic)
        throw std::invalid_argument("--data and --synthetic are mutually exclusive");
    if (spec.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

    const SeriesDataset dataset = acquire_dataset(spec);

    RunResult result;
    if (!spec.export_histogram_path.empty()) {
        result = export_histogram(spec, dataset);
    } else {
        CvParams params;
        params.method = spec.method;
        params.grid = spec.grid == GridChoice::default_grid
                          ? default_grid(spec.method)
                          : std::vector<MethodConfig>{detail::fixed_config(spec)};
        params.mode = spec.mode;
        params.seed = spec.seed;
        params.jobs = spec.jobs;
        params.numerosity_reduction = spec.numerosity_reduction;
        params.znorm_series = spec.znorm_series;

        const auto started = std::chrono::steady_clock::now();
        result.cv = cross_validate(dataset, params);
        const double total_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        nlohmann::ordered_json j;
        j["method"] = to_string(result.cv.method);
        j["mode"] = to_string(result.cv.mode);
        j["seed"] = result.cv.seed;
        j["dataset"] = detail::dataset_json(spec, dataset);
        j["grid"] = spec.grid == GridChoice::default_grid ? "default" : "fixed";
        nlohmann::ordered_json folds = nlohmann::ordered_json::array();
        nlohmann::ordered_json per_fold = nlohmann::ordered_json::array();
        for (const auto& f : result.cv.folds) {
            nlohmann::ordered_json fj;
            fj["fold"] = f.fold;
            fj["config"] = detail::config_json(f.chosen);
            fj["validation_error"] = f.validation_error;
            fj["test_error"] = f.test_error;
            if (spec.time) fj["seconds"] = f.seconds;
            folds.push_back(fj);
            per_fold.push_back(f.test_error);
        }
        j["folds"] = folds;
        j["error"] = {{"per_fold", per_fold},
                      {"mean", result.cv.mean_error},
                      {"stddev", result.cv.stddev_error}};
        if (spec.time) j["timing"] = {{"total_seconds", total_seconds}};
        j["warnings"] = result.cv.warnings;
        result.report_json = j.dump(2) + "\n";

        std::ostringstream os;
        os << std::fixed << std::setprecision(4);
        os << "method  mode          mean    stddev\n";
        os << std::left << std::setw(8) << to_string(result.cv.method) << std::setw(14)
           << to_string(result.cv.mode) << std::right << result.cv.mean_error << "  "
           << result.cv.stddev_error << "\n\n";
        os << "fold  config                              val_err  test_err";
        if (spec.time) os << "  seconds";
        os << "\n";
        for (const auto& f : result.cv.folds) {
            os << f.fold << "     " << std::left << std::setw(36)
               << detail::config_json(f.chosen).dump() << std::right
               << f.validation_error << "   " << f.test_error;
            if (spec.time) os << "   " << f.seconds;
            os << "\n";
        }
        for (const auto& w : result.cv.warnings) os << "warning: " << w << "\n";
        result.summary = os.str();
    }

    if (!spec.out_path.empty()) {
        std::ofstream out(spec.out_path);
        if (!out) throw std::runtime_error("cannot write report: " + spec.out_path);
        out << result.report_json;
        if (!out) throw std::runtime_error("write failed: " + spec.out_path);
    }
    return result;
}

}  // namespace sympol
