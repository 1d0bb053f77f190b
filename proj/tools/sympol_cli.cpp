// Command-line front end: runs a classification experiment (5-fold nested
// cross-validation with grid search, or fixed hyperparameters) or exports a
// word-frequency histogram as CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "sympol/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Symbolic-polynomial time-series classification"};

    sympol::RunSpec spec;
    spec.out_path = "report.json";

    std::string method = "sympol";
    std::string grid = "default";
    std::string mode = "transductive";
    std::string synthetic;

    app.add_option("--data", spec.data_path, "Dataset file (label,v1,...,vN per line)");
    app.add_option("--method", method, "sympol|bsax|enn|dtwnn")
        ->check(CLI::IsMember({"sympol", "bsax", "enn", "dtwnn"}));
    app.add_option("--grid", grid, "default|none (none = fixed hyperparameters)")
        ->check(CLI::IsMember({"default", "none"}));
    app.add_option("--n", spec.window, "Sliding window size (fixed runs)");
    app.add_option("--alpha", spec.alphabet, "Alphabet size (fixed runs)");
    app.add_option("--degree", spec.degree, "Polynomial degree (sympol fixed runs)");
    app.add_option("--word-len", spec.word_length, "SAX word length (bsax fixed runs)");
    app.add_option("--mode", mode, "transductive|inductive vocabulary fitting")
        ->check(CLI::IsMember({"transductive", "inductive"}));
    app.add_flag("--numerosity-reduction", spec.numerosity_reduction,
                 "Collapse consecutive identical words");
    app.add_flag("--znorm-series", spec.znorm_series,
                 "Z-normalize whole series for enn/dtwnn");
    app.add_option("--seed", spec.seed, "Fold shuffling / generator seed");
    app.add_option("--jobs", spec.jobs, "Worker thread count")->check(CLI::PositiveNumber);
    app.add_flag("--time", spec.time, "Include wall-clock timings in the report");
    app.add_option("--out", spec.out_path, "JSON report path");
    app.add_option("--export-histogram", spec.export_histogram_path,
                   "Write the word histogram CSV here instead of cross-validating");

    app.add_option("--synthetic", synthetic, "Generate data in-process (bag-of-patterns)")
        ->check(CLI::IsMember({"bag-of-patterns"}));
    app.add_option("--classes", spec.generator.classes, "Generator: class count");
    app.add_option("--patterns-per-class", spec.generator.patterns_per_class,
                   "Generator: vocabulary size per class");
    app.add_option("--pattern-len", spec.generator.pattern_length, "Generator: pattern length");
    app.add_option("--series-len", spec.generator.series_length, "Generator: series length N");
    app.add_option("--instances", spec.generator.instances, "Generator: series count M");
    app.add_option("--noise", spec.generator.noise_sigma, "Generator: Gaussian noise sigma");

    CLI11_PARSE(app, argc, argv);

    spec.method = sympol::parse_method(method);
    spec.grid = grid == "default" ? sympol::GridChoice::default_grid : sympol::GridChoice::none;
    spec.mode = sympol::parse_mode(mode);
    spec.synthetic = !synthetic.empty();
    if (spec.synthetic) spec.generator.seed = spec.seed;

    try {
        const sympol::RunResult result = sympol::run(spec);
        std::cout << result.summary;
        if (!spec.out_path.empty()) std::cout << "report written to " << spec.out_path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
