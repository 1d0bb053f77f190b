#pragma once

// Series and dataset domain types, per-window z-normalization, and the
// line-oriented dataset file format (label first, then values).

#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympol {

struct LabeledSeries {
    int label = 0;
    std::vector<double> values;
};

// Fixed-length dataset: every member series has the same length N.
// Immutable after construction; safe to share across worker threads.
class SeriesDataset {
public:
    SeriesDataset() = default;

    explicit SeriesDataset(std::vector<LabeledSeries> series) : series_(std::move(series)) {
        if (series_.empty()) throw std::invalid_argument("empty dataset");
        length_ = series_.front().values.size();
        if (length_ == 0) throw std::invalid_argument("series must have length >= 1");
        for (const auto& s : series_) {
            if (s.values.size() != length_)
                throw std::invalid_argument("inconsistent series length");
            for (double v : s.values)
                if (!std::isfinite(v))
                    throw std::invalid_argument("series contains a non-finite value");
        }
    }

    std::size_t size() const { return series_.size(); }    // M
    std::size_t length() const { return length_; }         // N
    const LabeledSeries& operator[](std::size_t i) const { return series_[i]; }
    const std::vector<LabeledSeries>& series() const { return series_; }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(series_.size());
        for (const auto& s : series_) out.push_back(s.label);
        return out;
    }

    std::size_t distinct_label_count() const {
        std::set<int> seen;
        for (const auto& s : series_) seen.insert(s.label);
        return seen.size();
    }

private:
    std::vector<LabeledSeries> series_;
    std::size_t length_ = 0;
};

// Length-n subsequence starting at t; the window slides by one index, so a
// series of length N yields N - n windows (starts 0 .. N-n-1).
struct Window {
    std::size_t start = 0;
    std::size_t length = 0;
};

inline std::size_t window_count(std::size_t series_length, std::size_t window_length) {
    if (window_length == 0 || window_length >= series_length)
        throw std::invalid_argument("window exceeds series");
    return series_length - window_length;
}

// Shift/scale a window to mean 0 and population standard deviation 1
// (sigma with denominator n). Windows that are flat relative to their own
// magnitude normalize to all zeros.
inline void znormalize_window(std::span<const double> src, std::span<double> dst) {
    const std::size_t n = src.size();
    if (n == 0 || dst.size() != n) throw std::invalid_argument("bad window size");
    double mean = 0.0;
    for (double v : src) mean += v;
    mean /= static_cast<double>(n);
    double sq = 0.0;
    for (double v : src) {
        const double d = v - mean;
        sq += d * d;
    }
    const double sigma = std::sqrt(sq / static_cast<double>(n));
    const double flat_tol = 1e-12 * std::max(1.0, std::fabs(mean));
    if (sigma <= flat_tol) {
        for (std::size_t i = 0; i < n; ++i) dst[i] = 0.0;
        return;
    }
    for (std::size_t i = 0; i < n; ++i) dst[i] = (src[i] - mean) / sigma;
}

inline std::vector<double> znormalize_window(std::span<const double> values) {
    std::vector<double> out(values.size());
    znormalize_window(values, out);
    return out;
}

namespace detail {

inline bool parse_double(const std::string& tok, double& out) {
    const char* s = tok.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    return end == s + tok.size() && tok.size() > 0;
}

}  // namespace detail

// File format: one series per line, `label,v1,v2,...,vN`, separated by commas
// and/or whitespace; lines starting with '#' are skipped. Errors name the
// offending physical line.
inline SeriesDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    std::vector<LabeledSeries> series;
    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_len = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        // split on commas/whitespace
        std::vector<std::string> tokens;
        std::string cur;
        for (char c : line) {
            if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
                if (!cur.empty()) tokens.push_back(std::move(cur));
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) tokens.push_back(std::move(cur));
        if (tokens.size() < 2)
            throw std::runtime_error("malformed line " + std::to_string(line_no) +
                                     " in " + path + ": need a label and at least one value");

        LabeledSeries s;
        double label_val = 0.0;
        if (!detail::parse_double(tokens[0], label_val) ||
            label_val != std::floor(label_val))
            throw std::runtime_error("non-numeric or non-integer label at line " +
                                     std::to_string(line_no) + " in " + path);
        s.label = static_cast<int>(label_val);
        s.values.reserve(tokens.size() - 1);
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            double v = 0.0;
            if (!detail::parse_double(tokens[i], v) || !std::isfinite(v))
                throw std::runtime_error("non-numeric token '" + tokens[i] +
                                         "' at line " + std::to_string(line_no) + " in " + path);
            s.values.push_back(v);
        }
        if (expected_len == 0) {
            expected_len = s.values.size();
        } else if (s.values.size() != expected_len) {
            throw std::runtime_error("inconsistent series length at line " +
                                     std::to_string(line_no) + " in " + path);
        }
        series.push_back(std::move(s));
    }
    if (series.empty()) throw std::runtime_error("empty dataset: " + path);
    return SeriesDataset(std::move(series));
}

// Round-trip safe: values written with max_digits10 precision.
inline void save_dataset(const SeriesDataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    char buf[40];
    for (const auto& s : dataset.series()) {
        out << s.label;
        for (double v : s.values) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sympol
