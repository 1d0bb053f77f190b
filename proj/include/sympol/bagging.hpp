#pragma once

// Word dictionary and per-series frequency histogram. A histogram row is the
// series' final representation: which local patterns occur and how often.

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sympol/parallel.hpp"
#include "sympol/symbolic.hpp"

namespace sympol {

// Distinct words in first-occurrence order (series index, then window order).
class Dictionary {
public:
    // Returns the word's column, inserting it if new.
    std::size_t add(const std::string& word) {
        auto [it, inserted] = index_.try_emplace(word, words_.size());
        if (inserted) words_.push_back(word);
        return it->second;
    }

    // Column of `word`, or npos when absent.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const std::string& word) const {
        auto it = index_.find(word);
        return it == index_.end() ? npos : it->second;
    }

    std::size_t size() const { return words_.size(); }
    const std::string& operator[](std::size_t j) const { return words_[j]; }
    const std::vector<std::string>& words() const { return words_; }

private:
    std::vector<std::string> words_;
    std::unordered_map<std::string, std::size_t> index_;
};

// M x |D| word counts; row i aligned with series i, column j with D[j].
struct Histogram {
    std::size_t columns = 0;
    std::vector<std::vector<int>> rows;
};

// Dictionary construction is order-sensitive and therefore sequential.
inline Dictionary build_dictionary(const WordBag& bags,
                                   std::span<const std::size_t> series_subset = {}) {
    if (bags.series.empty()) throw std::invalid_argument("empty word bag collection");
    Dictionary dict;
    auto insert_series = [&](std::size_t i) {
        for (const std::string& w : bags.series[i]) dict.add(w);
    };
    if (series_subset.empty()) {
        for (std::size_t i = 0; i < bags.series.size(); ++i) insert_series(i);
    } else {
        for (std::size_t i : series_subset) insert_series(i);
    }
    return dict;
}

// Count occurrences of each dictionary word per series. Words absent from the
// dictionary (held-out series mapped onto a training vocabulary) are dropped.
inline Histogram populate_histogram(const WordBag& bags, const Dictionary& dict, int jobs = 1) {
    Histogram h;
    h.columns = dict.size();
    h.rows.resize(bags.series.size());
    parallel_for(0, bags.series.size(), jobs, [&](std::size_t i) {
        auto& row = h.rows[i];
        row.assign(h.columns, 0);
        for (const std::string& w : bags.series[i]) {
            const std::size_t j = dict.find(w);
            if (j != Dictionary::npos) ++row[j];
        }
    });
    return h;
}

// Collapse runs of consecutive identical words within each series.
inline WordBag reduce_numerosity(const WordBag& bags) {
    WordBag out;
    out.series.resize(bags.series.size());
    for (std::size_t i = 0; i < bags.series.size(); ++i) {
        const auto& src = bags.series[i];
        auto& dst = out.series[i];
        for (const std::string& w : src)
            if (dst.empty() || dst.back() != w) dst.push_back(w);
    }
    return out;
}

// CSV export: header row of words with "label" first, one row per series.
inline void write_histogram_csv(std::ostream& out, const Histogram& h, const Dictionary& dict,
                                std::span<const int> labels) {
    if (h.rows.size() != labels.size())
        throw std::invalid_argument("label count does not match histogram rows");
    out << "label";
    for (const std::string& w : dict.words()) out << ',' << w;
    out << '\n';
    for (std::size_t i = 0; i < h.rows.size(); ++i) {
        out << labels[i];
        for (int c : h.rows[i]) out << ',' << c;
        out << '\n';
    }
}

}  // namespace sympol
