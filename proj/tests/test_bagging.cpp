#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <sstream>

#include "sympol/bagging.hpp"
#include "sympol/pipeline.hpp"
#include "sympol/synthetic.hpp"

using namespace sympol;

namespace {

WordBag bags_of(std::vector<std::vector<std::string>> series) {
    WordBag b;
    b.series = std::move(series);
    return b;
}

}  // namespace

TEST_CASE("dictionary deduplicates in first-occurrence order") {
    const auto dict = build_dictionary(bags_of({{"AB", "AB", "CD"}}));
    REQUIRE(dict.size() == 2);
    CHECK(dict[0] == "AB");
    CHECK(dict[1] == "CD");
}

TEST_CASE("dictionary deduplicates across series") {
    const auto dict = build_dictionary(bags_of({{"AB"}, {"AB"}}));
    CHECK(dict.size() == 1);
}

TEST_CASE("histogram counts word occurrences") {
    const auto bags = bags_of({{"AB", "AB", "CD"}});
    const auto dict = build_dictionary(bags);
    const auto h = populate_histogram(bags, dict);
    REQUIRE(h.rows.size() == 1);
    CHECK(h.rows[0] == std::vector<int>{2, 1});
}

TEST_CASE("words missing from the dictionary are dropped") {
    Dictionary dict;
    dict.add("AB");
    const auto h = populate_histogram(bags_of({{"AB", "ZZ"}}), dict);
    CHECK(h.rows[0] == std::vector<int>{1});
    // conservation: row sum + dropped unseen words = bag size
    CHECK(h.rows[0][0] + 1 == 2);
}

TEST_CASE("histogram rows are invariant under window permutation") {
    std::vector<std::string> words{"AA", "AB", "AA", "BA", "BB", "AB", "AA"};
    const auto dict = build_dictionary(bags_of({words}));
    const auto h1 = populate_histogram(bags_of({words}), dict);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(words.begin(), words.end(), rng);
        const auto h2 = populate_histogram(bags_of({words}), dict);
        CHECK(h1.rows == h2.rows);
    }
}

TEST_CASE("transductive pipeline rows sum to the window count") {
    BagOfPatternsSpec spec;
    spec.instances = 8;
    spec.series_length = 200;
    spec.pattern_length = 40;
    spec.seed = 13;
    const auto ds = generate_bag_of_patterns(spec);
    const int n = 32;
    const auto res = sympol_transform(ds, SymPolParams{n, 4, 3});
    for (const auto& row : res.histogram.rows) {
        long sum = 0;
        for (int c : row) sum += c;
        CHECK(sum == static_cast<long>(ds.length()) - n);
    }
}

TEST_CASE("numerosity reduction collapses consecutive duplicates only") {
    const auto reduced = reduce_numerosity(bags_of({{"AA", "AA", "AB", "AA", "AB", "AB"}}));
    CHECK(reduced.series[0] == std::vector<std::string>{"AA", "AB", "AA", "AB"});
}

TEST_CASE("histogram CSV layout") {
    const auto bags = bags_of({{"AB", "CD", "AB"}, {"CD"}});
    const auto dict = build_dictionary(bags);
    const auto h = populate_histogram(bags, dict);
    std::ostringstream os;
    const std::vector<int> labels{3, 5};
    write_histogram_csv(os, h, dict, labels);
    CHECK(os.str() == "label,AB,CD\n3,2,1\n5,0,1\n");
}

TEST_CASE("histogram population is deterministic across worker counts") {
    std::vector<std::vector<std::string>> series(6);
    std::mt19937_64 rng(4);
    const std::vector<std::string> vocab{"AA", "AB", "BA", "BB", "CC"};
    for (auto& s : series)
        for (int i = 0; i < 50; ++i)
            s.push_back(vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(rng)]);
    const auto bags = bags_of(series);
    const auto dict = build_dictionary(bags);
    const auto h1 = populate_histogram(bags, dict, 1);
    const auto h4 = populate_histogram(bags, dict, 4);
    CHECK(h1.rows == h4.rows);
}
