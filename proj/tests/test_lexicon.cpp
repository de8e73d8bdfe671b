#include <doctest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "mappa/error.hpp"
#include "mappa/lexicon.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mappa;
using testing::entry;

TEST_CASE("load_lexicon parses header and records") {
    auto lex = testing::lexicon_from(
        "#dim=3\n"
        "river\tNOUN\t1.5\tr ih v er\t0.1,0.2,0.3\n"
        "# a comment\n"
        "flow\tVERB\t0.7\t\t1,0,0\n");
    CHECK(lex.dim() == 3);
    CHECK(lex.size() == 2);
    const auto& river = lex.at("river");
    CHECK(river.pos == Pos::Noun);
    CHECK(river.idf == doctest::Approx(1.5));
    CHECK(river.phonetic == std::vector<std::string>{"r", "ih", "v", "er"});
    CHECK(lex.at("flow").phonetic.empty());
}

TEST_CASE("load_lexicon edge cases") {
    SUBCASE("header only") { CHECK(testing::lexicon_from("#dim=4\n").empty()); }

    SUBCASE("duplicate word keeps the last record") {
        auto lex = testing::lexicon_from("#dim=2\nsea\tNOUN\t1\t\t1,0\nsea\tNOUN\t2\t\t0,1\n");
        CHECK(lex.size() == 1);
        CHECK(lex.at("sea").idf == 2.0);
    }

    SUBCASE("wrong arity names the line") {
        try {
            testing::lexicon_from("#dim=3\nok\tNOUN\t1\t\t1,2,3\nbad\tNOUN\t1\t\t1,2\n");
            FAIL("expected a format error");
        } catch (const FormatError& e) {
            CHECK(e.line() == 3);
        }
    }

    SUBCASE("missing or garbled header") {
        CHECK_THROWS_AS(testing::lexicon_from(""), FormatError);
        CHECK_THROWS_AS(testing::lexicon_from("river\tNOUN\t1\t\t1,0\n"), FormatError);
        CHECK_THROWS_AS(testing::lexicon_from("#dim=abc\n"), FormatError);
        CHECK_THROWS_AS(testing::lexicon_from("#dim=1\n"), FormatError);
    }

    SUBCASE("bad fields") {
        CHECK_THROWS_AS(testing::lexicon_from("#dim=2\nx\tNOUNISH\t1\t\t1,0\n"), FormatError);
        CHECK_THROWS_AS(testing::lexicon_from("#dim=2\nx\tNOUN\t-1\t\t1,0\n"), FormatError);
        CHECK_THROWS_AS(testing::lexicon_from("#dim=2\nx\tNOUN\t1\t\t0,0\n"), FormatError);
        CHECK_THROWS_AS(testing::lexicon_from("#dim=2\nx\tNOUN\t1\t1,0\n"), FormatError);
    }

    SUBCASE("missing file") { CHECK_THROWS_AS(load_lexicon("/nonexistent/lexicon.tsv"), IoError); }
}

TEST_CASE("write_lexicon round-trips") {
    auto lex = load_lexicon(testing::kDataDir / "lexicon.tsv");
    std::stringstream buf;
    write_lexicon(buf, lex);
    auto again = parse_lexicon(buf);
    REQUIRE(again.size() == lex.size());
    for (const auto& [w, e] : lex) {
        const auto& f = again.at(w);
        CHECK(f.embedding == e.embedding);
        CHECK(f.phonetic == e.phonetic);
        CHECK(f.idf == e.idf);
    }
}

TEST_CASE("semantic_similarity examples") {
    CHECK(semantic_similarity(std::vector<double>{0.3, -2.0, 5.0}, std::vector<double>{0.3, -2.0, 5.0}) == 1.0);
    CHECK(semantic_similarity(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == 0.0);
    CHECK(semantic_similarity(std::vector<double>{1, 1}, std::vector<double>{1, 0}) == doctest::Approx(0.70711).epsilon(1e-5));
    CHECK(semantic_similarity(std::vector<double>{1, 0}, std::vector<double>{-1, 0.1}) == 0.0);
    CHECK_THROWS_AS(semantic_similarity(std::vector<double>{0, 0}, std::vector<double>{1, 0}), DegenerateInputError);
}

TEST_CASE("morphological_similarity examples") {
    CHECK(morphological_similarity("mountain", "mountain") == 1.0);
    CHECK(morphological_similarity("abc", "xyz") == 0.0);
    CHECK(morphological_similarity("winter", "winner") == doctest::Approx(0.6));
    CHECK(morphological_similarity("a", "a") == 1.0);
    CHECK(morphological_similarity("山", "山水") == 0.0);
    CHECK(morphological_similarity("山水", "山水画") == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(morphological_similarity("", "x"), DegenerateInputError);
}

TEST_CASE("phonological_similarity examples") {
    auto map = entry("map", {1, 0}, {"m", "a", "p"});
    auto mat = entry("mat", {1, 0}, {"m", "a", "t"});
    auto tek = entry("tek", {1, 0}, {"t", "e", "k"});
    CHECK(phonological_similarity(map, map) == 1.0);
    CHECK(phonological_similarity(map, tek) == 0.0);
    CHECK(phonological_similarity(map, mat) == doctest::Approx(0.66667).epsilon(1e-5));

    // Empty phonetic field falls back to characters.
    auto cat = entry("cat", {1, 0});
    auto bat = entry("bat", {1, 0});
    CHECK(phonological_similarity(cat, bat) == doctest::Approx(2.0 / 3.0));
    CHECK(phonological_similarity(bat, cat) == phonological_similarity(cat, bat));
}

TEST_CASE("levenshtein agrees with the full-table oracle") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 8), sym(0, 3);
    for (int t = 0; t < 500; ++t) {
        std::vector<std::string> a(len(rng)), b(len(rng));
        for (auto& s : a) s = std::string(1, static_cast<char>('a' + sym(rng)));
        for (auto& s : b) s = std::string(1, static_cast<char>('a' + sym(rng)));
        CHECK(levenshtein(a, b) == oracle::levenshtein(a, b));
    }
}

TEST_CASE("semantic_neighbors") {
    auto lex = testing::lexicon_from(
        "#dim=2\n"
        "a\tNOUN\t1\t\t1,0\n"
        "b\tNOUN\t1\t\t1,1\n"
        "c\tNOUN\t1\t\t0,1\n");
    CHECK(semantic_neighbors("a", lex, 0).empty());
    auto all = semantic_neighbors("a", lex, 10);
    REQUIRE(all.size() == 2);
    CHECK(all[0].first == "b");
    CHECK(all[1].first == "c");
    CHECK_THROWS_AS(semantic_neighbors("zzz", lex, 3), NotFoundError);

    SUBCASE("ties break lexicographically") {
        auto tied = testing::lexicon_from("#dim=2\nq\tNOUN\t1\t\t1,0\nz\tNOUN\t1\t\t2,0\ny\tNOUN\t1\t\t3,0\n");
        auto r = semantic_neighbors("q", tied, 2);
        CHECK(r[0].first == "y");
        CHECK(r[1].first == "z");
    }
}

TEST_CASE("semantic_neighbors on a hand-set 5-word lexicon matches the all-pairs oracle") {
    const std::vector<std::pair<std::string, std::vector<double>>> table = {
        {"ash", {1.0, 0.2, 0.0}}, {"birch", {0.9, 0.4, 0.1}}, {"cedar", {0.1, 1.0, 0.0}},
        {"dune", {0.0, 0.3, 1.0}}, {"elm", {0.7, 0.7, 0.2}}};
    Lexicon lex(3);
    for (const auto& [w, v] : table) lex.insert(entry(w, v));
    for (const auto& [w, v] : table) {
        for (std::size_t k = 0; k <= 5; ++k) {
            const auto got = semantic_neighbors(w, lex, k);
            const auto want = oracle::neighbors(table, w, k);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].first == want[i].first);
                CHECK(got[i].second == doctest::Approx(want[i].second).epsilon(1e-12));
            }
        }
    }
}

namespace {

std::string random_word(std::mt19937_64& rng) {
    static const std::string alphabet = "abcdeo";
    std::uniform_int_distribution<std::size_t> len(1, 7), pick(0, alphabet.size() - 1);
    std::string w;
    const auto n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w += alphabet[pick(rng)];
    return w;
}

LexiconEntry random_entry(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_int_distribution<int> plen(0, 5), sym(0, 4);
    LexiconEntry e;
    e.word = random_word(rng);
    for (std::size_t i = 0; i < dim; ++i) e.embedding.push_back(g(rng));
    const int n = plen(rng);
    for (int i = 0; i < n; ++i) e.phonetic.push_back(std::string(1, static_cast<char>('p' + sym(rng))));
    return e;
}

}  // namespace

TEST_CASE("similarity axioms on 1000 random pairs") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_entry(rng, 8), b = random_entry(rng, 8);
        const double sab = semantic_similarity(a, b), sba = semantic_similarity(b, a);
        const double mab = morphological_similarity(a.word, b.word), mba = morphological_similarity(b.word, a.word);
        const double pab = phonological_similarity(a, b), pba = phonological_similarity(b, a);
        for (double v : {sab, mab, pab}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(std::abs(sab - sba) <= 1e-12);
        CHECK(std::abs(mab - mba) <= 1e-12);
        CHECK(std::abs(pab - pba) <= 1e-12);
        CHECK(semantic_similarity(a, a) == 1.0);
        CHECK(morphological_similarity(a.word, a.word) == 1.0);
        CHECK(phonological_similarity(a, a) == 1.0);
        CHECK(mab == doctest::Approx(oracle::dice(a.word, b.word)).epsilon(1e-12));
    }
}

TEST_CASE("semantic similarity is invariant under positive scaling") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> scale(1e-3, 1e3);
    for (int t = 0; t < 500; ++t) {
        const auto a = random_entry(rng, 6), b = random_entry(rng, 6);
        auto scaled = a;
        const double s = scale(rng);
        for (auto& v : scaled.embedding) v *= s;
        const double base = semantic_similarity(a, b);
        const double after = semantic_similarity(scaled, b);
        CHECK(std::abs(after - base) <= 1e-9 * std::max(1.0, std::abs(base)));
    }
}

TEST_CASE("morphological similarity of 1 means equal gram sets") {
    std::mt19937_64 rng(5);
    int hits = 0;
    for (int t = 0; t < 20000; ++t) {
        const auto a = random_word(rng), b = random_word(rng);
        if (morphological_similarity(a, b) == 1.0) {
            ++hits;
            CHECK(char_gram_set(a) == char_gram_set(b));
        }
    }
    CHECK(hits > 0);
    // Different strings, same bigram set.
    CHECK(morphological_similarity("abab", "baba") == 1.0);
    CHECK(morphological_similarity("aaa", "aa") == 1.0);
}

TEST_CASE("semantic_neighbors equals the brute-force oracle for random lexicons and every k") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial * 5;
        std::vector<std::pair<std::string, std::vector<double>>> table;
        Lexicon lex(4);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> v(4);
            for (auto& x : v) x = g(rng);
            std::string w = "w" + std::to_string(i);
            table.emplace_back(w, v);
            lex.insert(entry(w, v));
        }
        const auto& query = table[trial % n].first;
        for (std::size_t k = 0; k <= n + 1; ++k) {
            const auto got = semantic_neighbors(query, lex, k);
            const auto want = oracle::neighbors(table, query, k);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].first == want[i].first);
        }
    }
}
