#include <doctest.h>

#include <random>

#include "mappa/error.hpp"
#include "mappa/keywords.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mappa;

namespace {

Lexicon sample_lexicon() {
    return testing::lexicon_from(
        "#dim=2\n"
        "beijing\tNOUN\t2.0\t\t1,0\n"
        "bid\tVERB\t1.5\t\t1,1\n"
        "winter\tNOUN\t1.2\t\t0,1\n"
        "olympics\tNOUN\t2.5\t\t1,0.5\n"
        "for\tOTHER\t0.1\t\t0.2,0.1\n"
        "北京\tNOUN\t2.0\tbei jing\t1,0\n"
        "山水\tNOUN\t1.0\tshan shui\t0,1\n"
        "山\tNOUN\t1.0\tshan\t0,1\n");
}

}  // namespace

TEST_CASE("tokenize alphabetic") {
    const auto lex = sample_lexicon();
    CHECK(tokenize({"Beijing bids for 2022 Winter Olympics", LanguageHint::Alphabetic}, lex) ==
          std::vector<std::string>{"beijing", "bids", "for", "2022", "winter", "olympics"});
    CHECK(tokenize({"...!?", LanguageHint::Alphabetic}, lex).empty());
    CHECK(tokenize({"", LanguageHint::Auto}, lex).empty());
    CHECK(tokenize({"great_wall, maps; rivers.", LanguageHint::Alphabetic}, lex) ==
          std::vector<std::string>{"great_wall", "maps", "rivers"});
}

TEST_CASE("tokenize CJK uses greedy longest match") {
    const auto lex = sample_lexicon();
    // 北京 is a 2-character entry, 人 is unknown.
    CHECK(tokenize({"北京人", LanguageHint::Cjk}, lex) == std::vector<std::string>{"北京", "人"});
    CHECK(tokenize({"山水山", LanguageHint::Cjk}, lex) == std::vector<std::string>{"山水", "山"});
    CHECK(tokenize({"北京，山水", LanguageHint::Cjk}, lex) == std::vector<std::string>{"北京", "山水"});
}

TEST_CASE("tokenize auto switches per script run") {
    const auto lex = sample_lexicon();
    const auto toks = tokenize_with_offsets({"Winter在北京 olympics", LanguageHint::Auto}, lex);
    REQUIRE(toks.size() == 4);
    CHECK(toks[0].text == "winter");
    CHECK(toks[0].offset == 0);
    CHECK(toks[1].text == "在");
    CHECK(toks[1].offset == 6);
    CHECK(toks[2].text == "北京");
    CHECK(toks[2].offset == 7);
    CHECK(toks[3].text == "olympics");
    CHECK(toks[3].offset == 10);
}

TEST_CASE("tokenize rejects over-long utterances") {
    const auto lex = sample_lexicon();
    CHECK_THROWS_AS(tokenize({std::string(kMaxUtteranceChars + 1, 'a'), LanguageHint::Auto}, lex),
                    InvalidArgumentError);
    CHECK_NOTHROW(tokenize({std::string(kMaxUtteranceChars, 'a'), LanguageHint::Auto}, lex));
}

TEST_CASE("extract_keywords examples") {
    const auto lex = sample_lexicon();

    auto kws = extract_keywords({"beijing bid winter olympics", LanguageHint::Auto}, lex, 3);
    REQUIRE(kws.size() == 3);
    CHECK(kws[0].word == "olympics");
    CHECK(kws[0].score == doctest::Approx(2.5));
    CHECK(kws[1].word == "beijing");
    CHECK(kws[1].score == doctest::Approx(2.0));
    CHECK(kws[2].word == "bid");
    CHECK(kws[2].score == doctest::Approx(1.5));

    CHECK(extract_keywords({"for for for", LanguageHint::Auto}, lex, 3).empty());

    kws = extract_keywords({"olympics olympics beijing", LanguageHint::Auto}, lex, 2);
    REQUIRE(kws.size() == 2);
    CHECK(kws[0].word == "olympics");
    CHECK(kws[0].score == doctest::Approx(5.0));
    CHECK(kws[1].word == "beijing");
    CHECK(kws[1].score == doctest::Approx(2.0));

    // "bids" is not a lexicon entry, so it drops; so does the numeral.
    kws = extract_keywords({"Beijing Bids for 2022 Winter Olympics", LanguageHint::Auto}, lex, 5);
    REQUIRE(kws.size() == 3);
    CHECK(kws[0].word == "olympics");
    CHECK(kws[2].word == "winter");
}

TEST_CASE("extract_keywords ties break by first occurrence then word") {
    const auto lex = testing::lexicon_from(
        "#dim=2\n"
        "amber\tNOUN\t1\t\t1,0\n"
        "zinc\tNOUN\t1\t\t1,0\n"
        "zero\tNOUN\t0\t\t1,0\n");
    auto kws = extract_keywords({"zinc amber", LanguageHint::Auto}, lex, 5);
    REQUIRE(kws.size() == 2);
    CHECK(kws[0].word == "zinc");
    CHECK(kws[0].first_offset == 0);
    CHECK(kws[1].word == "amber");
    // idf 0 gives score 0, which is not a keyword.
    CHECK(extract_keywords({"zero", LanguageHint::Auto}, lex, 5).empty());
}

TEST_CASE("extract_keywords matches the brute-force oracle on random utterances") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pos_pick(0, 3), len(0, 1000);
    std::uniform_real_distribution<double> idf(0.0, 3.0);

    std::string tsv = "#dim=2\n";
    std::map<std::string, std::pair<bool, double>> table;
    std::vector<std::string> vocab;
    for (int i = 0; i < 60; ++i) {
        const std::string w = "w" + std::to_string(i);
        const char* pos[] = {"NOUN", "VERB", "ADJ", "OTHER"};
        const int p = pos_pick(rng);
        // Round idf so ties actually occur.
        const double v = std::round(idf(rng) * 4) / 4;
        tsv += w + "\t" + pos[p] + "\t" + std::to_string(v) + "\t\t1,0\n";
        table[w] = {p != 3, v};
        vocab.push_back(w);
    }
    for (int i = 0; i < 15; ++i) vocab.push_back("unk" + std::to_string(i));
    const auto lex = testing::lexicon_from(tsv);

    std::uniform_int_distribution<std::size_t> word_pick(0, vocab.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = len(rng);
        std::vector<std::string> tokens;
        std::string text;
        for (int i = 0; i < n; ++i) {
            tokens.push_back(vocab[word_pick(rng)]);
            text += tokens.back() + " ";
        }
        const std::size_t k = 1 + static_cast<std::size_t>(trial % 12);
        const auto got = extract_keywords({text, LanguageHint::Alphabetic}, lex, k);
        const auto want = oracle::keywords(tokens, table, k);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].word == want[i].word);
            CHECK(got[i].score == doctest::Approx(want[i].score));
            const auto* e = lex.find(got[i].word);
            REQUIRE(e);
            CHECK(e->pos != Pos::Other);
            if (i) CHECK(got[i].score <= got[i - 1].score);
        }
    }
}

TEST_CASE("compute_idf") {
    const std::vector<std::vector<std::string>> docs = {{"river", "sea"}, {"river"}, {"river", "lake", "lake"}};
    const auto idf = compute_idf(docs);
    CHECK(idf.at("river") == doctest::Approx(1.0));
    CHECK(idf.at("sea") == doctest::Approx(1.69315).epsilon(1e-5));
    CHECK(idf.at("lake") == doctest::Approx(1.69315).epsilon(1e-5));
    CHECK(idf.count("mountain") == 0);
    CHECK_THROWS_AS(compute_idf(std::vector<std::vector<std::string>>{}), DegenerateInputError);

    const auto lex = sample_lexicon();
    const auto from_text = compute_idf(std::vector<std::string>{"北京山水", "Beijing"}, lex);
    CHECK(from_text.at("北京") == doctest::Approx(std::log(3.0 / 2.0) + 1.0));
    CHECK(from_text.at("beijing") == doctest::Approx(std::log(3.0 / 2.0) + 1.0));
}
