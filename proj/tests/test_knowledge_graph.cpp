#include <doctest.h>

#include <random>
#include <sstream>

#include "mappa/error.hpp"
#include "mappa/knowledge_graph.hpp"
#include "test_support.hpp"

using namespace mappa;

namespace {

KnowledgeGraph kg_from(const std::string& text) {
    std::istringstream in(text);
    return parse_kg(in);
}

}  // namespace

TEST_CASE("load_kg") {
    SUBCASE("distinct lines") {
        auto kg = kg_from("map\tdraws\tisland\nriver\tflows_into\tsea\n# note\n\nisland\tsurrounded_by\tsea\n");
        CHECK(kg.size() == 3);
        CHECK(kg.skipped_self_loops() == 0);
    }
    SUBCASE("duplicates collapse") {
        auto kg = kg_from("map\tdraws\tisland\nmap\tdraws\tisland\n");
        CHECK(kg.size() == 1);
    }
    SUBCASE("self-loops are skipped and counted") {
        auto kg = kg_from("great_wall\tdefends\tgreat_wall\nmap\tdraws\tisland\n");
        CHECK(kg.size() == 1);
        CHECK(kg.skipped_self_loops() == 1);
        CHECK_FALSE(kg.covered("great_wall"));
    }
    SUBCASE("malformed lines name the line number") {
        try {
            kg_from("a\tb\tc\nonly\ttwo\n");
            FAIL("expected a format error");
        } catch (const FormatError& e) {
            CHECK(e.line() == 2);
        }
        CHECK_THROWS_AS(kg_from("a\t\tc\n"), FormatError);
    }
    SUBCASE("bundled sample") {
        auto kg = load_kg(testing::kDataDir / "kg.tsv");
        CHECK(kg.size() >= 90);
        CHECK(kg.covered("beijing"));
    }
}

TEST_CASE("covered and kg_neighbors") {
    auto kg = kg_from("w\tr1\ta\nb\tr2\tw\nw\tr1\tc\nw\tr3\tc\nx\tr9\ty\n");
    CHECK(covered("w", kg));
    CHECK(covered("b", kg));  // tail only
    CHECK_FALSE(covered("nowhere", kg));
    CHECK(kg_neighbors("nowhere", kg).empty());

    const auto n = kg_neighbors("w", kg);
    const std::vector<KgNeighbor> want = {{"a", "r1"}, {"b", "r2"}, {"c", "r1"}, {"c", "r3"}};
    CHECK(n == want);

    // Duplicate relation edges to one neighbour are a single entry.
    auto dup = kg_from("p\tnear\tq\nq\tnear\tp\n");
    CHECK(kg_neighbors("p", dup) == std::vector<KgNeighbor>{{"q", "near"}});
}

TEST_CASE("adjacency is the symmetric closure of the triples") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> node(0, 14), rel(0, 3);
    KnowledgeGraph kg;
    for (int i = 0; i < 200; ++i) {
        KgTriple t{"n" + std::to_string(node(rng)), "r" + std::to_string(rel(rng)), "n" + std::to_string(node(rng))};
        kg.add(t);
    }
    for (int w = 0; w < 16; ++w) {
        const auto word = "n" + std::to_string(w);
        std::set<KgNeighbor> closure;
        for (const auto& t : kg.triples()) {
            if (t.head == word) closure.insert({t.tail, t.relation});
            if (t.tail == word) closure.insert({t.head, t.relation});
        }
        const auto got = kg_neighbors(word, kg);
        CHECK(std::set<KgNeighbor>(got.begin(), got.end()) == closure);
        CHECK(std::is_sorted(got.begin(), got.end()));
        CHECK(covered(word, kg) == !got.empty());
        for (const auto& n : got) CHECK(n.neighbor != word);
    }
}

TEST_CASE("write then reload yields the same triples") {
    auto kg = load_kg(testing::kDataDir / "kg.tsv");
    std::stringstream buf;
    write_kg(buf, kg);
    auto again = parse_kg(buf);
    CHECK(again.triples() == kg.triples());
}
