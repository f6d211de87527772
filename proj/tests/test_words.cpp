#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gogkit/words.hpp"
#include "rewrite_oracle.hpp"
#include "support.hpp"

using namespace gogkit;
using testsupport::fixture;
using testsupport::random_word;

namespace {

const std::string kFixtures[] = {"bs23", "edge23", "klein_loop", "figure8", "z2asc", "dihedral", "bs2m2"};

}  // namespace

TEST_CASE("reduction cancels a backtrack through the edge group") {
    const GraphOfGroups g = fixture("bs23");
    // e (2) e~ : alpha_ebar(1) = 2, so this is alpha_e(1) = 3 at v.
    const Word w = parse_word(g, "e (2) e~");
    const Reduction r = reduce_counted(g, w);
    CHECK(r.cancellations == 1);
    CHECK(r.word.letters.empty());
    CHECK(r.word.tail.c[0] == 3);
}

TEST_CASE("reduced words are left alone") {
    const GraphOfGroups g = fixture("bs23");
    const Word w = parse_word(g, "(1) e (1) e~ (5)");
    CHECK(is_reduced(g, w));
    CHECK(reduce(g, w) == w);
}

TEST_CASE("reduction pushes non-transversal elements to the right") {
    const GraphOfGroups g = fixture("bs23");
    // 4 = 1 + 3*1 at the e step, carry alpha_ebar(1) = 2 into the tail.
    const Word w = reduce(g, parse_word(g, "(4) e"));
    REQUIRE(w.letters.size() == 1);
    CHECK(w.letters[0].g.c[0] == 1);
    CHECK(w.tail.c[0] == 2);
}

TEST_CASE("badly composed words are rejected") {
    const GraphOfGroups g = fixture("edge23");
    Word w;
    w.range = 0;
    w.letters.push_back(Letter{g.vertex_group(0).identity(), 0});
    w.letters.push_back(Letter{g.vertex_group(0).identity(), 0});
    w.tail = g.vertex_group(1).identity();
    CHECK_THROWS_AS(check_word(g, w), WordError);
}

TEST_CASE("word literals round trip through the formatter") {
    std::mt19937 rng(7);
    for (const std::string name : kFixtures) {
        const GraphOfGroups g = fixture(name);
        for (int i = 0; i < 50; ++i) {
            const Word w = reduce(g, random_word(g, g.base(), 1 + i % 5, rng));
            if (w.letters.empty()) continue;
            CAPTURE(name);
            CHECK(parse_word(g, format_word(g, w)) == w);
        }
    }
}

TEST_CASE("property: reduce is idempotent and lands on reduced words") {
    std::mt19937 rng(11);
    for (const std::string name : kFixtures) {
        const GraphOfGroups g = fixture(name);
        for (int i = 0; i < 300; ++i) {
            const Word w = random_word(g, g.base(), static_cast<std::size_t>(i % 9), rng);
            const Word r = reduce(g, w);
            CAPTURE(name);
            CHECK(is_reduced(g, r));
            CHECK(reduce(g, r) == r);
            CHECK(word_source(g, r) == word_source(g, w));
        }
    }
}

TEST_CASE("property: w times its inverse is the identity") {
    std::mt19937 rng(12);
    for (const std::string name : kFixtures) {
        const GraphOfGroups g = fixture(name);
        for (int i = 0; i < 300; ++i) {
            const Word w = random_word(g, g.base(), static_cast<std::size_t>(i % 9), rng);
            CAPTURE(name);
            CHECK(is_identity(g, concat(g, w, invert(g, w))));
            CHECK(is_identity(g, concat(g, invert(g, w), w)));
        }
    }
}

TEST_CASE("property: concatenation is associative") {
    std::mt19937 rng(13);
    for (const std::string name : kFixtures) {
        const GraphOfGroups g = fixture(name);
        for (int i = 0; i < 100; ++i) {
            const Word a = random_word(g, g.base(), i % 4, rng);
            const Word b = random_word(g, word_source(g, a), (i + 1) % 4, rng);
            const Word c = random_word(g, word_source(g, b), (i + 2) % 4, rng);
            CHECK(concat(g, concat(g, a, b), c) == concat(g, a, concat(g, b, c)));
        }
    }
}

TEST_CASE("normal forms agree with the exhaustive rewrite oracle") {
    std::mt19937 rng(14);
    for (const std::string name : kFixtures) {
        const GraphOfGroups g = fixture(name);
        for (int i = 0; i < 150; ++i) {
            const Word w = random_word(g, g.base(), static_cast<std::size_t>(i % 5), rng);
            const auto terminals = testsupport::rewrite_terminals(g, w);
            CAPTURE(name);
            CAPTURE(format_word(g, w));
            REQUIRE(terminals.size() == 1);
            CHECK(*terminals.begin() == reduce(g, w));
        }
    }
}

TEST_CASE("q ratio is multiplicative and survives reduction") {
    const GraphOfGroups g = fixture("bs23");
    CHECK(q_ratio(g, parse_word(g, "e")) == Rational(2, 3));
    CHECK(q_ratio(g, parse_word(g, "e~")) == Rational(3, 2));
    std::mt19937 rng(15);
    for (int i = 0; i < 200; ++i) {
        const Word a = random_word(g, 0, i % 6, rng);
        const Word b = random_word(g, 0, (i + 3) % 6, rng);
        CHECK(q_ratio(g, concat(g, a, b)) == q_ratio(g, a) * q_ratio(g, b));
        CHECK(q_ratio(g, reduce(g, a)) == q_ratio(g, a));
    }
    const GraphOfGroups neg = fixture("bs2m2");
    CHECK(q_ratio(neg, parse_word(neg, "e")) == Rational(-1));
}

TEST_CASE("epsilon words are loops at the base") {
    const GraphOfGroups g = fixture("edge23");
    const SpanningTree t = spanning_tree(g.graph(), g.base());
    const Word w = epsilon_group(g, t, 1, g.vertex_group(1).canonical({Int(1)}));
    CHECK(w.range == g.base());
    CHECK(word_source(g, w) == g.base());
    CHECK(is_reduced(g, w));
}
