#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gogkit/parse.hpp"
#include "support.hpp"

#include <filesystem>

using namespace gogkit;

TEST_CASE("every fixture loads, and all but the singular one validate") {
    for (const auto& entry : std::filesystem::directory_iterator(GOGKIT_FIXTURE_DIR)) {
        const std::string name = entry.path().stem().string();
        CAPTURE(name);
        const Document d = load_document(entry.path().string());
        CHECK(d.graph.has_value() != d.ray.has_value());
        if (d.graph) CHECK(validate(*d.graph).ok() == (name != "singular"));
        if (d.ray) CHECK(d.ray->problems().empty());
    }
}

TEST_CASE("singular graphs name the offending vertices") {
    const ValidationReport r = validate(testsupport::fixture("singular"));
    REQUIRE(r.errors.size() == 2);
    CHECK(r.errors[0].find("'x'") != std::string::npos);
    CHECK(r.errors[1].find("'y'") != std::string::npos);
}

TEST_CASE("edge lines accept matrices and edge groups") {
    const Document d = parse_document(R"(
[vertices]
x = Z^2
[edges]
e: x, x, [[2,0],[0,1]], [[1,0],[0,3]], Z^2
[base] x
)");
    REQUIRE(d.graph);
    const GraphOfGroups& g = *d.graph;
    CHECK(g.num_edges() == 2);
    CHECK(g.sigma_size(0) == 2);
    CHECK(g.sigma_size(1) == 3);
    CHECK(g.fan_in(0) == 5);
}

TEST_CASE("trivial groups need no maps") {
    const Document d = parse_document("[vertices]\nx = 1\n[edges]\na: x, x\nb: x, x\n[base]\nx\n");
    REQUIRE(d.graph);
    CHECK(d.graph->all_trivial());
    CHECK(d.graph->fan_in(0) == 4);
}

TEST_CASE("ray presets parse prefix and period") {
    const Document d = parse_document("[ray]\nindices = 3, 1 ; 2\n");
    REQUIRE(d.ray);
    CHECK(d.ray->index(1) == 3);
    CHECK(d.ray->index(2) == 1);
    CHECK(d.ray->index(3) == 2);
    CHECK(d.ray->index(10) == 2);
    CHECK(d.ray->infinitely_many_proper());
    CHECK(d.ray->supernatural_string() == "2^inf * 3");
}

TEST_CASE("malformed documents report a line") {
    const char* bad[] = {
        "[vertices]\nx = Q\n[base] x\n",
        "[vertices]\nx = Z\n[edges]\ne: x, y, 1, 1\n[base] x\n",
        "[vertices]\nx = Z\n[edges]\ne x x\n[base] x\n",
        "[nonsense]\n",
        "[vertices]\nx = Z\nx = Z\n[base] x\n",
    };
    for (const char* text : bad) {
        CAPTURE(std::string(text));
        CHECK_THROWS_AS(parse_document(text), ParseError);
    }
}

TEST_CASE("maps that are not injective or have the wrong shape fail validation") {
    const Document d = parse_document("[vertices]\nx = Z\n[edges]\ne: x, x, [[1,2]], 1\n[base] x\n");
    REQUIRE(d.graph);
    const ValidationReport r = validate(*d.graph);
    CHECK_FALSE(r.ok());
    CHECK(r.errors.size() == 2);
}

TEST_CASE("matrix and word literals") {
    CHECK(parse_matrix("[[1,0],[0,2]]") == IntMatrix{{Int(1), Int(0)}, {Int(0), Int(2)}});
    CHECK(parse_matrix("-3") == IntMatrix{{Int(-3)}});
    const GraphOfGroups g = testsupport::fixture("bs23");
    CHECK(format_word(g, parse_word(g, "@v (3)")) == "@v (3)");
    CHECK_THROWS(parse_word(g, "(1) nope"));
    // paths must be reduced: 1 e~ right after e backtracks
    CHECK_THROWS(parse_path(g, "(1) e (0) e~"));
}
