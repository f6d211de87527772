#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gogkit/dynamics.hpp"
#include "support.hpp"

#include <functional>
#include <map>

using namespace gogkit;
using testsupport::fixture;

namespace {

// d -> d' exists iff some letter (t, d') may follow a letter on d in a reduced path:
// t ranges over the transversal at d', and t = 1 is banned right after dbar.
bool arc_oracle(const GraphOfGroups& g, EdgeId d, EdgeId d2) {
    if (g.range(d2) != g.source(d)) return false;
    const auto& grp = g.vertex_group(g.range(d2));
    for (const AbElement& t : g.alpha(d2).transversal())
        if (d2 != GraphOfGroups::bar(d) || !grp.is_identity(t)) return true;
    return false;
}

// Reduced edge sequences starting with e, up to `len` edges; true if f shows up after position 0.
bool flow_oracle(const GraphOfGroups& g, EdgeId f, EdgeId e, std::size_t len) {
    std::function<bool(EdgeId, std::size_t)> walk = [&](EdgeId cur, std::size_t used) {
        if (used == len) return false;
        for (EdgeId n = 0; n < static_cast<EdgeId>(g.num_edges()); ++n)
            if (arc_oracle(g, cur, n) && (n == f || walk(n, used + 1))) return true;
        return false;
    };
    return walk(e, 1);
}

// Multiplier of a GBS edge map.
Rational omega(const GraphOfGroups& g, EdgeId e) { return Rational(g.alpha(e).matrix()[0][0]); }

// Unimodular iff every closed edge walk at the base has |prod omega(ebar)/omega(e)| = 1.
bool unimodular_oracle(const GraphOfGroups& g) {
    const std::size_t len = g.num_edges();
    bool ok = true;
    std::function<void(VertexId, std::size_t, Rational)> walk = [&](VertexId at, std::size_t used, Rational q) {
        if (at == g.base() && used > 0 && abs(q) != 1) ok = false;
        if (!ok || used == len) return;
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e)
            if (g.range(e) == at) walk(g.source(e), used + 1, q * omega(g, GraphOfGroups::bar(e)) / omega(g, e));
    };
    walk(g.base(), 0, 1);
    return ok;
}

}  // namespace

TEST_CASE("flow graph arcs match the reduced-path definition") {
    for (const std::string name : {"bs23", "edge23", "edge22", "figure8", "theta", "triangle", "z2asc", "dihedral", "klein_loop"}) {
        const GraphOfGroups g = fixture(name);
        const FlowGraph fg = flow_graph(g);
        for (EdgeId d = 0; d < static_cast<EdgeId>(g.num_edges()); ++d)
            for (EdgeId d2 = 0; d2 < static_cast<EdgeId>(g.num_edges()); ++d2) {
                const bool arc = std::find(fg.succ[d].begin(), fg.succ[d].end(), d2) != fg.succ[d].end();
                CAPTURE(name);
                CHECK(arc == arc_oracle(g, d, d2));
            }
    }
}

TEST_CASE("can_flow agrees with enumeration of reduced edge sequences") {
    for (const std::string name : {"bs23", "edge23", "edge22", "figure8", "theta", "triangle", "zcycle", "bs12"}) {
        const GraphOfGroups g = fixture(name);
        const std::size_t len = 2 * g.num_edges() + 1;
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e)
            for (EdgeId f = 0; f < static_cast<EdgeId>(g.num_edges()); ++f) {
                CAPTURE(name);
                CHECK(can_flow(g, f, e) == flow_oracle(g, f, e, len));
            }
    }
}

TEST_CASE("minimality verdicts on the fixtures") {
    const std::map<std::string, bool> expect{
        {"bs23", true},     {"bs22", true},     {"bs2m2", true},    {"edge23", true},  {"edge22", true},
        {"figure8", true},  {"bouquet3", true}, {"theta", true},    {"theta4", true},  {"klein_loop", true},
        {"dihedral", true}, {"bs12", false},    {"z2asc", false},   {"triangle", false}, {"zcycle", false},
    };
    for (const auto& [name, minimal] : expect) {
        const GraphOfGroups g = fixture(name);
        const Verdict v = is_minimal(g);
        CAPTURE(name);
        CHECK(v.value == (minimal ? Truth::True : Truth::False));
        if (!minimal) {
            CHECK(v.clause == "cycle-of-surjections");
            REQUIRE(v.edge);
            REQUIRE(v.ray);
            // the witness ray really stays out of Z(1 e) under a ball of words
            CHECK(orbit_check_avoidance(g, *v.edge, *v.ray, 4, 6).ok);
        }
    }
}

TEST_CASE("ray presets: constant tree and odometer are minimal, never locally contractive") {
    for (const std::string name : {"constant_tree", "odometer"}) {
        const RaySpec r = testsupport::ray_fixture(name);
        CHECK(is_minimal(r).is_true());
        CHECK(is_locally_contractive(r).is_false());
        CHECK(classify_min_lc_trichotomy(r) == Trichotomy::InfiniteRay);
    }
    CHECK(is_topologically_free(testsupport::ray_fixture("odometer")).is_true());
    CHECK(is_topologically_free(testsupport::ray_fixture("constant_tree")).is_false());
}

TEST_CASE("local contractivity on the fixtures") {
    for (const std::string name : {"bs23", "bs12", "edge23", "figure8", "theta", "klein_loop", "z2asc"})
        CHECK(is_locally_contractive(fixture(name)).is_true());
    for (const std::string name : {"edge22", "dihedral", "triangle", "zcycle"})
        CHECK(is_locally_contractive(fixture(name)).is_false());
}

TEST_CASE("treelike edges and avoiding rays") {
    const GraphOfGroups g = fixture("edge22");
    // both sides of the segment are a single vertex: upstream graphs are trivial
    for (EdgeId e = 0; e < 2; ++e) {
        CHECK(upstream_graph(g, e).trivial());
        CHECK(is_treelike(g, e));
    }
    const GraphOfGroups f8 = fixture("figure8");
    for (EdgeId e = 0; e < static_cast<EdgeId>(f8.num_edges()); ++e) {
        CHECK(on_minimal_cycle(f8, e));
        CHECK_FALSE(is_treelike(f8, e));
    }
    CHECK(cycle_graph(fixture("triangle")));
    CHECK_FALSE(cycle_graph(f8));
    CHECK(path_graph(fixture("edge23")));
}

TEST_CASE("property: both minimality routes agree and avoiding rays agree") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const bool gbs = trial % 2 == 0;
        const GraphOfGroups g = testsupport::random_graph(rng, 3, 1 + trial % 4, gbs);
        CAPTURE(trial);
        const Verdict a = minimality_by_clauses(g);
        const Verdict b = minimality_by_flow(g);
        CHECK(a.value != Truth::Unknown);
        CHECK(a.value == b.value);
        CHECK(is_minimal(g).value == a.value);
        CHECK(is_locally_contractive(g).value != Truth::Unknown);
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
            if (!g.alpha_onto(GraphOfGroups::bar(e)) || on_minimal_cycle(g, e) || !is_treelike(g, e)) continue;
            CHECK(avoiding_ray(g, e).has_value() == avoiding_ray_exists_by_upstream(g, e));
        }
    }
}

TEST_CASE("property: unimodularity matches closed walks") {
    std::mt19937 rng(32);
    for (const std::string name : {"bs23", "bs22", "bs2m2", "bs12", "edge22", "edge23", "zcycle"}) {
        const GraphOfGroups g = fixture(name);
        CAPTURE(name);
        CHECK(is_unimodular(g).unimodular == unimodular_oracle(g));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const GraphOfGroups g = testsupport::random_graph(rng, 3, 1 + trial % 4, true);
        const Unimodularity u = is_unimodular(g);
        CAPTURE(trial);
        CHECK(u.unimodular == unimodular_oracle(g));
        if (!u.unimodular) CHECK(abs(u.q) != 1);
    }
}

TEST_CASE("orbit simulation backs the minimality verdict") {
    for (const std::string name : {"bs23", "figure8", "edge23", "theta", "triangle", "zcycle", "bs12"}) {
        const GraphOfGroups g = fixture(name);
        const Verdict v = is_minimal(g);
        CAPTURE(name);
        if (v.is_true()) {
            CHECK(orbit_check_minimal(g, 2, 6).ok);
        } else {
            REQUIRE(v.edge);
            REQUIRE(v.ray);
            CHECK(orbit_check_avoidance(g, *v.edge, *v.ray, 6, 6).ok);
        }
    }
}

TEST_CASE("trichotomy rejects nonminimal input") {
    CHECK_THROWS_AS(classify_min_lc_trichotomy(fixture("bs12")), DynamicsError);
    CHECK(classify_min_lc_trichotomy(fixture("bs23")) == Trichotomy::LocallyContractive);
    CHECK(classify_min_lc_trichotomy(fixture("edge22")) == Trichotomy::FiniteRay);
}
