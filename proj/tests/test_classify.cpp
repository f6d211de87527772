#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gogkit/classify.hpp"
#include "gogkit/gfamily.hpp"
#include "support.hpp"

using namespace gogkit;
using testsupport::fixture;

namespace {

std::size_t betti_oracle(const GraphOfGroups& g) { return g.num_edges() / 2 + 1 - g.num_vertices(); }

}  // namespace

TEST_CASE("Baumslag-Solitar grid") {
    for (int m = -5; m <= 5; ++m)
        for (int n = -5; n <= 5; ++n) {
            if (m == 0 || n == 0) continue;
            const int am = std::abs(m), an = std::abs(n);
            const Classification c = classify(baumslag_solitar(m, n));
            CAPTURE(m);
            CAPTURE(n);
            CHECK(c.input_class == "gbs");
            CHECK(c.minimal.is_false() == (std::min(am, an) == 1));
            CHECK(c.topologically_free.is_false() == (am == an));
            CHECK((c.dichotomy == Dichotomy::Kirchberg) == (am != an && am >= 2 && an >= 2));
            if (c.dichotomy == Dichotomy::Kirchberg) {
                CHECK(c.simple.is_true());
                CHECK(c.purely_infinite.is_true());
            } else {
                CHECK(c.dichotomy == Dichotomy::NotSimple);
                CHECK(c.simple.is_false());
            }
        }
}

TEST_CASE("K-theory of graphs of trivial groups") {
    for (const std::string name : {"figure8", "bouquet3", "theta", "theta4"}) {
        const GraphOfGroups g = fixture(name);
        const std::size_t n = betti_oracle(g);
        CAPTURE(name);
        const KTheory k = k_theory_trivial(g);
        CHECK(k.k0.rank() == n);
        CHECK(k.k1.rank() == n);
        CHECK(k.k1.torsion().empty());
        if (n == 2)
            CHECK(k.k0.torsion().empty());
        else
            CHECK(k.k0.torsion() == std::vector<Int>{Int(n - 1)});
        const Classification c = classify(g);
        CHECK(c.dichotomy == Dichotomy::Kirchberg);
        REQUIRE(c.k);
        CHECK(c.k->k0.spec() == k.k0.spec());
    }
    CHECK(k_theory_trivial(fixture("bouquet3")).k0.spec() == "Z^3 + Z/2");
    CHECK(k_theory_trivial(fixture("theta4")).k0.spec() == "Z^4 + Z/3");
}

TEST_CASE("property: K-theory on random graphs of trivial groups") {
    std::mt19937 rng(41);
    std::size_t seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const GraphOfGroups g = testsupport::random_graph(rng, 4, 2 + trial % 5, false);
        const std::size_t n = betti_oracle(g);
        if (n < 2) {
            CHECK_THROWS_AS(k_theory_trivial(g), ClassifyError);
            continue;
        }
        ++seen;
        const KTheory k = k_theory_trivial(g);
        CHECK(k.k0.rank() == n);
        CHECK(k.k1.rank() == n);
        CHECK(k.k0.order() == std::nullopt);
        Int torsion = 1;
        for (const Int& t : k.k0.torsion()) torsion *= t;
        CHECK(torsion == Int(n - 1));
    }
    CHECK(seen > 50);
}

TEST_CASE("a cycle of trivial groups is not simple") {
    const Classification c = classify(fixture("triangle"));
    CHECK(c.simple.is_false());
    CHECK(c.dichotomy == Dichotomy::NotSimple);
    CHECK_THROWS_AS(k_theory_trivial(fixture("triangle")), ClassifyError);
    CHECK_THROWS_AS(k_theory_trivial(fixture("bs23")), ClassifyError);
}

TEST_CASE("odometer is a stable Bunce-Deddens algebra") {
    const Classification c = classify(testsupport::ray_fixture("odometer"));
    CHECK(c.input_class == "ray");
    CHECK(c.simple.is_true());
    CHECK(c.topologically_free.is_true());
    CHECK(c.effective.is_true());
    CHECK(c.locally_contractive.is_false());
    CHECK(c.purely_infinite.is_false());
    CHECK(c.dichotomy == Dichotomy::StableBunceDeddens);
    CHECK(c.supernatural == "2^inf");
}

TEST_CASE("constant tree ray is minimal but not free, so not simple") {
    const Classification c = classify(testsupport::ray_fixture("constant_tree"));
    CHECK(c.minimal.is_true());
    CHECK(c.topologically_free.is_false());
    CHECK(c.simple.is_false());
    CHECK(c.dichotomy == Dichotomy::NotSimple);
}

TEST_CASE("machine rendering is versioned key=value") {
    const std::string out = render_machine(classify(fixture("figure8")));
    CHECK(out.rfind("# gogkit-classification v1\n", 0) == 0);
    CHECK(out.find("dichotomy=kirchberg\n") != std::string::npos);
    CHECK(out.find("k0=Z^2\n") != std::string::npos);
    std::istringstream in(out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) CHECK(line.find('=') != std::string::npos);
}
