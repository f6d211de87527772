#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gogkit/abelian.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace gogkit;

namespace {

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int det2(const IntMatrix& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
}

// Invariant factors of a 2x2 matrix from determinantal divisors: d1 = gcd of entries, d2 = |det| / d1.
std::vector<Int> smith_2x2_oracle(const IntMatrix& m) {
    Int d1 = 0;
    for (const auto& row : m)
        for (const Int& x : row) d1 = gcd_int(d1, x);
    std::vector<Int> out;
    if (d1 == 0) return out;
    out.push_back(d1);
    Int det = det2(m, 0, 1, 0, 1);
    if (det < 0) det = -det;
    if (det != 0) out.push_back(det / d1);
    return out;
}

}  // namespace

TEST_CASE("group specs parse and print") {
    CHECK(FgAbelianGroup::parse("1").is_trivial());
    CHECK(FgAbelianGroup::parse("Z").is_infinite_cyclic());
    const FgAbelianGroup g = FgAbelianGroup::parse("Z^2 + Z/3 + Z/2");
    CHECK(g.rank() == 2);
    CHECK(g.torsion().size() == 2);
    CHECK(g.dim() == 4);
    CHECK_FALSE(g.is_finite());
    CHECK(FgAbelianGroup::parse("Z/2 + Z/2").order() == Int(4));
    CHECK_THROWS_AS(FgAbelianGroup::parse("Z/1"), AbelianError);
    CHECK_THROWS_AS(FgAbelianGroup::parse("Q"), AbelianError);
}

TEST_CASE("torsion coordinates are reduced") {
    const FgAbelianGroup g = FgAbelianGroup::parse("Z + Z/4");
    const AbElement a = g.canonical({Int(3), Int(7)});
    CHECK(a.c[0] == 3);
    CHECK(a.c[1] == 3);
    CHECK(g.is_identity(g.add(a, g.neg(a))));
    CHECK(g.scale(g.canonical({Int(0), Int(1)}), Int(4)) == g.identity());
}

TEST_CASE("finite groups enumerate all elements once") {
    const FgAbelianGroup g = FgAbelianGroup::parse("Z/2 + Z/3");
    const auto els = g.elements();
    CHECK(els.size() == 6);
    CHECK(std::set<AbElement>(els.begin(), els.end()).size() == 6);
}

TEST_CASE("smith invariants match determinantal divisors on 2x2 matrices") {
    CHECK(smith_invariants({{Int(2), Int(4)}, {Int(6), Int(8)}}, 2) == std::vector<Int>{2, 4});
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix m{{Int(d(rng)), Int(d(rng))}, {Int(d(rng)), Int(d(rng))}};
        CAPTURE(trial);
        CHECK(smith_invariants(m, 2) == smith_2x2_oracle(m));
    }
}

TEST_CASE("hermite form is U * M with unimodular U") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(3, IntVec(3));
        for (auto& row : m)
            for (auto& x : row) x = d(rng);
        const HermiteForm h = hermite_form(m, 3);
        // U * M == H
        for (std::size_t i = 0; i < h.h.size(); ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Int s = 0;
                for (std::size_t k = 0; k < 3; ++k) s += h.u[i][k] * m[k][j];
                CHECK(s == h.h[i][j]);
            }
        // pivots strictly increase
        for (std::size_t i = 1; i < h.pivot_cols.size(); ++i) CHECK(h.pivot_cols[i - 1] < h.pivot_cols[i]);
    }
}

TEST_CASE("index of a diagonal map is |det|") {
    const FgAbelianGroup z2 = FgAbelianGroup::parse("Z^2");
    AbHom phi(z2, z2, {{Int(2), Int(0)}, {Int(0), Int(3)}});
    phi.certify();
    REQUIRE(phi.index());
    CHECK(*phi.index() == 6);
    CHECK(phi.transversal_size() == 6);
    CHECK(z2.is_identity(phi.transversal().front()));

    AbHom onto(FgAbelianGroup::parse("Z"), FgAbelianGroup::parse("Z"), {{Int(-1)}});
    CHECK(onto.surjective());
    AbHom infinite(FgAbelianGroup::parse("Z"), z2, {{Int(1)}, {Int(0)}});
    CHECK_FALSE(infinite.finite_index());
}

TEST_CASE("injectivity and well-definedness are detected") {
    AbHom bad(FgAbelianGroup::parse("Z"), FgAbelianGroup::parse("Z/2"), {{Int(1)}});
    CHECK_FALSE(bad.injective());
    CHECK_THROWS_AS(bad.certify(), AbelianError);
    // Z/2 -> Z sending 1 to 1 is not a homomorphism.
    AbHom ill(FgAbelianGroup::parse("Z/2"), FgAbelianGroup::parse("Z"), {{Int(1)}});
    CHECK_FALSE(ill.well_defined());
    AbHom good(FgAbelianGroup::parse("Z/2"), FgAbelianGroup::parse("Z/2 + Z/2"), {{Int(1)}, {Int(0)}});
    CHECK(good.well_defined());
    CHECK(good.injective());
    CHECK(*good.index() == 2);
}

TEST_CASE("property: coset decomposition g = t + alpha(h) with t from the transversal") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-5, 5);
    const FgAbelianGroup z2 = FgAbelianGroup::parse("Z^2");
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix m{{Int(d(rng)), Int(d(rng))}, {Int(d(rng)), Int(d(rng))}};
        if (det2(m, 0, 1, 0, 1) == 0) continue;
        AbHom phi(z2, z2, m);
        const auto& ts = phi.transversal();
        std::set<AbElement> tset(ts.begin(), ts.end());
        Int det = det2(m, 0, 1, 0, 1);
        CHECK(Int(ts.size()) == (det < 0 ? Int(-det) : det));
        // distinct transversal elements lie in distinct cosets
        for (std::size_t i = 0; i < ts.size() && i < 6; ++i)
            for (std::size_t j = i + 1; j < ts.size() && j < 6; ++j) CHECK_FALSE(phi.in_image(z2.sub(ts[i], ts[j])));
        for (int k = 0; k < 10; ++k) {
            const AbElement gelt = z2.canonical({Int(d(rng) * 7), Int(d(rng) * 3)});
            auto [t, h] = phi.decompose(gelt);
            CHECK(tset.count(t) == 1);
            CHECK(z2.add(t, phi.apply(h)) == gelt);
            CHECK(phi.residue(gelt) == t);
        }
    }
}
