// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "gogkit/classify.hpp"
#include "gogkit/gfamily.hpp"
#include "rewrite_oracle.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gogkit;
using testsupport::fixture;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome words_criterion() {
    const auto t0 = Clock::now();
    std::mt19937 rng(1001);
    std::size_t words = 0, oracle = 0, bad = 0;
    for (const std::string name : {"bs23", "edge23", "klein_loop", "figure8", "z2asc"}) {
        const GraphOfGroups g = fixture(name);
        for (int i = 0; i < 2000; ++i) {
            const Word w = testsupport::random_word(g, g.base(), static_cast<std::size_t>(i % 9), rng);
            const Word r = reduce(g, w);
            ++words;
            if (!(reduce(g, r) == r) || !is_reduced(g, r) || !is_identity(g, concat(g, w, invert(g, w)))) ++bad;
            if (w.letters.size() <= 4) {
                ++oracle;
                const auto t = testsupport::rewrite_terminals(g, w);
                if (t.size() != 1 || !(t.front() == r)) ++bad;
            }
        }
    }
    const double s = seconds_since(t0);
    return {bad == 0 && words >= 10000 && s < 60,
            std::to_string(words) + " words, " + std::to_string(oracle) + " against the rewrite oracle, " +
                std::to_string(bad) + " mismatches, " + std::to_string(s).substr(0, 5) + " s"};
}

Outcome tree_criterion() {
    bool ok = true;
    auto level = [](const ValenceHistogram& h, std::size_t d) {
        std::size_t n = 0;
        for (const auto& [v, c] : h[d]) n += c;
        return n;
    };
    {
        const GraphOfGroups g = fixture("edge23");
        const ValenceHistogram h = tree_valences(g, g.base(), 6);
        std::size_t expect = 1;
        for (std::size_t d = 0; d <= 6; ++d) {
            const std::size_t valence = d % 2 == 0 ? 2 : 3;
            ok = ok && level(h, d) == expect && h[d].size() == 1 && h[d].count(valence) == 1;
            expect *= d == 0 ? 2 : valence - 1;
        }
    }
    {
        const GraphOfGroups g = fixture("bs23");
        const ValenceHistogram h = tree_valences(g, g.base(), 6);
        std::size_t expect = 1;
        for (std::size_t d = 0; d <= 6; ++d) {
            ok = ok && h[d].size() == 1 && h[d].count(5) == 1 && h[d].at(5) == expect;
            expect *= d == 0 ? 5 : 4;
        }
    }
    return {ok, "edge23 (2,3)-biregular and bs23 5-regular to depth 6"};
}

Outcome closed_form_criterion() {
    std::size_t cases = 0, bad = 0, undefined = 0, reduction = 0;
    for (const std::string name : {"bs23", "figure8", "klein_loop", "z2asc"}) {
        const GraphOfGroups g = fixture(name);
        const SpanningTree t = spanning_tree(g.graph(), g.base());
        for (const Generator& gen : epsilon_generators(g, t))
            for (std::size_t d = 0; d <= 3; ++d)
                for (const Path& mu : enumerate_paths(g, g.base(), d)) {
                    ++cases;
                    const CylinderSet img = act_on_cylinder(g, gen.word, mu);
                    const auto cf = closed_form(g, t, gen, mu);
                    if (!cf) {
                        ++undefined;
                        continue;
                    }
                    if (!(cf->set == img)) ++bad;
                    if (mu.letters.empty()) continue;
                    const Reduction r = reduce_counted(g, juxtapose(g, gen.word, as_word(g, mu)));
                    if (r.cancellations < mu.letters.size()) {
                        ++reduction;
                        if (!(cylinder(g, truncate(r.word)) == img)) ++bad;
                    }
                }
    }
    return {bad == 0 && undefined == 0,
            std::to_string(cases) + " generator/cylinder pairs, " + std::to_string(undefined) + " without a case, " +
                std::to_string(reduction) + " also by reduction, " + std::to_string(bad) + " mismatches"};
}

Outcome bs_grid_criterion() {
    const auto t0 = Clock::now();
    std::size_t bad = 0, n_cases = 0;
    for (int m = -5; m <= 5; ++m)
        for (int n = -5; n <= 5; ++n) {
            if (m == 0 || n == 0) continue;
            ++n_cases;
            const int am = std::abs(m), an = std::abs(n);
            const Classification c = classify(baumslag_solitar(m, n));
            const bool kirch = am != an && am >= 2 && an >= 2;
            if ((c.dichotomy == Dichotomy::Kirchberg) != kirch) ++bad;
            if (c.minimal.is_false() != (std::min(am, an) == 1)) ++bad;
            if (c.topologically_free.is_false() != (am == an)) ++bad;
        }
    const double s = seconds_since(t0);
    return {bad == 0 && s < 10,
            std::to_string(n_cases) + " pairs, " + std::to_string(bad) + " mismatches, " + std::to_string(s).substr(0, 5) + " s"};
}

// Minimal: every pair of depth-2 cylinders is connected. Not minimal: the witness point stays out of Z(1e).
bool oracle_agrees(const GraphOfGroups& g) {
    const Verdict v = is_minimal(g);
    if (v.value == Truth::Unknown) return false;
    if (v.is_true()) return orbit_check_minimal(g, 2, 6).ok;
    return v.edge && v.ray && orbit_check_avoidance(g, *v.edge, *v.ray, 6, 6).ok;
}

Outcome minimality_criterion() {
    std::size_t n = 0, bad = 0;
    std::string failed;
    for (const std::string name : {"bs23", "figure8", "edge23", "theta", "bouquet3", "klein_loop", "bs22", "edge22", "triangle",
                                   "zcycle", "bs12", "z2asc"}) {
        const GraphOfGroups g = fixture(name);
        ++n;
        if (!oracle_agrees(g)) {
            ++bad;
            failed += " " + name;
        }
    }
    for (const std::string name : {"constant_tree", "odometer"}) {
        const RaySpec r = testsupport::ray_fixture(name);
        ++n;
        if (!is_minimal(r).is_true() || !orbit_check_minimal(r.materialize(8), 2, 6).ok) {
            ++bad;
            failed += " " + name;
        }
    }
    return {bad == 0, std::to_string(n) + " fixtures, " + std::to_string(bad) + " disagreements" + failed};
}

Outcome k_theory_criterion() {
    bool ok = true;
    std::string detail;
    for (const std::string name : {"figure8", "bouquet3", "theta4"}) {
        const GraphOfGroups g = fixture(name);
        const std::size_t n = g.num_edges() / 2 + 1 - g.num_vertices();
        const KTheory k = k_theory_trivial(g);
        const FgAbelianGroup k0(n, n > 2 ? std::vector<Int>{Int(n - 1)} : std::vector<Int>{});
        ok = ok && k.k0.spec() == k0.spec() && k.k1.spec() == FgAbelianGroup(n, {}).spec();
        detail += (detail.empty() ? "" : ", ") + name + " K0=" + k.k0.spec() + " K1=" + k.k1.spec();
    }
    return {ok, detail};
}

Outcome gfamily_criterion() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    struct Case {
        std::string name, xi;
    };
    for (const Case& cs :
         {Case{"klein_loop", "; (1,0) e~ (0,1) e"}, Case{"bs23", "(2) e ; (1) e"}, Case{"figure8", "; a"}}) {
        const GraphOfGroups g = fixture(cs.name);
        const TruncatedRep rep(g, parse_point(g, cs.xi), 4);
        const RelationReport r = verify_relations(rep);
        const RelationReport ck = verify_ck(rep);
        const std::size_t interior = std::min(r.interior_dim, ck.interior_dim);
        ok = ok && r.all_hold() && ck.all_hold() && interior >= 20;
        detail += (detail.empty() ? "" : ", ") + cs.name + " dim " + std::to_string(rep.dim()) + " interior " +
                  std::to_string(interior);
    }
    const double s = seconds_since(t0);
    ok = ok && s < 120;
    return {ok, detail + ", " + std::to_string(s).substr(0, 5) + " s"};
}

Outcome functional_criterion() {
    const FunctionalTable t = bs_tail_functional(2, 3, 3);
    return {t.f_u == 1 && t.nonzero == 0 && t.pairs > 0,
            "f(u)=" + t.f_u.str() + ", " + std::to_string(t.nonzero) + " nonzero of " + std::to_string(t.pairs)};
}

Outcome odometer_criterion() {
    const Classification c = classify(testsupport::ray_fixture("odometer"));
    const bool ok = c.simple.is_true() && c.dichotomy == Dichotomy::StableBunceDeddens && c.supernatural == "2^inf" &&
                    c.topologically_free.is_true() && c.effective.is_true() && c.locally_contractive.is_false();
    return {ok, "dichotomy " + to_string(c.dichotomy) + ", supernatural " + c.supernatural};
}

std::string run_capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return "<popen failed>";
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int rc = pclose(p);
    return out + "\n<exit " + std::to_string(rc) + ">";
}

Outcome determinism_criterion() {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(GOGKIT_FIXTURE_DIR)) files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    const std::vector<std::string> commands = {"validate",
                                               "validate --format machine",
                                               "tree --depth 4",
                                               "tree --format machine",
                                               "analyze --orbit",
                                               "analyze --format machine",
                                               "classify",
                                               "classify --format machine",
                                               "export-dot --depth 2",
                                               "gfamily-verify --depth 3",
                                               "gfamily-verify --format machine"};
    std::size_t runs = 0, diffs = 0;
    std::string first_diff;
    for (const std::string& f : files)
        for (const std::string& c : commands) {
            const std::string base = std::string(GOGTOOL_PATH) + " " + c.substr(0, c.find(' ')) + " '" + f + "'" +
                                     (c.find(' ') == std::string::npos ? "" : c.substr(c.find(' '))) + " 2>&1";
            const std::string a = run_capture("GOGKIT_THREADS=1 " + base);
            const std::string b = run_capture("GOGKIT_THREADS=1 " + base);
            const std::string d = run_capture("GOGKIT_THREADS=4 " + base);
            runs += 3;
            if (a != b || a != d) {
                ++diffs;
                if (first_diff.empty()) first_diff = " first: " + base;
            }
        }
    return {diffs == 0, std::to_string(files.size()) + " fixtures, " + std::to_string(runs) + " runs, " +
                            std::to_string(diffs) + " differing outputs" + first_diff};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"word-problem", words_criterion},
        {"tree-shape", tree_criterion},
        {"action-closed-forms", closed_form_criterion},
        {"bs-grid", bs_grid_criterion},
        {"minimality-oracle", minimality_criterion},
        {"k-theory", k_theory_criterion},
        {"gfamily-relations", gfamily_criterion},
        {"bs-tail-functional", functional_criterion},
        {"odometer", odometer_criterion},
        {"determinism", determinism_criterion},
    };
    int failures = 0, i = 0;
    for (const auto& [name, fn] : criteria) {
        ++i;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i < 10 ? " " : "") << i << " " << name << ": " << o.detail
                  << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
