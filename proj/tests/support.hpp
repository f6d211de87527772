#pragma once

#include "gogkit/parse.hpp"

#include <random>
#include <string>

namespace testsupport {

inline gogkit::GraphOfGroups fixture(const std::string& name) {
    gogkit::Document d = gogkit::load_document(std::string(GOGKIT_FIXTURE_DIR) + "/" + name + ".gog");
    if (!d.graph) throw std::runtime_error(name + " is not a graph of groups");
    return *d.graph;
}

inline gogkit::RaySpec ray_fixture(const std::string& name) {
    gogkit::Document d = gogkit::load_document(std::string(GOGKIT_FIXTURE_DIR) + "/" + name + ".gog");
    if (!d.ray) throw std::runtime_error(name + " is not a ray preset");
    return *d.ray;
}

// Coordinates drawn from [-range, range] and reduced into the group.
inline gogkit::AbElement random_element(const gogkit::FgAbelianGroup& grp, std::mt19937& rng, int range = 4) {
    std::uniform_int_distribution<int> d(-range, range);
    gogkit::IntVec c(grp.dim());
    for (auto& x : c) x = d(rng);
    return grp.canonical(c);
}

// Arbitrary (usually unreduced) word with `len` edges starting at x.
inline gogkit::Word random_word(const gogkit::GraphOfGroups& g, gogkit::VertexId x, std::size_t len, std::mt19937& rng) {
    gogkit::Word w;
    w.range = x;
    gogkit::VertexId at = x;
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<gogkit::EdgeId> out;
        for (gogkit::EdgeId e = 0; e < static_cast<gogkit::EdgeId>(g.num_edges()); ++e)
            if (g.range(e) == at) out.push_back(e);
        const gogkit::EdgeId e = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
        w.letters.push_back(gogkit::Letter{random_element(g.vertex_group(at), rng), e});
        at = g.source(e);
    }
    w.tail = random_element(g.vertex_group(at), rng);
    return w;
}

}  // namespace testsupport

namespace testsupport {

// Connected nonsingular graph of groups on up to `max_vertices` vertices with
// `edges` geometric edges; GBS multipliers from {+-1, +-2, +-3} or trivial groups.
// Retries until validate() accepts the draw.
inline gogkit::GraphOfGroups random_graph(std::mt19937& rng, std::size_t max_vertices, std::size_t edges, bool gbs) {
    using namespace gogkit;
    const int mults[] = {1, -1, 2, -2, 3, -3};
    for (;;) {
        GraphOfGroups g;
        const std::size_t nv = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
        const FgAbelianGroup grp = gbs ? FgAbelianGroup(1, {}) : FgAbelianGroup();
        for (std::size_t i = 0; i < nv; ++i) g.add_vertex("v" + std::to_string(i), grp);
        std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
        std::uniform_int_distribution<int> mult(0, 5);
        for (std::size_t i = 0; i < edges; ++i) {
            // first nv-1 edges form a spanning path so the graph is connected
            const VertexId r = static_cast<VertexId>(i + 1 < nv ? i : pick(rng));
            const VertexId s = static_cast<VertexId>(i + 1 < nv ? i + 1 : pick(rng));
            if (gbs)
                g.add_edge("e" + std::to_string(i), r, s, grp, IntMatrix{{Int(mults[mult(rng)])}},
                           IntMatrix{{Int(mults[mult(rng)])}});
            else
                g.add_edge("e" + std::to_string(i), r, s, grp, IntMatrix(0), IntMatrix(0));
        }
        if (edges + 1 < nv) continue;
        if (validate(g).ok()) return g;
    }
}

}  // namespace testsupport
