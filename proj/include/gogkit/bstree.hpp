#pragma once

#include "gogkit/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gogkit {

struct InsufficientLookahead : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool word_less(const Word& a, const Word& b);

// Admissible one-step extensions p h f, in edge-id then transversal order.
std::vector<Path> children(const GraphOfGroups& g, const Path& p);
std::size_t child_count(const GraphOfGroups& g, const Path& p);

// x G^n in deterministic order.
std::vector<Path> enumerate_paths(const GraphOfGroups& g, VertexId x, std::size_t n);

// Entry d maps valence -> number of tree vertices at depth d, for d = 0..n.
using ValenceHistogram = std::vector<std::map<std::size_t, std::size_t>>;
ValenceHistogram tree_valences(const GraphOfGroups& g, VertexId x, std::size_t n);

// Depth-|mu| prefix of gamma xi for every xi in Z(lookahead); lookahead must extend mu.
Path act_on_path(const GraphOfGroups& g, const Word& gamma, const Path& mu, const Path& lookahead);

// Finite union of cylinders in one fiber, kept as the antichain of maximal
// cylinders of either the set or its complement, whichever is shorter.
struct CylinderSet {
    VertexId fiber = 0;
    bool complemented = false;
    std::vector<Path> members;

    bool operator==(const CylinderSet& o) const {
        return fiber == o.fiber && complemented == o.complemented && members == o.members;
    }
};

CylinderSet cylinder_union(const GraphOfGroups& g, VertexId fiber, std::vector<Path> paths);
CylinderSet cylinder(const GraphOfGroups& g, const Path& p);
CylinderSet whole_fiber(const GraphOfGroups& g, VertexId x);
CylinderSet complement(const GraphOfGroups& g, const CylinderSet& s);
// Maximal cylinders making up s.
std::vector<Path> positive_members(const GraphOfGroups& g, const CylinderSet& s);
bool contains_cylinder(const CylinderSet& s, const Path& p);
// All depth-d paths whose cylinder lies in s.
std::vector<Path> refine(const GraphOfGroups& g, const CylinderSet& s, std::size_t depth);
std::string format_cylinder_set(const GraphOfGroups& g, const CylinderSet& s);

// gamma Z(mu), found by refining Z(mu) until each piece maps onto a cylinder.
CylinderSet act_on_cylinder(const GraphOfGroups& g, const Word& gamma, const Path& mu);
CylinderSet act_on_set(const GraphOfGroups& g, const Word& gamma, const CylinderSet& s);

// Generators of pi_1(G, v): epsilon(e) for edges off the tree and epsilon(x, +-u)
// for the coordinate generators u of each vertex group.
struct Generator {
    enum class Kind { Edge, Group };
    Kind kind = Kind::Edge;
    EdgeId e = -1;
    VertexId x = -1;
    AbElement g;
    Word word;
    std::string label;
};

std::vector<Generator> epsilon_generators(const GraphOfGroups& g, const SpanningTree& t);
Generator edge_generator(const GraphOfGroups& g, const SpanningTree& t, EdgeId e);
Generator group_generator(const GraphOfGroups& g, const SpanningTree& t, VertexId x, const AbElement& h);

// Image of Z(mu) from the five-case closed form for generator images;
// nullopt when no case matches mu.
struct ClosedForm {
    int case_no = 0;
    CylinderSet set;
};
std::optional<ClosedForm> closed_form(const GraphOfGroups& g, const SpanningTree& t, const Generator& gen, const Path& mu);

// Reduced loops at the base of generator length <= radius, in BFS order.
std::vector<Word> ball(const GraphOfGroups& g, const std::vector<Generator>& gens, std::size_t radius);

// Loops in the ball fixing Z(rho) for every depth-`depth` refinement rho of Z(prefix).
std::vector<Word> isotropy_candidates(const GraphOfGroups& g, const SpanningTree& t, const Path& prefix,
                                      std::size_t wordlen, std::size_t depth);

// Depth-n tree at x; node ids are the canonical path strings.
std::string tree_dot(const GraphOfGroups& g, VertexId x, std::size_t n);

}  // namespace gogkit
