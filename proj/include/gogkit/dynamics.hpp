#pragma once

#include "gogkit/bstree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gogkit {

struct DynamicsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Truth { True, False, Unknown };
std::string to_string(Truth t);

// Eventually periodic edge walk stem loop loop loop ...
struct EdgeRay {
    std::vector<EdgeId> stem;
    std::vector<EdgeId> loop;

    EdgeId at(std::size_t i) const;
    VertexId range(const GraphOfGroups& g) const { return g.range(at(0)); }
};

// First n letters of the boundary point along r: identity elements, except the
// first nontrivial transversal element wherever the walk backtracks.
Path ray_prefix(const GraphOfGroups& g, const EdgeRay& r, std::size_t n);
std::string format_ray(const GraphOfGroups& g, const EdgeRay& r);

struct Verdict {
    Truth value = Truth::Unknown;
    std::string clause;    // rule that produced the value, or the blocking condition
    std::string witness;   // human-readable witness
    std::optional<EdgeId> edge;
    std::optional<EdgeRay> ray;
    std::vector<std::string> evidence;

    bool is_true() const { return value == Truth::True; }
    bool is_false() const { return value == Truth::False; }
    std::string render() const;
};

// Nodes are directed edges; d -> d' when s(d) = r(d') and d' may follow d in a reduced path.
struct FlowGraph {
    std::vector<std::vector<EdgeId>> succ;
};

FlowGraph flow_graph(const GraphOfGroups& g);
// Nodes reachable from e by at least one arc, i.e. the edges that can flow to e.
std::vector<bool> flows_to(const FlowGraph& fg, EdgeId e);
bool can_flow(const GraphOfGroups& g, EdgeId f, EdgeId e);

struct Subgraph {
    VertexId root = 0;
    std::vector<VertexId> vertices;  // sorted, contains root
    std::vector<EdgeId> edges;       // sorted, closed under reversal

    bool trivial() const { return edges.empty(); }
    bool is_tree() const { return edges.size() / 2 + 1 == vertices.size(); }
};

// Graph upstream from e: reduced paths leaving s(e) other than through ebar (and e, for loops).
Subgraph upstream_graph(const GraphOfGroups& g, EdgeId e);
// Same for position j of a cycle f_1..f_m (0-based), excluding f_{j+1} and fbar_j.
Subgraph upstream_graph_cycle(const GraphOfGroups& g, const std::vector<EdgeId>& cycle, std::size_t j);

bool is_treelike(const GraphOfGroups& g, EdgeId e);
bool has_constant_tree(const GraphOfGroups& g, EdgeId e);

// True when the geometric edge of e lies on a simple cycle (loops always do).
bool on_minimal_cycle(const GraphOfGroups& g, EdgeId e);
// If Gamma is a single cycle, its edges e_1..e_n with s(e_i) = r(e_{i+1}).
std::optional<std::vector<EdgeId>> cycle_graph(const GraphOfGroups& g);
// If Gamma is a path, its edges e_1..e_n with s(e_i) = r(e_{i+1}).
std::optional<std::vector<EdgeId>> path_graph(const GraphOfGroups& g);

// Boundary point at r(e) that never uses e. Two independent computations; the
// upstream route is only meant for treelike bridges e with alpha_ebar onto.
std::optional<EdgeRay> avoiding_ray(const GraphOfGroups& g, EdgeId e);
bool avoiding_ray_exists_by_upstream(const GraphOfGroups& g, EdgeId e);

// Nonminimality clauses on treelike bridges and cycles of surjections.
Verdict minimality_by_clauses(const GraphOfGroups& g);
// For each e, look for a cycle of the flow graph outside the edges that can flow to e.
Verdict minimality_by_flow(const GraphOfGroups& g);
// Both routes; Unknown when they disagree.
Verdict is_minimal(const GraphOfGroups& g);

Verdict is_locally_contractive(const GraphOfGroups& g);

struct Unimodularity {
    bool unimodular = true;
    std::optional<EdgeId> edge;  // non-tree edge with |q(eps(e))| != 1
    Rational q = 1;
};
Unimodularity is_unimodular(const GraphOfGroups& g);

Verdict is_topologically_free(const GraphOfGroups& g);
Verdict is_effective(const GraphOfGroups& g);

enum class Trichotomy { LocallyContractive, InfiniteRay, FiniteRay };
std::string to_string(Trichotomy t);
// Only for minimal actions; throws DynamicsError otherwise.
Trichotomy classify_min_lc_trichotomy(const GraphOfGroups& g);

Verdict is_minimal(const RaySpec& r);
Verdict is_locally_contractive(const RaySpec& r);
Verdict is_topologically_free(const RaySpec& r);
Verdict is_effective(const RaySpec& r);
Trichotomy classify_min_lc_trichotomy(const RaySpec& r);

// Brute-force checks against the group action on cylinders.
struct OrbitCheck {
    bool ok = false;
    std::size_t words = 0;   // ball size used
    std::size_t checks = 0;  // pairs or orbit points examined
    std::string detail;
};

// Every depth-`depth` cylinder at the base is moved to meet every other by a word of length <= wordlen.
OrbitCheck orbit_check_minimal(const GraphOfGroups& g, std::size_t depth = 2, std::size_t wordlen = 6);
// The orbit of the point along xi, moved to the base fiber, never uses the edge e
// in its first `prefix` letters, for words of length <= wordlen.
OrbitCheck orbit_check_avoidance(const GraphOfGroups& g, EdgeId e, const EdgeRay& xi, std::size_t wordlen = 6,
                                 std::size_t prefix = 6);

}  // namespace gogkit
