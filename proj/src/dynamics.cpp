#include "gogkit/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gogkit {

std::string to_string(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Unknown: break;
    }
    return "unknown";
}

std::string to_string(Trichotomy t) {
    switch (t) {
        case Trichotomy::LocallyContractive: return "locally_contractive";
        case Trichotomy::InfiniteRay: return "infinite_ray_case";
        case Trichotomy::FiniteRay: break;
    }
    return "finite_ray_case";
}

EdgeId EdgeRay::at(std::size_t i) const {
    if (i < stem.size()) return stem[i];
    if (loop.empty()) throw DynamicsError("ray has an empty loop");
    return loop[(i - stem.size()) % loop.size()];
}

Path ray_prefix(const GraphOfGroups& g, const EdgeRay& r, std::size_t n) {
    Path p{r.range(g), {}};
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeId f = r.at(i);
        AbElement h = g.vertex_group(g.range(f)).identity();
        if (i > 0 && f == GraphOfGroups::bar(r.at(i - 1))) {
            if (g.sigma_size(f) < 2) throw DynamicsError("ray backtracks along '" + g.edge_label(f) + "' with trivial transversal");
            h = g.sigma(f)[1];
        }
        p.letters.push_back(Letter{std::move(h), f});
    }
    return p;
}

namespace {

std::string edge_list(const GraphOfGroups& g, const std::vector<EdgeId>& es) {
    std::string s;
    for (EdgeId e : es) {
        if (!s.empty()) s += ' ';
        s += g.edge_label(e);
    }
    return s;
}

}  // namespace

std::string format_ray(const GraphOfGroups& g, const EdgeRay& r) {
    std::string s = edge_list(g, r.stem);
    if (!s.empty()) s += ' ';
    return s + "(" + edge_list(g, r.loop) + ")^inf";
}

std::string Verdict::render() const {
    std::string s = to_string(value) + " [" + clause + "]";
    if (!witness.empty()) s += " " + witness;
    return s;
}

FlowGraph flow_graph(const GraphOfGroups& g) {
    FlowGraph fg;
    fg.succ.resize(g.num_edges());
    for (EdgeId d = 0; d < static_cast<EdgeId>(g.num_edges()); ++d)
        for (EdgeId d2 : g.graph().edges_into(g.source(d)))
            if (d2 != GraphOfGroups::bar(d) || g.sigma_size(d2) >= 2) fg.succ[d].push_back(d2);
    return fg;
}

namespace {

// Nodes reachable from `from` by >= 1 arcs, staying inside `allowed`.
std::vector<bool> reach(const FlowGraph& fg, EdgeId from, const std::vector<bool>& allowed) {
    std::vector<bool> seen(fg.succ.size(), false);
    std::deque<EdgeId> queue;
    for (EdgeId d : fg.succ[from])
        if (allowed[d] && !seen[d]) {
            seen[d] = true;
            queue.push_back(d);
        }
    while (!queue.empty()) {
        const EdgeId d = queue.front();
        queue.pop_front();
        for (EdgeId d2 : fg.succ[d])
            if (allowed[d2] && !seen[d2]) {
                seen[d2] = true;
                queue.push_back(d2);
            }
    }
    return seen;
}

// Shortest walk from a to b (>= 1 arc) inside `allowed`, as the list of nodes a..(last before b).
std::optional<std::vector<EdgeId>> walk(const FlowGraph& fg, EdgeId a, EdgeId b, const std::vector<bool>& allowed) {
    std::vector<EdgeId> prev(fg.succ.size(), -2);
    std::deque<EdgeId> queue{a};
    while (!queue.empty()) {
        const EdgeId d = queue.front();
        queue.pop_front();
        for (EdgeId d2 : fg.succ[d]) {
            if (!allowed[d2] && d2 != b) continue;
            if (d2 == b) {
                std::vector<EdgeId> out{d};
                for (EdgeId x = d; x != a; x = prev[x]) out.push_back(prev[x]);
                std::reverse(out.begin(), out.end());
                return out;
            }
            if (prev[d2] != -2 || d2 == a) continue;
            prev[d2] = d;
            queue.push_back(d2);
        }
    }
    return std::nullopt;
}

// An infinite walk inside `allowed` starting at one of `starts`.
std::optional<EdgeRay> find_ray(const FlowGraph& fg, const std::vector<EdgeId>& starts, const std::vector<bool>& allowed) {
    const std::size_t n = fg.succ.size();
    std::vector<bool> cyclic(n, false);
    for (EdgeId d = 0; d < static_cast<EdgeId>(n); ++d)
        if (allowed[d]) cyclic[d] = reach(fg, d, allowed)[d];
    for (EdgeId s : starts) {
        if (!allowed[s]) continue;
        // BFS from s to the nearest node on a cycle.
        std::vector<EdgeId> prev(n, -2);
        prev[s] = -1;
        std::deque<EdgeId> queue{s};
        while (!queue.empty()) {
            const EdgeId d = queue.front();
            queue.pop_front();
            if (cyclic[d]) {
                EdgeRay r;
                for (EdgeId x = prev[d]; x != -1; x = prev[x]) r.stem.push_back(x);
                std::reverse(r.stem.begin(), r.stem.end());
                r.loop = *walk(fg, d, d, allowed);
                return r;
            }
            for (EdgeId d2 : fg.succ[d])
                if (allowed[d2] && prev[d2] == -2) {
                    prev[d2] = d;
                    queue.push_back(d2);
                }
        }
    }
    return std::nullopt;
}

std::vector<bool> all_nodes(const GraphOfGroups& g) { return std::vector<bool>(g.num_edges(), true); }

Subgraph upstream_from(const GraphOfGroups& g, VertexId root, const std::set<EdgeId>& excluded_first) {
    std::vector<bool> seen(g.num_edges(), false);
    std::deque<EdgeId> queue;
    for (EdgeId d : g.graph().edges_into(root))
        if (!excluded_first.count(d)) {
            seen[d] = true;
            queue.push_back(d);
        }
    while (!queue.empty()) {
        const EdgeId d = queue.front();
        queue.pop_front();
        for (EdgeId d2 : g.graph().edges_into(g.source(d)))
            if (d2 != GraphOfGroups::bar(d) && !seen[d2]) {
                seen[d2] = true;
                queue.push_back(d2);
            }
    }
    Subgraph out;
    out.root = root;
    std::set<VertexId> vs{root};
    for (EdgeId d = 0; d < static_cast<EdgeId>(g.num_edges()); ++d)
        if (seen[d] || seen[GraphOfGroups::bar(d)]) {
            out.edges.push_back(d);
            vs.insert(g.range(d));
        }
    out.vertices.assign(vs.begin(), vs.end());
    return out;
}

// Distance from the root inside a tree subgraph.
std::vector<int> depths(const GraphOfGroups& g, const Subgraph& s) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<bool> member(g.num_edges(), false);
    for (EdgeId d : s.edges) member[d] = true;
    dist[s.root] = 0;
    std::deque<VertexId> queue{s.root};
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId d : g.graph().edges_into(x))
            if (member[d] && dist[g.source(d)] < 0) {
                dist[g.source(d)] = dist[x] + 1;
                queue.push_back(g.source(d));
            }
    }
    return dist;
}

bool treelike_subgraph(const GraphOfGroups& g, const Subgraph& s) {
    if (!s.is_tree()) return false;
    const std::vector<int> dist = depths(g, s);
    for (EdgeId f : s.edges)
        if (dist[g.range(f)] < dist[g.source(f)] && !g.alpha_onto(GraphOfGroups::bar(f))) return false;
    return true;
}

}  // namespace

std::vector<bool> flows_to(const FlowGraph& fg, EdgeId e) {
    return reach(fg, e, std::vector<bool>(fg.succ.size(), true));
}

bool can_flow(const GraphOfGroups& g, EdgeId f, EdgeId e) { return flows_to(flow_graph(g), e)[f]; }

Subgraph upstream_graph(const GraphOfGroups& g, EdgeId e) {
    std::set<EdgeId> excluded{GraphOfGroups::bar(e)};
    if (g.graph().is_loop(e)) excluded.insert(e);
    return upstream_from(g, g.source(e), excluded);
}

Subgraph upstream_graph_cycle(const GraphOfGroups& g, const std::vector<EdgeId>& cycle, std::size_t j) {
    const std::size_t m = cycle.size();
    if (j >= m) throw DynamicsError("cycle position out of range");
    return upstream_from(g, g.source(cycle[j]), {cycle[(j + 1) % m], GraphOfGroups::bar(cycle[j])});
}

bool is_treelike(const GraphOfGroups& g, EdgeId e) { return treelike_subgraph(g, upstream_graph(g, e)); }

bool has_constant_tree(const GraphOfGroups& g, EdgeId e) {
    const Subgraph s = upstream_graph(g, e);
    if (s.trivial() || !treelike_subgraph(g, s)) return false;
    return std::all_of(s.edges.begin(), s.edges.end(), [&](EdgeId f) { return g.alpha_onto(f); });
}

bool on_minimal_cycle(const GraphOfGroups& g, EdgeId e) {
    if (g.graph().is_loop(e)) return true;
    // Is s(e) still reachable from r(e) without the pair {e, ebar}?
    std::vector<bool> seen(g.num_vertices(), false);
    std::deque<VertexId> queue{g.range(e)};
    seen[g.range(e)] = true;
    while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId d : g.graph().edges_into(x)) {
            if ((d | 1) == (e | 1) || seen[g.source(d)]) continue;
            seen[g.source(d)] = true;
            queue.push_back(g.source(d));
        }
    }
    return seen[g.source(e)];
}

std::optional<std::vector<EdgeId>> cycle_graph(const GraphOfGroups& g) {
    if (g.num_edges() == 0 || !g.graph().connected()) return std::nullopt;
    for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x)
        if (g.graph().edges_into(x).size() != 2) return std::nullopt;
    std::vector<EdgeId> out{0};
    while (true) {
        const EdgeId cur = out.back();
        EdgeId next = -1;
        for (EdgeId d : g.graph().edges_into(g.source(cur)))
            if (d != GraphOfGroups::bar(cur)) next = d;
        if (next == out.front()) break;
        out.push_back(next);
        if (out.size() > g.num_edges()) return std::nullopt;
    }
    if (out.size() * 2 != g.num_edges()) return std::nullopt;
    return out;
}

std::optional<std::vector<EdgeId>> path_graph(const GraphOfGroups& g) {
    if (g.num_edges() == 0 || betti_number(g.graph()) != 0) return std::nullopt;
    VertexId end = -1;
    for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
        const std::size_t deg = g.graph().edges_into(x).size();
        if (deg > 2) return std::nullopt;
        if (deg == 1 && end < 0) end = x;
    }
    std::vector<EdgeId> out{g.graph().edges_into(end).front()};
    while (true) {
        EdgeId next = -1;
        for (EdgeId d : g.graph().edges_into(g.source(out.back())))
            if (d != GraphOfGroups::bar(out.back())) next = d;
        if (next < 0) break;
        out.push_back(next);
    }
    return out;
}

std::optional<EdgeRay> avoiding_ray(const GraphOfGroups& g, EdgeId e) {
    const FlowGraph fg = flow_graph(g);
    std::vector<bool> allowed = all_nodes(g);
    allowed[e] = false;
    std::vector<EdgeId> starts;
    for (EdgeId d : g.graph().edges_into(g.range(e)))
        if (d != e) starts.push_back(d);
    return find_ray(fg, starts, allowed);
}

bool avoiding_ray_exists_by_upstream(const GraphOfGroups& g, EdgeId e) {
    const Subgraph s = upstream_graph(g, GraphOfGroups::bar(e));
    if (!s.is_tree()) return true;
    std::vector<bool> member(g.num_edges(), false);
    for (EdgeId d : s.edges) member[d] = true;
    // A reduced path gamma_1..gamma_k in the tree with alpha_{gamma_1} and alpha_{bar gamma_k} not onto
    // lets a boundary point bounce between its ends forever.
    for (EdgeId a : s.edges) {
        if (g.alpha_onto(a)) continue;
        std::vector<EdgeId> stack{a};
        while (!stack.empty()) {
            const EdgeId last = stack.back();
            stack.pop_back();
            if (!g.alpha_onto(GraphOfGroups::bar(last))) return true;
            for (EdgeId d : g.graph().edges_into(g.source(last)))
                if (member[d] && d != GraphOfGroups::bar(last)) stack.push_back(d);
        }
    }
    return false;
}

namespace {

// Gamma a cycle whose reversed edges all have surjective alpha, in either orientation.
std::optional<std::vector<EdgeId>> cycle_of_surjections(const GraphOfGroups& g) {
    auto cyc = cycle_graph(g);
    if (!cyc) return std::nullopt;
    auto onto_bars = [&](const std::vector<EdgeId>& c) {
        return std::all_of(c.begin(), c.end(), [&](EdgeId f) { return g.alpha_onto(GraphOfGroups::bar(f)); });
    };
    if (onto_bars(*cyc)) return cyc;
    std::vector<EdgeId> rev;
    for (auto it = cyc->rbegin(); it != cyc->rend(); ++it) rev.push_back(GraphOfGroups::bar(*it));
    if (onto_bars(rev)) return rev;
    return std::nullopt;
}

}  // namespace

Verdict minimality_by_clauses(const GraphOfGroups& g) {
    Verdict v;
    if (auto cyc = cycle_of_surjections(g)) {
        v.value = Truth::False;
        v.clause = "cycle-of-surjections";
        v.edge = cyc->front();
        EdgeRay r;
        for (auto it = cyc->rbegin(); it != cyc->rend(); ++it) r.loop.push_back(GraphOfGroups::bar(*it));
        v.ray = r;
        v.witness = "Gamma is the cycle " + edge_list(g, *cyc) + " with every reversed map onto; " +
                    format_ray(g, r) + " never enters Z(1 " + g.edge_label(*v.edge) + ")";
        return v;
    }
    std::size_t bridges = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
        if (!g.alpha_onto(GraphOfGroups::bar(e)) || on_minimal_cycle(g, e) || !is_treelike(g, e)) continue;
        ++bridges;
        const auto ray = avoiding_ray(g, e);
        const bool by_upstream = avoiding_ray_exists_by_upstream(g, e);
        if (ray.has_value() != by_upstream) {
            v.value = Truth::Unknown;
            v.clause = "route-disagreement";
            v.edge = e;
            v.witness = "boundary-point tests disagree at edge " + g.edge_label(e);
            return v;
        }
        if (ray) {
            v.value = Truth::False;
            v.clause = "treelike-bridge";
            v.edge = e;
            v.ray = ray;
            v.witness = "edge " + g.edge_label(e) + " is a treelike bridge with onto reverse map; " + format_ray(g, *ray) +
                        " avoids it";
            return v;
        }
    }
    v.value = Truth::True;
    v.clause = "no-obstruction";
    v.witness = "Gamma is not a cycle of surjections and no treelike bridge admits an avoiding boundary point";
    v.evidence.push_back("treelike bridges with onto reverse map: " + std::to_string(bridges));
    return v;
}

Verdict minimality_by_flow(const GraphOfGroups& g) {
    const FlowGraph fg = flow_graph(g);
    Verdict v;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
        const std::vector<bool> inflow = flows_to(fg, e);
        std::vector<bool> allowed(g.num_edges());
        std::vector<EdgeId> starts;
        for (EdgeId d = 0; d < static_cast<EdgeId>(g.num_edges()); ++d) {
            allowed[d] = !inflow[d];
            if (allowed[d]) starts.push_back(d);
        }
        if (auto ray = find_ray(fg, starts, allowed)) {
            v.value = Truth::False;
            v.clause = "flow-obstruction";
            v.edge = e;
            v.ray = ray;
            v.witness = format_ray(g, *ray) + " cannot flow to " + g.edge_label(e);
            return v;
        }
    }
    v.value = Truth::True;
    v.clause = "flow-complete";
    v.witness = "every infinite walk meets an edge that can flow to each edge";
    return v;
}

Verdict is_minimal(const GraphOfGroups& g) {
    Verdict a = minimality_by_clauses(g);
    if (a.value == Truth::Unknown) return a;
    const Verdict b = minimality_by_flow(g);
    if (a.value != b.value) {
        Verdict v;
        v.clause = "route-disagreement";
        v.witness = "clause test says " + to_string(a.value) + ", flow test says " + to_string(b.value);
        v.evidence = {a.render(), b.render()};
        return v;
    }
    a.evidence.push_back("flow cross-check: " + b.render());
    return a;
}

namespace {

struct Repeatable {
    std::vector<EdgeId> cycle;
    VertexId entrance = 0;
};

// A closed flow walk with an entrance that flows to every edge, if one exists.
std::optional<Repeatable> repeatable_with_entrance(const GraphOfGroups& g, const FlowGraph& fg) {
    const std::size_t n = g.num_edges();
    const std::vector<bool> all(n, true);
    std::vector<std::vector<bool>> r(n);
    for (EdgeId d = 0; d < static_cast<EdgeId>(n); ++d) r[d] = reach(fg, d, all);
    // Cycle nodes c whose strong component has a node f with an entrance at s(f).
    std::vector<std::pair<EdgeId, EdgeId>> good;  // (c, f)
    for (EdgeId c = 0; c < static_cast<EdgeId>(n); ++c) {
        if (!r[c][c]) continue;
        for (EdgeId f = 0; f < static_cast<EdgeId>(n); ++f)
            if ((f == c || (r[c][f] && r[f][c])) && g.fan_in(g.source(f)) >= 3) {
                good.emplace_back(c, f);
                break;
            }
    }
    for (EdgeId e = 0; e < static_cast<EdgeId>(n); ++e) {
        bool covered = false;
        for (auto [c, f] : good) covered = covered || r[e][c];
        if (!covered) return std::nullopt;
    }
    if (good.empty()) return std::nullopt;
    auto [c, f] = good.front();
    Repeatable out;
    out.entrance = g.source(f);
    if (c == f) {
        out.cycle = *walk(fg, c, c, all);
    } else {
        out.cycle = *walk(fg, c, f, all);
        const std::vector<EdgeId> back = *walk(fg, f, c, all);
        out.cycle.insert(out.cycle.end(), back.begin(), back.end());
    }
    return out;
}

bool two_point_ray(const GraphOfGroups& g) {
    auto p = path_graph(g);
    if (!p) return false;
    const EdgeId first = p->front();
    const EdgeId last_bar = GraphOfGroups::bar(p->back());
    for (EdgeId d = 0; d < static_cast<EdgeId>(g.num_edges()); ++d) {
        const std::size_t want = (d == first || d == last_bar) ? 2 : 1;
        if (g.sigma_size(d) != want) return false;
    }
    return true;
}

}  // namespace

Verdict is_locally_contractive(const GraphOfGroups& g) {
    const FlowGraph fg = flow_graph(g);
    const auto rep = repeatable_with_entrance(g, fg);
    std::string rep_text;
    if (rep)
        rep_text = "repeatable path " + edge_list(g, rep->cycle) + " with an entrance at " + g.vertex_label(rep->entrance) +
                   " flows to every edge";

    std::vector<std::string> treelike_bits;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e)
        if (is_treelike(g, e) && !upstream_graph(g, e).trivial()) treelike_bits.push_back(g.edge_label(e));

    Verdict v;
    if (!treelike_bits.empty()) {
        if (rep) {
            v.value = Truth::True;
            v.clause = "repeatable-entrance";
            v.witness = rep_text;
        } else {
            v.clause = "nontrivial-treelike-upstream";
            v.witness = "sufficient condition fails and the graph is treelike upstream of " + treelike_bits.front();
        }
        return v;
    }

    auto cyc = cycle_graph(g);
    const bool all_onto = [&] {
        for (EdgeId d = 0; d < static_cast<EdgeId>(g.num_edges()); ++d)
            if (!g.alpha_onto(d)) return false;
        return true;
    }();
    if (cyc && all_onto) {
        v.value = Truth::False;
        v.clause = "cycle-of-isomorphisms";
        v.witness = "Gamma is the cycle " + edge_list(g, *cyc) + " with every map onto; the boundary has two points";
    } else if (two_point_ray(g)) {
        v.value = Truth::False;
        v.clause = "two-point-segment";
        v.witness = "Gamma is the segment " + edge_list(g, *path_graph(g)) +
                    " with index 2 at both ends and 1 elsewhere; the boundary has two points";
    } else {
        v.value = Truth::True;
        v.clause = "repeatable-entrance";
        v.witness = rep_text;
    }
    if ((v.value == Truth::True) != rep.has_value()) {
        Verdict u;
        u.clause = "route-disagreement";
        u.witness = "case analysis says " + to_string(v.value) + " but the repeatable-path search says " +
                    (rep ? "true" : "false");
        return u;
    }
    return v;
}

Unimodularity is_unimodular(const GraphOfGroups& g) {
    if (!g.is_gbs()) throw DynamicsError("unimodularity is only defined for GBS graphs of groups");
    const SpanningTree t = spanning_tree(g.graph(), g.base());
    Unimodularity u;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); e += 2) {
        if (t.in_tree[e]) continue;
        const Rational q = q_ratio(g, epsilon_edge(g, t, e));
        if (abs(q) != 1) {
            u.unimodular = false;
            u.edge = e;
            u.q = q;
            return u;
        }
    }
    return u;
}

Verdict is_topologically_free(const GraphOfGroups& g) {
    Verdict v;
    if (g.all_trivial()) {
        if (auto cyc = cycle_graph(g)) {
            v.value = Truth::False;
            v.clause = "trivial-groups-cycle";
            v.witness = "Gamma is the cycle " + edge_list(g, *cyc) + "; the fundamental group fixes both boundary points";
        } else {
            v.value = Truth::True;
            v.clause = "trivial-groups-not-cycle";
            v.witness = "Gamma is not a minimal cycle";
        }
        return v;
    }
    if (g.is_gbs()) {
        const Unimodularity u = is_unimodular(g);
        if (u.unimodular) {
            v.value = Truth::False;
            v.clause = "gbs-unimodular";
            v.witness = "|q| = 1 on every loop";
        } else {
            v.value = Truth::True;
            v.clause = "gbs-not-unimodular";
            v.edge = u.edge;
            v.witness = "q(eps(" + g.edge_label(*u.edge) + ")) = " + to_string(u.q);
        }
        return v;
    }
    v.clause = "unsupported-groups";
    v.witness = "no decision procedure for these vertex groups";
    return v;
}

Verdict is_effective(const GraphOfGroups& g) {
    const Verdict tf = is_topologically_free(g);
    Verdict v;
    if (tf.is_true()) {
        v.value = Truth::True;
        v.clause = "topologically-free";
        v.witness = tf.witness;
        return v;
    }
    if (g.all_trivial() && cycle_graph(g)) {
        v.value = Truth::False;
        v.clause = "trivial-groups-cycle";
        v.witness = "the fundamental group acts trivially";
        return v;
    }
    if (g.is_gbs() && tf.is_false()) {
        for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e)
            if (has_constant_tree(g, e)) {
                v.clause = "constant-tree";
                v.witness = "constant tree at " + g.edge_label(e);
                return v;
            }
        v.value = Truth::False;
        v.clause = "gbs-unimodular";
        v.witness = "unimodular with no constant trees: a nonzero vertex-group element fixes the boundary";
        return v;
    }
    v.clause = "undecided";
    v.witness = "topological freeness is " + to_string(tf.value);
    return v;
}

Trichotomy classify_min_lc_trichotomy(const GraphOfGroups& g) {
    const Verdict m = is_minimal(g);
    if (!m.is_true()) throw DynamicsError("trichotomy needs a minimal action (minimality is " + to_string(m.value) + ")");
    const Verdict lc = is_locally_contractive(g);
    if (lc.is_true()) return Trichotomy::LocallyContractive;
    if (lc.is_false()) return Trichotomy::FiniteRay;
    throw DynamicsError("local contractivity is undecided");
}

Verdict is_minimal(const RaySpec& r) {
    Verdict v;
    v.value = Truth::True;
    v.clause = "ray-no-obstruction";
    v.witness = "every reverse map is onto, so each e_i is treelike but a point avoiding it must bounce at u_0, "
                "which forces it back through e_i; ebar_i is not treelike because k_1 = " + to_string(r.index(1)) + " > 1";
    return v;
}

Verdict is_locally_contractive(const RaySpec&) {
    Verdict v;
    v.value = Truth::False;
    v.clause = "infinite-ray";
    v.witness = "the fundamental group is G_0 and cannot move a cylinder properly inside itself";
    return v;
}

Verdict is_topologically_free(const RaySpec& r) {
    Verdict v;
    if (r.infinitely_many_proper()) {
        v.value = Truth::True;
        v.clause = "ray-trivial-intersection";
        v.witness = "indices > 1 occur infinitely often, so the intersection of the G_i is trivial and the action is free";
    } else {
        v.value = Truth::False;
        v.clause = "ray-nontrivial-intersection";
        v.witness = "indices are eventually 1, so the intersection of the G_i is a nonzero subgroup fixing every point";
    }
    return v;
}

Verdict is_effective(const RaySpec& r) {
    Verdict v = is_topologically_free(r);
    v.clause = v.is_true() ? "ray-trivial-core" : "ray-nontrivial-core";
    return v;
}

Trichotomy classify_min_lc_trichotomy(const RaySpec&) { return Trichotomy::InfiniteRay; }

namespace {

bool meets(const GraphOfGroups& g, const CylinderSet& s, const Path& mu) {
    for (const Path& p : positive_members(g, s))
        if (is_prefix(p, mu) || is_prefix(mu, p)) return true;
    return false;
}

}  // namespace

OrbitCheck orbit_check_minimal(const GraphOfGroups& g, std::size_t depth, std::size_t wordlen) {
    const SpanningTree t = spanning_tree(g.graph(), g.base());
    const std::vector<Word> words = ball(g, epsilon_generators(g, t), wordlen);
    const std::vector<Path> cyl = enumerate_paths(g, g.base(), depth);
    OrbitCheck out;
    out.words = words.size();
    for (const Path& nu : cyl) {
        std::vector<bool> hit(cyl.size(), false);
        std::size_t remaining = cyl.size();
        for (const Word& gamma : words) {
            const CylinderSet img = act_on_cylinder(g, gamma, nu);
            for (std::size_t i = 0; i < cyl.size(); ++i)
                if (!hit[i] && meets(g, img, cyl[i])) {
                    hit[i] = true;
                    --remaining;
                }
            if (remaining == 0) break;
        }
        out.checks += cyl.size();
        if (remaining > 0) {
            for (std::size_t i = 0; i < cyl.size(); ++i)
                if (!hit[i]) {
                    out.detail = "no word of length <= " + std::to_string(wordlen) + " moves Z(" + format_path(g, nu) +
                                 ") to meet Z(" + format_path(g, cyl[i]) + ")";
                    break;
                }
            return out;
        }
    }
    out.ok = true;
    out.detail = std::to_string(cyl.size()) + " cylinders pairwise connected";
    return out;
}

OrbitCheck orbit_check_avoidance(const GraphOfGroups& g, EdgeId e, const EdgeRay& xi, std::size_t wordlen,
                                 std::size_t prefix) {
    const SpanningTree t = spanning_tree(g.graph(), g.base());
    const std::vector<Word> words = ball(g, epsilon_generators(g, t), wordlen);
    const Word to_xi = word_from_edges(g, g.base(), tree_path(t, g.base(), xi.range(g)));
    OrbitCheck out;
    out.words = words.size();
    for (const Word& gamma : words) {
        const Word w = concat(g, gamma, to_xi);
        const Path look = ray_prefix(g, xi, prefix + w.length() + 1);
        Path mu = look;
        mu.letters.resize(prefix);
        const Path img = act_on_path(g, w, mu, look);
        ++out.checks;
        for (const Letter& l : img.letters)
            if (l.e == e) {
                out.detail = "word " + format_word(g, gamma) + " moves the point to " + format_path(g, img) + ", which uses " +
                             g.edge_label(e);
                return out;
            }
    }
    out.ok = true;
    out.detail = "orbit prefixes of length " + std::to_string(prefix) + " avoid " + g.edge_label(e);
    return out;
}

}  // namespace gogkit
