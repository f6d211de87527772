#include "gogkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace gogkit {

VertexId Graph::add_vertex(std::string name) {
    if (find_vertex(name)) throw GraphError("duplicate vertex '" + name + "'");
    vertex_names_.push_back(std::move(name));
    into_.emplace_back();
    return static_cast<VertexId>(vertex_names_.size() - 1);
}

EdgeId Graph::add_edge_pair(std::string name, VertexId range, VertexId source) {
    if (range < 0 || source < 0 || range >= static_cast<VertexId>(num_vertices()) ||
        source >= static_cast<VertexId>(num_vertices()))
        throw GraphError("edge '" + name + "' has an unknown endpoint");
    if (find_edge(name) || find_edge(name + "~")) throw GraphError("duplicate edge '" + name + "'");
    const EdgeId e = static_cast<EdgeId>(range_.size());
    edge_names_.push_back(name);
    edge_names_.push_back(name + "~");
    range_.push_back(range);
    source_.push_back(source);
    range_.push_back(source);
    source_.push_back(range);
    into_[range].push_back(e);
    into_[source].push_back(e + 1);
    std::sort(into_[source].begin(), into_[source].end());
    return e;
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
    if (it == vertex_names_.end()) return std::nullopt;
    return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
    auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
    if (it == edge_names_.end()) return std::nullopt;
    return static_cast<EdgeId>(it - edge_names_.begin());
}

bool Graph::connected() const {
    if (num_vertices() == 0) return false;
    std::vector<bool> seen(num_vertices(), false);
    std::deque<VertexId> q{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        for (EdgeId f : into_[x]) {
            VertexId y = source(f);
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                q.push_back(y);
            }
        }
    }
    return count == num_vertices();
}

int betti_number(const Graph& g) {
    return static_cast<int>(g.num_edges() / 2) - static_cast<int>(g.num_vertices()) + 1;
}

VertexId GraphOfGroups::add_vertex(std::string name, FgAbelianGroup group) {
    VertexId x = graph_.add_vertex(std::move(name));
    vertex_groups_.push_back(std::move(group));
    return x;
}

EdgeId GraphOfGroups::add_edge(std::string name, VertexId range, VertexId source, FgAbelianGroup edge_group,
                               IntMatrix alpha_e, IntMatrix alpha_ebar) {
    EdgeId e = graph_.add_edge_pair(std::move(name), range, source);
    edge_groups_.push_back(edge_group);
    edge_groups_.push_back(edge_group);
    alpha_.emplace_back(edge_group, vertex_groups_.at(range), std::move(alpha_e));
    alpha_.emplace_back(edge_group, vertex_groups_.at(source), std::move(alpha_ebar));
    return e;
}

std::size_t GraphOfGroups::fan_in(VertexId x) const {
    std::size_t n = 0;
    for (EdgeId f : graph_.edges_into(x)) n += sigma_size(f);
    return n;
}

bool GraphOfGroups::all_trivial() const {
    return std::all_of(vertex_groups_.begin(), vertex_groups_.end(), [](const FgAbelianGroup& g) { return g.is_trivial(); });
}

bool GraphOfGroups::is_gbs() const {
    return std::all_of(vertex_groups_.begin(), vertex_groups_.end(), [](const FgAbelianGroup& g) { return g.is_infinite_cyclic(); }) &&
           std::all_of(edge_groups_.begin(), edge_groups_.end(), [](const FgAbelianGroup& g) { return g.is_infinite_cyclic(); });
}

bool GraphOfGroups::all_vertex_groups_finite() const {
    return std::all_of(vertex_groups_.begin(), vertex_groups_.end(), [](const FgAbelianGroup& g) { return g.is_finite(); });
}

Int GraphOfGroups::omega(EdgeId e) const {
    const AbHom& a = alpha(e);
    if (!a.source().is_infinite_cyclic() || !a.target().is_infinite_cyclic())
        throw GraphError("edge '" + edge_label(e) + "' is not a GBS edge");
    return a.matrix()[0][0];
}

ValidationReport validate(const GraphOfGroups& g) {
    ValidationReport rep;
    const Graph& gr = g.graph();
    if (gr.num_vertices() == 0) {
        rep.errors.push_back("graph has no vertices");
        return rep;
    }
    if (!gr.connected()) rep.errors.push_back("graph is not connected");
    for (EdgeId e = 0; e < static_cast<EdgeId>(gr.num_edges()); ++e) {
        const EdgeId eb = Graph::bar(e);
        if (eb == e || Graph::bar(eb) != e || gr.source(e) != gr.range(eb))
            rep.errors.push_back("edge '" + gr.edge_name(e) + "' breaks the involution");
        if (!(g.edge_group(e) == g.edge_group(eb)))
            rep.errors.push_back("edge '" + gr.edge_name(e) + "' and its reverse carry different groups");
    }
    bool maps_ok = true;
    for (EdgeId e = 0; e < static_cast<EdgeId>(gr.num_edges()); ++e) {
        const AbHom& a = g.alpha(e);
        const std::string what = "alpha_" + gr.edge_name(e) + ": " + a.source().spec() + " -> " + a.target().spec();
        if (!a.shape_ok()) {
            rep.errors.push_back(what + " has a matrix of the wrong shape");
            maps_ok = false;
            continue;
        }
        if (!a.well_defined()) {
            rep.errors.push_back(what + " is not well defined on torsion");
            maps_ok = false;
            continue;
        }
        if (!a.injective()) {
            rep.errors.push_back(what + " is not injective");
            maps_ok = false;
        }
        if (!a.finite_index()) {
            rep.errors.push_back(what + " has image of infinite index (not locally finite)");
            maps_ok = false;
        }
    }
    if (maps_ok) {
        for (VertexId x = 0; x < static_cast<VertexId>(gr.num_vertices()); ++x) {
            const auto& in = gr.edges_into(x);
            if (in.empty()) {
                rep.errors.push_back("vertex '" + gr.vertex_name(x) + "' has no edges");
            } else if (in.size() == 1 && g.alpha(in[0]).surjective()) {
                rep.errors.push_back("nonsingularity fails at vertex '" + gr.vertex_name(x) + "': '" +
                                     gr.edge_name(in[0]) + "' is the only edge into it and alpha is onto");
            }
        }
    }
    if (g.base() < 0 || g.base() >= static_cast<VertexId>(gr.num_vertices()))
        rep.errors.push_back("base vertex is out of range");
    return rep;
}

SpanningTree spanning_tree(const Graph& g, VertexId v) {
    SpanningTree t;
    t.base = v;
    t.in_tree.assign(g.num_edges(), false);
    t.parent_edge.assign(g.num_vertices(), -1);
    t.parent.assign(g.num_vertices(), -1);
    t.depth.assign(g.num_vertices(), -1);
    std::deque<VertexId> q{v};
    t.depth[v] = 0;
    while (!q.empty()) {
        VertexId x = q.front();
        q.pop_front();
        for (EdgeId f : g.edges_into(x)) {
            VertexId y = g.source(f);
            if (t.depth[y] >= 0) continue;
            t.depth[y] = t.depth[x] + 1;
            t.parent_edge[y] = f;
            t.parent[y] = x;
            t.in_tree[f] = true;
            t.in_tree[Graph::bar(f)] = true;
            q.push_back(y);
        }
    }
    return t;
}

namespace {

// [v, x] as edges f_1..f_k with r(f_1) = v and s(f_k) = x.
std::vector<EdgeId> path_from_base(const SpanningTree& t, VertexId x) {
    std::vector<EdgeId> out;
    while (t.parent_edge.at(x) >= 0) {
        out.push_back(t.parent_edge[x]);
        x = t.parent.at(x);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<EdgeId> tree_path(const SpanningTree& t, VertexId x, VertexId y) {
    std::vector<EdgeId> px = path_from_base(t, x), py = path_from_base(t, y);
    std::size_t c = 0;
    while (c < px.size() && c < py.size() && px[c] == py[c]) ++c;
    std::vector<EdgeId> out;
    for (std::size_t i = px.size(); i > c; --i) out.push_back(Graph::bar(px[i - 1]));
    for (std::size_t i = c; i < py.size(); ++i) out.push_back(py[i]);
    return out;
}

EdgeId anchor_edge(const Graph& g, const SpanningTree& t, EdgeId e) {
    const VertexId x = g.range(e);
    if (x == t.base) throw GraphError("anchor edge is undefined for '" + g.edge_name(e) + "': its range is the base vertex");
    return path_from_base(t, x).back();
}

Int RaySpec::index(std::size_t i) const {
    if (i == 0) throw GraphError("ray indices start at 1");
    if (i <= prefix.size()) return prefix[i - 1];
    if (period.empty()) throw GraphError("ray has an empty period");
    return period[(i - 1 - prefix.size()) % period.size()];
}

bool RaySpec::infinitely_many_proper() const {
    return std::any_of(period.begin(), period.end(), [](const Int& k) { return k > 1; });
}

std::vector<std::string> RaySpec::problems() const {
    std::vector<std::string> out;
    if (period.empty()) out.push_back("ray period must be nonempty");
    for (const Int& k : prefix)
        if (k < 1) out.push_back("ray index " + k.str() + " is not positive");
    for (const Int& k : period)
        if (k < 1) out.push_back("ray index " + k.str() + " is not positive");
    if (out.empty() && index(1) < 2) out.push_back("nonsingularity fails at the root: [G_0 : G_1] must exceed 1");
    return out;
}

GraphOfGroups RaySpec::materialize(std::size_t len) const {
    GraphOfGroups g;
    FgAbelianGroup z(1, {});
    for (std::size_t i = 0; i <= len; ++i) g.add_vertex("u" + std::to_string(i), z);
    for (std::size_t i = 1; i <= len; ++i)
        g.add_edge("e" + std::to_string(i), static_cast<VertexId>(i - 1), static_cast<VertexId>(i), z,
                   IntMatrix{{index(i)}}, IntMatrix{{Int(1)}});
    g.set_base(0);
    return g;
}

namespace {

void factor_into(Int n, std::map<Int, long>& out) {
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n > 1) ++out[n];
}

}  // namespace

std::vector<std::pair<Int, long>> RaySpec::supernatural() const {
    std::map<Int, long> fin, inf;
    for (const Int& k : prefix) factor_into(k, fin);
    for (const Int& k : period) factor_into(k, inf);
    for (auto& [p, e] : inf) fin[p] = -1;
    return {fin.begin(), fin.end()};
}

std::string RaySpec::supernatural_string() const {
    auto parts = supernatural();
    if (parts.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : parts) {
        if (!s.empty()) s += " * ";
        s += p.str();
        if (e != 1) s += "^" + (e < 0 ? std::string("inf") : std::to_string(e));
    }
    return s;
}

}  // namespace gogkit
