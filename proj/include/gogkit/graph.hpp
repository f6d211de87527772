#pragma once

#include "gogkit/abelian.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gogkit {

using VertexId = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed edges come in pairs (2k, 2k+1); the reverse of e is e ^ 1.
class Graph {
public:
    VertexId add_vertex(std::string name);
    // Adds e with range r, source s and its reverse; returns e.
    EdgeId add_edge_pair(std::string name, VertexId range, VertexId source);

    std::size_t num_vertices() const { return vertex_names_.size(); }
    std::size_t num_edges() const { return range_.size(); }
    VertexId range(EdgeId e) const { return range_.at(e); }
    VertexId source(EdgeId e) const { return source_.at(e); }
    static EdgeId bar(EdgeId e) { return e ^ 1; }
    bool is_loop(EdgeId e) const { return range(e) == source(e); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
    const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }
    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<EdgeId> find_edge(const std::string& name) const;

    // Edges with the given range, in id order.
    const std::vector<EdgeId>& edges_into(VertexId x) const { return into_.at(x); }

    bool connected() const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<VertexId> range_, source_;
    std::vector<std::vector<EdgeId>> into_;
};

int betti_number(const Graph& g);

class GraphOfGroups {
public:
    GraphOfGroups() = default;

    VertexId add_vertex(std::string name, FgAbelianGroup group);
    // alpha_e maps the edge group into G_range, alpha_ebar into G_source.
    EdgeId add_edge(std::string name, VertexId range, VertexId source, FgAbelianGroup edge_group,
                    IntMatrix alpha_e, IntMatrix alpha_ebar);

    const Graph& graph() const { return graph_; }
    const FgAbelianGroup& vertex_group(VertexId x) const { return vertex_groups_.at(x); }
    const FgAbelianGroup& edge_group(EdgeId e) const { return edge_groups_.at(e); }
    const AbHom& alpha(EdgeId e) const { return alpha_.at(e); }

    VertexId range(EdgeId e) const { return graph_.range(e); }
    VertexId source(EdgeId e) const { return graph_.source(e); }
    static EdgeId bar(EdgeId e) { return Graph::bar(e); }
    std::size_t num_vertices() const { return graph_.num_vertices(); }
    std::size_t num_edges() const { return graph_.num_edges(); }

    // Transversal for G_{r(e)} / alpha_e(G_e), identity first.
    const std::vector<AbElement>& sigma(EdgeId e) const { return alpha_.at(e).transversal(); }
    std::size_t sigma_size(EdgeId e) const { return alpha_.at(e).transversal_size(); }
    bool alpha_onto(EdgeId e) const { return alpha_.at(e).surjective(); }

    // Sum of |Sigma_f| over edges f with range x.
    std::size_t fan_in(VertexId x) const;

    bool all_trivial() const;
    bool is_gbs() const;
    bool all_vertex_groups_finite() const;
    // Signed multiplier of alpha_e for GBS graphs.
    Int omega(EdgeId e) const;

    VertexId base() const { return base_; }
    void set_base(VertexId v) { base_ = v; }

    std::string vertex_label(VertexId x) const { return graph_.vertex_name(x); }
    std::string edge_label(EdgeId e) const { return graph_.edge_name(e); }

private:
    Graph graph_;
    std::vector<FgAbelianGroup> vertex_groups_;
    std::vector<FgAbelianGroup> edge_groups_;
    std::vector<AbHom> alpha_;
    VertexId base_ = 0;
};

struct ValidationReport {
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

ValidationReport validate(const GraphOfGroups& g);

struct SpanningTree {
    VertexId base = 0;
    std::vector<bool> in_tree;          // per directed edge
    std::vector<EdgeId> parent_edge;    // per vertex: tree edge with source x and range its parent; -1 at base
    std::vector<VertexId> parent;
    std::vector<int> depth;
};

SpanningTree spanning_tree(const Graph& g, VertexId v);
// Reduced tree path with range x and source y.
std::vector<EdgeId> tree_path(const SpanningTree& t, VertexId x, VertexId y);
// Last edge of [v, r(e)]; throws when r(e) = v.
EdgeId anchor_edge(const Graph& g, const SpanningTree& t, EdgeId e);

// Infinite ray G_0 > G_1 > ... of copies of Z with indices k_1, k_2, ...
struct RaySpec {
    std::vector<Int> prefix;
    std::vector<Int> period;

    // k_i for i >= 1.
    Int index(std::size_t i) const;
    // Indices > 1 occur infinitely often.
    bool infinitely_many_proper() const;
    std::vector<std::string> problems() const;
    // Finite initial segment with edges e_1..e_len; singular at its far end.
    GraphOfGroups materialize(std::size_t len) const;
    // Prime factorisation of the product of all indices; exponent -1 marks infinity.
    std::vector<std::pair<Int, long>> supernatural() const;
    std::string supernatural_string() const;
};

}  // namespace gogkit
