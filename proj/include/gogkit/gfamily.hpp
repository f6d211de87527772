#pragma once

#include "gogkit/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gogkit {

struct GFamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DepthGuardError : GFamilyError {
    using GFamilyError::GFamilyError;
};

// Eventually periodic infinite reduced G-path: stem, then cycle forever.
// Normal form: primitive cycle, and the stem never ends with the cycle's last letter.
struct BoundaryPoint {
    VertexId range = 0;
    std::vector<Letter> stem;
    std::vector<Letter> cycle;

    const Letter& at(std::size_t i) const {
        return i < stem.size() ? stem[i] : cycle[(i - stem.size()) % cycle.size()];
    }
    bool operator==(const BoundaryPoint& o) const {
        return range == o.range && stem == o.stem && cycle == o.cycle;
    }
    bool operator<(const BoundaryPoint& o) const {
        if (range != o.range) return range < o.range;
        if (stem.size() != o.stem.size()) return stem.size() < o.stem.size();
        if (stem != o.stem) return stem < o.stem;
        return cycle < o.cycle;
    }
};

// Checks composability and reducedness, then normalises. Throws GFamilyError.
BoundaryPoint make_point(const GraphOfGroups& g, VertexId range, std::vector<Letter> stem, std::vector<Letter> cycle);
// "stem ; cycle" with the path grammar of parse_path; the stem may be empty.
BoundaryPoint parse_point(const GraphOfGroups& g, std::string_view text);
std::string format_point(const GraphOfGroups& g, const BoundaryPoint& p);
bool in_cylinder(const BoundaryPoint& p, const Path& mu);
Path point_prefix(const BoundaryPoint& p, std::size_t n);

// First eventually periodic point found by following the flow graph from an
// edge at the base vertex, always taking the smallest successor.
BoundaryPoint default_tail(const GraphOfGroups& g);

// h . p for h in G_{r(p)}; passes the carry along until the state repeats.
BoundaryPoint act_element(const GraphOfGroups& g, const AbElement& h, const BoundaryPoint& p);

// The concrete family on l^2 of an orbit; nullopt is the zero vector.
std::optional<BoundaryPoint> apply_S(const GraphOfGroups& g, EdgeId e, const BoundaryPoint& p);
std::optional<BoundaryPoint> apply_S_adj(const GraphOfGroups& g, EdgeId e, const BoundaryPoint& p);
std::optional<BoundaryPoint> apply_U(const GraphOfGroups& g, VertexId x, const AbElement& h, const BoundaryPoint& p);
// s_mu s_nu^* on a single basis vector.
std::optional<BoundaryPoint> apply_snu(const GraphOfGroups& g, const Path& mu, const Path& nu, const BoundaryPoint& p);

// Depth-1 paths as vertices, depth-2 paths as edges; r(g1e1g2e2) = g1e1, s = g2e2.
struct EGraph {
    std::vector<Path> vertices;
    std::vector<Path> edges;
    std::vector<std::size_t> range;
    std::vector<std::size_t> source;

    std::size_t index_of(const Path& v) const;
    std::vector<std::size_t> edges_into(std::size_t v) const;
    bool row_finite() const { return true; }
    bool no_sources() const;
};

// Needs a finite graph; local finiteness keeps G^1 and G^2 finite even for
// infinite vertex groups.
EGraph build_EG(const GraphOfGroups& g);

// coeff * s_mu u_{s(mu),g} s_nu^*. An empty path at x stands for u_{x,1}.
struct Monomial {
    Path mu;
    AbElement g;
    Path nu;
    Rational coeff = 1;

    bool same_term(const Monomial& o) const { return mu == o.mu && g == o.g && nu == o.nu; }
};

Monomial monomial(const GraphOfGroups& g, const Path& mu, const Path& nu);
Monomial adjoint(const GraphOfGroups& g, const Monomial& m);
std::string format_monomial(const GraphOfGroups& g, const Monomial& m);

// Expands a*b in the spanning set. The s_e^* s_e case is opened with the
// range-projection sum and throws DepthGuardError past depth_guard.
std::vector<Monomial> monomial_product(const GraphOfGroups& g, const Monomial& a, const Monomial& b,
                                       std::size_t depth_guard);
// Sum with like terms merged and zero terms dropped, every nu extended to length depth.
std::vector<Monomial> normal_form(const GraphOfGroups& g, const std::vector<Monomial>& sum, std::size_t depth);

// Exact sparse operator on the truncated basis, stored by column. A column
// escapes when the true image leaves the basis.
struct SparseMatrix {
    std::size_t n = 0;
    std::vector<std::map<std::size_t, Rational>> cols;
    std::vector<bool> escapes;

    explicit SparseMatrix(std::size_t size = 0) : n(size), cols(size), escapes(size, false) {}
    Rational at(std::size_t row, std::size_t col) const;
    std::size_t nonzeros() const;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix scaled(const SparseMatrix& a, const Rational& c);

struct Comparison {
    std::size_t interior = 0;
    std::size_t boundary = 0;
    Rational defect = 0;  // max |a - b| entry over interior columns
    std::vector<bool> mask;  // interior columns
    bool holds() const { return defect == 0; }
};
Comparison compare(const SparseMatrix& a, const SparseMatrix& b);

class TruncatedRep {
public:
    // Basis: points of the orbit of xi, reached through generator moves, with stem length <= depth.
    TruncatedRep(const GraphOfGroups& g, BoundaryPoint xi, std::size_t depth, std::size_t max_basis = 200000);

    const GraphOfGroups& graph() const { return g_; }
    const BoundaryPoint& xi() const { return xi_; }
    std::size_t depth() const { return depth_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BoundaryPoint>& basis() const { return basis_; }
    std::optional<std::size_t> index_of(const BoundaryPoint& p) const;

    SparseMatrix S(EdgeId e) const;
    SparseMatrix S_adj(EdgeId e) const;
    SparseMatrix U(VertexId x, const AbElement& h) const;
    // U_{r(e1),g1} S_{e1} ... U S_{en} as a product of generator matrices; identity projection at r for length 0.
    SparseMatrix S_path(const Path& mu) const;
    SparseMatrix S_path_adj(const Path& mu) const;
    SparseMatrix evaluate(const Monomial& m) const;
    SparseMatrix evaluate(const std::vector<Monomial>& sum) const;
    SparseMatrix zero() const { return SparseMatrix(dim()); }

    // Columns on which none of the generators S_e, S_e^*, U_{x,+-u} escapes.
    std::size_t interior_dim() const;
    // Coordinate triplets "row col value", one per line.
    std::string export_triplets(const SparseMatrix& m) const;

private:
    template <class F> SparseMatrix pointwise(F&& f) const;

    GraphOfGroups g_;
    BoundaryPoint xi_;
    std::size_t depth_;
    std::vector<BoundaryPoint> basis_;
    std::map<BoundaryPoint, std::size_t> index_;
};

// Elements used to test (G2): all of G_e when finite, else the unit vectors and their negatives.
std::vector<AbElement> sample_elements(const FgAbelianGroup& grp);

struct RelationCheck {
    std::string name;
    Comparison result;
};

struct RelationReport {
    std::size_t dim = 0;
    std::size_t interior_dim = 0;       // interior for every check
    std::vector<RelationCheck> checks;
    bool all_hold() const;
    std::size_t min_interior() const;
    std::string render() const;
};

// (G1)-(G4), partial isometry and representation identities.
RelationReport verify_relations(const TruncatedRep& rep);
// (CK1), (CK2) and orthogonality of the vertex projections, matrix route.
RelationReport verify_ck(const TruncatedRep& rep);

struct SymbolicCheck {
    std::string name;
    bool holds = false;
};
// Same identities via monomial_product and normal_form.
std::vector<SymbolicCheck> verify_ck_symbolic(const GraphOfGroups& g, std::size_t depth_guard = 6);

// f(b) = <b delta_xi, u delta_xi> on BS(m, n) with xi = a^{n-1} e (a^{n-m} e)^inf
// and u = u_{v,a}; f(s_mu s_nu^*) is tabulated for all paths of length <= depth.
struct FunctionalTable {
    Rational f_u;
    std::size_t pairs = 0;
    std::size_t nonzero = 0;
    std::vector<std::string> nonzero_pairs;
};
GraphOfGroups baumslag_solitar(const Int& m, const Int& n);
BoundaryPoint bs_tail_point(const GraphOfGroups& bs, const Int& m, const Int& n);
FunctionalTable bs_tail_functional(const Int& m, const Int& n, std::size_t depth);

}  // namespace gogkit
