#include "gogkit/gfamily.hpp"

#include "gogkit/bstree.hpp"
#include "gogkit/dynamics.hpp"
#include "gogkit/parallel.hpp"
#include "gogkit/parse.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace gogkit {

namespace {

bool backtracks(const GraphOfGroups& g, const Letter& prev, const Letter& next) {
    return next.e == GraphOfGroups::bar(prev.e) && g.vertex_group(g.range(next.e)).is_identity(next.g);
}

void check_letters(const GraphOfGroups& g, VertexId range, const std::vector<Letter>& ls, bool wrap) {
    VertexId at = range;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        const Letter& l = ls[i];
        if (l.e < 0 || l.e >= static_cast<EdgeId>(g.num_edges())) throw GFamilyError("unknown edge in boundary point");
        if (g.range(l.e) != at) throw GFamilyError("letters of the boundary point are not composable");
        if (!g.vertex_group(at).contains(l.g) || g.alpha(l.e).residue(l.g) != l.g)
            throw GFamilyError("element " + format_element(l.g) + " is not a transversal element for " + g.edge_label(l.e));
        if (i > 0 && backtracks(g, ls[i - 1], l)) throw GFamilyError("boundary point is not reduced");
        at = g.source(l.e);
    }
    if (wrap && !ls.empty()) {
        if (at != g.range(ls.front().e)) throw GFamilyError("cycle does not close up");
        if (backtracks(g, ls.back(), ls.front())) throw GFamilyError("cycle is not reduced where it wraps");
    }
}

void normalise(BoundaryPoint& p) {
    auto& c = p.cycle;
    const std::size_t n = c.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = c[i] == c[i - d];
        if (ok) {
            c.resize(d);
            break;
        }
    }
    while (!p.stem.empty() && p.stem.back() == c.back()) {
        p.stem.pop_back();
        std::rotate(c.begin(), c.end() - 1, c.end());
    }
}

BoundaryPoint drop(const GraphOfGroups& g, const BoundaryPoint& p, std::size_t k) {
    if (k == 0) return p;
    BoundaryPoint out;
    out.range = g.source(p.at(k - 1).e);
    if (k <= p.stem.size()) {
        out.stem.assign(p.stem.begin() + static_cast<std::ptrdiff_t>(k), p.stem.end());
        out.cycle = p.cycle;
    } else {
        out.cycle = p.cycle;
        const std::size_t r = (k - p.stem.size()) % p.cycle.size();
        std::rotate(out.cycle.begin(), out.cycle.begin() + static_cast<std::ptrdiff_t>(r), out.cycle.end());
    }
    normalise(out);
    return out;
}

BoundaryPoint prepend(const Path& mu, const BoundaryPoint& p) {
    BoundaryPoint out;
    out.range = mu.range;
    out.stem = mu.letters;
    out.stem.insert(out.stem.end(), p.stem.begin(), p.stem.end());
    out.cycle = p.cycle;
    normalise(out);
    return out;
}

// u_{x,c} s_lambda = s_lambda' u_{s(lambda),c'}.
std::pair<Path, AbElement> push_through(const GraphOfGroups& g, AbElement c, const Path& lambda) {
    Path out;
    out.range = lambda.range;
    for (const Letter& l : lambda.letters) {
        const FgAbelianGroup& at = g.vertex_group(g.range(l.e));
        auto [t, k] = g.alpha(l.e).decompose(at.add(c, l.g));
        out.letters.push_back(Letter{t, l.e});
        c = g.alpha(GraphOfGroups::bar(l.e)).apply(k);
    }
    return {out, c};
}

// s_a s_b as a path, or nullopt when the juxtaposition backtracks (product zero).
std::optional<Path> join(const GraphOfGroups& g, const Path& a, const Path& b) {
    if (path_source(g, a) != b.range) return std::nullopt;
    if (a.letters.empty()) return b;
    if (b.letters.empty()) return a;
    if (backtracks(g, a.letters.back(), b.letters.front())) return std::nullopt;
    Path out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Path single(const GraphOfGroups& g, const Letter& l) {
    Path p;
    p.range = g.range(l.e);
    p.letters.push_back(l);
    return p;
}

// All h f with r(f) = x, h in Sigma_f, skipping 1 ebar when `after` ends in e.
std::vector<Path> range_partition(const GraphOfGroups& g, VertexId x, const Path& after) {
    std::vector<Path> out;
    for (EdgeId f = 0; f < static_cast<EdgeId>(g.num_edges()); ++f) {
        if (g.range(f) != x) continue;
        for (const AbElement& h : g.sigma(f)) {
            Letter l{h, f};
            if (!after.letters.empty() && backtracks(g, after.letters.back(), l)) continue;
            out.push_back(single(g, l));
        }
    }
    return out;
}

}  // namespace

BoundaryPoint make_point(const GraphOfGroups& g, VertexId range, std::vector<Letter> stem, std::vector<Letter> cycle) {
    if (cycle.empty()) throw GFamilyError("boundary point needs a nonempty repeating block");
    std::vector<Letter> all = stem;
    all.insert(all.end(), cycle.begin(), cycle.end());
    check_letters(g, range, all, false);
    const VertexId cycle_range = stem.empty() ? range : g.source(stem.back().e);
    check_letters(g, cycle_range, cycle, true);
    BoundaryPoint p{range, std::move(stem), std::move(cycle)};
    normalise(p);
    return p;
}

BoundaryPoint parse_point(const GraphOfGroups& g, std::string_view text) {
    std::string_view stem_text, cycle_text;
    const auto semi = text.find(';');
    const auto inf = text.rfind(")^inf");
    if (semi != std::string_view::npos) {
        stem_text = text.substr(0, semi);
        cycle_text = text.substr(semi + 1);
    } else if (inf != std::string_view::npos && text.find_first_not_of(" \t", inf + 5) == std::string_view::npos) {
        // printed form "stem (cycle)^inf": find the parenthesis that opens the cycle
        std::size_t open = inf;
        int level = 0;
        for (std::size_t i = inf + 1; i-- > 0;) {
            level += text[i] == ')' ? 1 : text[i] == '(' ? -1 : 0;
            if (level == 0) {
                open = i;
                break;
            }
        }
        if (open == inf) throw GFamilyError("unbalanced parentheses in boundary point");
        stem_text = text.substr(0, open);
        cycle_text = text.substr(open + 1, inf - open - 1);
    } else {
        throw GFamilyError("boundary point needs 'stem ; cycle' or 'stem (cycle)^inf'");
    }
    const Path cyc = parse_path(g, cycle_text);
    if (stem_text.find_first_not_of(" \t") == std::string_view::npos) return make_point(g, cyc.range, {}, cyc.letters);
    const Path st = parse_path(g, stem_text);
    return make_point(g, st.range, st.letters, cyc.letters);
}

std::string format_point(const GraphOfGroups& g, const BoundaryPoint& p) {
    Path st{p.range, p.stem};
    Path cy{p.stem.empty() ? p.range : g.source(p.stem.back().e), p.cycle};
    std::string s = p.stem.empty() ? "" : format_path(g, st) + " ";
    return s + "(" + format_path(g, cy) + ")^inf";
}

bool in_cylinder(const BoundaryPoint& p, const Path& mu) {
    if (p.range != mu.range) return false;
    for (std::size_t i = 0; i < mu.letters.size(); ++i)
        if (!(p.at(i) == mu.letters[i])) return false;
    return true;
}

BoundaryPoint default_tail(const GraphOfGroups& g) {
    const FlowGraph fg = flow_graph(g);
    std::optional<EdgeId> start;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()) && !start; ++e)
        if (g.range(e) == g.base()) start = e;
    if (!start) throw GFamilyError("no edge ends at the base vertex");
    std::vector<EdgeId> walk;
    std::map<EdgeId, std::size_t> pos;
    for (EdgeId d = *start; !pos.count(d);) {
        pos.emplace(d, walk.size());
        walk.push_back(d);
        if (fg.succ[d].empty()) throw GFamilyError("the flow graph has a dead end at " + g.edge_label(d));
        d = fg.succ[d].front();
    }
    EdgeRay r;
    const std::size_t k = pos.at(fg.succ[walk.back()].front());
    r.stem.assign(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(k));
    r.loop.assign(walk.begin() + static_cast<std::ptrdiff_t>(k), walk.end());
    // A second lap fixes the element where the loop wraps onto itself.
    const std::size_t lap = r.loop.size();
    const Path p = ray_prefix(g, r, r.stem.size() + 2 * lap);
    std::vector<Letter> stem(p.letters.begin(), p.letters.end() - static_cast<std::ptrdiff_t>(lap));
    std::vector<Letter> cycle(p.letters.end() - static_cast<std::ptrdiff_t>(lap), p.letters.end());
    return make_point(g, p.range, std::move(stem), std::move(cycle));
}

Path point_prefix(const BoundaryPoint& p, std::size_t n) {
    Path out;
    out.range = p.range;
    for (std::size_t i = 0; i < n; ++i) out.letters.push_back(p.at(i));
    return out;
}

BoundaryPoint act_element(const GraphOfGroups& g, const AbElement& h, const BoundaryPoint& p) {
    if (!g.vertex_group(p.range).contains(h)) throw GFamilyError("element does not lie in the range vertex group");
    constexpr std::size_t limit = 1u << 16;
    std::map<std::pair<std::size_t, AbElement>, std::size_t> seen;
    std::vector<Letter> out;
    AbElement c = h;
    for (std::size_t i = 0;; ++i) {
        if (i >= p.stem.size()) {
            const std::size_t phase = (i - p.stem.size()) % p.cycle.size();
            auto [it, fresh] = seen.try_emplace({phase, c}, i);
            if (!fresh) {
                BoundaryPoint q;
                q.range = p.range;
                q.stem.assign(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(it->second));
                q.cycle.assign(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end());
                normalise(q);
                return q;
            }
        }
        if (i > limit) throw GFamilyError("carry never settles: the image is not eventually periodic");
        const Letter& l = p.at(i);
        const FgAbelianGroup& at = g.vertex_group(g.range(l.e));
        auto [t, k] = g.alpha(l.e).decompose(at.add(c, l.g));
        out.push_back(Letter{t, l.e});
        c = g.alpha(GraphOfGroups::bar(l.e)).apply(k);
    }
}

std::optional<BoundaryPoint> apply_S(const GraphOfGroups& g, EdgeId e, const BoundaryPoint& p) {
    if (p.range != g.source(e)) return std::nullopt;
    const Letter first{g.vertex_group(g.range(e)).identity(), e};
    if (backtracks(g, first, p.at(0))) return std::nullopt;
    return prepend(single(g, first), p);
}

std::optional<BoundaryPoint> apply_S_adj(const GraphOfGroups& g, EdgeId e, const BoundaryPoint& p) {
    const Letter& l = p.at(0);
    if (l.e != e || !g.vertex_group(p.range).is_identity(l.g)) return std::nullopt;
    return drop(g, p, 1);
}

std::optional<BoundaryPoint> apply_U(const GraphOfGroups& g, VertexId x, const AbElement& h, const BoundaryPoint& p) {
    if (p.range != x) return std::nullopt;
    return act_element(g, h, p);
}

std::optional<BoundaryPoint> apply_snu(const GraphOfGroups& g, const Path& mu, const Path& nu, const BoundaryPoint& p) {
    if (!in_cylinder(p, nu)) return std::nullopt;
    const BoundaryPoint rest = drop(g, p, nu.letters.size());
    if (rest.range != path_source(g, mu)) return std::nullopt;
    if (!mu.letters.empty() && backtracks(g, mu.letters.back(), rest.at(0))) return std::nullopt;
    return prepend(mu, rest);
}

// ---- E_G ----

std::size_t EGraph::index_of(const Path& v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw GFamilyError("not a vertex of E_G");
    return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<std::size_t> EGraph::edges_into(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (range[i] == v) out.push_back(i);
    return out;
}

bool EGraph::no_sources() const {
    std::vector<bool> hit(vertices.size(), false);
    for (std::size_t r : range) hit[r] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

EGraph build_EG(const GraphOfGroups& g) {
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e)
        if (!g.alpha(e).finite_index()) throw GFamilyError("edge " + g.edge_label(e) + " has infinite index; G^1 is infinite");
    EGraph out;
    std::map<Path, std::size_t> at;
    for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x)
        for (Path& p : enumerate_paths(g, x, 1)) {
            at.emplace(p, out.vertices.size());
            out.vertices.push_back(std::move(p));
        }
    for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x)
        for (Path& p : enumerate_paths(g, x, 2)) {
            out.range.push_back(at.at(single(g, p.letters[0])));
            out.source.push_back(at.at(single(g, p.letters[1])));
            out.edges.push_back(std::move(p));
        }
    return out;
}

// ---- monomials ----

Monomial monomial(const GraphOfGroups& g, const Path& mu, const Path& nu) {
    const VertexId x = path_source(g, mu);
    if (x != path_source(g, nu)) throw GFamilyError("s_mu s_nu^* needs s(mu) = s(nu)");
    return Monomial{mu, g.vertex_group(x).identity(), nu, 1};
}

Monomial adjoint(const GraphOfGroups& g, const Monomial& m) {
    return Monomial{m.nu, g.vertex_group(path_source(g, m.mu)).neg(m.g), m.mu, m.coeff};
}

std::string format_monomial(const GraphOfGroups& g, const Monomial& m) {
    std::ostringstream os;
    if (m.coeff != 1) os << m.coeff << " ";
    const FgAbelianGroup& grp = g.vertex_group(path_source(g, m.mu));
    os << "s[" << format_path(g, m.mu) << "]";
    if (!grp.is_identity(m.g)) os << " u[" << format_element_in(grp, m.g) << "]";
    os << " s*[" << format_path(g, m.nu) << "]";
    return os.str();
}

std::vector<Monomial> monomial_product(const GraphOfGroups& g, const Monomial& a, const Monomial& b,
                                       std::size_t depth_guard) {
    std::vector<Monomial> out;
    const Rational coeff = a.coeff * b.coeff;
    if (coeff == 0) return out;
    const Path& nu1 = a.nu;
    const Path& mu2 = b.mu;
    const VertexId x = path_source(g, nu1);
    const FgAbelianGroup& gx = g.vertex_group(x);

    if (is_prefix(nu1, mu2) && nu1.letters.size() == mu2.letters.size()) {
        if (nu1.letters.empty()) {
            out.push_back(Monomial{a.mu, gx.add(a.g, b.g), b.nu, coeff});
            return out;
        }
        // s_e^* s_e = sum over h f != 1 ebar of s_{hf} s_{hf}^*.
        for (const Path& hf : range_partition(g, x, nu1)) {
            auto [left, c1] = push_through(g, a.g, hf);
            auto [right, c2] = push_through(g, gx.neg(b.g), hf);
            auto mu = join(g, a.mu, left);
            auto nu = join(g, b.nu, right);
            if (!mu || !nu) continue;
            if (mu->letters.size() > depth_guard || nu->letters.size() > depth_guard)
                throw DepthGuardError("expansion of s_e^* s_e exceeds depth " + std::to_string(depth_guard));
            const FgAbelianGroup& gs = g.vertex_group(path_source(g, hf));
            out.push_back(Monomial{*mu, gs.sub(c1, c2), *nu, coeff});
        }
        return out;
    }
    if (is_prefix(nu1, mu2)) {
        Path rest{x, {mu2.letters.begin() + static_cast<std::ptrdiff_t>(nu1.letters.size()), mu2.letters.end()}};
        auto [lambda, c] = push_through(g, a.g, rest);
        auto mu = join(g, a.mu, lambda);
        if (!mu) return out;
        out.push_back(Monomial{*mu, g.vertex_group(path_source(g, rest)).add(c, b.g), b.nu, coeff});
        return out;
    }
    if (is_prefix(mu2, nu1)) {
        const VertexId y = path_source(g, mu2);
        Path rest{y, {nu1.letters.begin() + static_cast<std::ptrdiff_t>(mu2.letters.size()), nu1.letters.end()}};
        auto [lambda, c] = push_through(g, g.vertex_group(y).neg(b.g), rest);
        auto nu = join(g, b.nu, lambda);
        if (!nu) return out;
        out.push_back(Monomial{a.mu, g.vertex_group(path_source(g, rest)).sub(a.g, c), *nu, coeff});
        return out;
    }
    return out;
}

std::vector<Monomial> normal_form(const GraphOfGroups& g, const std::vector<Monomial>& sum, std::size_t depth) {
    using Key = std::tuple<Path, AbElement, Path>;
    std::map<Key, Rational> acc;
    std::vector<Monomial> work = sum;
    while (!work.empty()) {
        Monomial m = std::move(work.back());
        work.pop_back();
        if (m.nu.letters.size() >= depth) {
            acc[Key{m.mu, m.g, m.nu}] += m.coeff;
            continue;
        }
        for (const Path& hf : range_partition(g, path_source(g, m.nu), m.nu)) {
            auto [lambda, c] = push_through(g, m.g, hf);
            auto mu = join(g, m.mu, lambda);
            auto nu = join(g, m.nu, hf);
            if (mu && nu) work.push_back(Monomial{*mu, c, *nu, m.coeff});
        }
    }
    std::vector<Monomial> out;
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back(Monomial{std::get<0>(k), std::get<1>(k), std::get<2>(k), c});
    return out;
}

// ---- sparse matrices ----

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
    auto it = cols[col].find(row);
    return it == cols[col].end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : cols) n += c.size();
    return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.n != b.n) throw GFamilyError("matrix size mismatch");
    SparseMatrix out(a.n);
    for (std::size_t j = 0; j < b.n; ++j) {
        if (b.escapes[j]) {
            out.escapes[j] = true;
            continue;
        }
        for (const auto& [k, v] : b.cols[j]) {
            if (a.escapes[k]) {
                out.escapes[j] = true;
                break;
            }
            for (const auto& [i, w] : a.cols[k]) out.cols[j][i] += v * w;
        }
        if (out.escapes[j]) {
            out.cols[j].clear();
            continue;
        }
        std::erase_if(out.cols[j], [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

SparseMatrix scaled(const SparseMatrix& a, const Rational& c) {
    SparseMatrix out = a;
    for (auto& col : out.cols) {
        for (auto& [i, v] : col) v *= c;
        std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.n != b.n) throw GFamilyError("matrix size mismatch");
    SparseMatrix out = a;
    for (std::size_t j = 0; j < b.n; ++j) {
        out.escapes[j] = a.escapes[j] || b.escapes[j];
        for (const auto& [i, v] : b.cols[j]) out.cols[j][i] += v;
        std::erase_if(out.cols[j], [](const auto& kv) { return kv.second == 0; });
    }
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + scaled(b, Rational(-1)); }

Comparison compare(const SparseMatrix& a, const SparseMatrix& b) {
    Comparison c;
    const SparseMatrix d = a - b;
    c.mask.assign(d.n, false);
    for (std::size_t j = 0; j < d.n; ++j) {
        if (d.escapes[j]) {
            ++c.boundary;
            continue;
        }
        ++c.interior;
        c.mask[j] = true;
        for (const auto& [i, v] : d.cols[j]) c.defect = std::max(c.defect, v < 0 ? Rational(-v) : v);
    }
    return c;
}

// ---- truncated representation ----

TruncatedRep::TruncatedRep(const GraphOfGroups& g, BoundaryPoint xi, std::size_t depth, std::size_t max_basis)
    : g_(g), xi_(std::move(xi)), depth_(depth) {
    if (depth < 2) throw GFamilyError("truncation depth must be at least 2");
    check_letters(g_, xi_.range, xi_.stem, false);
    normalise(xi_);
    if (xi_.stem.size() > depth) throw GFamilyError("the stem of xi is longer than the truncation depth");

    std::vector<std::pair<VertexId, AbElement>> moves;
    for (VertexId x = 0; x < static_cast<VertexId>(g_.num_vertices()); ++x)
        for (const AbElement& u : g_.vertex_group(x).generators()) {
            moves.emplace_back(x, u);
            moves.emplace_back(x, g_.vertex_group(x).neg(u));
        }
    std::set<BoundaryPoint> seen{xi_};
    std::deque<BoundaryPoint> queue{xi_};
    auto visit = [&](const std::optional<BoundaryPoint>& q) {
        if (!q || q->stem.size() > depth_ || seen.count(*q)) return;
        if (seen.size() >= max_basis) throw GFamilyError("truncated basis exceeds " + std::to_string(max_basis) + " points");
        seen.insert(*q);
        queue.push_back(*q);
    };
    while (!queue.empty()) {
        const BoundaryPoint p = queue.front();
        queue.pop_front();
        for (EdgeId e = 0; e < static_cast<EdgeId>(g_.num_edges()); ++e) {
            visit(apply_S(g_, e, p));
            visit(apply_S_adj(g_, e, p));
        }
        for (const auto& [x, u] : moves) visit(apply_U(g_, x, u, p));
    }
    basis_.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> TruncatedRep::index_of(const BoundaryPoint& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

template <class F>
SparseMatrix TruncatedRep::pointwise(F&& f) const {
    SparseMatrix m(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        const std::optional<BoundaryPoint> q = f(basis_[j]);
        if (!q) continue;
        if (auto i = index_of(*q))
            m.cols[j][*i] = 1;
        else
            m.escapes[j] = true;
    }
    return m;
}

SparseMatrix TruncatedRep::S(EdgeId e) const {
    return pointwise([&](const BoundaryPoint& p) { return apply_S(g_, e, p); });
}

SparseMatrix TruncatedRep::S_adj(EdgeId e) const {
    return pointwise([&](const BoundaryPoint& p) { return apply_S_adj(g_, e, p); });
}

SparseMatrix TruncatedRep::U(VertexId x, const AbElement& h) const {
    return pointwise([&](const BoundaryPoint& p) { return apply_U(g_, x, h, p); });
}

SparseMatrix TruncatedRep::S_path(const Path& mu) const {
    SparseMatrix m = U(mu.range, g_.vertex_group(mu.range).identity());
    for (const Letter& l : mu.letters) m = m * U(g_.range(l.e), l.g) * S(l.e);
    return m;
}

SparseMatrix TruncatedRep::S_path_adj(const Path& mu) const {
    const VertexId s = path_source(g_, mu);
    SparseMatrix m = U(s, g_.vertex_group(s).identity());
    for (auto it = mu.letters.rbegin(); it != mu.letters.rend(); ++it) {
        const FgAbelianGroup& grp = g_.vertex_group(g_.range(it->e));
        m = m * S_adj(it->e) * U(g_.range(it->e), grp.neg(it->g));
    }
    return m;
}

SparseMatrix TruncatedRep::evaluate(const Monomial& m) const {
    return scaled(S_path(m.mu) * U(path_source(g_, m.mu), m.g) * S_path_adj(m.nu), m.coeff);
}

SparseMatrix TruncatedRep::evaluate(const std::vector<Monomial>& sum) const {
    SparseMatrix out = zero();
    for (const Monomial& m : sum) out = out + evaluate(m);
    return out;
}

std::size_t TruncatedRep::interior_dim() const {
    std::vector<bool> bad(dim(), false);
    auto mark = [&](const SparseMatrix& m) {
        for (std::size_t j = 0; j < dim(); ++j)
            if (m.escapes[j]) bad[j] = true;
    };
    for (EdgeId e = 0; e < static_cast<EdgeId>(g_.num_edges()); ++e) {
        mark(S(e));
        mark(S_adj(e));
    }
    for (VertexId x = 0; x < static_cast<VertexId>(g_.num_vertices()); ++x)
        for (const AbElement& u : g_.vertex_group(x).generators()) {
            mark(U(x, u));
            mark(U(x, g_.vertex_group(x).neg(u)));
        }
    return static_cast<std::size_t>(std::count(bad.begin(), bad.end(), false));
}

std::string TruncatedRep::export_triplets(const SparseMatrix& m) const {
    std::ostringstream os;
    for (std::size_t j = 0; j < m.n; ++j)
        for (const auto& [i, v] : m.cols[j]) os << i << " " << j << " " << v << "\n";
    return os.str();
}

std::vector<AbElement> sample_elements(const FgAbelianGroup& grp) {
    if (grp.is_finite()) return grp.elements();
    std::vector<AbElement> out;
    for (const AbElement& u : grp.generators()) {
        out.push_back(u);
        out.push_back(grp.neg(u));
    }
    return out;
}

// ---- relation reports ----

bool RelationReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.result.holds(); });
}

std::size_t RelationReport::min_interior() const {
    std::size_t m = dim;
    for (const auto& c : checks) m = std::min(m, c.result.interior);
    return m;
}

std::string RelationReport::render() const {
    std::ostringstream os;
    os << "basis dimension: " << dim << "\n";
    os << "interior for every check: " << interior_dim << "\n";
    for (const auto& c : checks)
        os << (c.result.holds() ? "ok   " : "FAIL ") << c.name << "  interior=" << c.result.interior
           << " boundary=" << c.result.boundary << " defect=" << c.result.defect << "\n";
    os << (all_hold() ? "all relations hold" : "some relations fail") << "\n";
    return os.str();
}

namespace {

using Task = std::pair<std::string, std::function<Comparison()>>;

RelationReport run_tasks(const TruncatedRep& rep, const std::vector<Task>& tasks) {
    RelationReport r;
    r.dim = rep.dim();
    r.checks.resize(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) { r.checks[i] = RelationCheck{tasks[i].first, tasks[i].second()}; });
    std::vector<bool> all(rep.dim(), true);
    for (const auto& c : r.checks)
        for (std::size_t j = 0; j < rep.dim(); ++j)
            if (!c.result.mask[j]) all[j] = false;
    r.interior_dim = static_cast<std::size_t>(std::count(all.begin(), all.end(), true));
    return r;
}

std::string elem(const GraphOfGroups& g, VertexId x, const AbElement& a) {
    return format_element_in(g.vertex_group(x), a);
}

// Space-separated, skipping empty parts (elements of trivial groups print as "").
std::string label(std::initializer_list<std::string> parts) {
    std::string out;
    for (const std::string& p : parts)
        if (!p.empty()) out += (out.empty() ? "" : " ") + p;
    return out;
}

}  // namespace

RelationReport verify_relations(const TruncatedRep& rep) {
    const GraphOfGroups& g = rep.graph();
    const auto nv = static_cast<VertexId>(g.num_vertices());
    const auto ne = static_cast<EdgeId>(g.num_edges());
    auto id = [&](VertexId x) { return g.vertex_group(x).identity(); };
    std::vector<Task> tasks;

    for (VertexId x = 0; x < nv; ++x)
        for (VertexId y = 0; y < nv; ++y)
            if (x != y)
                tasks.emplace_back("G1 " + g.vertex_label(x) + " " + g.vertex_label(y),
                                   [&rep, &g, x, y, id] { return compare(rep.U(x, id(x)) * rep.U(y, id(y)), rep.zero()); });

    for (EdgeId e = 0; e < ne; ++e)
        for (const AbElement& h : sample_elements(g.edge_group(e)))
            tasks.emplace_back(label({"G2", g.edge_label(e), format_element_in(g.edge_group(e), h)}), [&rep, &g, e, h] {
                const SparseMatrix lhs = rep.U(g.range(e), g.alpha(e).apply(h)) * rep.S(e);
                const SparseMatrix rhs = rep.S(e) * rep.U(g.source(e), g.alpha(GraphOfGroups::bar(e)).apply(h));
                return compare(lhs, rhs);
            });

    for (EdgeId e = 0; e < ne; ++e) {
        const EdgeId eb = GraphOfGroups::bar(e);
        tasks.emplace_back("G3 " + g.edge_label(e), [&rep, &g, e, eb, id] {
            return compare(rep.U(g.source(e), id(g.source(e))), rep.S_adj(e) * rep.S(e) + rep.S(eb) * rep.S_adj(eb));
        });
        tasks.emplace_back("G4 " + g.edge_label(e), [&rep, &g, e, eb] {
            const VertexId x = g.source(e);
            const FgAbelianGroup& gx = g.vertex_group(x);
            SparseMatrix sum = rep.zero();
            for (EdgeId f = 0; f < static_cast<EdgeId>(g.num_edges()); ++f) {
                if (g.range(f) != x) continue;
                for (const AbElement& h : g.sigma(f)) {
                    if (f == eb && gx.is_identity(h)) continue;
                    sum = sum + rep.U(x, h) * rep.S(f) * rep.S_adj(f) * rep.U(x, gx.neg(h));
                }
            }
            return compare(rep.S_adj(e) * rep.S(e), sum);
        });
        tasks.emplace_back("partial isometry S " + g.edge_label(e), [&rep, e] {
            const SparseMatrix s = rep.S(e);
            return compare(s * rep.S_adj(e) * s, s);
        });
    }

    for (VertexId x = 0; x < nv; ++x) {
        const FgAbelianGroup& gx = g.vertex_group(x);
        const std::vector<AbElement> sample = sample_elements(gx);
        for (const AbElement& a : sample) {
            tasks.emplace_back(label({"partial unitary U", g.vertex_label(x), elem(g, x, a)}), [&rep, &gx, x, a] {
                const SparseMatrix u = rep.U(x, a);
                return compare(u * rep.U(x, gx.neg(a)) * u, u);
            });
            for (const AbElement& b : sample)
                tasks.emplace_back(label({"representation U", g.vertex_label(x), elem(g, x, a), elem(g, x, b)}),
                                   [&rep, &gx, x, a, b] { return compare(rep.U(x, a) * rep.U(x, b), rep.U(x, gx.add(a, b))); });
        }
    }
    return run_tasks(rep, tasks);
}

RelationReport verify_ck(const TruncatedRep& rep) {
    const GraphOfGroups& g = rep.graph();
    const EGraph eg = build_EG(g);
    std::vector<Task> tasks;

    auto P = [&rep](const Path& v) { return rep.S_path(v) * rep.S_path_adj(v); };
    auto T = [&rep, &eg](std::size_t i) { return rep.S_path(eg.edges[i]) * rep.S_path_adj(eg.vertices[eg.source[i]]); };
    auto T_adj = [&rep, &eg](std::size_t i) {
        return rep.S_path(eg.vertices[eg.source[i]]) * rep.S_path_adj(eg.edges[i]);
    };

    for (std::size_t i = 0; i < eg.edges.size(); ++i)
        tasks.emplace_back("CK1 " + format_path(g, eg.edges[i]),
                           [=, &eg] { return compare(T_adj(i) * T(i), P(eg.vertices[eg.source[i]])); });

    for (std::size_t v = 0; v < eg.vertices.size(); ++v)
        tasks.emplace_back("CK2 " + format_path(g, eg.vertices[v]), [=, &rep, &eg] {
            SparseMatrix sum = rep.zero();
            for (std::size_t i : eg.edges_into(v)) sum = sum + T(i) * T_adj(i);
            return compare(sum, P(eg.vertices[v]));
        });

    for (std::size_t v = 0; v < eg.vertices.size(); ++v)
        tasks.emplace_back("cylinder projection " + format_path(g, eg.vertices[v]), [=, &rep, &eg] {
            const Path& mu = eg.vertices[v];
            SparseMatrix expect(rep.dim());
            for (std::size_t j = 0; j < rep.dim(); ++j)
                if (in_cylinder(rep.basis()[j], mu)) expect.cols[j][j] = 1;
            return compare(P(mu), expect);
        });

    tasks.emplace_back("vertex projections orthogonal", [=, &rep, &eg] {
        SparseMatrix sum = rep.zero();
        for (std::size_t a = 0; a < eg.vertices.size(); ++a)
            for (std::size_t b = 0; b < eg.vertices.size(); ++b)
                if (a != b) sum = sum + P(eg.vertices[a]) * P(eg.vertices[b]);
        return compare(sum, rep.zero());
    });
    return run_tasks(rep, tasks);
}

std::vector<SymbolicCheck> verify_ck_symbolic(const GraphOfGroups& g, std::size_t depth_guard) {
    const EGraph eg = build_EG(g);
    auto T = [&](std::size_t i) { return monomial(g, eg.edges[i], eg.vertices[eg.source[i]]); };
    auto P = [&](std::size_t v) { return monomial(g, eg.vertices[v], eg.vertices[v]); };
    auto same = [&](const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
        std::size_t d = 0;
        for (const auto& m : a) d = std::max(d, m.nu.letters.size());
        for (const auto& m : b) d = std::max(d, m.nu.letters.size());
        const auto na = normal_form(g, a, d);
        const auto nb = normal_form(g, b, d);
        if (na.size() != nb.size()) return false;
        for (std::size_t i = 0; i < na.size(); ++i)
            if (!na[i].same_term(nb[i]) || na[i].coeff != nb[i].coeff) return false;
        return true;
    };

    std::vector<SymbolicCheck> out;
    bool ck1 = true, ck2 = true, vorth = true, eorth = true;
    for (std::size_t i = 0; i < eg.edges.size(); ++i)
        ck1 = ck1 && same(monomial_product(g, adjoint(g, T(i)), T(i), depth_guard), {P(eg.source[i])});
    for (std::size_t v = 0; v < eg.vertices.size(); ++v) {
        std::vector<Monomial> sum;
        for (std::size_t i : eg.edges_into(v)) {
            auto t = monomial_product(g, T(i), adjoint(g, T(i)), depth_guard);
            sum.insert(sum.end(), t.begin(), t.end());
        }
        ck2 = ck2 && same(sum, {P(v)});
    }
    for (std::size_t a = 0; a < eg.vertices.size(); ++a)
        for (std::size_t b = 0; b < eg.vertices.size(); ++b)
            if (a != b) vorth = vorth && same(monomial_product(g, P(a), P(b), depth_guard), {});
    for (std::size_t i = 0; i < eg.edges.size(); ++i)
        for (std::size_t j = 0; j < eg.edges.size(); ++j)
            if (i != j) eorth = eorth && same(monomial_product(g, adjoint(g, T(i)), T(j), depth_guard), {});
    out.push_back({"CK1", ck1});
    out.push_back({"CK2", ck2});
    out.push_back({"vertex projections orthogonal", vorth});
    out.push_back({"edge ranges orthogonal", eorth});
    return out;
}

// ---- the BS(m, n) functional ----

GraphOfGroups baumslag_solitar(const Int& m, const Int& n) {
    GraphOfGroups g;
    const VertexId v = g.add_vertex("v", FgAbelianGroup(1, {}));
    g.add_edge("e", v, v, FgAbelianGroup(1, {}), IntMatrix{{n}}, IntMatrix{{m}});
    g.set_base(v);
    return g;
}

BoundaryPoint bs_tail_point(const GraphOfGroups& bs, const Int& m, const Int& n) {
    if (!(n > m && m >= 1)) throw GFamilyError("the tail point needs n > m >= 1");
    const FgAbelianGroup& z = bs.vertex_group(0);
    const Letter head{z.canonical({n - 1}), 0};
    const Letter loop{z.canonical({n - m}), 0};
    return make_point(bs, 0, {head}, {loop});
}

FunctionalTable bs_tail_functional(const Int& m, const Int& n, std::size_t depth) {
    const GraphOfGroups g = baumslag_solitar(m, n);
    const BoundaryPoint xi = bs_tail_point(g, m, n);
    const FgAbelianGroup& z = g.vertex_group(0);
    const BoundaryPoint target = act_element(g, z.canonical({Int(1)}), xi);

    FunctionalTable t;
    const auto ux = apply_U(g, 0, z.canonical({Int(1)}), xi);
    t.f_u = (ux && *ux == target) ? 1 : 0;
    std::vector<Path> paths;
    for (std::size_t k = 0; k <= depth; ++k) {
        auto ps = enumerate_paths(g, 0, k);
        paths.insert(paths.end(), ps.begin(), ps.end());
    }
    for (const Path& mu : paths)
        for (const Path& nu : paths) {
            ++t.pairs;
            const auto img = apply_snu(g, mu, nu, xi);
            if (img && *img == target) {
                ++t.nonzero;
                t.nonzero_pairs.push_back(format_path(g, mu) + " | " + format_path(g, nu));
            }
        }
    return t;
}

}  // namespace gogkit
