#include "gogkit/bstree.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gogkit {

bool word_less(const Word& a, const Word& b) {
    if (a.range != b.range) return a.range < b.range;
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.tail < b.tail;
}

std::vector<Path> children(const GraphOfGroups& g, const Path& p) {
    const VertexId s = path_source(g, p);
    std::vector<Path> out;
    for (EdgeId f : g.graph().edges_into(s)) {
        const bool backtrack = !p.letters.empty() && p.letters.back().e == GraphOfGroups::bar(f);
        for (const AbElement& h : g.sigma(f)) {
            if (backtrack && g.vertex_group(s).is_identity(h)) continue;
            Path c = p;
            c.letters.push_back(Letter{h, f});
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::size_t child_count(const GraphOfGroups& g, const Path& p) {
    const std::size_t n = g.fan_in(path_source(g, p));
    return p.letters.empty() ? n : n - 1;
}

std::vector<Path> enumerate_paths(const GraphOfGroups& g, VertexId x, std::size_t n) {
    std::vector<Path> level{Path{x, {}}};
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<Path> next;
        for (const Path& p : level)
            for (Path& c : children(g, p)) next.push_back(std::move(c));
        level = std::move(next);
    }
    return level;
}

ValenceHistogram tree_valences(const GraphOfGroups& g, VertexId x, std::size_t n) {
    ValenceHistogram hist(n + 1);
    std::vector<Path> level{Path{x, {}}};
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<Path> next;
        for (const Path& p : level) {
            ++hist[d][child_count(g, p) + (d > 0 ? 1 : 0)];
            if (d < n)
                for (Path& c : children(g, p)) next.push_back(std::move(c));
        }
        level = std::move(next);
    }
    return hist;
}

Path act_on_path(const GraphOfGroups& g, const Word& gamma, const Path& mu, const Path& lookahead) {
    if (!is_prefix(mu, lookahead)) throw WordError("lookahead must extend the path being acted on");
    const Word gm = reduce(g, gamma);
    Reduction r = reduce_counted(g, juxtapose(g, gm, as_word(g, lookahead)));
    if (r.cancellations >= lookahead.length() || r.word.length() < mu.length())
        throw InsufficientLookahead("lookahead of length " + std::to_string(lookahead.length()) +
                                    " does not determine the image; refine further");
    Path out = truncate(r.word);
    out.letters.resize(mu.length());
    return out;
}

namespace {

enum class State { Full, Empty, Partial };

struct Cover {
    State state = State::Empty;
    std::vector<Path> pos, neg;
};

// How the union of `members` (all comparable with node) meets Z(node).
Cover cover(const GraphOfGroups& g, const Path& node, const std::vector<Path>& members) {
    Cover out;
    for (const Path& m : members)
        if (is_prefix(m, node)) {
            out.state = State::Full;
            return out;
        }
    if (members.empty()) return out;
    out.state = State::Partial;
    bool all_full = true;
    for (Path& c : children(g, node)) {
        std::vector<Path> sub;
        for (const Path& m : members)
            if (is_prefix(c, m)) sub.push_back(m);
        Cover r = cover(g, c, sub);
        switch (r.state) {
            case State::Full:
                out.pos.push_back(std::move(c));
                break;
            case State::Empty:
                all_full = false;
                out.neg.push_back(std::move(c));
                break;
            case State::Partial:
                all_full = false;
                out.pos.insert(out.pos.end(), r.pos.begin(), r.pos.end());
                out.neg.insert(out.neg.end(), r.neg.begin(), r.neg.end());
                break;
        }
    }
    if (all_full) {
        out.state = State::Full;
        out.pos.clear();
        out.neg.clear();
    }
    return out;
}

}  // namespace

CylinderSet cylinder_union(const GraphOfGroups& g, VertexId fiber, std::vector<Path> paths) {
    for (const Path& p : paths) {
        if (p.range != fiber) throw WordError("cylinder " + format_path(g, p) + " is not in the fiber at '" + g.vertex_label(fiber) + "'");
        if (!is_reduced_path(g, p)) throw WordError("cylinder base " + format_path(g, p) + " is not a reduced path");
    }
    CylinderSet s;
    s.fiber = fiber;
    Cover c = cover(g, Path{fiber, {}}, paths);
    switch (c.state) {
        case State::Full:
            s.complemented = true;
            break;
        case State::Empty:
            break;
        case State::Partial:
            std::sort(c.pos.begin(), c.pos.end());
            std::sort(c.neg.begin(), c.neg.end());
            if (c.neg.size() < c.pos.size()) {
                s.complemented = true;
                s.members = std::move(c.neg);
            } else {
                s.members = std::move(c.pos);
            }
            break;
    }
    return s;
}

CylinderSet cylinder(const GraphOfGroups& g, const Path& p) { return cylinder_union(g, p.range, {p}); }

CylinderSet whole_fiber(const GraphOfGroups& g, VertexId x) { return cylinder(g, Path{x, {}}); }

std::vector<Path> positive_members(const GraphOfGroups& g, const CylinderSet& s) {
    if (!s.complemented) return s.members;
    Cover c = cover(g, Path{s.fiber, {}}, s.members);
    switch (c.state) {
        case State::Full:
            return {};
        case State::Empty:
            return {Path{s.fiber, {}}};
        case State::Partial:
            break;
    }
    std::sort(c.neg.begin(), c.neg.end());
    return c.neg;
}

CylinderSet complement(const GraphOfGroups& g, const CylinderSet& s) {
    CylinderSet flipped = s;
    flipped.complemented = !s.complemented;
    return cylinder_union(g, s.fiber, positive_members(g, flipped));
}

bool contains_cylinder(const CylinderSet& s, const Path& p) {
    bool inside = false;
    for (const Path& m : s.members)
        if (is_prefix(m, p)) {
            inside = true;
            break;
        }
    return inside != s.complemented;
}

std::vector<Path> refine(const GraphOfGroups& g, const CylinderSet& s, std::size_t depth) {
    for (const Path& m : s.members)
        if (m.length() > depth) throw WordError("refinement depth is below the depth of the set");
    std::vector<Path> out;
    for (Path& p : enumerate_paths(g, s.fiber, depth))
        if (contains_cylinder(s, p)) out.push_back(std::move(p));
    return out;
}

std::string format_cylinder_set(const GraphOfGroups& g, const CylinderSet& s) {
    std::string body;
    for (const Path& m : s.members) {
        if (!body.empty()) body += " | ";
        body += "Z(" + format_path(g, m) + ")";
    }
    if (s.members.empty()) body = s.complemented ? "" : "{}";
    if (!s.complemented) return body;
    if (s.members.empty()) return "fiber(" + g.vertex_label(s.fiber) + ")";
    return "fiber(" + g.vertex_label(s.fiber) + ") minus " + body;
}

CylinderSet act_on_cylinder(const GraphOfGroups& g, const Word& gamma, const Path& mu) {
    const Word gm = reduce(g, gamma);
    if (word_source(g, gm) != mu.range) throw WordError("element and cylinder do not share a vertex");
    std::vector<Path> out;
    std::deque<Path> work{mu};
    while (!work.empty()) {
        Path rho = std::move(work.front());
        work.pop_front();
        Reduction r = reduce_counted(g, juxtapose(g, gm, as_word(g, rho)));
        if (r.cancellations < rho.length()) {
            out.push_back(truncate(r.word));
        } else {
            for (Path& c : children(g, rho)) work.push_back(std::move(c));
        }
    }
    return cylinder_union(g, gm.range, std::move(out));
}

CylinderSet act_on_set(const GraphOfGroups& g, const Word& gamma, const CylinderSet& s) {
    std::vector<Path> out;
    for (const Path& p : positive_members(g, s)) {
        CylinderSet part = act_on_cylinder(g, gamma, p);
        for (Path& q : positive_members(g, part)) out.push_back(std::move(q));
    }
    return cylinder_union(g, gamma.range, std::move(out));
}

Generator edge_generator(const GraphOfGroups& g, const SpanningTree& t, EdgeId e) {
    Generator gen;
    gen.kind = Generator::Kind::Edge;
    gen.e = e;
    gen.word = epsilon_edge(g, t, e);
    gen.label = "eps(" + g.edge_label(e) + ")";
    return gen;
}

Generator group_generator(const GraphOfGroups& g, const SpanningTree& t, VertexId x, const AbElement& h) {
    Generator gen;
    gen.kind = Generator::Kind::Group;
    gen.x = x;
    gen.g = h;
    gen.word = epsilon_group(g, t, x, h);
    gen.label = "eps(" + g.vertex_label(x) + "," + format_element(h) + ")";
    return gen;
}

std::vector<Generator> epsilon_generators(const GraphOfGroups& g, const SpanningTree& t) {
    std::vector<Generator> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e)
        if (!t.in_tree[e]) out.push_back(edge_generator(g, t, e));
    for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
        const FgAbelianGroup& grp = g.vertex_group(x);
        for (const AbElement& u : grp.generators()) {
            out.push_back(group_generator(g, t, x, u));
            AbElement minus = grp.neg(u);
            if (minus != u) out.push_back(group_generator(g, t, x, minus));
        }
    }
    return out;
}

namespace {

Path tree_path_to(const GraphOfGroups& g, const SpanningTree& t, VertexId x) {
    return path_from_edges(g, t.base, tree_path(t, t.base, x));
}

Word with_edges(const GraphOfGroups& g, const Path& p, const AbElement& h, const std::vector<EdgeId>& edges) {
    Word w = as_word(g, p);
    Word rest = word_from_edges(g, path_source(g, p), edges);
    w.tail = h;
    return juxtapose(g, w, rest);
}

// Letters of p from position `from` on, as a path at `range`.
Path suffix(const Path& p, std::size_t from, VertexId range) {
    Path out{range, {}};
    out.letters.assign(p.letters.begin() + static_cast<std::ptrdiff_t>(from), p.letters.end());
    return out;
}

}  // namespace

std::optional<ClosedForm> closed_form(const GraphOfGroups& g, const SpanningTree& t, const Generator& gen, const Path& mu) {
    const VertexId v = t.base;
    if (mu.range != v) return std::nullopt;
    if (gen.kind == Generator::Kind::Group) {
        const VertexId x = gen.x;
        const Path px = tree_path_to(g, t, x);
        if (!is_prefix(px, mu)) return std::nullopt;
        if (mu.length() > px.length()) {
            const Path rest = suffix(mu, px.length(), x);
            Word w = as_word(g, px);
            w.tail = gen.g;
            Reduction r = reduce_counted(g, juxtapose(g, w, as_word(g, rest)));
            if (r.cancellations >= rest.length()) return std::nullopt;
            return ClosedForm{1, cylinder(g, truncate(r.word))};
        }
        if (x == v) return ClosedForm{2, whole_fiber(g, v)};
        const EdgeId f = GraphOfGroups::bar(px.letters.back().e);
        if (g.alpha(f).in_image(gen.g)) return ClosedForm{2, cylinder(g, px)};
        Path head = truncate(reduce(g, with_edges(g, px, gen.g, {f})));
        return ClosedForm{2, complement(g, cylinder(g, head))};
    }

    const EdgeId e = gen.e;
    const EdgeId eb = GraphOfGroups::bar(e);
    const bool in_tree = t.in_tree[e];
    const Path ps = tree_path_to(g, t, g.source(e));
    const Path pr = tree_path_to(g, t, g.range(e));
    const Path p4 = truncate(reduce(g, with_edges(g, ps, g.vertex_group(g.source(e)).identity(), {eb})));
    if (mu == p4) {
        if (in_tree) return ClosedForm{4, cylinder(g, mu)};
        Path head = truncate(reduce(g, with_edges(g, pr, g.vertex_group(g.range(e)).identity(), {e})));
        return ClosedForm{4, complement(g, cylinder(g, head))};
    }
    if (mu == ps) {
        if (in_tree || g.source(e) == v) return ClosedForm{5, cylinder(g, mu)};
        const EdgeId f = GraphOfGroups::bar(ps.letters.back().e);
        Path head = truncate(reduce(g, with_edges(g, pr, g.vertex_group(g.range(e)).identity(), {e, f})));
        return ClosedForm{5, complement(g, cylinder(g, head))};
    }
    if (is_prefix(ps, mu) && mu.length() > ps.length()) {
        const Path rest = suffix(mu, ps.length(), g.source(e));
        Word w = with_edges(g, pr, g.vertex_group(g.range(e)).identity(), {e});
        Reduction r = reduce_counted(g, juxtapose(g, w, as_word(g, rest)));
        if (r.cancellations >= rest.length()) return std::nullopt;
        return ClosedForm{3, cylinder(g, truncate(r.word))};
    }
    return std::nullopt;
}

std::vector<Word> ball(const GraphOfGroups& g, const std::vector<Generator>& gens, std::size_t radius) {
    if (gens.empty() && radius > 0) return {identity_word(g, g.base())};
    const VertexId v = gens.empty() ? g.base() : gens.front().word.range;
    std::set<Word, decltype(&word_less)> seen(&word_less);
    std::vector<Word> out{identity_word(g, v)};
    seen.insert(out.front());
    std::size_t begin = 0;
    for (std::size_t r = 0; r < radius; ++r) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const Generator& gen : gens) {
                Word w = concat(g, out[i], gen.word);
                if (seen.insert(w).second) out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

std::vector<Word> isotropy_candidates(const GraphOfGroups& g, const SpanningTree& t, const Path& prefix,
                                      std::size_t wordlen, std::size_t depth) {
    std::vector<Path> pieces{prefix};
    for (std::size_t d = prefix.length(); d < depth; ++d) {
        std::vector<Path> next;
        for (const Path& p : pieces)
            for (Path& c : children(g, p)) next.push_back(std::move(c));
        pieces = std::move(next);
    }
    std::vector<Word> out;
    for (const Word& gamma : ball(g, epsilon_generators(g, t), wordlen)) {
        bool fixes = true;
        for (const Path& rho : pieces)
            if (!(act_on_cylinder(g, gamma, rho) == cylinder(g, rho))) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(gamma);
    }
    return out;
}

std::string tree_dot(const GraphOfGroups& g, VertexId x, std::size_t n) {
    std::string s = "digraph bass_serre {\n";
    auto quote = [](const std::string& a) { return "\"" + a + "\""; };
    std::vector<Path> level{Path{x, {}}};
    s += "  " + quote(format_path(g, level.front())) + ";\n";
    for (std::size_t d = 0; d < n; ++d) {
        std::vector<Path> next;
        for (const Path& p : level)
            for (Path& c : children(g, p)) {
                s += "  " + quote(format_path(g, c)) + ";\n";
                s += "  " + quote(format_path(g, p)) + " -> " + quote(format_path(g, c)) + ";\n";
                next.push_back(std::move(c));
            }
        level = std::move(next);
    }
    return s + "}\n";
}

}  // namespace gogkit
