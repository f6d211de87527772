#include "gogkit/words.hpp"

namespace gogkit {

VertexId word_source(const GraphOfGroups& g, const Word& w) {
    return w.letters.empty() ? w.range : g.source(w.letters.back().e);
}

VertexId path_source(const GraphOfGroups& g, const Path& p) {
    return p.letters.empty() ? p.range : g.source(p.letters.back().e);
}

Word identity_word(const GraphOfGroups& g, VertexId x) {
    return Word{x, {}, g.vertex_group(x).identity()};
}

bool is_identity(const GraphOfGroups& g, const Word& w) {
    return w.letters.empty() && g.vertex_group(w.range).is_identity(w.tail);
}

Word word_from_edges(const GraphOfGroups& g, VertexId range, const std::vector<EdgeId>& edges) {
    Word w{range, {}, {}};
    for (EdgeId e : edges) w.letters.push_back(Letter{g.vertex_group(g.range(e)).identity(), e});
    w.tail = g.vertex_group(word_source(g, w)).identity();
    check_word(g, w);
    return w;
}

Path path_from_edges(const GraphOfGroups& g, VertexId range, const std::vector<EdgeId>& edges) {
    return truncate(word_from_edges(g, range, edges));
}

Word as_word(const GraphOfGroups& g, const Path& p) {
    return Word{p.range, p.letters, g.vertex_group(path_source(g, p)).identity()};
}

Path truncate(const Word& w) { return Path{w.range, w.letters}; }

bool is_prefix(const Path& p, const Path& q) {
    if (p.range != q.range || p.letters.size() > q.letters.size()) return false;
    return std::equal(p.letters.begin(), p.letters.end(), q.letters.begin());
}

void check_word(const GraphOfGroups& g, const Word& w) {
    if (w.range < 0 || w.range >= static_cast<VertexId>(g.num_vertices())) throw WordError("word range is not a vertex");
    VertexId at = w.range;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const Letter& l = w.letters[i];
        if (l.e < 0 || l.e >= static_cast<EdgeId>(g.num_edges())) throw WordError("unknown edge in word");
        if (g.range(l.e) != at)
            throw WordError("letters are not composable at position " + std::to_string(i + 1) + " (edge '" +
                            g.edge_label(l.e) + "')");
        if (!g.vertex_group(at).contains(l.g))
            throw WordError("element " + format_element(l.g) + " is not in the group at '" + g.vertex_label(at) + "'");
        at = g.source(l.e);
    }
    if (!g.vertex_group(at).contains(w.tail))
        throw WordError("trailing element " + format_element(w.tail) + " is not in the group at '" + g.vertex_label(at) + "'");
}

bool is_reduced(const GraphOfGroups& g, const Word& w) { return is_reduced_path(g, truncate(w)); }

bool is_reduced_path(const GraphOfGroups& g, const Path& p) {
    for (std::size_t i = 0; i < p.letters.size(); ++i) {
        const Letter& l = p.letters[i];
        if (g.alpha(l.e).residue(l.g) != l.g) return false;
        if (i > 0 && p.letters[i - 1].e == GraphOfGroups::bar(l.e) && g.vertex_group(g.range(l.e)).is_identity(l.g))
            return false;
    }
    return true;
}

Reduction reduce_counted(const GraphOfGroups& g, const Word& w) {
    check_word(g, w);
    Reduction out;
    std::vector<Letter>& stack = out.word.letters;
    out.word.range = w.range;
    AbElement carry = w.letters.empty() ? w.tail : w.letters.front().g;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const EdgeId e = w.letters[i].e;
        const EdgeId eb = GraphOfGroups::bar(e);
        const AbElement& next = (i + 1 < w.letters.size()) ? w.letters[i + 1].g : w.tail;
        auto [t, h] = g.alpha(e).decompose(carry);
        const FgAbelianGroup& at_source = g.vertex_group(g.source(e));
        if (g.vertex_group(g.range(e)).is_identity(t) && !stack.empty() && stack.back().e == eb) {
            // t_prev ebar alpha_e(h) e = t_prev alpha_ebar(h)
            carry = at_source.add(at_source.add(stack.back().g, g.alpha(eb).apply(h)), next);
            stack.pop_back();
            ++out.cancellations;
        } else {
            stack.push_back(Letter{std::move(t), e});
            carry = at_source.add(g.alpha(eb).apply(h), next);
        }
    }
    out.word.tail = std::move(carry);
    return out;
}

Word reduce(const GraphOfGroups& g, const Word& w) { return reduce_counted(g, w).word; }

Word juxtapose(const GraphOfGroups& g, const Word& a, const Word& b) {
    if (word_source(g, a) != b.range)
        throw WordError("cannot concatenate: source '" + g.vertex_label(word_source(g, a)) + "' differs from range '" +
                        g.vertex_label(b.range) + "'");
    Word w = a;
    const FgAbelianGroup& mid = g.vertex_group(b.range);
    if (b.letters.empty()) {
        w.tail = mid.add(w.tail, b.tail);
        return w;
    }
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        Letter l = b.letters[i];
        if (i == 0) l.g = mid.add(a.tail, l.g);
        w.letters.push_back(std::move(l));
    }
    w.tail = b.tail;
    return w;
}

Word concat(const GraphOfGroups& g, const Word& a, const Word& b) { return reduce(g, juxtapose(g, a, b)); }

Word invert(const GraphOfGroups& g, const Word& w) {
    check_word(g, w);
    Word out;
    out.range = word_source(g, w);
    const std::size_t n = w.letters.size();
    if (n == 0) {
        out.tail = g.vertex_group(w.range).neg(w.tail);
        return out;
    }
    // g_{n+1}^{-1} ebar_n g_n^{-1} ... ebar_1 g_1^{-1}
    for (std::size_t k = n; k-- > 0;) {
        const EdgeId e = w.letters[k].e;
        const AbElement& before = (k + 1 < n) ? w.letters[k + 1].g : w.tail;
        out.letters.push_back(Letter{g.vertex_group(g.source(e)).neg(before), GraphOfGroups::bar(e)});
    }
    out.tail = g.vertex_group(w.range).neg(w.letters.front().g);
    return reduce(g, out);
}

Word epsilon_edge(const GraphOfGroups& g, const SpanningTree& t, EdgeId e) {
    const VertexId v = t.base;
    std::vector<EdgeId> edges = tree_path(t, v, g.range(e));
    edges.push_back(e);
    for (EdgeId f : tree_path(t, g.source(e), v)) edges.push_back(f);
    return reduce(g, word_from_edges(g, v, edges));
}

Word epsilon_group(const GraphOfGroups& g, const SpanningTree& t, VertexId x, const AbElement& h) {
    const VertexId v = t.base;
    if (!g.vertex_group(x).contains(h)) throw WordError("element " + format_element(h) + " is not in the group at '" + g.vertex_label(x) + "'");
    Word a = word_from_edges(g, v, tree_path(t, v, x));
    a.tail = h;
    return concat(g, a, word_from_edges(g, x, tree_path(t, x, v)));
}

Rational q_ratio(const GraphOfGroups& g, const Word& w) {
    if (!g.is_gbs()) throw WordError("q is only defined for GBS graphs of groups");
    Rational q = 1;
    for (const Letter& l : w.letters) q *= Rational(g.omega(GraphOfGroups::bar(l.e))) / Rational(g.omega(l.e));
    return q;
}

std::string format_element_in(const FgAbelianGroup& grp, const AbElement& a) {
    if (grp.dim() == 0) return "";
    return format_element(a);
}

namespace {

void append(std::string& s, const std::string& piece) {
    if (piece.empty()) return;
    if (!s.empty()) s += ' ';
    s += piece;
}

std::string format_letters(const GraphOfGroups& g, const std::vector<Letter>& letters) {
    std::string s;
    for (const Letter& l : letters) {
        append(s, format_element_in(g.vertex_group(g.range(l.e)), l.g));
        append(s, g.edge_label(l.e));
    }
    return s;
}

}  // namespace

std::string format_word(const GraphOfGroups& g, const Word& w) {
    std::string s = format_letters(g, w.letters);
    const FgAbelianGroup& last = g.vertex_group(word_source(g, w));
    if (w.letters.empty()) {
        s = "@" + g.vertex_label(w.range);
        append(s, format_element_in(last, w.tail));
    } else if (!last.is_identity(w.tail)) {
        append(s, format_element_in(last, w.tail));
    }
    return s;
}

std::string format_path(const GraphOfGroups& g, const Path& p) {
    if (p.letters.empty()) return "@" + g.vertex_label(p.range);
    return format_letters(g, p.letters);
}

}  // namespace gogkit
