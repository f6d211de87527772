#pragma once

// Independent normal form oracle: apply the two rewrite moves of the path
// group in every possible order and collect all irreducible results.
//   push:   g e  ->  t e alpha_ebar(h)   when g = t + alpha_e(h), t != g
//   cancel: e alpha_ebar(h) ebar  ->  alpha_e(h)

#include "gogkit/words.hpp"

#include <set>
#include <vector>

namespace testsupport {

struct RawWord {
    gogkit::VertexId range = 0;
    std::vector<gogkit::AbElement> el;  // el[i] sits before edge i; el.back() is the tail
    std::vector<gogkit::EdgeId> ed;

    bool operator<(const RawWord& o) const {
        if (range != o.range) return range < o.range;
        if (ed != o.ed) return ed < o.ed;
        return el < o.el;
    }
};

inline RawWord to_raw(const gogkit::Word& w) {
    RawWord r;
    r.range = w.range;
    for (const auto& l : w.letters) {
        r.el.push_back(l.g);
        r.ed.push_back(l.e);
    }
    r.el.push_back(w.tail);
    return r;
}

inline gogkit::Word from_raw(const RawWord& r) {
    gogkit::Word w;
    w.range = r.range;
    for (std::size_t i = 0; i < r.ed.size(); ++i) w.letters.push_back(gogkit::Letter{r.el[i], r.ed[i]});
    w.tail = r.el.back();
    return w;
}

inline std::vector<RawWord> rewrite_moves(const gogkit::GraphOfGroups& g, const RawWord& w) {
    using gogkit::GraphOfGroups;
    std::vector<RawWord> out;
    for (std::size_t i = 0; i < w.ed.size(); ++i) {
        const gogkit::EdgeId e = w.ed[i];
        auto [t, h] = g.alpha(e).decompose(w.el[i]);
        if (t != w.el[i]) {
            RawWord n = w;
            n.el[i] = t;
            const auto& next = g.vertex_group(g.source(e));
            n.el[i + 1] = next.add(g.alpha(GraphOfGroups::bar(e)).apply(h), w.el[i + 1]);
            out.push_back(std::move(n));
        }
        if (i + 1 < w.ed.size() && w.ed[i + 1] == GraphOfGroups::bar(e)) {
            const auto& mid = g.alpha(GraphOfGroups::bar(e));
            auto [r, k] = mid.decompose(w.el[i + 1]);
            if (mid.target().is_identity(r)) {
                RawWord n;
                n.range = w.range;
                const auto& here = g.vertex_group(g.range(e));
                for (std::size_t j = 0; j < i; ++j) {
                    n.el.push_back(w.el[j]);
                    n.ed.push_back(w.ed[j]);
                }
                n.el.push_back(here.add(here.add(w.el[i], g.alpha(e).apply(k)), w.el[i + 2]));
                for (std::size_t j = i + 2; j < w.ed.size(); ++j) {
                    n.ed.push_back(w.ed[j]);
                    n.el.push_back(w.el[j + 1]);
                }
                out.push_back(std::move(n));
            }
        }
    }
    return out;
}

inline std::vector<gogkit::Word> rewrite_terminals(const gogkit::GraphOfGroups& g, const gogkit::Word& w) {
    std::set<RawWord> seen, terminal;
    std::vector<RawWord> stack{to_raw(w)};
    while (!stack.empty()) {
        RawWord cur = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        auto next = rewrite_moves(g, cur);
        if (next.empty()) terminal.insert(cur);
        for (auto& n : next) stack.push_back(std::move(n));
    }
    std::vector<gogkit::Word> out;
    for (const RawWord& r : terminal) out.push_back(from_raw(r));
    return out;
}

}  // namespace testsupport
