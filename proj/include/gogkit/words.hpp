#pragma once

#include "gogkit/graph.hpp"

#include <string>
#include <vector>

namespace gogkit {

struct WordError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One "g e" step; g lives in G_{r(e)}.
struct Letter {
    AbElement g;
    EdgeId e = 0;

    bool operator==(const Letter& o) const { return e == o.e && g == o.g; }
    bool operator<(const Letter& o) const { return e != o.e ? e < o.e : g < o.g; }
};

// g_1 e_1 ... g_n e_n g_{n+1}. With no letters, range is the vertex carrying tail.
struct Word {
    VertexId range = 0;
    std::vector<Letter> letters;
    AbElement tail;

    std::size_t length() const { return letters.size(); }
    bool operator==(const Word& o) const { return range == o.range && letters == o.letters && tail == o.tail; }
};

// A word without its trailing element; labels a vertex of the Bass-Serre tree.
struct Path {
    VertexId range = 0;
    std::vector<Letter> letters;

    std::size_t length() const { return letters.size(); }
    bool operator==(const Path& o) const { return range == o.range && letters == o.letters; }
    bool operator<(const Path& o) const {
        if (range != o.range) return range < o.range;
        return letters < o.letters;
    }
};

VertexId word_source(const GraphOfGroups& g, const Word& w);
VertexId path_source(const GraphOfGroups& g, const Path& p);

Word identity_word(const GraphOfGroups& g, VertexId x);
bool is_identity(const GraphOfGroups& g, const Word& w);
// Edges with identity elements throughout; `edges` must be composable.
Word word_from_edges(const GraphOfGroups& g, VertexId range, const std::vector<EdgeId>& edges);
Path path_from_edges(const GraphOfGroups& g, VertexId range, const std::vector<EdgeId>& edges);
Word as_word(const GraphOfGroups& g, const Path& p);
Path truncate(const Word& w);
bool is_prefix(const Path& p, const Path& q);

// Throws WordError when letters are not composable or elements sit in the wrong group.
void check_word(const GraphOfGroups& g, const Word& w);

bool is_reduced(const GraphOfGroups& g, const Word& w);
bool is_reduced_path(const GraphOfGroups& g, const Path& p);

struct Reduction {
    Word word;
    std::size_t cancellations = 0;
};

Reduction reduce_counted(const GraphOfGroups& g, const Word& w);
Word reduce(const GraphOfGroups& g, const Word& w);
// Raw juxtaposition; tail of a is merged with the leading element of b.
Word juxtapose(const GraphOfGroups& g, const Word& a, const Word& b);
Word concat(const GraphOfGroups& g, const Word& a, const Word& b);
Word invert(const GraphOfGroups& g, const Word& w);

Word epsilon_edge(const GraphOfGroups& g, const SpanningTree& t, EdgeId e);
Word epsilon_group(const GraphOfGroups& g, const SpanningTree& t, VertexId x, const AbElement& h);

// Product of omega_{ebar} / omega_e over the edges of w; GBS only.
Rational q_ratio(const GraphOfGroups& g, const Word& w);

std::string format_element_in(const FgAbelianGroup& grp, const AbElement& a);
std::string format_word(const GraphOfGroups& g, const Word& w);
std::string format_path(const GraphOfGroups& g, const Path& p);

}  // namespace gogkit
