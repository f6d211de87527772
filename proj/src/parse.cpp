#include "gogkit/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gogkit {

namespace {

std::string strip(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string remove_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

bool is_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

Int parse_int(const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return Int(s[0] == '+' ? s.substr(1) : s);
}

// Splits on commas that are not nested in brackets.
std::vector<std::string> split_top(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    if (strip(s).empty()) return out;
    for (const std::string& part : split_top(s)) out.push_back(parse_int(part));
    return out;
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
    const std::string s = remove_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty matrix");
    if (s[0] != '[') return IntMatrix{{parse_int(s)}};
    if (s == "[]" || s == "[[]]") return {};
    if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]")
        throw std::invalid_argument("matrix must look like [[a,b],[c,d]]");
    IntMatrix m;
    std::string body = s.substr(1, s.size() - 2);
    for (const std::string& row : split_top(body)) {
        if (row.size() < 2 || row.front() != '[' || row.back() != ']') throw std::invalid_argument("bad matrix row '" + row + "'");
        m.push_back(parse_int_list(row.substr(1, row.size() - 2)));
        if (m.back().size() != m.front().size()) throw std::invalid_argument("matrix rows have different lengths");
    }
    return m;
}

namespace {

struct EdgeLine {
    int line;
    std::string name, range, source;
    std::optional<IntMatrix> ae, aeb;
    std::optional<FgAbelianGroup> group;
};

}  // namespace

Document parse_document(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw, section;
    int lineno = 0;
    std::vector<std::pair<std::string, FgAbelianGroup>> vertices;
    std::vector<int> vertex_lines;
    std::vector<EdgeLine> edges;
    std::optional<std::string> base;
    int base_line = 0;
    std::optional<RaySpec> ray;
    bool seen_ray = false;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[' && line.find(']') != std::string::npos && (line.size() < 2 || line[1] != '[')) {
            const std::size_t close = line.find(']');
            section = strip(line.substr(1, close - 1));
            std::string rest = strip(line.substr(close + 1));
            if (section != "vertices" && section != "edges" && section != "base" && section != "ray")
                throw ParseError(lineno, "unknown section [" + section + "]");
            if (section == "ray") seen_ray = true;
            if (rest.empty()) continue;
            line = rest;
        }
        try {
            if (section == "vertices") {
                const std::size_t eq = line.find('=');
                if (eq == std::string::npos) throw ParseError(lineno, "expected 'name = group'");
                std::string name = strip(line.substr(0, eq));
                if (!is_name(name)) throw ParseError(lineno, "bad vertex name '" + name + "'");
                vertices.emplace_back(name, FgAbelianGroup::parse(line.substr(eq + 1)));
                vertex_lines.push_back(lineno);
            } else if (section == "edges") {
                const std::size_t colon = line.find(':');
                if (colon == std::string::npos) throw ParseError(lineno, "expected 'name: range, source, ...'");
                EdgeLine el;
                el.line = lineno;
                el.name = strip(line.substr(0, colon));
                if (!is_name(el.name)) throw ParseError(lineno, "bad edge name '" + el.name + "'");
                auto fields = split_top(line.substr(colon + 1));
                if (fields.size() != 2 && fields.size() != 4 && fields.size() != 5)
                    throw ParseError(lineno, "edge needs range, source and optionally both matrices and an edge group");
                el.range = fields[0];
                el.source = fields[1];
                if (fields.size() >= 4) {
                    el.ae = parse_matrix(fields[2]);
                    el.aeb = parse_matrix(fields[3]);
                }
                if (fields.size() == 5) el.group = FgAbelianGroup::parse(fields[4]);
                edges.push_back(std::move(el));
            } else if (section == "base") {
                if (base) throw ParseError(lineno, "base given twice");
                base = line;
                base_line = lineno;
            } else if (section == "ray") {
                const std::size_t eq = line.find('=');
                if (eq == std::string::npos || strip(line.substr(0, eq)) != "indices")
                    throw ParseError(lineno, "expected 'indices = prefix ; period'");
                std::string rhs = line.substr(eq + 1);
                const std::size_t semi = rhs.find(';');
                RaySpec r;
                if (semi == std::string::npos) {
                    r.period = parse_int_list(rhs);
                } else {
                    r.prefix = parse_int_list(rhs.substr(0, semi));
                    r.period = parse_int_list(rhs.substr(semi + 1));
                }
                if (ray) throw ParseError(lineno, "ray indices given twice");
                ray = std::move(r);
            } else {
                throw ParseError(lineno, "content outside of any section");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
    }

    Document doc;
    if (seen_ray) {
        if (!ray) throw ParseError(0, "[ray] section has no indices");
        if (!vertices.empty() || !edges.empty() || base)
            throw ParseError(0, "a [ray] document cannot also list vertices, edges or a base");
        auto problems = ray->problems();
        if (!problems.empty()) throw ParseError(0, problems.front());
        doc.ray = std::move(ray);
        return doc;
    }
    if (vertices.empty()) throw ParseError(0, "no [vertices] given");

    GraphOfGroups g;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        try {
            g.add_vertex(vertices[i].first, vertices[i].second);
        } catch (const std::exception& ex) {
            throw ParseError(vertex_lines[i], ex.what());
        }
    }
    for (const EdgeLine& el : edges) {
        auto r = g.graph().find_vertex(el.range);
        auto s = g.graph().find_vertex(el.source);
        if (!r) throw ParseError(el.line, "unknown vertex '" + el.range + "'");
        if (!s) throw ParseError(el.line, "unknown vertex '" + el.source + "'");
        FgAbelianGroup ge;
        IntMatrix ae, aeb;
        if (el.ae) {
            ae = *el.ae;
            aeb = *el.aeb;
            ge = el.group ? *el.group : FgAbelianGroup(ae.empty() ? 0 : ae.front().size(), {});
        }
        // A trivial edge group maps by matrices with no columns.
        if (ge.dim() == 0) {
            if (ae.empty()) ae.assign(g.vertex_group(*r).dim(), IntVec{});
            if (aeb.empty()) aeb.assign(g.vertex_group(*s).dim(), IntVec{});
        }
        try {
            g.add_edge(el.name, *r, *s, ge, ae, aeb);
        } catch (const std::exception& ex) {
            throw ParseError(el.line, ex.what());
        }
    }
    if (base) {
        auto b = g.graph().find_vertex(*base);
        if (!b) throw ParseError(base_line, "unknown base vertex '" + *base + "'");
        g.set_base(*b);
    }
    doc.graph = std::move(g);
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError(0, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_document(ss.str());
}

namespace {

struct Token {
    enum Kind { Element, Edge, Vertex } kind;
    std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            std::size_t j = text.find(')', i);
            if (j == std::string_view::npos) throw ParseError(0, "unbalanced '(' in word literal");
            out.push_back({Token::Element, remove_spaces(text.substr(i + 1, j - i - 1))});
            i = j + 1;
        } else if (c == '@') {
            std::size_t j = i + 1;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Token::Vertex, std::string(text.substr(i + 1, j - i - 1))});
            i = j;
        } else if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Element, std::string(text.substr(i, j - i))});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            if (j < text.size() && text[j] == '~') ++j;
            out.push_back({Token::Edge, std::string(text.substr(i, j - i))});
            i = j;
        } else {
            throw ParseError(0, std::string("unexpected character '") + c + "' in word literal");
        }
    }
    return out;
}

AbElement element_in(const FgAbelianGroup& grp, const std::string& coords) {
    IntVec c = parse_int_list(coords);
    if (c.size() != grp.dim())
        throw ParseError(0, "element (" + coords + ") has " + std::to_string(c.size()) + " coordinates, group " + grp.spec() +
                                " needs " + std::to_string(grp.dim()));
    return grp.canonical(std::move(c));
}

}  // namespace

Word parse_word(const GraphOfGroups& g, std::string_view text) {
    std::vector<Token> toks;
    try {
        toks = tokenize(text);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(0, ex.what());
    }
    std::optional<VertexId> at;
    std::size_t i = 0;
    if (i < toks.size() && toks[i].kind == Token::Vertex) {
        at = g.graph().find_vertex(toks[i].text);
        if (!at) throw ParseError(0, "unknown vertex '" + toks[i].text + "'");
        ++i;
    }
    // Element tokens are attached to the group at the range of the following edge,
    // or to the current source when trailing.
    std::vector<std::pair<std::optional<std::string>, EdgeId>> steps;
    std::optional<std::string> pending, trailing;
    for (; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind == Token::Vertex) throw ParseError(0, "'@' is only allowed at the start of a word");
        if (t.kind == Token::Element) {
            if (pending) throw ParseError(0, "two group elements in a row");
            pending = t.text;
        } else {
            auto e = g.graph().find_edge(t.text);
            if (!e) throw ParseError(0, "unknown edge '" + t.text + "'");
            steps.emplace_back(pending, *e);
            pending.reset();
        }
    }
    trailing = pending;
    Word w;
    if (steps.empty()) {
        if (!at) throw ParseError(0, "a word without edges needs '@vertex'");
        w.range = *at;
    } else {
        w.range = g.range(steps.front().second);
        if (at && *at != w.range) throw ParseError(0, "'@" + g.vertex_label(*at) + "' is not the range of the first edge");
    }
    try {
        VertexId cur = w.range;
        for (const auto& [el, e] : steps) {
            if (g.range(e) != cur)
                throw ParseError(0, "edge '" + g.edge_label(e) + "' does not start at '" + g.vertex_label(cur) + "'");
            const FgAbelianGroup& grp = g.vertex_group(cur);
            w.letters.push_back(Letter{el ? element_in(grp, *el) : grp.identity(), e});
            cur = g.source(e);
        }
        const FgAbelianGroup& last = g.vertex_group(cur);
        w.tail = trailing ? element_in(last, *trailing) : last.identity();
    } catch (const std::invalid_argument& ex) {
        throw ParseError(0, ex.what());
    }
    return w;
}

Path parse_path(const GraphOfGroups& g, std::string_view text) {
    Word w = parse_word(g, text);
    if (!g.vertex_group(word_source(g, w)).is_identity(w.tail))
        throw ParseError(0, "a path literal cannot end with a group element");
    Path p = truncate(w);
    if (!is_reduced_path(g, p)) throw ParseError(0, "path '" + std::string(text) + "' is not reduced");
    return p;
}

}  // namespace gogkit
