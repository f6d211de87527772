#include "commands.hpp"

#include "gogkit/bstree.hpp"
#include "gogkit/classify.hpp"
#include "gogkit/gfamily.hpp"
#include "gogkit/parse.hpp"

#include <ostream>
#include <sstream>

namespace gogtool {

using namespace gogkit;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exit_for(Truth t) {
    switch (t) {
        case Truth::True: return Ok;
        case Truth::False: return False;
        case Truth::Unknown: break;
    }
    return Unknown;
}

void need_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (opt.format == a) return;
    throw UsageError("format '" + opt.format + "' is not available for " + opt.command);
}

const GraphOfGroups& need_graph(const Document& doc, const Options& opt) {
    if (!doc.graph) throw UsageError(opt.command + " needs a graph of groups document, not a [ray] preset");
    return *doc.graph;
}

// ---- validate ----

int cmd_validate(const Document& doc, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "machine"});
    const bool machine = opt.format == "machine";
    std::vector<std::string> errors;
    if (doc.ray) {
        errors = doc.ray->problems();
    } else {
        errors = validate(*doc.graph).errors;
    }
    if (machine) out << "# gogkit-validate v1\n";
    if (doc.ray) {
        out << (machine ? "kind=ray\n" : "kind: ray\n");
        out << (machine ? "supernatural=" : "supernatural number: ") << doc.ray->supernatural_string() << "\n";
    } else {
        const GraphOfGroups& g = *doc.graph;
        if (machine) {
            out << "kind=graph\nvertices=" << g.num_vertices() << "\nedges=" << g.num_edges() / 2
                << "\nbase=" << g.vertex_label(g.base()) << "\nbetti=" << betti_number(g.graph()) << "\n";
        } else {
            out << "kind: graph of groups\n";
            out << "vertices: " << g.num_vertices() << "\n";
            out << "edges: " << g.num_edges() / 2 << " (" << g.num_edges() << " directed)\n";
            out << "base: " << g.vertex_label(g.base()) << "\n";
            out << "betti number: " << betti_number(g.graph()) << "\n";
        }
        if (errors.empty())
            for (VertexId x = 0; x < static_cast<VertexId>(g.num_vertices()); ++x) {
                if (machine)
                    out << "vertex." << g.vertex_label(x) << "=" << g.vertex_group(x).spec() << " fan_in "
                        << g.fan_in(x) << "\n";
                else
                    out << "vertex " << g.vertex_label(x) << ": " << g.vertex_group(x).spec() << ", fan-in "
                        << g.fan_in(x) << "\n";
            }
    }
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (machine)
            out << "error." << i << "=" << errors[i] << "\n";
        else
            out << "error: " << errors[i] << "\n";
    }
    out << (machine ? "valid=" : "valid: ") << (errors.empty() ? "yes" : "no") << "\n";
    return errors.empty() ? Ok : ValidationFailure;
}

// ---- tree / export-dot ----

int cmd_tree(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "machine", "dot"});
    const std::size_t depth = opt.depth.value_or(3);
    if (opt.format == "dot") {
        out << tree_dot(g, g.base(), depth);
        return Ok;
    }
    const ValenceHistogram h = tree_valences(g, g.base(), depth);
    const bool machine = opt.format == "machine";
    if (machine) out << "# gogkit-tree v1\nbase=" << g.vertex_label(g.base()) << "\ndepth=" << depth << "\n";
    for (std::size_t d = 0; d < h.size(); ++d) {
        std::size_t count = 0;
        for (const auto& [v, c] : h[d]) count += c;
        if (machine) {
            out << "level." << d << ".count=" << count << "\n";
            for (const auto& [v, c] : h[d]) out << "level." << d << ".valence." << v << "=" << c << "\n";
        } else {
            out << "depth " << d << ": " << count << " vertices, valence";
            for (const auto& [v, c] : h[d]) out << " " << v << "x" << c;
            out << "\n";
        }
    }
    return Ok;
}

int cmd_export_dot(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "dot"});
    out << tree_dot(g, g.base(), opt.depth.value_or(3));
    return Ok;
}

// ---- act ----

int cmd_act(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "machine"});
    if (opt.element.empty()) throw UsageError("act needs --element");
    const Word gamma = reduce(g, parse_word(g, opt.element));
    Path mu;
    if (opt.cylinder.empty()) {
        mu.range = word_source(g, gamma);
    } else {
        mu = parse_path(g, opt.cylinder);
    }
    if (mu.range != word_source(g, gamma))
        throw UsageError("the cylinder must start at the source of the element (" +
                         g.vertex_label(word_source(g, gamma)) + ")");
    const CylinderSet image = act_on_cylinder(g, gamma, mu);
    const std::vector<Path> pieces = positive_members(g, image);
    if (opt.format == "machine") {
        out << "# gogkit-act v1\nelement=" << format_word(g, gamma) << "\ncylinder=" << format_path(g, mu)
            << "\nimage=" << format_cylinder_set(g, image) << "\n";
        for (std::size_t i = 0; i < pieces.size(); ++i) out << "piece." << i << "=" << format_path(g, pieces[i]) << "\n";
    } else {
        out << "element (reduced): " << format_word(g, gamma) << "\n";
        out << "cylinder: Z(" << format_path(g, mu) << ")\n";
        out << "image: " << format_cylinder_set(g, image) << "\n";
        for (const Path& p : pieces) out << "  Z(" << format_path(g, p) << ")\n";
    }
    if (opt.depth) {
        for (const Path& rho : enumerate_paths(g, mu.range, *opt.depth)) {
            if (!is_prefix(mu, rho)) continue;
            const CylinderSet img = act_on_cylinder(g, gamma, rho);
            if (opt.format == "machine")
                out << "refined." << format_path(g, rho) << "=" << format_cylinder_set(g, img) << "\n";
            else
                out << "Z(" << format_path(g, rho) << ") -> " << format_cylinder_set(g, img) << "\n";
        }
    }
    return Ok;
}

// ---- analyze ----

struct Analysis {
    Verdict minimal, lc, tf, eff;
    std::string trichotomy;
};

template <class In>
Analysis analyse(const In& in) {
    Analysis a{is_minimal(in), is_locally_contractive(in), is_topologically_free(in), is_effective(in), "n/a"};
    if (a.minimal.is_true()) {
        try {
            a.trichotomy = to_string(classify_min_lc_trichotomy(in));
        } catch (const DynamicsError&) {
            a.trichotomy = "unknown";
        }
    }
    return a;
}

int cmd_analyze(const Document& doc, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "machine"});
    const Analysis a = doc.graph ? analyse(*doc.graph) : analyse(*doc.ray);
    const std::pair<const char*, const Verdict*> rows[] = {
        {"minimal", &a.minimal},
        {"locally_contractive", &a.lc},
        {"topologically_free", &a.tf},
        {"effective", &a.eff},
    };
    const bool machine = opt.format == "machine";
    if (machine) out << "# gogkit-analysis v1\n";
    for (const auto& [name, v] : rows) {
        if (machine) {
            out << name << "=" << to_string(v->value) << "\n" << name << ".clause=" << v->clause << "\n";
            if (!v->witness.empty()) out << name << ".witness=" << v->witness << "\n";
        } else {
            out << name << ": " << v->render() << "\n";
            for (const std::string& e : v->evidence) out << "  evidence: " << e << "\n";
        }
    }
    out << (machine ? "trichotomy=" : "trichotomy: ") << a.trichotomy << "\n";
    if (opt.orbit) {
        const GraphOfGroups& g = need_graph(doc, opt);
        const OrbitCheck oc = orbit_check_minimal(g, opt.depth.value_or(2), opt.wordlen);
        if (machine)
            out << "orbit_check=" << (oc.ok ? "minimal" : "not_minimal") << "\norbit_check.words=" << oc.words
                << "\norbit_check.checks=" << oc.checks << "\n";
        else
            out << "orbit check: " << (oc.ok ? "every cylinder meets every other" : oc.detail) << " (" << oc.words
                << " words, " << oc.checks << " checks)\n";
    }
    if (opt.property.empty()) return Ok;
    for (const auto& [name, v] : rows) {
        std::string dashed = name;
        for (char& c : dashed)
            if (c == '_') c = '-';
        if (opt.property == name || opt.property == dashed) return exit_for(v->value);
    }
    throw UsageError("unknown property '" + opt.property + "'");
}

// ---- classify ----

int cmd_classify(const Document& doc, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "machine"});
    const Classification c = doc.graph ? classify(*doc.graph) : classify(*doc.ray);
    out << (opt.format == "machine" ? render_machine(c) : render_text(c));
    return exit_for(c.simple.value);
}

// ---- gfamily-verify ----

void report_block(std::ostream& out, const std::string& prefix, const RelationReport& r, bool machine) {
    if (!machine) {
        out << r.render();
        return;
    }
    out << prefix << ".dim=" << r.dim << "\n" << prefix << ".interior=" << r.interior_dim << "\n";
    for (const auto& c : r.checks)
        out << prefix << "." << c.name << "=" << (c.result.holds() ? "ok" : "fail") << " interior "
            << c.result.interior << " defect " << c.result.defect << "\n";
}

int cmd_gfamily(const GraphOfGroups& g, const Options& opt, std::ostream& out) {
    need_format(opt, {"text", "machine"});
    const bool machine = opt.format == "machine";
    BoundaryPoint xi;
    try {
        xi = opt.xi.empty() ? default_tail(g) : parse_point(g, opt.xi);
    } catch (const GFamilyError& ex) {
        if (opt.xi.empty()) throw;
        throw UsageError(std::string("--xi: ") + ex.what());
    }
    const TruncatedRep rep(g, xi, opt.depth.value_or(4));
    const EGraph eg = build_EG(g);
    const RelationReport rel = verify_relations(rep);
    const RelationReport ck = verify_ck(rep);
    const std::vector<SymbolicCheck> sym = verify_ck_symbolic(g);

    if (machine) {
        out << "# gogkit-gfamily v1\nxi=" << format_point(g, rep.xi()) << "\ndepth=" << rep.depth()
            << "\nbasis=" << rep.dim() << "\ngenerator_interior=" << rep.interior_dim() << "\neg.vertices="
            << eg.vertices.size() << "\neg.edges=" << eg.edges.size() << "\neg.no_sources="
            << (eg.no_sources() ? "yes" : "no") << "\n";
    } else {
        out << "xi: " << format_point(g, rep.xi()) << "\n";
        out << "depth: " << rep.depth() << "\n";
        out << "basis: " << rep.dim() << " points, " << rep.interior_dim() << " interior for all generators\n";
        out << "E_G: " << eg.vertices.size() << " vertices, " << eg.edges.size() << " edges, "
            << (eg.no_sources() ? "no sources" : "has sources") << "\n";
        out << "-- G-family relations --\n";
    }
    report_block(out, "relations", rel, machine);
    if (!machine) out << "-- Cuntz-Krieger relations (matrix) --\n";
    report_block(out, "ck", ck, machine);
    if (!machine) out << "-- Cuntz-Krieger relations (symbolic) --\n";
    bool sym_ok = true;
    for (const SymbolicCheck& s : sym) {
        sym_ok = sym_ok && s.holds;
        if (machine)
            out << "symbolic." << s.name << "=" << (s.holds ? "ok" : "fail") << "\n";
        else
            out << (s.holds ? "ok   " : "FAIL ") << s.name << "\n";
    }
    return rel.all_hold() && ck.all_hold() && sym_ok ? Ok : False;
}

}  // namespace

int run(const Options& opt, std::ostream& out, std::ostream& err) {
    Document doc;
    try {
        doc = load_document(opt.file);
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return ParseFailure;
    }
    try {
        if (opt.command == "validate") return cmd_validate(doc, opt, out);

        std::vector<std::string> problems = doc.ray ? doc.ray->problems() : validate(*doc.graph).errors;
        if (!problems.empty()) {
            for (const std::string& p : problems) err << "validation error: " << p << "\n";
            return ValidationFailure;
        }
        if (opt.command == "analyze") return cmd_analyze(doc, opt, out);
        if (opt.command == "classify") return cmd_classify(doc, opt, out);
        const GraphOfGroups& g = need_graph(doc, opt);
        if (opt.command == "tree") return cmd_tree(g, opt, out);
        if (opt.command == "export-dot") return cmd_export_dot(g, opt, out);
        if (opt.command == "act") return cmd_act(g, opt, out);
        if (opt.command == "gfamily-verify") return cmd_gfamily(g, opt, out);
        throw UsageError("unknown command '" + opt.command + "'");
    } catch (const ParseError& ex) {
        err << "parse error: " << ex.what() << "\n";
        return ParseFailure;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return ParseFailure;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return Unknown;
    }
}

}  // namespace gogtool
