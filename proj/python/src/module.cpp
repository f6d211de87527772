#include "gogkit/classify.hpp"
#include "gogkit/gfamily.hpp"
#include "gogkit/parse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gogkit;

namespace {

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    const py::object num = py::int_(py::str(numerator(q).str()));
    const py::object den = py::int_(py::str(denominator(q).str()));
    return fraction(num, den);
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["value"] = to_string(v.value);
    d["clause"] = v.clause;
    d["witness"] = v.witness;
    return d;
}

py::dict classification_dict(const Classification& c) {
    py::dict d;
    d["input_class"] = c.input_class;
    d["minimal"] = verdict_dict(c.minimal);
    d["topologically_free"] = verdict_dict(c.topologically_free);
    d["locally_contractive"] = verdict_dict(c.locally_contractive);
    d["effective"] = verdict_dict(c.effective);
    d["simple"] = verdict_dict(c.simple);
    d["nuclear"] = verdict_dict(c.nuclear);
    d["purely_infinite"] = verdict_dict(c.purely_infinite);
    d["dichotomy"] = to_string(c.dichotomy);
    if (!c.supernatural.empty()) d["supernatural"] = c.supernatural;
    if (c.k) {
        d["k0"] = c.k->k0.spec();
        d["k1"] = c.k->k1.spec();
        d["unit_class"] = c.k->unit_class;
    }
    d["notes"] = c.notes;
    return d;
}

py::dict report_dict(const RelationReport& r) {
    py::dict d;
    d["dim"] = r.dim;
    d["interior"] = r.interior_dim;
    d["all_hold"] = r.all_hold();
    py::list checks;
    for (const RelationCheck& c : r.checks)
        checks.append(py::make_tuple(c.name, c.result.holds(), c.result.interior, to_fraction(c.result.defect)));
    d["checks"] = checks;
    return d;
}

const GraphOfGroups& require_graph(const Document& d) {
    if (!d.graph) throw std::invalid_argument("expected a graph of groups, got a [ray] preset");
    return *d.graph;
}

}  // namespace

PYBIND11_MODULE(_gogkit, m) {
    m.doc() = "Graphs of groups: word problem, Bass-Serre tree, boundary dynamics, classification";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<WordError>(m, "WordError", PyExc_ValueError);
    py::register_exception<GFamilyError>(m, "GFamilyError", PyExc_RuntimeError);

    py::class_<Document>(m, "Document")
        .def_property_readonly("is_ray", [](const Document& d) { return d.ray.has_value(); })
        .def_property_readonly("num_vertices", [](const Document& d) { return require_graph(d).num_vertices(); })
        .def_property_readonly("num_edges", [](const Document& d) { return require_graph(d).num_edges(); })
        .def_property_readonly("base", [](const Document& d) {
            const GraphOfGroups& g = require_graph(d);
            return g.vertex_label(g.base());
        })
        .def("validate", [](const Document& d) { return validate(require_graph(d)).errors; });

    m.def("parse", [](const std::string& text) { return parse_document(text); }, py::arg("text"));
    m.def("load", &load_document, py::arg("path"));

    m.def(
        "reduce",
        [](const Document& d, const std::string& word) {
            const GraphOfGroups& g = require_graph(d);
            return format_word(g, reduce(g, parse_word(g, word)));
        },
        py::arg("doc"), py::arg("word"));
    m.def(
        "q_ratio",
        [](const Document& d, const std::string& word) {
            const GraphOfGroups& g = require_graph(d);
            return to_fraction(q_ratio(g, parse_word(g, word)));
        },
        py::arg("doc"), py::arg("word"));
    m.def(
        "tree_valences",
        [](const Document& d, std::size_t depth) {
            const GraphOfGroups& g = require_graph(d);
            return tree_valences(g, g.base(), depth);
        },
        py::arg("doc"), py::arg("depth"));

    m.def(
        "analyze",
        [](const Document& d) {
            py::dict out;
            if (d.ray) {
                out["minimal"] = verdict_dict(is_minimal(*d.ray));
                out["locally_contractive"] = verdict_dict(is_locally_contractive(*d.ray));
                out["topologically_free"] = verdict_dict(is_topologically_free(*d.ray));
                out["effective"] = verdict_dict(is_effective(*d.ray));
            } else {
                const GraphOfGroups& g = require_graph(d);
                out["minimal"] = verdict_dict(is_minimal(g));
                out["locally_contractive"] = verdict_dict(is_locally_contractive(g));
                out["topologically_free"] = verdict_dict(is_topologically_free(g));
                out["effective"] = verdict_dict(is_effective(g));
            }
            return out;
        },
        py::arg("doc"));
    m.def(
        "classify",
        [](const Document& d) { return classification_dict(d.ray ? classify(*d.ray) : classify(require_graph(d))); },
        py::arg("doc"));

    m.def(
        "gfamily_verify",
        [](const Document& d, std::size_t depth, const std::string& xi) {
            const GraphOfGroups& g = require_graph(d);
            RelationReport rel, ck;
            std::string point;
            {
                py::gil_scoped_release release;
                const TruncatedRep rep(g, xi.empty() ? default_tail(g) : parse_point(g, xi), depth);
                rel = verify_relations(rep);
                ck = verify_ck(rep);
                point = format_point(g, rep.xi());
            }
            py::dict out;
            out["xi"] = point;
            out["relations"] = report_dict(rel);
            out["ck"] = report_dict(ck);
            return out;
        },
        py::arg("doc"), py::arg("depth") = 4, py::arg("xi") = "");

    m.def(
        "bs_tail_functional",
        [](long mm, long nn, std::size_t depth) {
            const FunctionalTable t = bs_tail_functional(Int(mm), Int(nn), depth);
            py::dict out;
            out["f_u"] = to_fraction(t.f_u);
            out["pairs"] = t.pairs;
            out["nonzero"] = t.nonzero;
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("depth") = 3);
}
