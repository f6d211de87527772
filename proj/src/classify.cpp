#include "gogkit/classify.hpp"

#include <sstream>

namespace gogkit {

std::string to_string(Dichotomy d) {
    switch (d) {
        case Dichotomy::Kirchberg: return "kirchberg";
        case Dichotomy::StableBunceDeddens: return "stable_bunce_deddens";
        case Dichotomy::NotSimple: return "not_simple";
        case Dichotomy::Unknown: break;
    }
    return "unknown";
}

namespace {

Verdict make(Truth t, std::string clause, std::string witness) {
    Verdict v;
    v.value = t;
    v.clause = std::move(clause);
    v.witness = std::move(witness);
    return v;
}

Verdict simplicity(const Verdict& minimal, const Verdict& tf) {
    if (minimal.is_true() && tf.is_true()) return make(Truth::True, "minimal-and-free", "minimal and topologically free");
    if (minimal.is_false()) return make(Truth::False, "not-minimal", minimal.witness);
    if (tf.is_false()) return make(Truth::False, "not-topologically-free", tf.witness);
    return make(Truth::Unknown, "undecided", "minimality is " + to_string(minimal.value) + ", topological freeness is " +
                                                 to_string(tf.value));
}

Verdict nuclearity() {
    return make(Truth::True, "abelian-vertex-groups", "abelian vertex groups make the boundary action amenable");
}

std::string k_group(const FgAbelianGroup& a) {
    const std::string s = a.spec();
    return s == "1" ? "0" : s;
}

void common_notes(Classification& c) {
    c.notes.push_back("separable: countable generating data");
    c.notes.push_back("UCT: groupoid algebra of an amenable etale groupoid");
}

}  // namespace

KTheory k_theory_trivial(const GraphOfGroups& g) {
    if (!g.all_trivial()) throw ClassifyError("K-theory is only computed for graphs of trivial groups");
    const Verdict m = is_minimal(g);
    const Verdict tf = is_topologically_free(g);
    const int n = betti_number(g.graph());
    if (!m.is_true() || !tf.is_true() || n < 2)
        throw ClassifyError("not simple: the fundamental group is not nonabelian free (Betti number " + std::to_string(n) + ")");
    KTheory k;
    std::vector<Int> torsion;
    if (n > 2) torsion.push_back(Int(n - 1));
    k.k0 = FgAbelianGroup(static_cast<std::size_t>(n), torsion);
    k.k1 = FgAbelianGroup(static_cast<std::size_t>(n), {});
    k.unit_class = n > 2 ? "generator of the torsion subgroup Z/" + std::to_string(n - 1) : "0";
    return k;
}

Classification classify(const GraphOfGroups& g) {
    Classification c;
    c.input_class = g.all_trivial() ? "trivial-groups" : g.is_gbs() ? "gbs" : "abelian";
    c.minimal = is_minimal(g);
    c.topologically_free = is_topologically_free(g);
    c.locally_contractive = is_locally_contractive(g);
    c.effective = is_effective(g);
    c.simple = simplicity(c.minimal, c.topologically_free);
    c.nuclear = nuclearity();

    if (c.simple.is_true() && c.locally_contractive.is_true()) {
        c.purely_infinite = make(Truth::True, "simple-and-locally-contractive", c.locally_contractive.witness);
        c.dichotomy = Dichotomy::Kirchberg;
    } else if (c.simple.is_false()) {
        c.purely_infinite = make(Truth::Unknown, "not-simple", "only decided for simple algebras");
        c.dichotomy = Dichotomy::NotSimple;
    } else {
        c.purely_infinite = make(Truth::Unknown, "undecided", "simplicity is " + to_string(c.simple.value) +
                                                                  ", local contractivity is " +
                                                                  to_string(c.locally_contractive.value));
    }
    if (c.minimal.is_true()) {
        try {
            c.notes.push_back("trichotomy: " + to_string(classify_min_lc_trichotomy(g)));
        } catch (const DynamicsError& ex) {
            c.notes.push_back(std::string("trichotomy: unknown (") + ex.what() + ")");
        }
    }
    if (g.all_trivial() && c.simple.is_true()) c.k = k_theory_trivial(g);
    common_notes(c);
    return c;
}

Classification classify(const RaySpec& r) {
    Classification c;
    c.input_class = "ray";
    c.minimal = is_minimal(r);
    c.topologically_free = is_topologically_free(r);
    c.locally_contractive = is_locally_contractive(r);
    c.effective = is_effective(r);
    c.simple = simplicity(c.minimal, c.topologically_free);
    c.nuclear = nuclearity();
    c.supernatural = r.supernatural_string();
    if (c.simple.is_true()) {
        c.dichotomy = Dichotomy::StableBunceDeddens;
        c.purely_infinite =
            make(Truth::False, "stably-finite", "stable Bunce-Deddens algebra BD(" + c.supernatural + ") is stably finite");
    } else {
        c.dichotomy = Dichotomy::NotSimple;
        c.purely_infinite = make(Truth::Unknown, "not-simple", "only decided for simple algebras");
    }
    c.notes.push_back("trichotomy: " + to_string(classify_min_lc_trichotomy(r)));
    common_notes(c);
    return c;
}

namespace {

void verdict_text(std::ostringstream& os, const std::string& name, const Verdict& v) {
    os << name << ": " << to_string(v.value) << "\n";
    os << "  clause: " << v.clause << "\n";
    if (!v.witness.empty()) os << "  witness: " << v.witness << "\n";
    for (const std::string& e : v.evidence) os << "  evidence: " << e << "\n";
}

void verdict_machine(std::ostringstream& os, const std::string& name, const Verdict& v) {
    os << name << "=" << to_string(v.value) << "\n";
    os << name << ".clause=" << v.clause << "\n";
    if (!v.witness.empty()) os << name << ".witness=" << v.witness << "\n";
}

}  // namespace

std::string render_text(const Classification& c) {
    std::ostringstream os;
    os << "input class: " << c.input_class << "\n";
    verdict_text(os, "minimal", c.minimal);
    verdict_text(os, "topologically free", c.topologically_free);
    verdict_text(os, "locally contractive", c.locally_contractive);
    verdict_text(os, "effective", c.effective);
    verdict_text(os, "simple", c.simple);
    verdict_text(os, "nuclear", c.nuclear);
    verdict_text(os, "purely infinite", c.purely_infinite);
    os << "dichotomy: " << to_string(c.dichotomy) << "\n";
    if (!c.supernatural.empty()) os << "supernatural number: " << c.supernatural << "\n";
    if (c.k) {
        os << "K0: " << k_group(c.k->k0) << "\n";
        os << "K1: " << k_group(c.k->k1) << "\n";
        os << "unit class: " << c.k->unit_class << "\n";
    }
    for (const std::string& n : c.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string render_machine(const Classification& c) {
    std::ostringstream os;
    os << "# gogkit-classification v1\n";
    os << "input.class=" << c.input_class << "\n";
    verdict_machine(os, "minimal", c.minimal);
    verdict_machine(os, "topologically_free", c.topologically_free);
    verdict_machine(os, "locally_contractive", c.locally_contractive);
    verdict_machine(os, "effective", c.effective);
    verdict_machine(os, "simple", c.simple);
    verdict_machine(os, "nuclear", c.nuclear);
    verdict_machine(os, "purely_infinite", c.purely_infinite);
    os << "dichotomy=" << to_string(c.dichotomy) << "\n";
    if (!c.supernatural.empty()) os << "supernatural=" << c.supernatural << "\n";
    if (c.k) {
        os << "k0=" << k_group(c.k->k0) << "\n";
        os << "k1=" << k_group(c.k->k1) << "\n";
        os << "unit_class=" << c.k->unit_class << "\n";
    }
    for (std::size_t i = 0; i < c.notes.size(); ++i) os << "note." << i << "=" << c.notes[i] << "\n";
    return os.str();
}

}  // namespace gogkit
