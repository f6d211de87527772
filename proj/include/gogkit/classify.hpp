#pragma once

#include "gogkit/dynamics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gogkit {

struct ClassifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Dichotomy { Kirchberg, StableBunceDeddens, NotSimple, Unknown };
std::string to_string(Dichotomy d);

struct KTheory {
    FgAbelianGroup k0;
    FgAbelianGroup k1;
    std::string unit_class;
};

struct Classification {
    std::string input_class;  // trivial-groups | gbs | abelian | ray
    Verdict minimal;
    Verdict topologically_free;
    Verdict locally_contractive;
    Verdict effective;
    Verdict simple;
    Verdict nuclear;
    Verdict purely_infinite;
    Dichotomy dichotomy = Dichotomy::Unknown;
    std::string supernatural;  // ray inputs only
    std::optional<KTheory> k;
    std::vector<std::string> notes;
};

Classification classify(const GraphOfGroups& g);
Classification classify(const RaySpec& r);

// K_0 = Z^n + Z/(n-1), K_1 = Z^n for a simple graph of trivial groups with Betti number n.
KTheory k_theory_trivial(const GraphOfGroups& g);

std::string render_text(const Classification& c);
// Line-oriented key=value with a version header.
std::string render_machine(const Classification& c);

}  // namespace gogkit
