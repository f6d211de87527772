#pragma once

#include "gogkit/integer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gogkit {

struct AbelianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coordinates in a fixed presentation Z^r + Z/t_1 + ... ; free coordinates first.
struct AbElement {
    IntVec c;

    bool operator==(const AbElement& o) const { return c == o.c; }
    bool operator!=(const AbElement& o) const { return !(c == o.c); }
    bool operator<(const AbElement& o) const { return c < o.c; }
};

std::string format_element(const AbElement& a);

class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    FgAbelianGroup(std::size_t rank, std::vector<Int> torsion);

    // Grammar: "1", "Z", "Z/n", "Z^r" and sums of these joined by '+'.
    static FgAbelianGroup parse(std::string_view spec);

    std::size_t rank() const { return rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    std::size_t dim() const { return rank_ + torsion_.size(); }
    bool is_trivial() const { return dim() == 0; }
    bool is_finite() const { return rank_ == 0; }
    bool is_infinite_cyclic() const { return rank_ == 1 && torsion_.empty(); }
    std::optional<Int> order() const;

    AbElement identity() const { return AbElement{IntVec(dim(), Int(0))}; }
    bool is_identity(const AbElement& a) const;
    bool contains(const AbElement& a) const;
    AbElement canonical(IntVec coords) const;

    AbElement add(const AbElement& a, const AbElement& b) const;
    AbElement neg(const AbElement& a) const;
    AbElement sub(const AbElement& a, const AbElement& b) const;
    AbElement scale(const AbElement& a, const Int& k) const;

    // Unit coordinate vectors.
    std::vector<AbElement> generators() const;
    // All elements in lexicographic coordinate order; finite groups only.
    std::vector<AbElement> elements() const;

    std::string spec() const;

    bool operator==(const FgAbelianGroup& o) const {
        return rank_ == o.rank_ && torsion_ == o.torsion_;
    }

private:
    void check(const AbElement& a) const;

    std::size_t rank_ = 0;
    std::vector<Int> torsion_;
};

AbElement ab_op(const FgAbelianGroup& g, const AbElement& a, const AbElement& b);

// Row-style Hermite normal form with the unimodular transform: U * M = H.
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_cols;
};
HermiteForm hermite_form(const IntMatrix& rows, std::size_t ncols);

// Nonzero invariant factors of an integer matrix, in divisibility order.
std::vector<Int> smith_invariants(const IntMatrix& rows, std::size_t ncols);

// Homomorphism given by matrix[target coord][source generator].
class AbHom {
public:
    AbHom() = default;
    AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix);

    const FgAbelianGroup& source() const { return source_; }
    const FgAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    bool shape_ok() const { return shape_ok_; }
    bool well_defined() const { return well_defined_; }
    bool injective() const { return injective_; }
    // Throws AbelianError unless shape_ok, well_defined and injective.
    void certify() const;

    AbElement apply(const AbElement& g) const;

    std::optional<Int> index() const { return index_; }
    bool surjective() const { return index_ && *index_ == 1; }
    bool finite_index() const { return index_.has_value(); }

    // Canonical transversal, identity first; throws for infinite or huge index.
    const std::vector<AbElement>& transversal() const;
    std::size_t transversal_size() const;

    // g = t + apply(h) with t in the transversal.
    std::pair<AbElement, AbElement> decompose(const AbElement& g) const;
    AbElement residue(const AbElement& g) const;
    bool in_image(const AbElement& g) const;

private:
    IntVec residue_coeffs(IntVec& x) const;

    FgAbelianGroup source_, target_;
    IntMatrix matrix_;
    bool shape_ok_ = false;
    bool well_defined_ = false;
    bool injective_ = false;
    std::optional<Int> index_;
    HermiteForm hnf_;
    std::vector<AbElement> transversal_;
    bool transversal_ready_ = false;
};

inline AbElement hom_apply(const AbHom& phi, const AbElement& g) { return phi.apply(g); }
inline std::optional<Int> subgroup_index(const AbHom& phi) { return phi.index(); }
inline const std::vector<AbElement>& transversal(const AbHom& phi) { return phi.transversal(); }
inline std::pair<AbElement, AbElement> coset_decompose(const AbHom& phi, const AbElement& g) {
    return phi.decompose(g);
}

}  // namespace gogkit
