#include "gogkit/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gogkit {

namespace {

constexpr std::size_t kTransversalCap = std::size_t(1) << 20;

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

void row_axpy(IntVec& dst, const IntVec& src, const Int& q) {
    for (std::size_t k = 0; k < dst.size(); ++k)
        if (src[k] != 0) dst[k] -= q * src[k];
}

std::string strip(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

Int parse_positive(const std::string& s, std::string_view whole) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw AbelianError("bad group spec '" + strip(whole) + "'");
    return Int(s);
}

}  // namespace

std::string to_string(const Rational& q) {
    Int n = boost::multiprecision::numerator(q);
    Int d = boost::multiprecision::denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

std::string format_element(const AbElement& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ",";
        s += a.c[i].str();
    }
    return s + ")";
}

FgAbelianGroup::FgAbelianGroup(std::size_t rank, std::vector<Int> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
    for (const Int& t : torsion_)
        if (t < 2) throw AbelianError("torsion orders must be at least 2");
}

FgAbelianGroup FgAbelianGroup::parse(std::string_view spec) {
    std::string s = strip(spec);
    if (s.empty()) throw AbelianError("empty group spec");
    std::size_t rank = 0;
    std::vector<Int> torsion;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t plus = s.find('+', pos);
        std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (term == "1") {
        } else if (term == "Z") {
            ++rank;
        } else if (term.rfind("Z^", 0) == 0) {
            rank += static_cast<std::size_t>(parse_positive(term.substr(2), spec));
        } else if (term.rfind("Z/", 0) == 0) {
            Int n = parse_positive(term.substr(2), spec);
            if (n < 2) throw AbelianError("cyclic factor Z/" + n.str() + " must have order at least 2");
            torsion.push_back(n);
        } else {
            throw AbelianError("bad group spec '" + strip(spec) + "'");
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return FgAbelianGroup(rank, std::move(torsion));
}

std::optional<Int> FgAbelianGroup::order() const {
    if (rank_ > 0) return std::nullopt;
    Int n = 1;
    for (const Int& t : torsion_) n *= t;
    return n;
}

void FgAbelianGroup::check(const AbElement& a) const {
    if (a.c.size() != dim()) throw AbelianError("element " + format_element(a) + " is not in " + spec());
}

bool FgAbelianGroup::is_identity(const AbElement& a) const {
    check(a);
    return std::all_of(a.c.begin(), a.c.end(), [](const Int& x) { return x == 0; });
}

bool FgAbelianGroup::contains(const AbElement& a) const {
    if (a.c.size() != dim()) return false;
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        const Int& x = a.c[rank_ + i];
        if (x < 0 || x >= torsion_[i]) return false;
    }
    return true;
}

AbElement FgAbelianGroup::canonical(IntVec coords) const {
    if (coords.size() != dim()) throw AbelianError("coordinate vector has wrong length for " + spec());
    for (std::size_t i = 0; i < torsion_.size(); ++i) coords[rank_ + i] = mod_pos(coords[rank_ + i], torsion_[i]);
    return AbElement{std::move(coords)};
}

AbElement FgAbelianGroup::add(const AbElement& a, const AbElement& b) const {
    check(a);
    check(b);
    IntVec c(dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] + b.c[i];
    return canonical(std::move(c));
}

AbElement FgAbelianGroup::neg(const AbElement& a) const {
    check(a);
    IntVec c(dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c[i];
    return canonical(std::move(c));
}

AbElement FgAbelianGroup::sub(const AbElement& a, const AbElement& b) const { return add(a, neg(b)); }

AbElement FgAbelianGroup::scale(const AbElement& a, const Int& k) const {
    check(a);
    IntVec c(dim());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] * k;
    return canonical(std::move(c));
}

std::vector<AbElement> FgAbelianGroup::generators() const {
    std::vector<AbElement> out;
    for (std::size_t i = 0; i < dim(); ++i) {
        AbElement g = identity();
        g.c[i] = 1;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<AbElement> FgAbelianGroup::elements() const {
    if (!is_finite()) throw AbelianError("cannot list the elements of infinite group " + spec());
    std::vector<AbElement> out;
    AbElement cur = identity();
    while (true) {
        out.push_back(cur);
        std::size_t i = dim();
        while (i > 0) {
            --i;
            cur.c[i] += 1;
            if (cur.c[i] < torsion_[i]) break;
            cur.c[i] = 0;
            if (i == 0) return out;
        }
        if (dim() == 0) return out;
    }
}

std::string FgAbelianGroup::spec() const {
    std::vector<std::string> parts;
    if (rank_ == 1) parts.push_back("Z");
    if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
    for (const Int& t : torsion_) parts.push_back("Z/" + t.str());
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

AbElement ab_op(const FgAbelianGroup& g, const AbElement& a, const AbElement& b) { return g.add(a, b); }

HermiteForm hermite_form(const IntMatrix& rows, std::size_t ncols) {
    HermiteForm f;
    f.h = rows;
    const std::size_t m = rows.size();
    f.u.assign(m, IntVec(m, Int(0)));
    for (std::size_t i = 0; i < m; ++i) f.u[i][i] = 1;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ncols && p < m; ++c) {
        while (true) {
            std::size_t best = m;
            for (std::size_t i = p; i < m; ++i)
                if (f.h[i][c] != 0 && (best == m || abs_int(f.h[i][c]) < abs_int(f.h[best][c]))) best = i;
            if (best == m) break;
            std::swap(f.h[p], f.h[best]);
            std::swap(f.u[p], f.u[best]);
            bool clean = true;
            for (std::size_t i = p + 1; i < m; ++i) {
                if (f.h[i][c] == 0) continue;
                Int q = floor_div(f.h[i][c], f.h[p][c]);
                row_axpy(f.h[i], f.h[p], q);
                row_axpy(f.u[i], f.u[p], q);
                if (f.h[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (f.h[p][c] == 0) continue;
        if (f.h[p][c] < 0) {
            for (auto& x : f.h[p]) x = -x;
            for (auto& x : f.u[p]) x = -x;
        }
        for (std::size_t i = 0; i < p; ++i) {
            Int q = floor_div(f.h[i][c], f.h[p][c]);
            if (q != 0) {
                row_axpy(f.h[i], f.h[p], q);
                row_axpy(f.u[i], f.u[p], q);
            }
        }
        f.pivot_cols.push_back(c);
        ++p;
    }
    return f;
}

std::vector<Int> smith_invariants(const IntMatrix& rows, std::size_t ncols) {
    IntMatrix a = rows;
    const std::size_t m = a.size();
    std::vector<Int> diag;
    std::size_t t = 0;
    while (t < m && t < ncols) {
        // Pick the smallest nonzero entry in the trailing block as pivot.
        std::size_t pr = m, pc = ncols;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < ncols; ++j)
                if (a[i][j] != 0 && (pr == m || abs_int(a[i][j]) < abs_int(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == m) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = floor_div(a[i][t], a[t][t]);
                row_axpy(a[i], a[t], q);
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    done = false;
                }
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = floor_div(a[t][j], a[t][t]);
                for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    done = false;
                }
            }
            if (!done) continue;
            // Enforce divisibility of the trailing block by the pivot.
            for (std::size_t i = t + 1; i < m && done; ++i)
                for (std::size_t j = t + 1; j < ncols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = 0; k < ncols; ++k) a[t][k] += a[i][k];
                        done = false;
                        break;
                    }
        }
        diag.push_back(abs_int(a[t][t]));
        ++t;
    }
    return diag;
}

AbHom::AbHom(FgAbelianGroup source, FgAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    const std::size_t s = source_.dim(), n = target_.dim();
    if (s == 0 && (matrix_.empty() || (matrix_.size() == 1 && matrix_[0].empty())))
        matrix_.assign(n, IntVec{});
    if (n == 0 && matrix_.size() == 1 && matrix_[0].size() == s && std::all_of(matrix_[0].begin(), matrix_[0].end(), [](const Int& x) { return x == 0; }))
        matrix_.clear();
    shape_ok_ = matrix_.size() == n &&
                std::all_of(matrix_.begin(), matrix_.end(), [s](const IntVec& r) { return r.size() == s; });
    if (!shape_ok_) return;

    // Rows: images of source generators, then target torsion relations.
    IntMatrix rows;
    for (std::size_t j = 0; j < s; ++j) {
        IntVec r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = matrix_[i][j];
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < target_.torsion().size(); ++i) {
        IntVec r(n, Int(0));
        r[target_.rank() + i] = target_.torsion()[i];
        rows.push_back(std::move(r));
    }

    well_defined_ = true;
    for (std::size_t i = 0; i < source_.torsion().size(); ++i) {
        const std::size_t j = source_.rank() + i;
        IntVec img(n);
        for (std::size_t k = 0; k < n; ++k) img[k] = rows[j][k] * source_.torsion()[i];
        if (!target_.is_identity(target_.canonical(img))) well_defined_ = false;
    }

    hnf_ = hermite_form(rows, n);
    injective_ = well_defined_;
    for (std::size_t r = hnf_.pivot_cols.size(); r < rows.size() && injective_; ++r) {
        for (std::size_t j = 0; j < s; ++j) {
            const Int& c = hnf_.u[r][j];
            if (j < source_.rank()) {
                if (c != 0) injective_ = false;
            } else if (c % source_.torsion()[j - source_.rank()] != 0) {
                injective_ = false;
            }
        }
    }

    std::vector<Int> inv = smith_invariants(rows, n);
    if (inv.size() == n) {
        Int idx = 1;
        for (const Int& d : inv) idx *= d;
        index_ = idx;
    }

    if (index_ && *index_ <= Int(kTransversalCap)) {
        std::vector<Int> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = hnf_.h[i][i];
        AbElement cur = target_.identity();
        while (true) {
            transversal_.push_back(cur);
            std::size_t i = n;
            bool wrapped = true;
            while (i > 0) {
                --i;
                cur.c[i] += 1;
                if (cur.c[i] < d[i]) {
                    wrapped = false;
                    break;
                }
                cur.c[i] = 0;
            }
            if (wrapped) break;
        }
        transversal_ready_ = true;
    }
}

void AbHom::certify() const {
    if (!shape_ok_) throw AbelianError("matrix shape does not match " + source_.spec() + " -> " + target_.spec());
    if (!well_defined_) throw AbelianError("matrix is not well defined on the torsion of " + source_.spec());
    if (!injective_) throw AbelianError("homomorphism " + source_.spec() + " -> " + target_.spec() + " is not injective");
}

AbElement AbHom::apply(const AbElement& g) const {
    if (!shape_ok_) throw AbelianError("homomorphism has a malformed matrix");
    if (g.c.size() != source_.dim()) throw AbelianError("element " + format_element(g) + " is not in the domain " + source_.spec());
    IntVec out(target_.dim(), Int(0));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < g.c.size(); ++j) out[i] += matrix_[i][j] * g.c[j];
    return target_.canonical(std::move(out));
}

const std::vector<AbElement>& AbHom::transversal() const {
    if (!index_) throw AbelianError("image has infinite index; no finite transversal");
    if (!transversal_ready_) throw AbelianError("index " + index_->str() + " is too large to list a transversal");
    return transversal_;
}

std::size_t AbHom::transversal_size() const { return transversal().size(); }

IntVec AbHom::residue_coeffs(IntVec& x) const {
    const std::size_t n = target_.dim();
    IntVec coef(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = hnf_.h[i][i];
        Int q = floor_div(x[i], d);
        if (q != 0) {
            row_axpy(x, hnf_.h[i], q);
            coef[i] = q;
        }
    }
    return coef;
}

std::pair<AbElement, AbElement> AbHom::decompose(const AbElement& g) const {
    if (!index_) throw AbelianError("coset decomposition needs a finite index image");
    if (!target_.contains(g)) throw AbelianError("element " + format_element(g) + " is not in " + target_.spec());
    IntVec x = g.c;
    IntVec coef = residue_coeffs(x);
    const std::size_t s = source_.dim();
    IntVec h(s, Int(0));
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i] == 0) continue;
        for (std::size_t j = 0; j < s; ++j) h[j] += coef[i] * hnf_.u[i][j];
    }
    return {target_.canonical(std::move(x)), source_.canonical(std::move(h))};
}

AbElement AbHom::residue(const AbElement& g) const {
    if (!index_) throw AbelianError("coset decomposition needs a finite index image");
    IntVec x = g.c;
    residue_coeffs(x);
    return target_.canonical(std::move(x));
}

bool AbHom::in_image(const AbElement& g) const { return target_.is_identity(residue(g)); }

}  // namespace gogkit
