#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gogkit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

// Floor division and the matching nonnegative remainder for d > 0.
inline Int floor_div(const Int& a, const Int& d) {
    Int q = a / d;
    if ((a % d != 0) && ((a < 0) != (d < 0))) --q;
    return q;
}

inline Int mod_pos(const Int& a, const Int& d) {
    Int r = a % d;
    if (r < 0) r += (d < 0 ? -d : d);
    return r;
}

inline std::string to_string(const Int& a) { return a.str(); }

std::string to_string(const Rational& q);

// Lowest-terms denominator (always positive).
Int denominator(const Rational& q);

}  // namespace gogkit
