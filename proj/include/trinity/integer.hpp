#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace trinity {

// Exact arithmetic everywhere: reduced-Laplacian determinants overflow 64 bits
// well inside desk scale.
using Integer = boost::multiprecision::cpp_int;

// Floor division (C++ '/' truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Residue in [0, |b|).
inline Integer pos_mod(const Integer& a, const Integer& b) {
    Integer m = b < 0 ? Integer(-b) : b;
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

} // namespace trinity
