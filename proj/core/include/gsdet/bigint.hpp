#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gsdet {

// All arithmetic in this library is exact. Quantities that can outgrow 64
// bits (dimensions, factorials, multinomials, table totals) use BigInt;
// reduced residues use plain unsigned types.
using BigInt = boost::multiprecision::cpp_int;

// Residue of a signed exact integer, in [0, m).
inline unsigned residue(const BigInt& v, unsigned m) {
    BigInt q = v % m;
    if (q < 0) q += m;
    return static_cast<unsigned>(q);
}

} // namespace gsdet
