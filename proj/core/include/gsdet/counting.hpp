#pragma once

#include "gsdet/bigint.hpp"
#include "gsdet/composition.hpp"

namespace gsdet {

// A(n): number of odd-dimensional Specht modules, the product of the powers
// of 2 in the binary expansion of n. A(0) = 1.
BigInt count_odd_sym(unsigned n);

// B(n): number of partitions of n with odd chirality, by enumeration.
// 0 for n < 2.
BigInt count_chiral_sym(unsigned n);

// The three nonempty parity classes of (f mod 2, g mod 2) over partitions
// of n, by enumeration. (f even, g even) holds the rest.
struct ChiralityClassCounts {
    BigInt f_odd_g_odd;
    BigInt f_odd_g_even;
    BigInt f_even_g_odd;
};
ChiralityClassCounts chirality_split_classes(unsigned n);

// A(n,r) = r^{|bin(n)|} * A(n): odd-degree irreducibles of G(n,r).
BigInt count_odd_wreath(unsigned n, unsigned r);

// The same count by walking every multipartition and testing its dimension
// parity. Grounds the closed form.
BigInt count_odd_wreath_bruteforce(unsigned n, unsigned r);

// Number of partitions of n whose dimension is coprime to p, by
// enumeration. Throws unless p is prime.
BigInt mp_sym(unsigned n, unsigned p);

// m_p(G(n,r)) = prod_k [x^{alpha_k}] P(x)^{r p^k} over the base-p digits
// alpha_k of n, by truncated series exponentiation. Throws unless p prime.
BigInt mp_wreath_formula(unsigned n, unsigned r, unsigned p);

// The same count by walking every multipartition. Grounds the formula.
BigInt mp_wreath_bruteforce(unsigned n, unsigned r, unsigned p);

// Counts of multipartitions on one fixed ordering of a by the parity of y:
// even_count + odd_count = prod_k p(a_k). Computed by the two-case closed
// formula (with A(0)=A(1)=1 and B(m)=0 for m<2 as the trivial-component
// factors); enumeration agreement is asserted by the verification suite.
struct ChiralitySplit {
    Composition a;
    BigInt even_count;  // y even
    BigInt odd_count;   // y odd
};
ChiralitySplit chirality_split(const Composition& a, unsigned r);

} // namespace gsdet
