#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gsdet/bigint.hpp"
#include "gsdet/composition.hpp"
#include "gsdet/multipartition.hpp"

namespace gsdet {

// The determinant of an irreducible representation of G(n,r) is a
// multiplicative character zeta^x * sgn^y; it is named here purely by the
// exponent pair (x mod r, y mod 2). zeta itself is never materialized.
struct DetCharacter {
    unsigned zeta_exp = 0;  // in [0, r)
    unsigned sign_exp = 0;  // in {0, 1}

    bool operator==(const DetCharacter&) const = default;
    auto operator<=>(const DetCharacter&) const = default;

    // "1", "-1", "zeta^k", "-zeta^k"
    std::string label() const;
};

// Images of the abelianization generators under the transfer map, as
// exponent vectors: slot k of tau_exponents is C(n-2; a_1,..,a_k-2,..,a_r)
// and of e_exponents is C(n-1; a_1,..,a_k-1,..,a_r). The group elements
// themselves are never represented.
struct TransferImage {
    std::vector<BigInt> tau_exponents;
    std::vector<BigInt> e_exponents;
};

TransferImage transfer_image(const Composition& a, const WreathParams& params);

// f_lambda = prod_k f_{lambda_k} * C(n; a_1,..,a_r). Exact.
BigInt dim_wreath(const Multipartition& lambda, const WreathParams& params);

// S(a) = sum_{k=1}^{r-1} k * C(n-1; a_1,..,a_{k+1}-1,..,a_r), exact.
// The decrement starts at the second slot; the first is never decremented.
BigInt x_sum(const Composition& a);

// Number of unordered pairs of blocks separated by a transposition in the
// permutation module: sum_{i<j} C(n-2; a_1,..,a_i-1,..,a_j-1,..,a_r).
// Exact integer, 0 for n < 2.
BigInt orbit_count(const Composition& a);

// Exponent of zeta in det: (prod_k f_{lambda_k}) * S(a) mod r.
unsigned x_lambda(const Multipartition& lambda, const WreathParams& params);

// Exponent of sgn in det, mod 2:
//   (prod_k f_{lambda_k}) * orbit_count(a)
// + sum_k g_{lambda_k} * fhat_k * C(n-2; a_1,..,a_k-2,..,a_r),
// where fhat_k is the product of the other components' dimensions.
unsigned y_lambda(const Multipartition& lambda, const WreathParams& params);

DetCharacter det_irrep(const Multipartition& lambda, const WreathParams& params);

// Character value at the generator of the first cyclic factor, as exact
// integer coefficients of zeta^0..zeta^{r-1}: coefficient k is
// (prod f_{lambda_j}) * C(n-1; a_1,..,a_{k+1}-1,..,a_r). Requires n >= 1.
std::vector<BigInt> char_at_e1(const Multipartition& lambda, const WreathParams& params);

// Character value at a transposition:
// sum_k fhat_k * chi_{lambda_k}(transposition) * C(n-2; a_1,..,a_k-2,..,a_r).
// Requires n >= 2. Slots with a_k < 2 contribute 0 (vanishing multinomial).
BigInt char_at_s1(const Multipartition& lambda, const WreathParams& params);

// Independent route: x from the eigenvalue multiplicities read off
// char_at_e1, y = (f_lambda - char_at_s1)/2 mod 2 (exact division; y = 0
// when n < 2). Must agree with det_irrep everywhere.
DetCharacter det_via_eigenvalues(const Multipartition& lambda, const WreathParams& params);

} // namespace gsdet
