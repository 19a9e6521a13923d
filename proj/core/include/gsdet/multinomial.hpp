#pragma once

#include <cstdint>
#include <span>

#include "gsdet/bigint.hpp"

namespace gsdet {

BigInt factorial(unsigned n);

// C(n, k) with the convention C(n, k) = 0 unless 0 <= k <= n.
BigInt binomial(long long n, long long k);

// top! / prod(bottom[i]!) when all bottom entries are >= 0 and sum to top;
// 0 otherwise (negative entries and sum mismatches are allowed inputs and
// evaluate to 0; formulas here routinely decrement entries by 1 or 2 and
// rely on this).
BigInt multinomial_exact(long long top, std::span<const long long> bottom);

bool is_prime(std::uint64_t v);

// C(m, k) mod p via the digit-wise product over base-p expansions.
// Throws std::invalid_argument unless p is prime.
unsigned binomial_mod_p_lucas(std::uint64_t m, std::uint64_t k, unsigned p);

// Multinomial residue mod p through the binomial-chain factorization
// C(top; b_1..b_r) = prod_i C(b_1+...+b_i, b_i), each factor reduced by the
// digit-wise product. Same zero conventions as multinomial_exact.
unsigned multinomial_mod_p_lucas(long long top, std::span<const long long> bottom, unsigned p);

} // namespace gsdet
