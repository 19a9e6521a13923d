#include "gsdet/determinant.hpp"

#include <stdexcept>

#include "gsdet/multinomial.hpp"

namespace gsdet {

namespace {

// bottom vector of a with slot k decremented by `by` (entries go signed).
std::vector<long long> decremented(const Composition& a, unsigned k, unsigned by) {
    std::vector<long long> b(a.entries().begin(), a.entries().end());
    b[k] -= by;
    return b;
}

void require_consistent(const Multipartition& lambda, const WreathParams& params) {
    if (params.r < 1) throw std::invalid_argument("r must be >= 1");
    if (!lambda.consistent_with(params))
        throw std::invalid_argument("multipartition does not match (n, r)");
}

BigInt component_dim_product(const Multipartition& lambda) {
    BigInt prod = 1;
    for (const Partition& p : lambda.components()) prod *= dim_sym(p);
    return prod;
}

} // namespace

std::string DetCharacter::label() const {
    if (zeta_exp == 0) return sign_exp == 0 ? "1" : "-1";
    std::string s = sign_exp == 0 ? "" : "-";
    return s + "zeta^" + std::to_string(zeta_exp);
}

TransferImage transfer_image(const Composition& a, const WreathParams& params) {
    if (a.n() != params.n || a.r() != params.r)
        throw std::invalid_argument("composition does not match (n, r)");
    TransferImage out;
    const long long n = a.n();
    for (unsigned k = 0; k < a.r(); ++k) {
        auto b2 = decremented(a, k, 2);
        out.tau_exponents.push_back(multinomial_exact(n - 2, b2));
        auto b1 = decremented(a, k, 1);
        out.e_exponents.push_back(multinomial_exact(n - 1, b1));
    }
    return out;
}

BigInt dim_wreath(const Multipartition& lambda, const WreathParams& params) {
    require_consistent(lambda, params);
    const Composition a = lambda.underlying();
    std::vector<long long> bottom(a.entries().begin(), a.entries().end());
    return component_dim_product(lambda) * multinomial_exact(a.n(), bottom);
}

BigInt x_sum(const Composition& a) {
    const long long n = a.n();
    BigInt s = 0;
    for (unsigned k = 1; k < a.r(); ++k)
        s += BigInt(k) * multinomial_exact(n - 1, decremented(a, k, 1));
    return s;
}

BigInt orbit_count(const Composition& a) {
    const long long n = a.n();
    if (n < 2) return 0;
    BigInt total = 0;
    for (unsigned i = 0; i < a.r(); ++i) {
        for (unsigned j = i + 1; j < a.r(); ++j) {
            auto b = decremented(a, i, 1);
            b[j] -= 1;
            total += multinomial_exact(n - 2, b);
        }
    }
    return total;
}

unsigned x_lambda(const Multipartition& lambda, const WreathParams& params) {
    require_consistent(lambda, params);
    return residue(component_dim_product(lambda) * x_sum(lambda.underlying()), params.r);
}

unsigned y_lambda(const Multipartition& lambda, const WreathParams& params) {
    require_consistent(lambda, params);
    const Composition a = lambda.underlying();
    const BigInt fprod = component_dim_product(lambda);
    BigInt total = fprod * orbit_count(a);
    const long long n = a.n();
    for (unsigned k = 0; k < params.r; ++k) {
        const BigInt g = chirality(lambda[k]);
        if (g == 0) continue;
        BigInt fhat = fprod / dim_sym(lambda[k]);
        total += g * fhat * multinomial_exact(n - 2, decremented(a, k, 2));
    }
    return residue(total, 2);
}

DetCharacter det_irrep(const Multipartition& lambda, const WreathParams& params) {
    return DetCharacter{x_lambda(lambda, params), y_lambda(lambda, params)};
}

std::vector<BigInt> char_at_e1(const Multipartition& lambda, const WreathParams& params) {
    require_consistent(lambda, params);
    if (params.n < 1)
        throw std::invalid_argument("char_at_e1 requires n >= 1");
    const Composition a = lambda.underlying();
    const BigInt fprod = component_dim_product(lambda);
    std::vector<BigInt> coeff;
    coeff.reserve(params.r);
    for (unsigned k = 0; k < params.r; ++k)
        coeff.push_back(fprod * multinomial_exact(static_cast<long long>(params.n) - 1,
                                                  decremented(a, k, 1)));
    return coeff;
}

BigInt char_at_s1(const Multipartition& lambda, const WreathParams& params) {
    require_consistent(lambda, params);
    if (params.n < 2)
        throw std::invalid_argument("char_at_s1 requires n >= 2");
    const Composition a = lambda.underlying();
    const BigInt fprod = component_dim_product(lambda);
    BigInt total = 0;
    for (unsigned k = 0; k < params.r; ++k) {
        if (a[k] < 2) continue;  // the multinomial below vanishes anyway
        BigInt fhat = fprod / dim_sym(lambda[k]);
        total += fhat * transposition_character(lambda[k]) *
                 multinomial_exact(static_cast<long long>(params.n) - 2, decremented(a, k, 2));
    }
    return total;
}

DetCharacter det_via_eigenvalues(const Multipartition& lambda, const WreathParams& params) {
    require_consistent(lambda, params);
    if (params.n == 0) return DetCharacter{0, 0};
    // x: the eigenvalue zeta^k occurs with multiplicity m_k (the char_at_e1
    // coefficient), so the zeta exponent of the determinant is sum k*m_k.
    const std::vector<BigInt> mult = char_at_e1(lambda, params);
    BigInt xs = 0;
    for (unsigned k = 1; k < params.r; ++k) xs += BigInt(k) * mult[k];
    const unsigned x = residue(xs, params.r);
    // y: multiplicity of eigenvalue -1 at a transposition.
    if (params.n < 2) return DetCharacter{x, 0};
    BigInt d = dim_wreath(lambda, params) - char_at_s1(lambda, params);
    if (d % 2 != 0)
        throw std::logic_error("dimension and char_at_s1 must share parity");
    return DetCharacter{x, residue(d / 2, 2)};
}

} // namespace gsdet
