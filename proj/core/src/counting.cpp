#include "gsdet/counting.hpp"

#include <stdexcept>

#include "gsdet/determinant.hpp"
#include "gsdet/enumerate.hpp"
#include "gsdet/multinomial.hpp"
#include "gsdet/partition.hpp"
#include "gsdet/series.hpp"

namespace gsdet {

namespace {

// Walks every multipartition of P(n,r) through the residue caches and
// counts those whose full dimension is nonzero mod p.
BigInt count_coprime_dims(unsigned n, unsigned r, unsigned p) {
    BigInt count = 0;
    for (const Composition& a : compositions_of(n, r)) {
        std::vector<long long> bottom(a.entries().begin(), a.entries().end());
        const unsigned multi = multinomial_mod_p_lucas(n, bottom, p);
        std::vector<const std::vector<PartitionClass>*> lists(r);
        for (unsigned k = 0; k < r; ++k) lists[k] = &partition_classes(a[k], p);
        std::vector<std::size_t> idx(r, 0);
        for (;;) {
            unsigned prod = multi % p;
            for (unsigned k = 0; k < r && prod != 0; ++k)
                prod = (prod * (*lists[k])[idx[k]].f_mod_r) % p;
            if (prod != 0) ++count;
            unsigned k = r;
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < lists[k]->size()) {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if (done) break;
        }
    }
    return count;
}

} // namespace

BigInt count_odd_sym(unsigned n) {
    BigInt prod = 1;
    for (unsigned k = 0; n >> k; ++k)
        if ((n >> k) & 1) prod <<= k;
    return prod;
}

BigInt count_chiral_sym(unsigned n) {
    if (n < 2) return 0;
    BigInt count = 0;
    for (const Partition& lambda : partitions_of(n))
        if (chirality(lambda) % 2 == 1) ++count;
    return count;
}

ChiralityClassCounts chirality_split_classes(unsigned n) {
    ChiralityClassCounts out{0, 0, 0};
    for (const Partition& lambda : partitions_of(n)) {
        const bool f_odd = dim_sym(lambda) % 2 == 1;
        const bool g_odd = chirality(lambda) % 2 == 1;
        if (f_odd && g_odd)
            ++out.f_odd_g_odd;
        else if (f_odd)
            ++out.f_odd_g_even;
        else if (g_odd)
            ++out.f_even_g_odd;
    }
    return out;
}

BigInt count_odd_wreath(unsigned n, unsigned r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    BigInt rpow = 1;
    for (unsigned k = 0; n >> k; ++k)
        if ((n >> k) & 1) rpow *= r;
    return rpow * count_odd_sym(n);
}

BigInt count_odd_wreath_bruteforce(unsigned n, unsigned r) {
    return count_coprime_dims(n, r, 2);
}

BigInt mp_wreath_bruteforce(unsigned n, unsigned r, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    return count_coprime_dims(n, r, p);
}

BigInt mp_sym(unsigned n, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    BigInt count = 0;
    for (const Partition& lambda : partitions_of(n))
        if (dim_sym(lambda) % p != 0) ++count;
    return count;
}

BigInt mp_wreath_formula(unsigned n, unsigned r, unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (n == 0) return 1;
    const CoefficientSeries series = partition_series(n);
    BigInt prod = 1;
    std::uint64_t pk = 1;
    for (unsigned rem = n; rem != 0; rem /= p, pk *= p) {
        const unsigned digit = rem % p;
        prod *= series.pow(static_cast<std::uint64_t>(r) * pk)[digit];
    }
    return prod;
}

ChiralitySplit chirality_split(const Composition& a, unsigned r) {
    if (a.r() != r) throw std::invalid_argument("composition length must equal r");
    const long long n = a.n();

    // Parities of the slot multinomials C(n-2; .., a_k-2, ..).
    std::vector<unsigned> odd_slots;
    for (unsigned k = 0; k < r; ++k) {
        std::vector<long long> b(a.entries().begin(), a.entries().end());
        b[k] -= 2;
        if (multinomial_exact(n - 2, b) % 2 != 0) odd_slots.push_back(k);
    }

    BigInt a_prod = 1;  // prod A(a_k); A(0) = A(1) = 1
    for (unsigned e : a.entries()) a_prod *= count_odd_sym(e);

    BigInt odd;
    if (odd_slots.empty()) {
        odd = (orbit_count(a) % 2 != 0) ? a_prod : 0;
    } else {
        const auto m = static_cast<long long>(odd_slots.size());
        BigInt sum = 0;
        for (unsigned i : odd_slots) {
            // B(a_i) = 0 for a_i < 2 drops the term
            sum += count_chiral_sym(a[i]) * (a_prod / count_odd_sym(a[i]));
        }
        BigInt num = 2 * sum - (m - 1) * a_prod;
        if (num % 2 != 0) throw std::logic_error("chirality split must be integral");
        odd = num / 2;
    }

    BigInt all = 1;
    for (unsigned e : a.entries()) all *= partition_count(e);
    return ChiralitySplit{a, all - odd, odd};
}

} // namespace gsdet
