#include "gsdet/multinomial.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gsdet {

BigInt factorial(unsigned n) {
    static std::mutex mu;
    static std::vector<BigInt> cache{1};
    std::scoped_lock lock(mu);
    while (cache.size() <= n) cache.push_back(cache.back() * cache.size());
    return cache[n];
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt res = 1;
    long long kk = std::min(k, n - k);
    for (long long i = 1; i <= kk; ++i) {
        res *= n + 1 - i;
        res /= i;
    }
    return res;
}

BigInt multinomial_exact(long long top, std::span<const long long> bottom) {
    if (top < 0) return 0;
    long long sum = 0;
    for (long long b : bottom) {
        if (b < 0) return 0;
        sum += b;
    }
    if (sum != top) return 0;
    BigInt res = factorial(static_cast<unsigned>(top));
    for (long long b : bottom) res /= factorial(static_cast<unsigned>(b));
    return res;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

void require_prime(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
}

} // namespace

unsigned binomial_mod_p_lucas(std::uint64_t m, std::uint64_t k, unsigned p) {
    require_prime(p);
    std::uint64_t res = 1;
    while (m != 0 || k != 0) {
        std::uint64_t md = m % p, kd = k % p;
        if (kd > md) return 0;
        BigInt digit = binomial(static_cast<long long>(md), static_cast<long long>(kd)) % p;
        res = res * static_cast<std::uint64_t>(digit) % p;
        m /= p;
        k /= p;
    }
    return static_cast<unsigned>(res);
}

unsigned multinomial_mod_p_lucas(long long top, std::span<const long long> bottom, unsigned p) {
    require_prime(p);
    if (top < 0) return 0;
    long long sum = 0;
    for (long long b : bottom) {
        if (b < 0) return 0;
        sum += b;
    }
    if (sum != top) return 0;
    // C(top; b_1..b_r) = prod_i C(b_1+..+b_i, b_i)
    std::uint64_t res = 1;
    std::uint64_t prefix = 0;
    for (long long b : bottom) {
        prefix += static_cast<std::uint64_t>(b);
        res = res * binomial_mod_p_lucas(prefix, static_cast<std::uint64_t>(b), p) % p;
        if (res == 0) return 0;
    }
    return static_cast<unsigned>(res);
}

} // namespace gsdet
