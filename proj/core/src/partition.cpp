#include "gsdet/partition.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gsdet {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

namespace {

void emit_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& stem,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stem);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        stem.push_back(p);
        emit_partitions(remaining - p, p, stem, out);
        stem.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::vector<Partition>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Partition> all;
        std::vector<unsigned> stem;
        emit_partitions(n, n, stem, all);
        it = cache.emplace(n, std::move(all)).first;
    }
    return it->second;
}

std::uint64_t partition_count(unsigned n) {
    // Euler's pentagonal recurrence.
    static std::mutex mu;
    static std::vector<std::uint64_t> p{1};
    std::scoped_lock lock(mu);
    while (p.size() <= n) {
        unsigned m = static_cast<unsigned>(p.size());
        std::uint64_t total = 0;
        for (unsigned k = 1;; ++k) {
            unsigned g1 = k * (3 * k - 1) / 2;
            unsigned g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            std::uint64_t term = p[m - g1] + (g2 <= m ? p[m - g2] : 0);
            if (k % 2 == 1)
                total += term;
            else
                total -= term;
        }
        p.push_back(total);
    }
    return p[n];
}

Partition conjugate(const Partition& lambda) {
    const auto& parts = lambda.parts();
    if (parts.empty()) return Partition{};
    std::vector<unsigned> conj(parts[0], 0);
    for (unsigned j = 0; j < parts[0]; ++j)
        for (unsigned p : parts)
            if (p > j) ++conj[j];
    return Partition(std::move(conj));
}

BigInt dim_sym(const Partition& lambda) {
    const auto& parts = lambda.parts();
    if (parts.empty()) return 1;
    const auto conj = conjugate(lambda).parts();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (unsigned j = 0; j < parts[i]; ++j)
            hooks *= (parts[i] - j) + (conj[j] - i) - 1;
    BigInt nfact = 1;
    for (unsigned k = 2; k <= lambda.n(); ++k) nfact *= k;
    return nfact / hooks;
}

BigInt transposition_character(const Partition& lambda) {
    const unsigned n = lambda.n();
    if (n < 2)
        throw std::invalid_argument("transposition_character requires |lambda| >= 2");
    // content of cell (i,j) is j - i; the normalized character at a
    // transposition is 2*sum(contents)/(n(n-1)).
    BigInt contents = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // row i contributes sum_{j=0..parts[i]-1} (j - i)
        BigInt row = BigInt(parts[i]) * (parts[i] - 1) / 2;
        row -= BigInt(i) * parts[i];
        contents += row;
    }
    BigInt num = dim_sym(lambda) * 2 * contents;
    BigInt den = BigInt(n) * (n - 1);
    if (num % den != 0)
        throw std::logic_error("content-sum division is not exact");
    return num / den;
}

BigInt chirality(const Partition& lambda) {
    if (lambda.n() < 2) return 0;
    BigInt d = dim_sym(lambda) - transposition_character(lambda);
    if (d % 2 != 0)
        throw std::logic_error("f and chi(s1) must share parity");
    return d / 2;
}

BinaryProfile binary_profile(std::uint64_t v) {
    BinaryProfile out;
    for (unsigned k = 0; v >> k; ++k)
        if ((v >> k) & 1) out.bits.push_back(k);
    if (!out.bits.empty()) out.ord2 = out.bits.front();
    return out;
}

} // namespace gsdet
