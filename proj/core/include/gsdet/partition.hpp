#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "gsdet/bigint.hpp"

namespace gsdet {

// Integer partition: weakly decreasing positive parts. The empty partition
// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    unsigned n() const { return n_; }
    const std::vector<unsigned>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
    std::vector<unsigned> parts_;
    unsigned n_ = 0;
};

// All partitions of n in lexicographically decreasing order:
// (n), (n-1,1), ..., (1,...,1). Cached; the reference stays valid for the
// lifetime of the program and is safe to read from any thread.
const std::vector<Partition>& partitions_of(unsigned n);

// p(n). Overflows u64 only far beyond the scales this library targets.
std::uint64_t partition_count(unsigned n);

// Transposed Young diagram.
Partition conjugate(const Partition& lambda);

// Specht module dimension f_lambda by the hook length formula. Exact.
BigInt dim_sym(const Partition& lambda);

// Character of the Specht module at a transposition, via the content sum:
// chi = f * 2*sum(j-i) / (n(n-1)), an exact division. Requires |lambda|>=2.
BigInt transposition_character(const Partition& lambda);

// g_lambda = (f_lambda - chi_lambda(s1)) / 2 for |lambda|>=2, else 0.
BigInt chirality(const Partition& lambda);

// Base-2 expansion data: the set of exponents with a set bit, and the
// 2-adic valuation (empty/unset for v = 0).
struct BinaryProfile {
    std::vector<unsigned> bits;    // ascending
    std::optional<unsigned> ord2;  // largest k with 2^k | v; nullopt for v=0
};

BinaryProfile binary_profile(std::uint64_t v);

} // namespace gsdet
