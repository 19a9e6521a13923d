#pragma once

#include <vector>

#include "gsdet/bigint.hpp"

namespace gsdet {

// Ordered tuple of r nonnegative integers summing to n. Zeros are allowed
// and meaningful (they occupy a slot of the wreath index).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<unsigned> entries);

    unsigned r() const { return static_cast<unsigned>(entries_.size()); }
    unsigned n() const { return n_; }
    const std::vector<unsigned>& entries() const { return entries_; }
    unsigned operator[](unsigned k) const { return entries_[k]; }

    bool weakly_decreasing() const;
    Composition sorted_decreasing() const;

    // All distinct orderings of the multiset of entries, lexicographically
    // increasing. For a weakly decreasing input this enumerates exactly the
    // compositions obtained by permuting the parts.
    std::vector<Composition> distinct_orderings() const;

    // r! / prod(multiplicity of each distinct value)!.
    BigInt ordering_count() const;

    bool operator==(const Composition& o) const { return entries_ == o.entries_; }
    auto operator<=>(const Composition& o) const { return entries_ <=> o.entries_; }

private:
    std::vector<unsigned> entries_;
    unsigned n_ = 0;
};

// All ordered compositions of n into exactly r parts, lexicographically
// decreasing (first slot from n down to 0).
std::vector<Composition> compositions_of(unsigned n, unsigned r);

// The weakly decreasing representatives only.
std::vector<Composition> decreasing_compositions(unsigned n, unsigned r);

} // namespace gsdet
