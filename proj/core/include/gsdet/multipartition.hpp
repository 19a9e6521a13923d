#pragma once

#include <span>
#include <vector>

#include "gsdet/composition.hpp"
#include "gsdet/partition.hpp"

namespace gsdet {

// Parameters of the generalized symmetric group: r >= 1. r = 1 degrades to
// the symmetric group, r = 2 to the hyperoctahedral group.
struct WreathParams {
    unsigned n = 0;
    unsigned r = 1;
};

// r-tuple of partitions with total size n; indexes one irreducible
// representation.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    unsigned r() const { return static_cast<unsigned>(components_.size()); }
    unsigned n() const { return n_; }
    const std::vector<Partition>& components() const { return components_; }
    const Partition& operator[](unsigned k) const { return components_[k]; }

    Composition underlying() const;

    bool consistent_with(const WreathParams& params) const {
        return r() == params.r && n() == params.n;
    }

    bool operator==(const Multipartition& o) const { return components_ == o.components_; }
    auto operator<=>(const Multipartition& o) const { return components_ <=> o.components_; }

private:
    std::vector<Partition> components_;
    unsigned n_ = 0;
};

// Moves the component at slot i to slot image[i] (0-based). image must be a
// permutation of {0..r-1}. Under this convention the cycle 0->1->2->0 sends
// (a,b,c) to (c,a,b).
Multipartition apply_permutation(const Multipartition& lambda, std::span<const unsigned> image);

// Conjugates every component; the underlying composition is unchanged.
Multipartition apply_conjugation(const Multipartition& lambda);

} // namespace gsdet
