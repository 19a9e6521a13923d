#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsdet/bigint.hpp"
#include "gsdet/composition.hpp"
#include "gsdet/determinant.hpp"

namespace gsdet {

// Enumeration is the authoritative path for every count in this library;
// closed formulas are assertions layered on top of it. This header is the
// exhaustive core: it walks all multipartitions over ordered compositions
// and classifies them by determinant character.

struct EnumerationOptions {
    unsigned workers = 0;            // 0 = use available parallelism
    std::uint64_t cap = 10'000'000;  // refuse enumerations larger than this
};

class ResourceCapError : public std::runtime_error {
public:
    ResourceCapError(BigInt estimate, std::uint64_t cap);
    BigInt estimate;
    std::uint64_t cap;
};

// Determinant census with u64 cells; the cap keeps these exact.
struct DetAccumulator {
    explicit DetAccumulator(unsigned r) : y_even(r, 0), y_odd(r, 0) {}
    std::vector<std::uint64_t> y_even;  // index = zeta exponent
    std::vector<std::uint64_t> y_odd;

    void merge(const DetAccumulator& o);
    std::uint64_t total() const;
};

// Reduced per-partition data for the enumeration inner loop.
struct PartitionClass {
    std::uint32_t f_mod_r;
    std::uint8_t f_mod2;
    std::uint8_t g_mod2;
};

// Classes of all partitions of m, in partitions_of(m) order. Cached per
// (m, r); safe to read concurrently.
const std::vector<PartitionClass>& partition_classes(unsigned m, unsigned r);

// Number of multipartitions on one fixed ordering: prod_k p(a_k).
BigInt multipartitions_on_ordering(const Composition& a);

// Walks every multipartition on this exact ordering and adds its
// determinant to the census. Equivalent to calling det_irrep on each; the
// per-partition residues are cached but the formula is the same.
void accumulate_dets(const Composition& ordered, unsigned r, DetAccumulator& out);

// Census over a list of ordered compositions, fanned out over workers.
// Counts merge by addition, so the result is identical for any worker
// count; the chunking is deterministic.
DetAccumulator accumulate_over(const std::vector<Composition>& ordered, unsigned r,
                               unsigned workers);

unsigned resolve_workers(unsigned requested);

} // namespace gsdet
