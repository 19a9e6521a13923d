#pragma once

#include <cstdint>
#include <vector>

#include "gsdet/bigint.hpp"

namespace gsdet {

// Truncated power series in one variable with exact integer coefficients.
class CoefficientSeries {
public:
    // coefficients[d] is the coefficient of x^d.
    explicit CoefficientSeries(std::vector<BigInt> coefficients);
    static CoefficientSeries one(unsigned degree);

    unsigned degree() const { return static_cast<unsigned>(coeff_.size()) - 1; }
    const BigInt& operator[](unsigned d) const { return coeff_[d]; }
    const std::vector<BigInt>& coefficients() const { return coeff_; }

    CoefficientSeries mul(const CoefficientSeries& o) const;  // truncated
    CoefficientSeries pow(std::uint64_t e) const;             // repeated squaring

private:
    std::vector<BigInt> coeff_;
};

// The partition generating function truncated to the given degree.
CoefficientSeries partition_series(unsigned degree);

// |P(n,r)| = [x^n] P(x)^r.
BigInt multipartition_count(unsigned n, unsigned r);

} // namespace gsdet
