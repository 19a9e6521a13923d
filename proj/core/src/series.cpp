#include "gsdet/series.hpp"

#include <stdexcept>

namespace gsdet {

CoefficientSeries::CoefficientSeries(std::vector<BigInt> coefficients)
    : coeff_(std::move(coefficients)) {
    if (coeff_.empty()) throw std::invalid_argument("series needs at least degree 0");
}

CoefficientSeries CoefficientSeries::one(unsigned degree) {
    std::vector<BigInt> c(degree + 1, 0);
    c[0] = 1;
    return CoefficientSeries(std::move(c));
}

CoefficientSeries CoefficientSeries::mul(const CoefficientSeries& o) const {
    const unsigned deg = std::min(degree(), o.degree());
    std::vector<BigInt> c(deg + 1, 0);
    for (unsigned i = 0; i <= deg; ++i) {
        if (coeff_[i] == 0) continue;
        for (unsigned j = 0; i + j <= deg; ++j) {
            if (o.coeff_[j] == 0) continue;
            c[i + j] += coeff_[i] * o.coeff_[j];
        }
    }
    return CoefficientSeries(std::move(c));
}

CoefficientSeries CoefficientSeries::pow(std::uint64_t e) const {
    CoefficientSeries result = one(degree());
    CoefficientSeries base = *this;
    while (e) {
        if (e & 1) result = result.mul(base);
        if (e >>= 1) base = base.mul(base);
    }
    return result;
}

CoefficientSeries partition_series(unsigned degree) {
    // p(m) by the bounded-part recurrence; coefficient 0 is 1.
    std::vector<BigInt> c(degree + 1, 0);
    c[0] = 1;
    for (unsigned part = 1; part <= degree; ++part)
        for (unsigned m = part; m <= degree; ++m) c[m] += c[m - part];
    return CoefficientSeries(std::move(c));
}

BigInt multipartition_count(unsigned n, unsigned r) {
    return partition_series(n).pow(r)[n];
}

} // namespace gsdet
