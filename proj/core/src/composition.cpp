#include "gsdet/composition.hpp"

#include <algorithm>
#include <map>

#include "gsdet/multinomial.hpp"

namespace gsdet {

Composition::Composition(std::vector<unsigned> entries) : entries_(std::move(entries)) {
    for (unsigned e : entries_) n_ += e;
}

bool Composition::weakly_decreasing() const {
    return std::is_sorted(entries_.rbegin(), entries_.rend());
}

Composition Composition::sorted_decreasing() const {
    std::vector<unsigned> s = entries_;
    std::sort(s.rbegin(), s.rend());
    return Composition(std::move(s));
}

std::vector<Composition> Composition::distinct_orderings() const {
    std::vector<unsigned> s = entries_;
    std::sort(s.begin(), s.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

BigInt Composition::ordering_count() const {
    std::map<unsigned, unsigned> mult;
    for (unsigned e : entries_) ++mult[e];
    BigInt res = factorial(r());
    for (const auto& [value, count] : mult) res /= factorial(count);
    return res;
}

namespace {

void emit_compositions(unsigned remaining, unsigned slots, std::vector<unsigned>& stem,
                       std::vector<Composition>& out) {
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(stem);
        return;
    }
    if (slots == 1) {
        stem.push_back(remaining);
        out.emplace_back(stem);
        stem.pop_back();
        return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
        stem.push_back(v);
        emit_compositions(remaining - v, slots - 1, stem, out);
        stem.pop_back();
    }
}

void emit_decreasing(unsigned remaining, unsigned slots, unsigned max_value,
                     std::vector<unsigned>& stem, std::vector<Composition>& out) {
    if (slots == 0) {
        if (remaining == 0) out.emplace_back(stem);
        return;
    }
    for (unsigned v = std::min(remaining, max_value) + 1; v-- > 0;) {
        stem.push_back(v);
        emit_decreasing(remaining - v, slots - 1, v, stem, out);
        stem.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(unsigned n, unsigned r) {
    std::vector<Composition> out;
    std::vector<unsigned> stem;
    stem.reserve(r);
    emit_compositions(n, r, stem, out);
    return out;
}

std::vector<Composition> decreasing_compositions(unsigned n, unsigned r) {
    std::vector<Composition> out;
    std::vector<unsigned> stem;
    stem.reserve(r);
    emit_decreasing(n, r, n, stem, out);
    return out;
}

} // namespace gsdet
