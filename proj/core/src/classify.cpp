#include "gsdet/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsdet/multinomial.hpp"
#include "gsdet/partition.hpp"

namespace gsdet {

namespace {

void require_odd_prime(unsigned r) {
    if (r < 3 || !is_prime(r))
        throw std::invalid_argument("requires an odd prime r");
}

// bits of v above its lowest set bit
std::uint64_t upper_bits(unsigned v) {
    if (v == 0) return 0;
    return static_cast<std::uint64_t>(v) & (static_cast<std::uint64_t>(v) - 1);
}

} // namespace

bool residue_class_test(const Composition& a, unsigned r) {
    require_odd_prime(r);
    const long long n = a.n();
    unsigned cls = 0;
    bool first = true;
    for (unsigned k = 0; k < a.r(); ++k) {
        std::vector<long long> b(a.entries().begin(), a.entries().end());
        b[k] -= 1;
        const unsigned v = multinomial_mod_p_lucas(n - 1, b, r);
        if (first) {
            cls = v;
            first = false;
        } else if (v != cls) {
            return false;
        }
    }
    return true;
}

std::set<int> y_parity_conditions(const Composition& a) {
    std::set<int> held;
    const auto& e = a.entries();
    const unsigned r = a.r();

    for (unsigned i = 0; i < r && !held.contains(1); ++i)
        for (unsigned j = i + 1; j < r; ++j)
            if (e[i] != 0 && e[j] != 0 && (upper_bits(e[i]) & upper_bits(e[j])) != 0) {
                held.insert(1);
                break;
            }

    unsigned two_mod4 = 0, odd = 0;
    bool has3 = false, has1 = false;
    for (unsigned v : e) {
        if (v % 4 == 2) ++two_mod4;
        if (v % 2 == 1) ++odd;
        if (v % 4 == 3) has3 = true;
        if (v % 4 == 1) has1 = true;
    }
    if (two_mod4 >= 3) held.insert(2);
    // distinct indices are automatic: the three residues are distinct mod 4
    if (has3 && two_mod4 >= 1 && has1) held.insert(3);
    if (odd >= 4) held.insert(4);
    return held;
}

ClassificationVerdict table1_classify(const Composition& a, unsigned r) {
    if (a.r() != r) throw std::invalid_argument("composition length must equal r");
    if (!a.weakly_decreasing())
        throw std::invalid_argument("classify expects the weakly decreasing representative");

    ClassificationVerdict v;
    v.a = a;
    v.r = r;
    const bool rp = r >= 3 && is_prime(r);
    const auto& e = a.entries();

    if (rp) v.thm_x_collapse = residue_class_test(a, r);
    v.y_even_conditions = y_parity_conditions(a);

    // Row predicates.
    if (rp && !e.empty() && e.front() == e.back() && e.front() >= 2) v.table_rows.insert(1);
    if (rp) {
        bool all_cong = true;
        for (unsigned k = 1; k < r; ++k)
            if (e[k] % r != e[0] % r) all_cong = false;
        if (all_cong) v.table_rows.insert(2);
    }
    if (rp) {
        auto row3 = [&](unsigned threshold) {
            for (unsigned i = 0; i < r; ++i) {
                if (e[i] % r != 0) continue;
                unsigned shared = 0;
                bool ok = true;
                for (unsigned k = 0; k < r && ok; ++k) {
                    if (k == i) continue;
                    const unsigned s = e[k] % r;
                    if (s <= threshold) ok = false;
                    else if (shared == 0) shared = s;
                    else if (s != shared) ok = false;
                }
                if (ok && r > 1) return true;
            }
            return false;
        };
        const bool strict = row3((r + 1) / 2);   // s > ceil(r/2)
        const bool loose = row3((r - 1) / 2);    // s > floor(r/2)
        if (strict) v.table_rows.insert(3);
        if (strict != loose)
            v.boundary_note =
                "row 3 threshold is ambiguous for this input: matches with s > floor(r/2) "
                "but not with s > ceil(r/2); the stricter reading was applied";
    }
    for (unsigned i = 0; i < r && !v.table_rows.contains(4); ++i)
        for (unsigned j = i + 1; j < r; ++j)
            if (e[i] == e[j] && e[i] > 2) {
                v.table_rows.insert(4);
                break;
            }
    if (v.y_even_conditions.contains(4)) v.table_rows.insert(5);
    if (v.y_even_conditions.contains(2)) v.table_rows.insert(6);
    if (std::count_if(e.begin(), e.end(), [](unsigned x) { return x % 4 == 3; }) >= 2)
        v.table_rows.insert(7);
    if (v.y_even_conditions.contains(3)) v.table_rows.insert(8);

    // Possible-value set: start unconstrained, intersect each implication.
    // Rows narrow to {1}, {1,-1} (x = 0) or {zeta^s} (y = 0); the x-collapse
    // and y-parity tests impose x = 0 / y = 0 directly.
    bool x_zero = v.thm_x_collapse;
    bool y_zero = !v.y_even_conditions.empty();
    bool only_trivial = false;
    for (int row : v.table_rows) {
        switch (row) {
        case 1: only_trivial = true; break;
        case 2:
        case 3: x_zero = true; break;
        default: y_zero = true; break;
        }
    }
    for (unsigned x = 0; x < r; ++x) {
        for (unsigned y = 0; y < 2; ++y) {
            if (only_trivial && (x != 0 || y != 0)) continue;
            if (x_zero && x != 0) continue;
            if (y_zero && y != 0) continue;
            v.possible.insert(DetCharacter{x, y});
        }
    }
    return v;
}

std::set<DetCharacter> conservative_possible_values(const ClassificationVerdict& v) {
    const auto& e = v.a.entries();
    const bool all_equal = !e.empty() && e.front() == e.back();
    // Row 2's congruence argument needs an invertible shared residue; with
    // residue 0 the zero-entry convention breaks it unless all entries are
    // literally equal.
    const bool row2_sound =
        v.table_rows.contains(2) && (all_equal || (v.r > 0 && e.front() % v.r != 0));
    const bool x_zero = v.thm_x_collapse || v.table_rows.contains(3) || row2_sound;
    const bool y_zero = !v.y_even_conditions.empty();
    const bool only_trivial = v.table_rows.contains(1);
    std::set<DetCharacter> out;
    for (unsigned x = 0; x < v.r; ++x) {
        for (unsigned y = 0; y < 2; ++y) {
            if (only_trivial && (x != 0 || y != 0)) continue;
            if (x_zero && x != 0) continue;
            if (y_zero && y != 0) continue;
            out.insert(DetCharacter{x, y});
        }
    }
    return out;
}

} // namespace gsdet
