#pragma once

#include <optional>
#include <set>
#include <string>

#include "gsdet/composition.hpp"
#include "gsdet/determinant.hpp"

namespace gsdet {

// True iff the r values C(n-1; a_1,..,a_k-1,..,a_r), k = 1..r, lie in one
// residue class mod r (slots with a_k = 0 contribute the value 0). When
// true, every multipartition on any ordering of a has x = 0 mod r.
// Throws unless r is an odd prime.
bool residue_class_test(const Composition& a, unsigned r);

// Which of the four sufficient conditions for "y always even" hold:
//  1: some pair a_i, a_j (i != j, both nonzero) shares a binary digit other
//     than its lowest set bit;
//  2: at least three entries are congruent to 2 mod 4;
//  3: three distinct entries are congruent to 3, 2, 1 mod 4 respectively;
//  4: at least four entries are odd.
std::set<int> y_parity_conditions(const Composition& a);

// Classification of the possible determinant values of every multipartition
// over a composition class, from the composition alone. Row predicates:
//  1: all entries equal and >= 2 (r odd prime)           -> {1}
//  2: all entries congruent mod r (r odd prime)          -> {1, -1}
//  3: one slot divisible by r, the rest sharing residue s mod r with
//     s > ceil(r/2) (r odd prime)                        -> {1, -1}
//  4: two entries equal and > 2                          -> {zeta^s}
//  5: four odd entries                                   -> {zeta^s}
//  6: three entries congruent to 2 mod 4                 -> {zeta^s}
//  7: two entries congruent to 3 mod 4                   -> {zeta^s}
//  8: entries congruent to 3, 2, 1 mod 4                 -> {zeta^s}
// ({zeta^s} means all of zeta^1..zeta^r, i.e. y = 0.)
// The verdict set is the intersection over matching rows plus the
// residue-class and y-parity tests; rows claim possible values only, and
// soundness is checked against enumeration, never assumed.
struct ClassificationVerdict {
    Composition a;
    unsigned r = 0;
    bool thm_x_collapse = false;          // residue_class_test outcome
    std::set<int> y_even_conditions;      // y_parity_conditions outcome
    std::set<int> table_rows;             // matching rows of the table above
    std::set<DetCharacter> possible;      // all 2r values when unconstrained
    // Row 3's threshold is printed as ceil(r/2) in one place and floor(r/2)
    // in another; when the two readings disagree for this input, the
    // boundary case is flagged here instead of silently resolved.
    std::optional<std::string> boundary_note;
};

ClassificationVerdict table1_classify(const Composition& a, unsigned r);

// The verdict's possible-value set with the two known-defective row
// readings narrowed to their sound cases: row 2 implies x = 0 only when the
// shared residue is nonzero or all entries are literally equal, and row 4's
// y-claim counts only through the y-parity conditions. Enumeration
// cross-checks use this to tell documented published defects apart from
// implementation bugs (see docs/errata.md).
std::set<DetCharacter> conservative_possible_values(const ClassificationVerdict& verdict);

} // namespace gsdet
