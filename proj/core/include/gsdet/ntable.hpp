#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsdet/bigint.hpp"
#include "gsdet/composition.hpp"
#include "gsdet/counting.hpp"
#include "gsdet/determinant.hpp"
#include "gsdet/enumerate.hpp"
#include "gsdet/multipartition.hpp"

namespace gsdet {

// Determinant census for one (n, r): counts of irreducibles per determinant
// character, either over all of P(n,r) (aggregate scope) or over the
// multipartitions on all orderings of one weakly decreasing composition.
struct NTable {
    WreathParams params;
    std::optional<Composition> scope;  // nullopt = aggregate
    std::vector<BigInt> y_even;        // index = zeta exponent, size r
    std::vector<BigInt> y_odd;

    const BigInt& count(DetCharacter det) const;
    BigInt total() const;

    // The 2r presentation columns, in order:
    // N_1, N_zeta_1..N_zeta_{r-1}, N_negzeta_1..N_negzeta_{r-1}, N_neg1.
    std::vector<std::pair<std::string, BigInt>> columns() const;
};

// One closed formula evaluated against the enumeration census.
struct FormulaCheck {
    std::string name;      // e.g. "orderings-sum", "residue-class-collapse"
    bool pass = false;
    bool known_defect = false;  // printed formula fails; documented erratum
    std::string detail;    // inputs and both values on mismatch
};

struct CompositionTable {
    NTable table;
    ChiralitySplit split;
    std::vector<FormulaCheck> checks;
};

// Brute-force census over all orderings of a (which must be weakly
// decreasing) with every applicable closed formula evaluated against it.
CompositionTable n_table_for_composition(const Composition& a, const WreathParams& params,
                                         const EnumerationOptions& opts = {});

// Aggregate census over all of P(n,r) by direct enumeration.
NTable n_table_aggregate(const WreathParams& params, const EnumerationOptions& opts = {});

// Aggregate census as the sum of composition tables; must equal
// n_table_aggregate (asserted by the verification suite).
NTable n_table_aggregate_by_composition(const WreathParams& params,
                                        const EnumerationOptions& opts = {});

// The three aggregate-table clauses for odd prime r:
//  (i)  N_{zeta^s} equal across 1<=s<r, and likewise N_{-zeta^s};
//  (ii) if n < r, the run extends to s = r (N_zeta = N_1, N_-zeta = N_-1);
//  (iii) if r does not divide n, N_{zeta^s} <= N_1 and N_{-zeta^s} <= N_-1.
struct InequalityClause {
    std::string name;
    bool applicable = false;
    bool pass = false;
    std::string witness;  // populated on failure
};

std::vector<InequalityClause> verify_inequalities(const NTable& aggregate);
std::vector<InequalityClause> verify_inequalities(const WreathParams& params,
                                                  const EnumerationOptions& opts = {});

} // namespace gsdet
