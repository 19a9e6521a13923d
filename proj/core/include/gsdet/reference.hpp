#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gsdet {

// The bundled reference tables: determinant censuses for r = 2, 3, 5, 7 and
// n = 1..10, exactly as published. Row layout matches NTable::columns():
// N_1, N_zeta_1.., N_negzeta_1.., N_neg1 (2r cells per row).
struct ReferenceTable {
    unsigned r;
    unsigned n_min;
    unsigned n_max;
    std::vector<std::vector<std::uint64_t>> rows;  // rows[n - n_min]
};

// r must be one of 2, 3, 5, 7.
const ReferenceTable& reference_table(unsigned r);
bool has_reference_table(unsigned r);

// Known transcription defects in the bundled tables: cells where the
// published value disagrees with exhaustive enumeration. Each entry carries
// the independent evidence for the enumeration value. See docs/errata.md.
struct ReferenceErratum {
    unsigned r;
    unsigned n;
    std::string column;        // CSV column name, e.g. "N_negzeta_1"
    std::uint64_t published;
    std::uint64_t enumerated;
    std::string evidence;
};

std::span<const ReferenceErratum> reference_errata();

// True if (r, n, column) is a documented erratum cell.
bool is_erratum_cell(unsigned r, unsigned n, const std::string& column);

} // namespace gsdet
