#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gsdet/classify.hpp"
#include "gsdet/composition.hpp"
#include "gsdet/multipartition.hpp"
#include "gsdet/ntable.hpp"
#include "gsdet/partition.hpp"
#include "gsdet/verify.hpp"

namespace gsdet {

// Text grammars (bit-exact; used by the CLI and golden files):
//   partition       3,1,1        empty string = empty partition
//   composition     2,1,0
//   multipartition  2,1;;1       fields split by ';', one partition each;
//                                r is the field count

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;  // 0-based offset into the input
};

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

Composition parse_composition(std::string_view text);
std::string format_composition(const Composition& a);

Multipartition parse_multipartition(std::string_view text);
std::string format_multipartition(const Multipartition& lambda);

// NTable CSV. Header:
//   n,r,scope,N_1,N_zeta_1..,N_negzeta_1..,N_neg1,total
// scope is "aggregate" or the quoted composition text. Exact integers, no
// scientific notation; '\n' line ends; byte-stable.
std::string ntable_csv_header(unsigned r);
std::string ntable_csv_row(const NTable& table);

// Census-table CSV matching the reference layout: one aggregate row per n.
void write_table_csv(std::ostream& out, const std::vector<NTable>& rows);

// Companion plot data: n plus log2 of each count, empty cells for zeros.
void write_logplot_csv(std::ostream& out, const std::vector<NTable>& rows);

// Human-readable verification report; one line per item plus a summary.
void write_verify_report(std::ostream& out, const VerifyReport& report);

// Classification verdict as text.
void write_verdict(std::ostream& out, const ClassificationVerdict& verdict);

} // namespace gsdet
