#include "gsdet/text.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace gsdet {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

// Nonnegative decimal integer; advances pos past the digits.
unsigned parse_uint(std::string_view text, std::size_t& pos, const char* what) {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        throw ParseError(std::string("expected ") + what, pos);
    unsigned long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > 1'000'000) throw ParseError(std::string(what) + " out of range", pos);
        ++pos;
    }
    return static_cast<unsigned>(v);
}

std::vector<unsigned> parse_uint_list(std::string_view text, std::size_t base,
                                      const char* what) {
    std::vector<unsigned> out;
    std::size_t pos = 0;
    for (;;) {
        out.push_back(parse_uint(text, pos, what));
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ',' or end", base + pos);
        ++pos;
        if (pos == text.size()) throw ParseError("trailing ','", base + pos - 1);
    }
    return out;
}

} // namespace

Partition parse_partition(std::string_view text) {
    if (text.empty()) return Partition{};
    std::vector<unsigned> parts = parse_uint_list(text, 0, "partition part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw ParseError("partition parts must be positive", 0);
        if (i > 0 && parts[i] > parts[i - 1])
            throw ParseError("partition parts must be weakly decreasing", 0);
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        out += (i ? "," : "") + std::to_string(p.parts()[i]);
    return out;
}

Composition parse_composition(std::string_view text) {
    if (text.empty()) throw ParseError("empty composition", 0);
    return Composition(parse_uint_list(text, 0, "composition entry"));
}

std::string format_composition(const Composition& a) {
    std::string out;
    for (unsigned k = 0; k < a.r(); ++k) out += (k ? "," : "") + std::to_string(a[k]);
    return out;
}

Multipartition parse_multipartition(std::string_view text) {
    std::vector<Partition> comps;
    std::size_t start = 0;
    for (;;) {
        std::size_t sep = text.find(';', start);
        std::string_view field =
            text.substr(start, sep == std::string_view::npos ? sep : sep - start);
        try {
            comps.push_back(parse_partition(field));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + e.position);
        }
        if (sep == std::string_view::npos) break;
        start = sep + 1;
    }
    return Multipartition(std::move(comps));
}

std::string format_multipartition(const Multipartition& lambda) {
    std::string out;
    for (unsigned k = 0; k < lambda.r(); ++k) {
        if (k) out += ";";
        out += format_partition(lambda[k]);
    }
    return out;
}

std::string ntable_csv_header(unsigned r) {
    std::string h = "n,r,scope";
    h += ",N_1";
    for (unsigned s = 1; s < r; ++s) h += ",N_zeta_" + std::to_string(s);
    for (unsigned s = 1; s < r; ++s) h += ",N_negzeta_" + std::to_string(s);
    h += ",N_neg1,total";
    return h;
}

std::string ntable_csv_row(const NTable& table) {
    std::ostringstream os;
    os << table.params.n << ',' << table.params.r << ',';
    if (table.scope)
        os << '"' << format_composition(*table.scope) << '"';
    else
        os << "aggregate";
    for (const auto& [name, value] : table.columns()) os << ',' << value;
    os << ',' << table.total();
    return os.str();
}

void write_table_csv(std::ostream& out, const std::vector<NTable>& rows) {
    if (rows.empty()) return;
    out << ntable_csv_header(rows.front().params.r) << '\n';
    for (const NTable& t : rows) out << ntable_csv_row(t) << '\n';
}

void write_logplot_csv(std::ostream& out, const std::vector<NTable>& rows) {
    if (rows.empty()) return;
    const unsigned r = rows.front().params.r;
    out << "n,log2_N_1";
    for (unsigned s = 1; s < r; ++s) out << ",log2_N_zeta_" << s;
    for (unsigned s = 1; s < r; ++s) out << ",log2_N_negzeta_" << s;
    out << ",log2_N_neg1\n";
    for (const NTable& t : rows) {
        out << t.params.n;
        for (const auto& [name, value] : t.columns()) {
            out << ',';
            if (value != 0) {
                // counts are well below 2^53; the double conversion is exact
                const double v = std::log2(static_cast<double>(value));
                out << std::fixed << std::setprecision(6) << v;
            }
        }
        out << '\n';
    }
}

void write_verify_report(std::ostream& out, const VerifyReport& report) {
    for (const VerifyItem& item : report.items) {
        const char* tag = item.status == VerifyStatus::Pass ? "PASS"
                          : item.status == VerifyStatus::Fail ? "FAIL"
                                                              : "KNOWN-DEFECT";
        out << tag << ' ' << item.identity << " [" << item.input << "] " << item.detail << '\n';
    }
    out << "summary: " << report.passed << " pass, " << report.failed << " fail, "
        << report.known_defects << " known published defect(s)\n";
}

void write_verdict(std::ostream& out, const ClassificationVerdict& verdict) {
    out << "composition: " << format_composition(verdict.a) << " (n=" << verdict.a.n()
        << ", r=" << verdict.r << ")\n";
    out << "x-collapse (same residue class): " << (verdict.thm_x_collapse ? "yes" : "no") << '\n';
    out << "y-even conditions held:";
    if (verdict.y_even_conditions.empty()) out << " none";
    for (int c : verdict.y_even_conditions) out << ' ' << c;
    out << '\n';
    out << "matching rows:";
    if (verdict.table_rows.empty()) out << " none";
    for (int rw : verdict.table_rows) out << ' ' << rw;
    out << '\n';
    out << "possible determinant values:";
    for (const DetCharacter& d : verdict.possible) out << ' ' << d.label();
    out << '\n';
    if (verdict.boundary_note) out << "note: " << *verdict.boundary_note << '\n';
}

} // namespace gsdet
