#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "gsdet/ntable.hpp"
#include "gsdet/reference.hpp"

using namespace gsdet;

namespace {

std::string data_file(unsigned r) {
    return std::string(GSDET_DATA_DIR) + "/reference_r" + std::to_string(r) + ".csv";
}

} // namespace

TEST_CASE("shipped reference files match the embedded tables") {
    for (unsigned r : {2u, 3u, 5u, 7u}) {
        REQUIRE(has_reference_table(r));
        const ReferenceTable& ref = reference_table(r);
        std::ifstream in(data_file(r));
        REQUIRE(in.good());
        std::string header;
        std::getline(in, header);
        // column names mirror the census layout
        std::ostringstream want;
        want << "n,N_1";
        for (unsigned s = 1; s < r; ++s) want << ",N_zeta_" << s;
        for (unsigned s = 1; s < r; ++s) want << ",N_negzeta_" << s;
        want << ",N_neg1";
        CHECK(header == want.str());
        for (unsigned n = ref.n_min; n <= ref.n_max; ++n) {
            std::string line;
            REQUIRE(std::getline(in, line));
            std::ostringstream row;
            row << n;
            for (std::uint64_t v : ref.rows[n - ref.n_min]) row << ',' << v;
            CHECK(line == row.str());
        }
        std::string tail;
        CHECK_FALSE(std::getline(in, tail));
    }
}

TEST_CASE("every documented erratum names a real cell and differs from it") {
    for (const ReferenceErratum& e : reference_errata()) {
        REQUIRE(has_reference_table(e.r));
        const ReferenceTable& ref = reference_table(e.r);
        REQUIRE(e.n >= ref.n_min);
        REQUIRE(e.n <= ref.n_max);
        // the named column exists and carries the recorded published value
        NTable probe;
        probe.params = {e.n, e.r};
        probe.y_even.assign(e.r, 0);
        probe.y_odd.assign(e.r, 0);
        const auto cols = probe.columns();
        bool found = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].first != e.column) continue;
            found = true;
            CHECK(ref.rows[e.n - ref.n_min][c] == e.published);
        }
        CHECK(found);
        CHECK(e.published != e.enumerated);
        CHECK_FALSE(e.evidence.empty());
        CHECK(is_erratum_cell(e.r, e.n, e.column));
    }
    CHECK(reference_errata().size() == 6);
    CHECK_FALSE(is_erratum_cell(2, 6, "N_1"));
}

TEST_CASE("enumeration agrees with every non-erratum cell in scope") {
    // small scope here; the acceptance suite covers the full tables
    for (unsigned r : {2u, 3u}) {
        const ReferenceTable& ref = reference_table(r);
        for (unsigned n = 1; n <= 6; ++n) {
            const NTable t = n_table_aggregate({n, r});
            const auto cols = t.columns();
            const auto& row = ref.rows[n - ref.n_min];
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (is_erratum_cell(r, n, cols[c].first)) continue;
                CHECK(cols[c].second == row[c]);
            }
        }
    }
}
