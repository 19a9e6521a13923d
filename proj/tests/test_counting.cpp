#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsdet/counting.hpp"
#include "gsdet/ntable.hpp"
#include "gsdet/series.hpp"
#include "gsdet/text.hpp"

using namespace gsdet;

TEST_CASE("odd-dimension count for the symmetric group") {
    CHECK(count_odd_sym(1) == 1);
    CHECK(count_odd_sym(4) == 4);
    CHECK(count_odd_sym(6) == 8);
    CHECK(count_odd_sym(0) == 1);
    for (unsigned n = 1; n <= 12; ++n) {
        BigInt brute = 0;
        for (const Partition& lambda : partitions_of(n))
            if (dim_sym(lambda) % 2 == 1) ++brute;
        CHECK(count_odd_sym(n) == brute);
    }
}

TEST_CASE("chiral partition count") {
    CHECK(count_chiral_sym(2) == 1);
    CHECK(count_chiral_sym(3) == 2);
    CHECK(count_chiral_sym(4) == 3);  // (3,1), (2,2), (1,1,1,1)
    CHECK(count_chiral_sym(1) == 0);
    const std::vector<unsigned> table{1, 2, 3, 5, 4, 8, 12, 20, 8, 16, 24};  // n = 2..12
    for (unsigned n = 2; n <= 12; ++n) CHECK(count_chiral_sym(n) == table[n - 2]);
}

TEST_CASE("parity classes split as half the odd count") {
    const ChiralityClassCounts c2 = chirality_split_classes(2);
    CHECK(c2.f_odd_g_odd == 1);
    CHECK(c2.f_odd_g_even == 1);
    CHECK(c2.f_even_g_odd == 0);
    const ChiralityClassCounts c3 = chirality_split_classes(3);
    CHECK((c3.f_odd_g_odd == 1 && c3.f_odd_g_even == 1 && c3.f_even_g_odd == 1));
    const ChiralityClassCounts c4 = chirality_split_classes(4);
    CHECK((c4.f_odd_g_odd == 2 && c4.f_odd_g_even == 2 && c4.f_even_g_odd == 1));
    for (unsigned n = 2; n <= 12; ++n) {
        const ChiralityClassCounts c = chirality_split_classes(n);
        const BigInt a = count_odd_sym(n);
        CHECK(c.f_odd_g_odd == a / 2);
        CHECK(c.f_odd_g_even == a / 2);
        CHECK(c.f_even_g_odd == count_chiral_sym(n) - a / 2);
    }
}

TEST_CASE("odd-degree count for the wreath product") {
    CHECK(count_odd_wreath(1, 5) == 5);
    CHECK(count_odd_wreath(2, 3) == 6);
    CHECK(count_odd_wreath(4, 2) == 8);
    for (unsigned r : {2u, 3u, 5u})
        for (unsigned n = 1; n <= 9; ++n)
            CHECK(count_odd_wreath(n, r) == count_odd_wreath_bruteforce(n, r));
}

TEST_CASE("coprime-degree counts") {
    CHECK(mp_sym(4, 2) == 4);
    CHECK(mp_sym(3, 3) == 3);
    CHECK(mp_sym(1, 5) == 1);
    CHECK_THROWS_AS(mp_sym(4, 6), std::invalid_argument);

    CHECK(mp_wreath_formula(1, 3, 5) == 3);
    CHECK(mp_wreath_formula(1, 3, 2) == 3);
    CHECK(mp_wreath_formula(2, 2, 2) == 4);
    CHECK(mp_wreath_formula(0, 4, 3) == 1);
    CHECK_THROWS_AS(mp_wreath_formula(2, 2, 9), std::invalid_argument);

    for (unsigned r : {2u, 3u})
        for (unsigned p : {2u, 3u, 5u})
            for (unsigned n = 0; n <= 9; ++n)
                CHECK(mp_wreath_formula(n, r, p) == mp_wreath_bruteforce(n, r, p));
}

TEST_CASE("partition generating function") {
    const CoefficientSeries p = partition_series(10);
    const std::vector<BigInt> expected{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (unsigned d = 0; d <= 10; ++d) CHECK(p[d] == expected[d]);

    CHECK(multipartition_count(2, 2) == 5);
    CHECK(multipartition_count(4, 3) == 51);
    CHECK(multipartition_count(8, 5) == 6765);
    CHECK(multipartition_count(10, 7) == 192899);

    // pow by squaring equals iterated multiplication
    CoefficientSeries iter = CoefficientSeries::one(8);
    for (int k = 0; k < 5; ++k) iter = iter.mul(partition_series(8));
    CHECK(partition_series(8).pow(5).coefficients() == iter.coefficients());
}

TEST_CASE("two-case parity split formula") {
    CHECK(chirality_split(Composition({1, 1}), 2).odd_count == 1);
    CHECK(chirality_split(Composition({2, 0}), 2).odd_count == 1);
    // degenerate r=1: odd count is the chiral count
    for (unsigned n = 2; n <= 9; ++n)
        CHECK(chirality_split(Composition({n}), 1).odd_count == count_chiral_sym(n));
    // the published row-4 counterexample family
    CHECK(chirality_split(Composition({4, 4, 0}), 3).odd_count == 16);

    // formula vs single-ordering census, every decreasing composition
    for (unsigned r : {2u, 3u, 5u}) {
        for (unsigned n = 0; n <= 7; ++n) {
            for (const Composition& a : decreasing_compositions(n, r)) {
                DetAccumulator acc(r);
                accumulate_dets(a, r, acc);
                BigInt odd = 0;
                for (std::uint64_t v : acc.y_odd) odd += v;
                const ChiralitySplit split = chirality_split(a, r);
                CHECK(split.odd_count == odd);
                CHECK(split.even_count + split.odd_count == multipartitions_on_ordering(a));
            }
        }
    }
}

TEST_CASE("composition-scope census") {
    // three orderings of (1,1,0), one multipartition each, all with odd y
    const CompositionTable t = n_table_for_composition(Composition({1, 1, 0}), {2, 3});
    CHECK(t.table.y_even == std::vector<BigInt>{0, 0, 0});
    CHECK(t.table.y_odd == std::vector<BigInt>{1, 1, 1});
    for (const FormulaCheck& c : t.checks) CHECK(c.pass);

    const CompositionTable t20 = n_table_for_composition(Composition({2, 0}), {2, 2});
    CHECK(t20.table.y_even == std::vector<BigInt>{1, 1});
    CHECK(t20.table.y_odd == std::vector<BigInt>{1, 1});

    // single nonzero entry: r orderings times p(n) multipartitions
    const CompositionTable t5 = n_table_for_composition(Composition({5, 0, 0}), {5, 3});
    CHECK(t5.table.total() == BigInt(3) * partition_count(5));

    CHECK_THROWS_AS(n_table_for_composition(Composition({0, 2}), WreathParams{2, 2}),
                    std::invalid_argument);
}

TEST_CASE("aggregate census rows") {
    const NTable t22 = n_table_aggregate({2, 2});
    CHECK(t22.y_even == std::vector<BigInt>{1, 1});
    CHECK(t22.y_odd == std::vector<BigInt>{1, 2});

    const NTable t33 = n_table_aggregate({3, 3});
    CHECK(t33.y_even == std::vector<BigInt>{1, 4, 4});
    CHECK(t33.y_odd == std::vector<BigInt>{3, 5, 5});

    const NTable t45 = n_table_aggregate({4, 5});
    for (unsigned s = 0; s < 5; ++s) {
        CHECK(t45.y_even[s] == 11);
        CHECK(t45.y_odd[s] == 27);
    }

    // the two aggregation paths agree
    for (unsigned r : {2u, 3u}) {
        for (unsigned n = 0; n <= 6; ++n) {
            const NTable direct = n_table_aggregate({n, r});
            const NTable summed = n_table_aggregate_by_composition({n, r});
            CHECK(direct.y_even == summed.y_even);
            CHECK(direct.y_odd == summed.y_odd);
            CHECK(direct.total() == multipartition_count(n, r));
        }
    }
}

TEST_CASE("aggregate clauses") {
    for (const InequalityClause& cl : verify_inequalities(WreathParams{2, 3})) {
        CHECK(cl.applicable);
        CHECK(cl.pass);
    }
    // n=1: each of the r one-box multipartitions has even y
    const NTable t15 = n_table_aggregate({1, 5});
    CHECK(t15.y_even == std::vector<BigInt>(5, 1));
    CHECK(t15.y_odd == std::vector<BigInt>(5, 0));
    for (const InequalityClause& cl : verify_inequalities(t15)) CHECK((!cl.applicable || cl.pass));

    // n=6, r=5: equal across nonzero exponents at 15, dominated by N_1=905
    const NTable t65 = n_table_aggregate({6, 5});
    CHECK(t65.y_even[0] == 905);
    for (unsigned s = 1; s < 5; ++s) CHECK(t65.y_even[s] == 15);
    for (const InequalityClause& cl : verify_inequalities(t65)) {
        if (cl.name == "equal-including-trivial-exponent") CHECK_FALSE(cl.applicable);
        else CHECK((cl.applicable && cl.pass));
    }
}

TEST_CASE("degenerate scopes") {
    // n = 0: the empty multipartition, trivial determinant
    const CompositionTable empty = n_table_for_composition(Composition({0, 0}), {0, 2});
    CHECK(empty.table.y_even == std::vector<BigInt>{1, 0});
    CHECK(empty.table.y_odd == std::vector<BigInt>{0, 0});
    for (const FormulaCheck& c : empty.checks) CHECK(c.pass);

    const NTable agg0 = n_table_aggregate({0, 3});
    CHECK(agg0.total() == 1);
    CHECK(agg0.y_even[0] == 1);
}

TEST_CASE("census is independent of the worker count") {
    const std::vector<Composition> all = compositions_of(7, 4);
    const DetAccumulator one = accumulate_over(all, 4, 1);
    for (unsigned workers : {2u, 3u, 8u}) {
        const DetAccumulator many = accumulate_over(all, 4, workers);
        CHECK(one.y_even == many.y_even);
        CHECK(one.y_odd == many.y_odd);
    }
}

TEST_CASE("resource cap") {
    EnumerationOptions opts;
    opts.cap = 10;
    CHECK_THROWS_AS(n_table_aggregate({6, 3}, opts), ResourceCapError);
    try {
        n_table_aggregate({6, 3}, opts);
    } catch (const ResourceCapError& e) {
        CHECK(e.estimate == 221);
        CHECK(e.cap == 10);
    }
}

TEST_CASE("census column order") {
    const NTable t = n_table_aggregate({2, 2});
    const auto cols = t.columns();
    REQUIRE(cols.size() == 4);
    CHECK(cols[0].first == "N_1");
    CHECK(cols[1].first == "N_zeta_1");
    CHECK(cols[2].first == "N_negzeta_1");
    CHECK(cols[3].first == "N_neg1");
    CHECK(cols[0].second == 1);
    CHECK(cols[2].second == 2);
}
