#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "gsdet/determinant.hpp"
#include "gsdet/enumerate.hpp"
#include "gsdet/multinomial.hpp"
#include "gsdet/text.hpp"
#include "oracles.hpp"

using namespace gsdet;

namespace {

Multipartition MP(const char* text) { return parse_multipartition(text); }

WreathParams params_of(const Multipartition& m) { return WreathParams{m.n(), m.r()}; }

// all multipartitions of P(n,r)
template <typename Fn>
void walk(unsigned n, unsigned r, Fn&& fn) {
    for (const Composition& a : compositions_of(n, r)) {
        std::vector<const std::vector<Partition>*> lists(r);
        for (unsigned k = 0; k < r; ++k) lists[k] = &partitions_of(a[k]);
        std::vector<std::size_t> idx(r, 0);
        for (;;) {
            std::vector<Partition> comps;
            for (unsigned k = 0; k < r; ++k) comps.push_back((*lists[k])[idx[k]]);
            fn(Multipartition(std::move(comps)));
            unsigned k = r;
            bool done = true;
            while (k > 0) {
                --k;
                if (++idx[k] < lists[k]->size()) { done = false; break; }
                idx[k] = 0;
            }
            if (done) break;
        }
    }
}

} // namespace

TEST_CASE("wreath dimension") {
    CHECK(dim_wreath(MP("1;1"), {2, 2}) == 2);
    CHECK(dim_wreath(MP("3;;"), {3, 3}) == 1);
    CHECK(dim_wreath(MP("1;1;1"), {3, 3}) == 6);
    CHECK(dim_wreath(MP(";;"), {0, 3}) == 1);
    CHECK_THROWS_AS(dim_wreath(MP("1;1"), WreathParams{2, 3}), std::invalid_argument);
}

TEST_CASE("zeta exponent") {
    CHECK(x_lambda(MP("1;1"), {2, 2}) == 1);
    CHECK(x_lambda(MP("2;"), {2, 2}) == 0);
    for (unsigned r = 1; r <= 5; ++r) {
        std::vector<Partition> comps{Partition({4})};
        comps.resize(r);
        CHECK(x_lambda(Multipartition(comps), {4, r}) == 0);
    }
    CHECK(x_lambda(MP(";2"), {2, 2}) == 1);
}

TEST_CASE("sign exponent and the unordered pair reading") {
    CHECK(y_lambda(MP("1,1;"), {2, 2}) == 1);
    // the discriminating example: the ordered-sum reading would give 0
    CHECK(y_lambda(MP("1;1"), {2, 2}) == 1);
    CHECK(y_lambda(MP("4;;"), {4, 3}) == 0);
}

TEST_CASE("determinant census at n=2, r=2") {
    std::map<DetCharacter, int> census;
    walk(2, 2, [&](const Multipartition& m) { ++census[det_irrep(m, {2, 2})]; });
    CHECK(census[DetCharacter{0, 0}] == 1);
    CHECK(census[DetCharacter{0, 1}] == 1);
    CHECK(census[DetCharacter{1, 0}] == 1);
    CHECK(census[DetCharacter{1, 1}] == 2);
    CHECK(det_irrep(MP(";2"), {2, 2}) == DetCharacter{1, 0});
}

TEST_CASE("character labels") {
    CHECK(DetCharacter{0, 0}.label() == "1");
    CHECK(DetCharacter{0, 1}.label() == "-1");
    CHECK(DetCharacter{2, 0}.label() == "zeta^2");
    CHECK(DetCharacter{1, 1}.label() == "-zeta^1");
}

TEST_CASE("transfer map exponent vectors") {
    const TransferImage t22 = transfer_image(Composition({2, 2}), {4, 2});
    CHECK(t22.tau_exponents == std::vector<BigInt>{1, 1});

    const TransferImage t11 = transfer_image(Composition({1, 1}), {2, 2});
    CHECK(t11.e_exponents == std::vector<BigInt>{1, 1});
    CHECK(t11.tau_exponents == std::vector<BigInt>{0, 0});  // trivial below n=2

    const TransferImage t1 = transfer_image(Composition({1, 0, 0}), {1, 3});
    CHECK(t1.tau_exponents == std::vector<BigInt>{0, 0, 0});

    // exponents are the decremented multinomials, via the chain oracle
    const Composition a({3, 2, 1});
    const TransferImage t = transfer_image(a, {6, 3});
    for (unsigned k = 0; k < 3; ++k) {
        std::vector<long long> b2(a.entries().begin(), a.entries().end());
        b2[k] -= 2;
        CHECK(t.tau_exponents[k] == oracles::chain_multinomial(4, b2));
        std::vector<long long> b1(a.entries().begin(), a.entries().end());
        b1[k] -= 1;
        CHECK(t.e_exponents[k] == oracles::chain_multinomial(5, b1));
    }
}

TEST_CASE("character values at the cyclic generator and a transposition") {
    CHECK(char_at_e1(MP("1;1"), {2, 2}) == std::vector<BigInt>{1, 1});
    CHECK(char_at_e1(MP(";2"), {2, 2}) == std::vector<BigInt>{0, 1});
    CHECK(char_at_e1(MP("4;;"), {4, 3}) == std::vector<BigInt>{1, 0, 0});
    CHECK_THROWS_AS(char_at_e1(MP(";"), WreathParams{0, 2}), std::invalid_argument);

    CHECK(char_at_s1(MP("1,1;"), {2, 2}) == -1);
    CHECK(char_at_s1(MP("2;"), {2, 2}) == 1);
    CHECK(char_at_s1(MP("1;1"), {2, 2}) == 0);
    CHECK_THROWS_AS(char_at_s1(MP("1;"), WreathParams{1, 2}), std::invalid_argument);

    // coefficient identity: the multiplicities sum to the dimension, and
    // the transposition value shares the dimension's parity
    for (unsigned r : {2u, 3u}) {
        for (unsigned n = 1; n <= 6; ++n) {
            walk(n, r, [&](const Multipartition& m) {
                BigInt sum = 0;
                for (const BigInt& c : char_at_e1(m, params_of(m))) sum += c;
                CHECK(sum == dim_wreath(m, params_of(m)));
                if (n >= 2)
                    CHECK((dim_wreath(m, params_of(m)) - char_at_s1(m, params_of(m))) % 2 == 0);
            });
        }
    }
}

TEST_CASE("the two determinant routes agree") {
    CHECK(det_via_eigenvalues(MP("1;1"), {2, 2}) == DetCharacter{1, 1});
    CHECK(det_via_eigenvalues(MP("5;;"), {5, 3}) == DetCharacter{0, 0});

    int count = 0;
    walk(4, 3, [&](const Multipartition& m) {
        ++count;
        CHECK(det_irrep(m, {4, 3}) == det_via_eigenvalues(m, {4, 3}));
    });
    CHECK(count == 51);
}

TEST_CASE("component permutation") {
    const Multipartition m = MP("3;1;");
    std::vector<unsigned> identity{0, 1, 2};
    CHECK(apply_permutation(m, identity) == m);

    const Multipartition swapped = apply_permutation(MP("2;1"), std::vector<unsigned>{1, 0});
    CHECK(swapped == MP("1;2"));

    // cycle sending slot 0 to 1, 1 to 2, 2 to 0
    const Multipartition cycled = apply_permutation(m, std::vector<unsigned>{1, 2, 0});
    CHECK(cycled == MP(";3;1"));

    CHECK_THROWS_AS(apply_permutation(m, std::vector<unsigned>{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(apply_permutation(m, std::vector<unsigned>{0, 1}), std::invalid_argument);
}

TEST_CASE("component conjugation") {
    CHECK(apply_conjugation(MP("1,1;")) == MP("2;"));
    CHECK(apply_conjugation(MP("2,1;2,1")) == MP("2,1;2,1"));
    CHECK(apply_conjugation(MP("3,1;2")) == MP("2,1,1;1,1"));
}

TEST_CASE("pair count: decremented multinomials vs the rational route") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; ++it) {
        const unsigned n = rng() % 13;
        const unsigned r = 1 + rng() % 6;
        std::vector<unsigned> e(r, 0);
        for (unsigned b = 0; b < n; ++b) ++e[rng() % r];
        const Composition a(e);
        CHECK(orbit_count(a) == oracles::rational_pair_count(a));
    }
}

TEST_CASE("conjugation and swap shifts (sampled)") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 2000; ++it) {
        const unsigned n = 2 + rng() % 9;
        const unsigned r = 2 + rng() % 5;
        std::vector<unsigned> slots(r, 0);
        for (unsigned b = 0; b < n; ++b) ++slots[rng() % r];
        std::vector<Partition> comps;
        for (unsigned k = 0; k < r; ++k) {
            const auto& list = partitions_of(slots[k]);
            comps.push_back(list[rng() % list.size()]);
        }
        const Multipartition lambda(comps);
        const WreathParams params{n, r};

        const Multipartition sigma = apply_conjugation(lambda);
        CHECK(x_lambda(sigma, params) == x_lambda(lambda, params));
        CHECK(y_lambda(sigma, params) ==
              residue(BigInt(y_lambda(lambda, params)) + dim_wreath(lambda, params), 2));

        const unsigned i = rng() % (r - 1);
        std::vector<unsigned> image(r);
        for (unsigned k = 0; k < r; ++k) image[k] = k;
        std::swap(image[i], image[i + 1]);
        const Multipartition pi = apply_permutation(lambda, image);
        CHECK(y_lambda(pi, params) == y_lambda(lambda, params));
        BigInt fprod = 1;
        for (const Partition& p : lambda.components()) fprod *= dim_sym(p);
        const BigInt shift = fprod * (x_sum(pi.underlying()) - x_sum(lambda.underlying()));
        CHECK(x_lambda(pi, params) == residue(BigInt(x_lambda(lambda, params)) + shift, r));
    }
}
