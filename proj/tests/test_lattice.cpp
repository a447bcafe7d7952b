#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vwlab/lattice.hpp"

#include <numeric>

using namespace vwlab;

/* ---------------------------------------------------------------- */
/*  the K3 intersection lattice                                      */
/* ---------------------------------------------------------------- */

TEST_CASE("Gram matrix layout: three hyperbolic planes and two E8 blocks") {
    const auto g = k3_gram();
    /* symmetric */
    for (int i = 0; i < k3_rank; ++i)
        for (int j = 0; j < k3_rank; ++j) CHECK(g[i][j] == g[j][i]);
    /* hyperbolic planes on the first six coordinates */
    for (int p = 0; p < 3; ++p) {
        CHECK(g[2 * p][2 * p] == 0);
        CHECK(g[2 * p][2 * p + 1] == 1);
        CHECK(g[2 * p + 1][2 * p + 1] == 0);
    }
    /* E8 blocks carry diagonal -2 */
    for (int i = 6; i < k3_rank; ++i) CHECK(g[i][i] == -2);
    /* no coupling between the two E8 blocks */
    for (int i = 6; i < 14; ++i)
        for (int j = 14; j < k3_rank; ++j) CHECK(g[i][j] == 0);
}

TEST_CASE("lattice sanity: even, unimodular, signature (3,19)") {
    const auto c = k3_lattice_checks();
    CHECK(c.even);
    CHECK(c.det == mpz_class(-1)); /* (-1)^19 from the negative part */
    CHECK(c.sig_pos == 3);
    CHECK(c.sig_neg == 19);
    CHECK(c.ok());
}

/* ---------------------------------------------------------------- */
/*  counting classes by the parity of the self-intersection          */
/* ---------------------------------------------------------------- */

TEST_CASE("mod-4 census via convolution of residue distributions") {
    const auto c = k3_class_census_bruteforce();
    CHECK(c.n_zero == mpz_class(1));
    CHECK(c.n_even == mpz_class(2098175));
    CHECK(c.n_odd == mpz_class(2096128));
    CHECK(c.n_zero + c.n_even + c.n_odd == mpz_class(1) << 22);
}

TEST_CASE("direct enumeration of (Z/2)^22 agrees with the convolution") {
    const auto full = k3_class_census_full_enumeration();
    const auto conv = k3_class_census_bruteforce();
    CHECK(full.n_zero == conv.n_zero);
    CHECK(full.n_even == conv.n_even);
    CHECK(full.n_odd == conv.n_odd);
}

TEST_CASE("residue distributions cover the whole group") {
    const auto d2 = k3_quadratic_distribution(2, 4);
    mpz_class total = 0;
    for (const auto& [res, n] : d2) {
        CHECK(res >= 0);
        CHECK(res < 4);
        CHECK(res % 2 == 0); /* even lattice: Q(v) is even */
        total += n;
    }
    CHECK(total == mpz_class(1) << 22);

    const auto d3 = k3_quadratic_distribution(3, 3);
    mpz_class total3 = 0;
    for (const auto& [res, n] : d3) total3 += n;
    mpz_class p22;
    mpz_ui_pow_ui(p22.get_mpz_t(), 3, 22);
    CHECK(total3 == p22);

    CHECK_THROWS_AS(k3_quadratic_distribution(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(k3_quadratic_distribution(2, 1), std::invalid_argument);
}

/* ---------------------------------------------------------------- */
/*  gerbe class counting                                             */
/* ---------------------------------------------------------------- */

TEST_CASE("rank-2 gerbe census at Picard number 11") {
    const auto c = gerbe_census(11, 2);
    CHECK(c.r == 2);
    CHECK(c.rho == 11);
    CHECK(c.n_trivial == mpz_class(1));
    CHECK(c.n_ess_nontrivial == mpz_class(2047));          /* 2^11 - 1 */
    CHECK(c.n_optimal == mpz_class(4192256));              /* 2^11 (2^11 - 1) */
    CHECK(c.n_trivial + c.n_ess_nontrivial + c.n_optimal == mpz_class(1) << 22);
    REQUIRE(c.n_even.has_value());
    REQUIRE(c.n_odd.has_value());
    CHECK(*c.n_even == mpz_class(2098175));                /* (2^22 + 2^11)/2 - 1 */
    CHECK(*c.n_odd == mpz_class(2096128));                 /* (2^22 - 2^11)/2 */
    CHECK(c.n_zero_class == mpz_class(1));
}

TEST_CASE("gerbe census at other Picard numbers and ranks") {
    const auto c0 = gerbe_census(0, 2);
    CHECK(c0.n_ess_nontrivial == mpz_class(0));
    CHECK(c0.n_optimal == (mpz_class(1) << 22) - 1);

    const auto c22 = gerbe_census(22, 2);
    CHECK(c22.n_ess_nontrivial == (mpz_class(1) << 22) - 1);
    CHECK(c22.n_optimal == mpz_class(0));

    const auto c3 = gerbe_census(20, 3);
    CHECK(c3.n_ess_nontrivial == mpz_class("3486784400"));  /* 3^20 - 1 */
    CHECK(c3.n_optimal == mpz_class("27894275208"));        /* 3^20 (3^2 - 1) + ... */
    mpz_class t22;
    mpz_ui_pow_ui(t22.get_mpz_t(), 3, 22);
    CHECK(c3.n_trivial + c3.n_ess_nontrivial + c3.n_optimal == t22);
    CHECK(!c3.n_even.has_value()); /* parity split only defined at r = 2 */

    CHECK_THROWS_AS(gerbe_census(21, 2), std::invalid_argument);
    CHECK_THROWS_AS(gerbe_census(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gerbe_census(23, 2), std::invalid_argument);
    CHECK_THROWS_AS(gerbe_census(11, 4), std::invalid_argument);
    CHECK_THROWS_AS(gerbe_census(11, 1), std::invalid_argument);
}

/* ---------------------------------------------------------------- */
/*  Gauss sums over the discriminant group                           */
/* ---------------------------------------------------------------- */

TEST_CASE("twisted Gauss sums evaluate to r^11") {
    for (long r : {2L, 3L, 5L}) {
        for (long m = 1; m < r; ++m) {
            CAPTURE(r);
            CAPTURE(m);
            CHECK(gauss_sum_check(m, r));
        }
    }
}

TEST_CASE("the r=3 Gauss sum is visibly rational") {
    const auto v = gauss_sum_value(1, 3);
    const auto r = cyc_is_rational(v);
    REQUIRE(r.has_value());
    CHECK(*r == Rat(177147)); /* 3^11 */

    CHECK_THROWS_AS(gauss_sum_value(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_value(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_value(1, 4), std::invalid_argument);
}
