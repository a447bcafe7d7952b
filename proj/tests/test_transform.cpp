#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vwlab/transform.hpp"

using namespace vwlab;

namespace {

Rat coeff_of(const EtaBasisExpr& e, BasisSym s) {
    Rat total(0);
    for (const auto& t : canonical(e).terms) {
        if (t.sym == s) total = total + t.coeff;
    }
    return total;
}

}  // namespace

/* ---------------------------------------------------------------- */
/*  expression algebra                                               */
/* ---------------------------------------------------------------- */

TEST_CASE("canonical folds even sqrt(2) powers and merges keys") {
    EtaBasisExpr e{BasisSet::k3_rank2,
                   {{Rat(3), 0, 2, BasisSym::g_q2},     /* sqrt2^2 = 2 */
                    {Rat(1), 0, 0, BasisSym::g_q2},
                    {Rat(5), 0, 3, BasisSym::g_qhalf},  /* 5 sqrt2^3 = 10 sqrt2 */
                    {Rat(-7), 0, 0, BasisSym::g_mqhalf},
                    {Rat(7), 0, 0, BasisSym::g_mqhalf}}};
    const auto c = canonical(e);
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms[0].sym == BasisSym::g_q2);
    CHECK(c.terms[0].coeff == Rat(7));
    CHECK(c.terms[0].root2_parity == 0);
    CHECK(c.terms[1].sym == BasisSym::g_qhalf);
    CHECK(c.terms[1].coeff == Rat(10));
    CHECK(c.terms[1].root2_parity == 1);

    /* a symbol from the other basis is rejected */
    EtaBasisExpr bad{BasisSet::k3_rank2, {{Rat(1), 0, 0, BasisSym::f0}}};
    CHECK_THROWS_AS(canonical(bad), std::invalid_argument);
    EtaBasisExpr neg{BasisSet::k3_rank2, {{Rat(1), 0, -1, BasisSym::g_q2}}};
    CHECK_THROWS_AS(canonical(neg), std::invalid_argument);
}

TEST_CASE("expression sums scales and equality") {
    const auto a = k3_expr(Rat(1), Rat(2), Rat(3));
    const auto b = k3_expr(Rat(-1), Rat(0), Rat(4));
    const auto s = expr_sum(a, b);
    CHECK(coeff_of(s, BasisSym::g_q2) == Rat(0));
    CHECK(coeff_of(s, BasisSym::g_qhalf) == Rat(2));
    CHECK(coeff_of(s, BasisSym::g_mqhalf) == Rat(7));
    CHECK(expr_equal(expr_scaled(a, Rat(2)), expr_sum(a, a)));
    CHECK(!expr_equal(a, b));
    CHECK_THROWS_AS(expr_sum(a, p2_expr(Rat(1), Rat(0))), std::invalid_argument);
}

TEST_CASE("printable form") {
    EtaBasisExpr e{BasisSet::k3_rank2, {{Rat(1, 4), -24, 0, BasisSym::g_q2}, {Rat(3), -24, 1, BasisSym::g_qhalf}}};
    CHECK(expr_str(e) == "1/4 (tau/i)^-12 * G(q^2) + 3*sqrt(2) (tau/i)^-12 * G(q^(1/2))");
    CHECK(expr_str(EtaBasisExpr{BasisSet::p2, {}}) == "0");
}

/* ---------------------------------------------------------------- */
/*  the S and T actions                                              */
/* ---------------------------------------------------------------- */

TEST_CASE("K3 rule table") {
    const auto rules = s_rules(BasisSet::k3_rank2);
    REQUIRE(rules.size() == 3);
    CHECK(rules[0].source == BasisSym::g_q2);
    CHECK(rules[0].target == BasisSym::g_qhalf);
    CHECK(rules[0].scalar == Rat(4096));
    CHECK(rules[0].weight_shift_half == -24);
    CHECK(rules[1].source == BasisSym::g_qhalf);
    CHECK(rules[1].target == BasisSym::g_q2);
    CHECK(rules[1].scalar == Rat(1, 4096));
    CHECK(rules[2].source == BasisSym::g_mqhalf);
    CHECK(rules[2].target == BasisSym::g_mqhalf);
    CHECK(rules[2].scalar == Rat(1));
}

TEST_CASE("P^2 rule table is the Zagier matrix") {
    const auto rules = s_rules(BasisSet::p2);
    REQUIRE(rules.size() == 4);
    for (const auto& r : rules) {
        CHECK(r.weight_shift_half == 3);
        CHECK(r.root2_parity == 1);
        /* every entry is -1/2 sqrt2 = -1/sqrt2 up to the f1->f1 sign */
        const Rat want = (r.source == BasisSym::f1 && r.target == BasisSym::f1) ? Rat(1, 2) : Rat(-1, 2);
        CHECK(r.scalar == want);
    }
}

TEST_CASE("S squares to the identity up to the weight tag") {
    const auto e = k3_expr(Rat(1, 4), Rat(1, 2), Rat(1, 2));
    const auto ss = s_transform(s_transform(e));
    EtaBasisExpr want = e;
    for (auto& t : want.terms) t.weight_half = -48;
    CHECK(expr_equal(ss, canonical(want)));

    const auto p = p2_expr(Rat(5), Rat(-3));
    const auto pp = s_transform(s_transform(p));
    EtaBasisExpr pw = p;
    for (auto& t : pw.terms) t.weight_half = 6;
    CHECK(expr_equal(pp, canonical(pw)));
}

TEST_CASE("the scalar identity behind the rank-2 prediction") {
    const auto img = s_transform(k3_expr(Rat(1, 4), Rat(1, 2), Rat(1, 2)));
    const auto scaled = expr_scaled(img, Rat(2048)); /* 2^11 */
    CHECK(coeff_of(scaled, BasisSym::g_q2) == Rat(1, 4));
    CHECK(coeff_of(scaled, BasisSym::g_qhalf) == Rat(2097152)); /* 2^21 */
    CHECK(coeff_of(scaled, BasisSym::g_mqhalf) == Rat(1024));   /* 2^10 */
    for (const auto& t : scaled.terms) CHECK(t.weight_half == -24);
}

TEST_CASE("T swaps the two half-period symbols and squares to one") {
    const auto e = k3_expr(Rat(1), Rat(2), Rat(3));
    const auto te = t_transform_basis(e);
    CHECK(coeff_of(te, BasisSym::g_q2) == Rat(1));
    CHECK(coeff_of(te, BasisSym::g_qhalf) == Rat(3));
    CHECK(coeff_of(te, BasisSym::g_mqhalf) == Rat(2));
    CHECK(expr_equal(t_transform_basis(te), e));
    CHECK_THROWS_AS(t_transform_basis(p2_expr(Rat(1), Rat(1))), std::invalid_argument);
}

TEST_CASE("the symbolic T action matches the series-level phase twist") {
    const Rat prec(5);
    const auto e = k3_expr(Rat(1, 4), Rat(1, 2), Rat(1, 2));
    const auto lhs = k3_expr_to_series(t_transform_basis(e), prec);
    const auto rhs = certify_rational(t_transform(lift_to_order(k3_expr_to_series(e, prec), 2)));
    CHECK(series_equal(lhs, rhs).equal);
}

/* ---------------------------------------------------------------- */
/*  q-expansion of basis expressions                                 */
/* ---------------------------------------------------------------- */

TEST_CASE("expansion rules out mixed tags") {
    EtaBasisExpr mixed{BasisSet::k3_rank2,
                       {{Rat(1), 0, 0, BasisSym::g_q2}, {Rat(1), -24, 0, BasisSym::g_qhalf}}};
    CHECK_THROWS_AS(k3_expr_to_series(mixed, Rat(4)), std::logic_error);
    EtaBasisExpr rooty{BasisSet::k3_rank2, {{Rat(1), 0, 1, BasisSym::g_q2}}};
    CHECK_THROWS_AS(k3_expr_to_series(rooty, Rat(4)), std::logic_error);
    CHECK_THROWS_AS(k3_expr_to_series(p2_expr(Rat(1), Rat(0)), Rat(4)), std::invalid_argument);
    CHECK_THROWS_AS(k3_expr_to_series(k3_expr(Rat(1), Rat(0), Rat(0)), Rat(1)), std::invalid_argument);
}

TEST_CASE("expansion of the trivial-determinant combination") {
    const auto f = k3_expr_to_series(k3_expr(Rat(1, 4), Rat(1, 2), Rat(1, 2)), Rat(5));
    const auto c0 = coeff_if_known(f, Rat(0));
    REQUIRE(c0.has_value());
    CHECK(*cyc_is_rational(*c0) == Rat(1, 4));
    const auto c2 = coeff_if_known(f, Rat(2));
    REQUIRE(c2.has_value());
    CHECK(*cyc_is_rational(*c2) == Rat(30));
}

/* ---------------------------------------------------------------- */
/*  bundled verifications                                            */
/* ---------------------------------------------------------------- */

TEST_CASE("the rank-2 S-duality battery passes") {
    const auto r = verify_su2_k3_sduality(Rat(5));
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 5);
}

TEST_CASE("a corrupted rule scalar is caught and located") {
    const auto r = verify_su2_k3_sduality(Rat(5), true);
    CHECK(!r.all_pass());
    bool scalar_named = false;
    for (const auto& c : r.checks) {
        if (c.id == "k3-s-scalar") {
            CHECK(!c.pass);
            scalar_named = c.detail.find("G(q^(1/2))") != std::string::npos;
        }
    }
    CHECK(scalar_named);
}

TEST_CASE("even and odd combinations transform with the census weights") {
    const auto r = verify_even_odd_transforms();
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 3);
}

TEST_CASE("the P^2 battery passes") {
    const auto r = verify_p2_sduality(12);
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 10);
    CHECK_THROWS_AS(verify_p2_sduality(2), std::invalid_argument);
}
