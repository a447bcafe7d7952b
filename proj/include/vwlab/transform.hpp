#pragma once

/*
 * Symbolic S/T calculus on two finite bases of eta quotients:
 *
 *   k3_rank2: { G(q^2), G(q^{1/2}), G(-q^{1/2}) }
 *   p2:       { f0, f1 }   (holomorphic parts of Zagier's pair)
 *
 * A term is (coeff, weight_half, root2_parity, symbol) representing
 * coeff * (tau/i)^{weight_half/2} * sqrt(2)^{root2_parity} * symbol; the
 * weight and the dyadic root are never evaluated numerically, they are
 * carried as tags (even root powers fold into the rational coefficient).
 *
 * S acts by   G(q^2)      -> 2^{12}  (tau/i)^{-12} G(q^{1/2})
 *             G(q^{1/2})  -> 2^{-12} (tau/i)^{-12} G(q^2)
 *             G(-q^{1/2}) ->         (tau/i)^{-12} G(-q^{1/2})
 * and on (f0, f1) by (tau/i)^{3/2} (-1/sqrt2) [[1,1],[1,-1]].
 */

#include <string>
#include <vector>

#include "vwlab/series.hpp"

namespace vwlab {

enum class BasisSet { k3_rank2, p2 };
enum class BasisSym { g_q2, g_qhalf, g_mqhalf, f0, f1 };

std::string basis_sym_name(BasisSym s);

struct BasisTerm {
    Rat coeff;
    int weight_half = 0;   /* exponent of (tau/i)^{1/2} */
    int root2_parity = 0;  /* 0 or 1 */
    BasisSym sym = BasisSym::g_q2;
};

struct EtaBasisExpr {
    BasisSet set = BasisSet::k3_rank2;
    std::vector<BasisTerm> terms;
};

/* merge equal (sym, weight, parity) keys, fold even root powers, drop
 * zeros, sort canonically */
EtaBasisExpr canonical(const EtaBasisExpr& e);

bool expr_equal(const EtaBasisExpr& a, const EtaBasisExpr& b);
std::string expr_str(const EtaBasisExpr& e);

EtaBasisExpr expr_scaled(const EtaBasisExpr& e, const Rat& s);
EtaBasisExpr expr_sum(const EtaBasisExpr& a, const EtaBasisExpr& b);

/* convenience: weight-0, parity-0 coefficient vectors */
EtaBasisExpr k3_expr(const Rat& c_q2, const Rat& c_qhalf, const Rat& c_mqhalf);
EtaBasisExpr p2_expr(const Rat& c_f0, const Rat& c_f1);

/* ------------------------------------------------------------------ */
/*  modular actions                                                    */
/* ------------------------------------------------------------------ */

/* one scalar rewrite rule; the rule tables square to the identity */
struct STransformRule {
    BasisSym source;
    Rat scalar;
    int weight_shift_half;
    int root2_parity;
    BasisSym target;
};

std::vector<STransformRule> s_rules(BasisSet set);

EtaBasisExpr s_transform(const EtaBasisExpr& e);

/* test hook: apply a custom rule table (used to demonstrate that a wrong
 * scalar is caught by the verifiers) */
EtaBasisExpr s_transform_with(const EtaBasisExpr& e, const std::vector<STransformRule>& rules);

/* T swaps G(q^{1/2}) <-> G(-q^{1/2}) and fixes G(q^2) */
EtaBasisExpr t_transform_basis(const EtaBasisExpr& e);

/* expand a K3-basis expression as a q-series dressed with q^2; all terms
 * must carry one uniform weight tag */
PuiseuxSeries k3_expr_to_series(const EtaBasisExpr& e, const Rat& prec);

/* ------------------------------------------------------------------ */
/*  verification reports                                               */
/* ------------------------------------------------------------------ */

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    void add(std::string id, bool pass, std::string detail);
};

/* S-duality for the rank-2 trivial-determinant K3 series: scalar identity
 * 2^11 * S(1/4, 1/2, 1/2) = (1/4, 2^21, 2^10), uniform weight -12, the
 * basis involution, and the q-expansion cross-check against the series
 * builders.  inject_fault corrupts one rule scalar to prove the check
 * bites. */
Report verify_su2_k3_sduality(const Rat& prec, bool inject_fault = false);

/* S on the even/odd optimal-gerbe combinations plus the census-weighted
 * aggregate identity */
Report verify_even_odd_transforms();

/* the P^2 story: the four series identifications (n_terms Hurwitz terms
 * each), the Zagier matrix structure, its involution, the dressed display
 * signs, and the leading Hurwitz coefficients of f0, f1 */
Report verify_p2_sduality(long n_terms);

}  // namespace vwlab
