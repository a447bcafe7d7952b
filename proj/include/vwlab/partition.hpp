#pragma once

/*
 * Builders for the partition functions stated in closed form: the
 * Hurwitz-class-number series on P^2 and P(2,2,2), and the K3 twisted
 * series per gerbe type together with their SU(r)/Z_r aggregates.
 *
 * K3 series live at ramification r with rational coefficients; the
 * cyclotomic sums they contain must collapse, and every builder certifies
 * that (a failure is an internal-inconsistency error, not bad input).
 * The P^2 family descends (finitely many terms above any bound), so those
 * series carry a window floor and `n_terms` counts Hurwitz terms.
 */

#include <vector>

#include "vwlab/series.hpp"

namespace vwlab {

/* ------------------------------------------------------------------ */
/*  P^2 and P(2,2,2) vector-bundle series                              */
/* ------------------------------------------------------------------ */

/*
 * Z^{vb}_{c1}(q) = q^{c1^2/4 + 3 c1/2 + 2} * sum_{n=1}^{n_terms} t_n with
 *   t_n = 3 H(4n-1) q^{1/4-n}              (c1 odd)
 *   t_n = 3 (H(4n) - sigma_0(n)/2) q^{-n}  (c1 even).
 * drop_divisor removes the sigma_0 part (the strictly-semistable
 * contribution cancels it, so this is the modular-corrected variant).
 */
PuiseuxSeries z_vb_p2_c1(long c1, long n_terms, bool drop_divisor = false);

enum class C1Parity { even, odd };

/* representative c1 = 0 (even) or c1 = 1 (odd) */
PuiseuxSeries z_vb_p2(C1Parity parity, long n_terms, bool drop_divisor = false);

/* P(2,2,2) series for c1 = 0 or 2 mod 4 and inertia component lambda;
 * equals the P^2 series with c1 -> c1/2 + lambda */
PuiseuxSeries z_vb_p222(int c1_mod4, int lambda, long n_terms, bool drop_divisor = false);

/* ------------------------------------------------------------------ */
/*  K3 twisted invariant tables                                        */
/* ------------------------------------------------------------------ */

enum class DetTag { trivial, gerbe_line_bundle };

struct VWRow {
    long rank = 2;
    DetTag det = DetTag::trivial;
    Rat c2;
    Rat value;
    bool provisional = false;
};

struct VWTable {
    std::vector<VWRow> rows;
};

/*
 * Invariants of an essentially trivial (nontrivial) gerbe at integer c2.
 * The generating series gives chi(Hilb^{r c2 - r^2 + 1}) (zero below the
 * empty Hilbert scheme).  For r = 2 that covers every c2.  For an odd
 * prime only the c2 = 0 and c2 = r-1 residues mod r are emitted by
 * default; as_stated additionally emits the remaining residues with the
 * literal pattern chi(Hilb^{r^2 k - (r^2 - r j)}), marked provisional,
 * since that pattern is inconsistent with the generating series.
 */
VWTable vw_essentially_trivial(long r, long c2_max, bool as_stated = false);

/* invariants of an optimal gerbe: value (1/r) chi(Hilb^k) at
 * c2 = r + (k-1)/r, k = 0, 1, ... while c2 <= c2_max */
VWTable vw_optimal(long r, const Rat& c2_max);

/* bridges for the table <-> series round-trip */
PuiseuxSeries series_from_table(const VWTable& t, long D, const Rat& trunc);
VWTable table_from_series(const PuiseuxSeries& f, long rank, DetTag det);

/* ------------------------------------------------------------------ */
/*  K3 series builders (exponents below prec; prec > r - 1/r)          */
/* ------------------------------------------------------------------ */

/* (1/r) q^r G(zeta_r^m q^{1/r}); coefficients in Q(zeta_r) */
PuiseuxSeries z_optimal_twisted_sign(long r, long m, const Rat& prec);

/* the untwisted case m = 0 */
PuiseuxSeries z_optimal(long r, const Rat& prec);

/* (1/r) q^r sum_{j=0}^{r-1} G(zeta_r^j q^{1/r}), certified rational */
PuiseuxSeries z_ess_trivial(long r, const Rat& prec);

/* (1/r^2) q^r G(q^r) + (1/r) q^r sum_{j=0}^{r-1} G(zeta_r^j q^{1/r}) */
PuiseuxSeries z_k3_trivial_gerbe(long r, const Rat& prec);

/* (1/r^2) q^r G(q^r) + q^r (r^21 G(q^{1/r}) + r^{rho-1} sum_{j>=1} G(zeta^j q^{1/r}));
 * cross-checked against the gerbe sum
 * Z_trivial + (r^rho - 1) Z_ess + (r^22 - r^rho) Z_opt before returning */
PuiseuxSeries z_k3_surzr(long r, long rho, const Rat& prec);

/* (1/4) q^2 G(q^2) + q^2 (2^21 G(q^{1/2}) + 2^10 G(-q^{1/2})) */
PuiseuxSeries z_k3_vw_prediction(const Rat& prec);

/* Z' = Z_0 + n_even Z_even + n_odd Z_odd (r = 2), or the Gauss-sum
 * weighted aggregate over twisted optimal series (odd prime r); checked
 * against the closed form with weights r^21 and r^10 before returning */
PuiseuxSeries z_k3_complex_structure_free(long r, const Rat& prec);

}  // namespace vwlab
