#pragma once

/*
 * Truncated Puiseux series: sparse terms c_e q^e with e in (1/D)Z and
 * coefficients in Q(zeta_N), plus an explicit validity window.
 *
 *   trunc       coefficients at exponents >= trunc are unknown
 *   floor_order optional; when set, coefficients at exponents < floor_order
 *               are unknown as well
 *
 * The floor covers generating functions that extend downward (the
 * Hurwitz-class-number series on P^2 run q^{top}, q^{top-1}, ... with
 * finitely many terms above any bound); ordinary q-expansions leave it
 * unset, meaning "exactly zero below the lowest stored term".
 *
 * Exponents are stored as integer numerators over the fixed ramification D
 * (key k represents q^{k/D}).  No zero coefficient is ever stored, so
 * equality on a common validity window is structural.
 */

#include <map>
#include <optional>
#include <string>

#include "vwlab/cyclotomic.hpp"
#include "vwlab/rat.hpp"

namespace vwlab {

struct SeriesContext {
    long D = 1;  /* ramification: exponents lie in (1/D)Z */
    long N = 1;  /* cyclotomic order of the coefficient field */
    Rat T;       /* truncation order */
};

void validate_context(const SeriesContext& ctx);

struct PuiseuxSeries {
    long D = 1;
    long N = 1;
    std::map<long, CycNum> c;
    Rat trunc;
    std::optional<Rat> floor_order;

    Rat exp_of(long key) const { return Rat(key, D); }
    bool empty() const { return c.empty(); }
};

/* ------------------------------------------------------------------ */
/*  construction                                                       */
/* ------------------------------------------------------------------ */

PuiseuxSeries zero_series(const SeriesContext& ctx);
PuiseuxSeries one_series(const SeriesContext& ctx);

/* exp*D must be an integer */
PuiseuxSeries monomial(const SeriesContext& ctx, const Rat& exp, const CycNum& coeff);

/* drops zeros and terms outside the validity window */
void canonicalize(PuiseuxSeries& f);

/* ------------------------------------------------------------------ */
/*  ring operations                                                    */
/* ------------------------------------------------------------------ */

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries sub(const PuiseuxSeries& a, const PuiseuxSeries& b);

/* Cauchy product; both operands must be bounded below (no floor), and the
 * result records the guaranteed-valid order min(a.trunc+val(b), b.trunc+val(a)). */
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);

/* multiplicative inverse; lowest-order coefficient must be a unit */
PuiseuxSeries invert(const PuiseuxSeries& a);

/* coefficient-wise scalar multiple (validity window unchanged) */
PuiseuxSeries scale(const PuiseuxSeries& f, const CycNum& s);
PuiseuxSeries scale(const PuiseuxSeries& f, const Rat& s);

/* exact multiplication by q^s (s*D must be an integer); shifts the window */
PuiseuxSeries shift(const PuiseuxSeries& f, const Rat& s);

/* re-express over a new ramification; every exponent must stay integral */
PuiseuxSeries reramify(const PuiseuxSeries& f, long new_D);

/* embed the coefficients into Q(zeta_new_order); existing coefficients must
 * be rational-valued unless the orders already match */
PuiseuxSeries lift_to_order(const PuiseuxSeries& f, long new_order);

/* certify that every coefficient is rational-valued and return the series
 * over Q; failure throws logic_error naming the offending exponent */
PuiseuxSeries certify_rational(const PuiseuxSeries& f);

/* forget knowledge above new_trunc (must not exceed the current trunc) */
PuiseuxSeries truncate_to(const PuiseuxSeries& f, const Rat& new_trunc);

/* lowest stored exponent; throws on an empty series */
Rat val(const PuiseuxSeries& f);

/* nullopt when e is outside the validity window; otherwise the exact
 * coefficient (zero if no term is stored) */
std::optional<CycNum> coeff_if_known(const PuiseuxSeries& f, const Rat& e);

/* ------------------------------------------------------------------ */
/*  substitution and modular T action                                  */
/* ------------------------------------------------------------------ */

/*
 * q |-> zeta_{root_order}^{root_power} * q^{scale_num/scale_den}.
 *
 * A term c q^{k/D} maps to c * zeta^{root_power*k} * q^{k*scale_num/(D*scale_den)};
 * the branch convention ties the root exponent to the numerator k over the
 * SOURCE ramification, which makes the map a ring homomorphism for a fixed
 * source context and reduces to the literal substitution on integer
 * exponents stored at D = 1.  The result ramification is the minimal one
 * representing the rescaled exponents.
 */
PuiseuxSeries substitute(const PuiseuxSeries& f, long root_power, long root_order,
                         long scale_num, long scale_den);

/* T: tau |-> tau+1, i.e. the coefficient at q^{k/D} picks up zeta_D^k;
 * requires the coefficient field order to be divisible by D */
PuiseuxSeries t_transform(const PuiseuxSeries& f);

/* ------------------------------------------------------------------ */
/*  comparison                                                         */
/* ------------------------------------------------------------------ */

struct SeriesDiff {
    bool equal = true;
    bool window_empty = false;
    bool has_location = false;
    Rat exponent;      /* smallest discrepant exponent when !equal */
    std::string lhs;   /* both values rendered exactly */
    std::string rhs;
    std::string message;
};

/* compares coefficients on the intersection of validity windows */
SeriesDiff series_equal(const PuiseuxSeries& a, const PuiseuxSeries& b);

/* ------------------------------------------------------------------ */
/*  eta quotients and Hilbert scheme Euler numbers                     */
/* ------------------------------------------------------------------ */

/*
 * eta(q)^exponent = q^{exponent/24} prod_{k>=1} (1-q^k)^exponent.
 * The context ramification must represent exponent/24 (for exponent = -24
 * this is the series G(q) = q^{-1} prod (1-q^k)^{-24} with integer
 * exponents).  Rejected when ctx.T lies at or below the lowest exponent.
 */
PuiseuxSeries eta_power(long exponent, const SeriesContext& ctx);

/* prod_{k>=1}(1-q^k)^{-24} = sum_k chi(Hilb^k) q^k  (= q*G(q)) */
PuiseuxSeries hilbert_euler_gf(const SeriesContext& ctx);

/* chi(Hilb^k) of a K3 surface; 0 for k < 0 (empty Hilbert scheme) */
Rat hilbert_euler(long k);

}  // namespace vwlab
