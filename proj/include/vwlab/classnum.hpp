#pragma once

/*
 * Hurwitz class numbers and small multiplicative helpers.
 *
 * H(Delta), Delta > 0: the number of SL_2(Z)-classes of positive definite
 * integral binary quadratic forms A X^2 + B X Y + C Y^2 of discriminant
 * B^2 - 4AC = -Delta, counted with weight 1, except that classes of
 * multiples of X^2 + Y^2 count 1/2 and multiples of X^2 + X Y + Y^2
 * count 1/3.  H(Delta) = 0 when Delta = 1, 2 (mod 4).  Delta = 0 is
 * rejected; the -1/12 convention for H(0) is left to callers that need
 * it (none here do).
 */

#include "vwlab/rat.hpp"

namespace vwlab {

Rat hurwitz_class_number(long delta);

/* Independent cross-check of hurwitz_class_number: enumerates the full
 * boundary closure |B| <= A <= C without sign tie-breaking and weights
 * each form by 2/|Aut| divided by the number of closure representatives
 * of its class, with |Aut| found by brute force over small SL_2(Z)
 * matrices. */
Rat hurwitz_class_number_crosscheck(long delta);

/* number of positive divisors; n >= 1 */
long sigma0(long n);

/* Legendre symbol (a/p) for an odd prime p */
int legendre(long a, long p);

/* sign epsilon(m) attached to the quadratic Gauss sums over (Z_r)^22:
 * (m/2 | r) for even m and ((m+r)/2 | r) for odd m, with r an odd prime
 * and 1 <= m <= r-1 */
int legendre_epsilon(long m, long r);

}  // namespace vwlab
