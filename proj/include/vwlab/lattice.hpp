#pragma once

/*
 * The K3 intersection lattice U + U + U + (-E8) + (-E8), the census of
 * residue classes of its quadratic form, gerbe class counts, and the
 * quadratic Gauss sums weighting the twisted partition functions.
 */

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>

#include "vwlab/cyclotomic.hpp"

namespace vwlab {

inline constexpr int k3_rank = 22;

using K3Gram = std::array<std::array<long, k3_rank>, k3_rank>;

/* hyperbolic planes [[0,1],[1,0]] first, then two negated E8 Cartan blocks */
K3Gram k3_gram();

struct LatticeChecks {
    bool even = false;
    mpz_class det;
    int sig_pos = 0;
    int sig_neg = 0;
    bool ok() const { return even && (det == 1 || det == -1) && sig_pos == 3 && sig_neg == 19; }
};

LatticeChecks k3_lattice_checks();

/* ------------------------------------------------------------------ */
/*  residue-class censuses                                             */
/* ------------------------------------------------------------------ */

/* counts of g in (Z_2)^22 by g.g mod 4: the zero class, nonzero classes
 * with g.g = 0 (even), and classes with g.g = 2 (odd) */
struct ClassCensus {
    mpz_class n_zero;
    mpz_class n_even;
    mpz_class n_odd;
};

/* per-block distribution of g^T Gram g, convolved across the five
 * orthogonal blocks */
ClassCensus k3_class_census_bruteforce();

/* the same census by walking all 2^22 residue vectors (audit mode) */
ClassCensus k3_class_census_full_enumeration();

/* distribution of g^T Gram g mod `modulus` over all r^22 classes,
 * computed blockwise; r = 2 pairs with modulus 4, odd r with modulus r */
std::map<long, mpz_class> k3_quadratic_distribution(long r, long modulus);

/* ------------------------------------------------------------------ */
/*  gerbe counts                                                       */
/* ------------------------------------------------------------------ */

struct GerbeCensus {
    long r = 2;
    long rho = 11;
    mpz_class n_trivial;         /* 1 */
    mpz_class n_ess_nontrivial;  /* r^rho - 1 */
    mpz_class n_optimal;         /* r^22 - r^rho */
    mpz_class n_zero_class;      /* 1 */
    std::optional<mpz_class> n_even;  /* r = 2 only */
    std::optional<mpz_class> n_odd;   /* r = 2 only */
};

/* rho in [0,20] or 22 (supersingular); rho = 21 is rejected since no K3
 * realizes it */
GerbeCensus gerbe_census(long rho, long r);

/* ------------------------------------------------------------------ */
/*  Gauss sums                                                         */
/* ------------------------------------------------------------------ */

/*
 * Checks sum_{g in (Z_r)^22} e^{pi i (r-1) m g^2 / r} = eps(m)^22 r^11.
 * For r = 2 the sum is evaluated from the mod-4 census with signs; for an
 * odd prime r it is evaluated exactly in Q(zeta_r) via the block-convolved
 * residue distribution.
 */
bool gauss_sum_check(long m, long r);

/* the exact value of the Gauss sum above as an element of Q(zeta_r)
 * (order 1 for r = 2); exposed for the partition-function weights */
CycNum gauss_sum_value(long m, long r);

}  // namespace vwlab
