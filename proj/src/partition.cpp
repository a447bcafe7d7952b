#include "vwlab/partition.hpp"

#include <stdexcept>
#include <string>

#include "vwlab/classnum.hpp"
#include "vwlab/lattice.hpp"

namespace vwlab {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

void require_prime_rank(long r) {
    if (!is_prime(r)) {
        throw std::invalid_argument("rank must be prime, got " + std::to_string(r));
    }
}

/* every K3 builder needs room for the pole of G at q^{r - 1/r} */
void require_k3_precision(long r, const Rat& prec) {
    const Rat lowest(r * r - 1, r);
    if (!(lowest < prec)) {
        throw std::invalid_argument("precision " + prec.str() + " too small for rank " + std::to_string(r) +
                                    "; need more than " + lowest.str());
    }
}

Rat rat_pow(long base, long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(mpz_class(1), p) : Rat(p);
}

/* (1/r^2) q^r G(q^r), exponents below prec, rational coefficients */
PuiseuxSeries k3_coarse_piece(long r, const Rat& prec) {
    const Rat tg = (prec - Rat(r)) / Rat(r);
    auto g = eta_power(-24, SeriesContext{1, 1, tg});
    auto a = substitute(g, 0, 1, r, 1);
    a = reramify(a, r);
    a = scale(a, Rat(1, r * r));
    return shift(a, Rat(r));
}

/* q^r G(zeta_r^j q^{1/r}) over Q(zeta_r) (order 2 when r = 2) */
PuiseuxSeries k3_fine_piece(long r, long j, const Rat& prec) {
    const long n = (r == 2) ? 2 : r;
    const Rat tg = (prec - Rat(r)) * Rat(r);
    auto g = eta_power(-24, SeriesContext{1, n, tg});
    auto s = substitute(g, j, r, 1, r);
    return shift(s, Rat(r));
}

/* the theorem's closed form: (1/r^2) q^r G(q^r) +
 * q^r (r^21 G(q^{1/r}) + r^{rho-1} sum_{j=1}^{r-1} G(zeta^j q^{1/r})) */
PuiseuxSeries k3_closed_form(long r, long rho, const Rat& prec) {
    PuiseuxSeries out = k3_coarse_piece(r, prec);
    out = add(out, certify_rational(scale(k3_fine_piece(r, 0, prec), rat_pow(r, 21))));
    if (r > 1) {
        PuiseuxSeries twisted = zero_series(SeriesContext{r, (r == 2) ? 2 : r, prec});
        for (long j = 1; j < r; ++j) {
            twisted = add(twisted, k3_fine_piece(r, j, prec));
        }
        out = add(out, scale(certify_rational(twisted), rat_pow(r, rho - 1)));
    }
    return out;
}

}  // namespace

/* ------------------------------------------------------------------ */
/*  P^2 and P(2,2,2)                                                   */
/* ------------------------------------------------------------------ */

PuiseuxSeries z_vb_p2_c1(long c1, long n_terms, bool drop_divisor) {
    if (n_terms < 1) {
        throw std::invalid_argument("need at least one class-number term, got " + std::to_string(n_terms));
    }
    const bool odd = ((c1 % 2) + 2) % 2 == 1;
    const Rat prefactor = Rat(c1 * c1, 4) + Rat(3 * c1, 2) + Rat(2);
    const Rat top_shift = odd ? Rat(1, 4) : Rat(0);

    PuiseuxSeries f;
    f.D = 4;
    f.N = 1;
    f.trunc = prefactor + Rat(1);
    f.floor_order = prefactor + top_shift - Rat(n_terms);
    for (long n = 1; n <= n_terms; ++n) {
        Rat coeff;
        if (odd) {
            coeff = Rat(3) * hurwitz_class_number(4 * n - 1);
        } else {
            coeff = Rat(3) * (drop_divisor ? hurwitz_class_number(4 * n)
                                           : hurwitz_class_number(4 * n) - Rat(sigma0(n), 2));
        }
        if (coeff.is_zero()) continue;
        const Rat exp = prefactor + top_shift - Rat(n);
        f.c[(exp * Rat(4)).num().get_si()] = CycNum(1, coeff);
    }
    return f;
}

PuiseuxSeries z_vb_p2(C1Parity parity, long n_terms, bool drop_divisor) {
    return z_vb_p2_c1(parity == C1Parity::odd ? 1 : 0, n_terms, drop_divisor);
}

PuiseuxSeries z_vb_p222(int c1_mod4, int lambda, long n_terms, bool drop_divisor) {
    if (c1_mod4 != 0 && c1_mod4 != 2) {
        throw std::invalid_argument("first Chern class must be 0 or 2 mod 4, got " + std::to_string(c1_mod4));
    }
    if (lambda != 0 && lambda != 1) {
        throw std::invalid_argument("inertia component must be 0 or 1, got " + std::to_string(lambda));
    }
    return z_vb_p2_c1(c1_mod4 / 2 + lambda, n_terms, drop_divisor);
}

/* ------------------------------------------------------------------ */
/*  K3 twisted invariant tables                                        */
/* ------------------------------------------------------------------ */

VWTable vw_essentially_trivial(long r, long c2_max, bool as_stated) {
    require_prime_rank(r);
    if (c2_max < 0) throw std::invalid_argument("c2_max must be nonnegative");
    VWTable t;
    for (long c2 = 0; c2 <= c2_max; ++c2) {
        VWRow row;
        row.rank = r;
        row.det = DetTag::gerbe_line_bundle;
        row.c2 = Rat(c2);
        if (r == 2) {
            row.value = hilbert_euler(2 * c2 - 3);
        } else {
            const long j = c2 % r;
            if (j == 0 || j == r - 1) {
                row.value = hilbert_euler(r * c2 - r * r + 1);
            } else if (as_stated) {
                const long k = c2 / r;
                row.value = hilbert_euler(r * r * k - (r * r - r * j));
                row.provisional = true;
            } else {
                continue;
            }
        }
        t.rows.push_back(row);
    }
    return t;
}

VWTable vw_optimal(long r, const Rat& c2_max) {
    require_prime_rank(r);
    VWTable t;
    for (long k = 0;; ++k) {
        const Rat c2 = Rat(r) + Rat(k - 1, r);
        if (c2_max < c2) break;
        VWRow row;
        row.rank = r;
        row.det = DetTag::trivial;
        row.c2 = c2;
        row.value = Rat(1, r) * hilbert_euler(k);
        t.rows.push_back(row);
    }
    return t;
}

PuiseuxSeries series_from_table(const VWTable& t, long D, const Rat& trunc) {
    PuiseuxSeries f = zero_series(SeriesContext{D, 1, trunc});
    for (const auto& row : t.rows) {
        if (row.provisional) continue;
        if (!(row.c2 < trunc) || row.value.is_zero()) continue;
        const Rat key = row.c2 * Rat(D);
        if (!key.is_integer()) {
            throw std::invalid_argument("table c2 " + row.c2.str() + " is not representable with ramification " +
                                        std::to_string(D));
        }
        f.c[key.num().get_si()] = CycNum(1, row.value);
    }
    return f;
}

VWTable table_from_series(const PuiseuxSeries& f, long rank, DetTag det) {
    const PuiseuxSeries g = certify_rational(f);
    VWTable t;
    for (const auto& [k, c] : g.c) {
        VWRow row;
        row.rank = rank;
        row.det = det;
        row.c2 = Rat(k, g.D);
        row.value = *cyc_is_rational(c);
        t.rows.push_back(row);
    }
    return t;
}

/* ------------------------------------------------------------------ */
/*  K3 series builders                                                 */
/* ------------------------------------------------------------------ */

PuiseuxSeries z_optimal_twisted_sign(long r, long m, const Rat& prec) {
    require_prime_rank(r);
    if (m < 0 || m >= r) {
        throw std::invalid_argument("twist must satisfy 0 <= m < r, got " + std::to_string(m));
    }
    require_k3_precision(r, prec);
    return scale(k3_fine_piece(r, m, prec), Rat(1, r));
}

PuiseuxSeries z_optimal(long r, const Rat& prec) { return z_optimal_twisted_sign(r, 0, prec); }

PuiseuxSeries z_ess_trivial(long r, const Rat& prec) {
    require_prime_rank(r);
    require_k3_precision(r, prec);
    PuiseuxSeries sum = zero_series(SeriesContext{r, (r == 2) ? 2 : r, prec});
    for (long j = 0; j < r; ++j) {
        sum = add(sum, z_optimal_twisted_sign(r, j, prec));
    }
    try {
        return certify_rational(sum);
    } catch (const std::logic_error& e) {
        throw std::logic_error(std::string("essentially trivial series: ") + e.what());
    }
}

PuiseuxSeries z_k3_trivial_gerbe(long r, const Rat& prec) {
    require_prime_rank(r);
    require_k3_precision(r, prec);
    return add(k3_coarse_piece(r, prec), z_ess_trivial(r, prec));
}

PuiseuxSeries z_k3_surzr(long r, long rho, const Rat& prec) {
    require_prime_rank(r);
    require_k3_precision(r, prec);
    const GerbeCensus counts = gerbe_census(rho, r);

    const PuiseuxSeries closed = k3_closed_form(r, rho, prec);

    PuiseuxSeries gerbe_sum = z_k3_trivial_gerbe(r, prec);
    gerbe_sum = add(gerbe_sum, scale(z_ess_trivial(r, prec), Rat(counts.n_ess_nontrivial)));
    gerbe_sum = add(gerbe_sum, scale(certify_rational(z_optimal(r, prec)), Rat(counts.n_optimal)));

    const SeriesDiff diff = series_equal(closed, gerbe_sum);
    if (!diff.equal) {
        throw std::logic_error("closed form and gerbe sum disagree (r=" + std::to_string(r) +
                               ", rho=" + std::to_string(rho) + "): " + diff.message);
    }
    return closed;
}

PuiseuxSeries z_k3_vw_prediction(const Rat& prec) {
    require_k3_precision(2, prec);
    PuiseuxSeries out = k3_coarse_piece(2, prec);
    out = add(out, certify_rational(scale(k3_fine_piece(2, 0, prec), Rat(2097152))));  /* 2^21 */
    out = add(out, certify_rational(scale(k3_fine_piece(2, 1, prec), Rat(1024))));     /* 2^10 */
    return out;
}

PuiseuxSeries z_k3_complex_structure_free(long r, const Rat& prec) {
    require_prime_rank(r);
    require_k3_precision(r, prec);

    PuiseuxSeries aggregate = z_k3_trivial_gerbe(r, prec);
    if (r == 2) {
        const ClassCensus census = k3_class_census_bruteforce();
        const PuiseuxSeries zopt = z_optimal(2, prec);
        const PuiseuxSeries ztw = z_optimal_twisted_sign(2, 1, prec);
        const PuiseuxSeries z_even = certify_rational(add(zopt, ztw));
        const PuiseuxSeries z_odd = certify_rational(sub(zopt, ztw));
        aggregate = add(aggregate, scale(z_even, Rat(census.n_even)));
        aggregate = add(aggregate, scale(z_odd, Rat(census.n_odd)));
    } else {
        const Rat n_nonzero = Rat(rat_pow(r, 22) - Rat(1));
        aggregate = add(aggregate, scale(certify_rational(z_optimal(r, prec)), n_nonzero));
        PuiseuxSeries twisted = zero_series(SeriesContext{r, r, prec});
        for (long m = 1; m < r; ++m) {
            const auto weight = cyc_is_rational(gauss_sum_value(m, r));
            if (!weight) {
                throw std::logic_error("Gauss sum for m=" + std::to_string(m) + ", r=" + std::to_string(r) +
                                       " did not collapse to a rational value");
            }
            twisted = add(twisted, scale(z_optimal_twisted_sign(r, m, prec), *weight - Rat(1)));
        }
        aggregate = add(aggregate, certify_rational(twisted));
    }

    const PuiseuxSeries closed = k3_closed_form(r, 11, prec);
    const SeriesDiff diff = series_equal(aggregate, closed);
    if (!diff.equal) {
        throw std::logic_error("complex-structure-free aggregate disagrees with the closed form (r=" +
                               std::to_string(r) + "): " + diff.message);
    }
    return aggregate;
}

}  // namespace vwlab
