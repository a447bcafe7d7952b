#include "vwlab/series.hpp"

#include <gmp.h>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vwlab {

namespace {

long to_long_checked(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) {
        throw std::overflow_error(std::string(what) + " does not fit in a machine integer");
    }
    return z.get_si();
}

/* smallest integer >= r */
long ceil_long(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return to_long_checked(q, "exponent bound");
}

/* keys are valid iff key_lower <= k < key_upper */
long key_upper(const PuiseuxSeries& f) { return ceil_long(f.trunc * Rat(f.D)); }

std::optional<long> key_lower(const PuiseuxSeries& f) {
    if (!f.floor_order) return std::nullopt;
    return ceil_long(*f.floor_order * Rat(f.D));
}

void require_same_context(const PuiseuxSeries& a, const PuiseuxSeries& b, const char* op) {
    if (a.D != b.D) {
        throw std::invalid_argument(std::string(op) + ": ramification mismatch (" + std::to_string(a.D) +
                                    " vs " + std::to_string(b.D) + ")");
    }
    if (a.N != b.N) {
        throw std::invalid_argument(std::string(op) + ": coefficient field mismatch (order " +
                                    std::to_string(a.N) + " vs " + std::to_string(b.N) + ")");
    }
}

Rat val_or_trunc(const PuiseuxSeries& f) {
    return f.c.empty() ? f.trunc : Rat(f.c.begin()->first, f.D);
}

std::string exp_str(const Rat& e) { return e.str(); }

/*
 * Coefficients of prod_{k>=1} (1-q^k)^e through q^nmax.
 * e < 0 uses (1-x)^{-m} = sum_j binom(m-1+j, j) x^j.
 */
std::vector<mpz_class> euler_product_pow(long e, long nmax) {
    std::vector<mpz_class> v(static_cast<size_t>(std::max<long>(nmax, 0)) + 1);
    v[0] = 1;
    if (e == 0 || nmax <= 0) return v;
    const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    for (long k = 1; k <= nmax; ++k) {
        std::vector<mpz_class> w(v.size());
        const long jmax = nmax / k;
        for (long j = 0; j <= jmax; ++j) {
            mpz_class f;
            if (e < 0) {
                mpz_bin_uiui(f.get_mpz_t(), ae - 1 + static_cast<unsigned long>(j),
                             static_cast<unsigned long>(j));
            } else {
                if (static_cast<unsigned long>(j) > ae) break;
                mpz_bin_uiui(f.get_mpz_t(), ae, static_cast<unsigned long>(j));
                if (j % 2 == 1) f = -f;
            }
            for (long n = 0; n + k * j <= nmax; ++n) {
                if (v[static_cast<size_t>(n)] == 0) continue;
                w[static_cast<size_t>(n + k * j)] += f * v[static_cast<size_t>(n)];
            }
        }
        v.swap(w);
    }
    return v;
}

}  // namespace

void validate_context(const SeriesContext& ctx) {
    if (ctx.D < 1) throw std::invalid_argument("ramification must be a positive integer");
    if (!cyc_order_supported(ctx.N)) {
        throw std::invalid_argument("unsupported coefficient field order " + std::to_string(ctx.N) +
                                    " (supported: 1, 2, odd primes)");
    }
}

/* ------------------------------------------------------------------ */
/*  construction                                                       */
/* ------------------------------------------------------------------ */

PuiseuxSeries zero_series(const SeriesContext& ctx) {
    validate_context(ctx);
    PuiseuxSeries f;
    f.D = ctx.D;
    f.N = ctx.N;
    f.trunc = ctx.T;
    return f;
}

PuiseuxSeries one_series(const SeriesContext& ctx) {
    return monomial(ctx, Rat(0), CycNum(ctx.N, Rat(1)));
}

PuiseuxSeries monomial(const SeriesContext& ctx, const Rat& exp, const CycNum& coeff) {
    PuiseuxSeries f = zero_series(ctx);
    const Rat scaled = exp * Rat(ctx.D);
    if (!scaled.is_integer()) {
        throw std::invalid_argument("exponent " + exp.str() + " is not representable with ramification " +
                                    std::to_string(ctx.D));
    }
    if (!(exp < ctx.T)) {
        throw std::invalid_argument("monomial exponent " + exp.str() + " lies at or above the truncation order " +
                                    ctx.T.str());
    }
    if (coeff.order() != ctx.N) {
        throw std::invalid_argument("monomial coefficient order mismatch");
    }
    if (!coeff.is_zero()) f.c[to_long_checked(scaled.num(), "exponent")] = coeff;
    return f;
}

void canonicalize(PuiseuxSeries& f) {
    const long hi = key_upper(f);
    const std::optional<long> lo = key_lower(f);
    for (auto it = f.c.begin(); it != f.c.end();) {
        const bool outside = it->first >= hi || (lo && it->first < *lo);
        if (outside || it->second.is_zero()) {
            it = f.c.erase(it);
        } else {
            ++it;
        }
    }
}

/* ------------------------------------------------------------------ */
/*  ring operations                                                    */
/* ------------------------------------------------------------------ */

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    require_same_context(a, b, "add");
    PuiseuxSeries r;
    r.D = a.D;
    r.N = a.N;
    r.trunc = std::min(a.trunc, b.trunc);
    if (a.floor_order || b.floor_order) {
        if (a.floor_order && b.floor_order) {
            r.floor_order = std::max(*a.floor_order, *b.floor_order);
        } else {
            r.floor_order = a.floor_order ? a.floor_order : b.floor_order;
        }
    }
    r.c = a.c;
    for (const auto& [k, cb] : b.c) {
        auto it = r.c.find(k);
        if (it == r.c.end()) {
            r.c[k] = cb;
        } else {
            it->second += cb;
        }
    }
    canonicalize(r);
    return r;
}

PuiseuxSeries sub(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return add(a, scale(b, Rat(-1)));
}

PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    require_same_context(a, b, "mul");
    if (a.floor_order || b.floor_order) {
        throw std::invalid_argument("mul: operands must be bounded below; use shift/scale for exact monomial factors");
    }
    PuiseuxSeries r;
    r.D = a.D;
    r.N = a.N;
    r.trunc = std::min(a.trunc + val_or_trunc(b), b.trunc + val_or_trunc(a));
    for (const auto& [ka, ca] : a.c) {
        for (const auto& [kb, cb] : b.c) {
            const CycNum p = ca * cb;
            if (p.is_zero()) continue;
            auto it = r.c.find(ka + kb);
            if (it == r.c.end()) {
                r.c[ka + kb] = p;
            } else {
                it->second += p;
            }
        }
    }
    canonicalize(r);
    return r;
}

PuiseuxSeries invert(const PuiseuxSeries& a) {
    if (a.floor_order) {
        throw std::invalid_argument("invert: series must be bounded below");
    }
    if (a.c.empty()) {
        throw std::invalid_argument("invert: series has no known nonzero term");
    }
    const long kv = a.c.begin()->first;
    const CycNum c0 = a.c.begin()->second;
    const CycNum c0inv = c0.inv();
    const long J = key_upper(a) - kv;  /* known coefficients of the unit part: indices 0..J-1 */

    /* u_j = c0^{-1} a_{kv+j}, j >= 1 (sparse) */
    std::map<long, CycNum> u;
    for (auto it = std::next(a.c.begin()); it != a.c.end(); ++it) {
        u[it->first - kv] = c0inv * it->second;
    }

    /* (1+u)^{-1} = w with w_0 = 1, w_m = -sum_{j} u_j w_{m-j} */
    std::map<long, CycNum> w;
    w[0] = CycNum(a.N, Rat(1));
    for (long m = 1; m < J; ++m) {
        CycNum s(a.N);
        for (const auto& [j, uj] : u) {
            if (j > m) break;
            auto it = w.find(m - j);
            if (it == w.end()) continue;
            s += uj * it->second;
        }
        if (!s.is_zero()) w[m] = -s;
    }

    PuiseuxSeries r;
    r.D = a.D;
    r.N = a.N;
    r.trunc = Rat(J - kv, a.D);
    for (const auto& [m, wm] : w) {
        const CycNum cm = c0inv * wm;
        if (!cm.is_zero()) r.c[m - kv] = cm;
    }
    canonicalize(r);
    return r;
}

PuiseuxSeries scale(const PuiseuxSeries& f, const CycNum& s) {
    if (s.order() != f.N) throw std::invalid_argument("scale: coefficient field mismatch");
    PuiseuxSeries r = f;
    if (s.is_zero()) {
        r.c.clear();
        return r;
    }
    for (auto& [k, c] : r.c) c = c * s;
    canonicalize(r);
    return r;
}

PuiseuxSeries scale(const PuiseuxSeries& f, const Rat& s) {
    PuiseuxSeries r = f;
    if (s.is_zero()) {
        r.c.clear();
        return r;
    }
    for (auto& [k, c] : r.c) c = c.scaled(s);
    return r;
}

PuiseuxSeries shift(const PuiseuxSeries& f, const Rat& s) {
    const Rat sk = s * Rat(f.D);
    if (!sk.is_integer()) {
        throw std::invalid_argument("shift by " + s.str() + " is not representable with ramification " +
                                    std::to_string(f.D));
    }
    const long d = to_long_checked(sk.num(), "shift");
    PuiseuxSeries r;
    r.D = f.D;
    r.N = f.N;
    r.trunc = f.trunc + s;
    if (f.floor_order) r.floor_order = *f.floor_order + s;
    for (const auto& [k, c] : f.c) r.c[k + d] = c;
    return r;
}

PuiseuxSeries reramify(const PuiseuxSeries& f, long new_D) {
    if (new_D < 1) throw std::invalid_argument("ramification must be a positive integer");
    PuiseuxSeries r;
    r.D = new_D;
    r.N = f.N;
    r.trunc = f.trunc;
    r.floor_order = f.floor_order;
    for (const auto& [k, c] : f.c) {
        const long long num = static_cast<long long>(k) * new_D;
        if (num % f.D != 0) {
            throw std::invalid_argument("exponent " + Rat(k, f.D).str() + " is not representable with ramification " +
                                        std::to_string(new_D) + "; need a multiple of " +
                                        std::to_string(f.D / std::gcd(f.D, new_D)));
        }
        r.c[static_cast<long>(num / f.D)] = c;
    }
    return r;
}

PuiseuxSeries lift_to_order(const PuiseuxSeries& f, long new_order) {
    if (f.N == new_order) return f;
    PuiseuxSeries r = f;
    r.N = new_order;
    for (auto& [k, c] : r.c) c = c.embedded(new_order);
    return r;
}

PuiseuxSeries certify_rational(const PuiseuxSeries& f) {
    PuiseuxSeries r;
    r.D = f.D;
    r.N = 1;
    r.trunc = f.trunc;
    r.floor_order = f.floor_order;
    for (const auto& [k, c] : f.c) {
        const auto v = cyc_is_rational(c);
        if (!v) {
            throw std::logic_error("coefficient at q^" + Rat(k, f.D).str() +
                                   " failed to collapse to a rational value: " + c.str());
        }
        if (!v->is_zero()) r.c[k] = CycNum(1, *v);
    }
    return r;
}

PuiseuxSeries truncate_to(const PuiseuxSeries& f, const Rat& new_trunc) {
    if (f.trunc < new_trunc) {
        throw std::invalid_argument("cannot extend validity: trunc " + f.trunc.str() + " -> " + new_trunc.str());
    }
    PuiseuxSeries r = f;
    r.trunc = new_trunc;
    canonicalize(r);
    return r;
}

Rat val(const PuiseuxSeries& f) {
    if (f.c.empty()) throw std::runtime_error("val: series has no stored term");
    return Rat(f.c.begin()->first, f.D);
}

std::optional<CycNum> coeff_if_known(const PuiseuxSeries& f, const Rat& e) {
    if (!(e < f.trunc)) return std::nullopt;
    if (f.floor_order && e < *f.floor_order) return std::nullopt;
    const Rat scaled = e * Rat(f.D);
    if (!scaled.is_integer()) return CycNum(f.N);
    auto it = f.c.find(to_long_checked(scaled.num(), "exponent"));
    if (it == f.c.end()) return CycNum(f.N);
    return it->second;
}

/* ------------------------------------------------------------------ */
/*  substitution and modular T action                                  */
/* ------------------------------------------------------------------ */

PuiseuxSeries substitute(const PuiseuxSeries& f, long root_power, long root_order,
                         long scale_num, long scale_den) {
    if (!cyc_order_supported(root_order)) {
        throw std::invalid_argument("unsupported root order " + std::to_string(root_order));
    }
    if (root_power < 0 || root_power >= root_order) {
        throw std::invalid_argument("root power must satisfy 0 <= power < order");
    }
    if (scale_num <= 0 || scale_den <= 0) {
        throw std::invalid_argument("substitution rescale must be a positive rational");
    }
    if (root_order > 1 && f.N > 1 && f.N != root_order) {
        throw std::invalid_argument("root order " + std::to_string(root_order) +
                                    " is incompatible with coefficient field order " + std::to_string(f.N));
    }
    const long new_N = root_order > 1 ? std::max(f.N, root_order) : f.N;
    const long g = std::gcd(f.D * scale_den, scale_num);
    const long new_D = f.D * scale_den / g;
    const long key_mult = scale_num / g;
    const Rat factor(scale_num, scale_den);

    PuiseuxSeries r;
    r.D = new_D;
    r.N = new_N;
    r.trunc = f.trunc * factor;
    if (f.floor_order) r.floor_order = *f.floor_order * factor;

    const bool twist = root_order > 1 && root_power != 0;
    CycNum zeta = twist ? cyc_root_of_unity(root_order, root_power) : CycNum(new_N, Rat(1));
    for (const auto& [k, c] : f.c) {
        CycNum nc = (f.N == new_N) ? c : c.embedded(new_N);
        if (twist) {
            const long km = ((k % root_order) + root_order) % root_order;
            nc = nc * cyc_pow(zeta, km);
        }
        if (!nc.is_zero()) r.c[k * key_mult] = nc;
    }
    return r;
}

PuiseuxSeries t_transform(const PuiseuxSeries& f) {
    if (f.N % f.D != 0) {
        throw std::invalid_argument("coefficient field order " + std::to_string(f.N) +
                                    " must be divisible by the ramification " + std::to_string(f.D));
    }
    if (f.D == 1) return f;
    PuiseuxSeries r = f;
    const long step = f.N / f.D;
    for (auto& [k, c] : r.c) {
        const long km = ((k % f.D) + f.D) % f.D;
        if (km == 0) continue;
        c = c * cyc_root_of_unity(f.N, km * step);
    }
    canonicalize(r);
    return r;
}

/* ------------------------------------------------------------------ */
/*  comparison                                                         */
/* ------------------------------------------------------------------ */

namespace {

bool cyc_equal_cross(const CycNum& a, const CycNum& b) {
    if (a.order() == b.order()) return a == b;
    const auto ra = cyc_is_rational(a);
    const auto rb = cyc_is_rational(b);
    if (ra && rb) return *ra == *rb;
    if (ra) return b == CycNum(b.order(), *ra);
    if (rb) return a == CycNum(a.order(), *rb);
    throw std::invalid_argument("series comparison across distinct irrational coefficient fields");
}

}  // namespace

SeriesDiff series_equal(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    SeriesDiff d;
    const Rat hi = std::min(a.trunc, b.trunc);
    std::optional<Rat> lo;
    if (a.floor_order) lo = *a.floor_order;
    if (b.floor_order) lo = lo ? std::max(*lo, *b.floor_order) : *b.floor_order;
    if (lo && !(*lo < hi)) {
        d.window_empty = true;
        d.message = "comparison window is empty";
        return d;
    }

    std::map<Rat, char> exps;
    auto gather = [&](const PuiseuxSeries& f) {
        for (const auto& [k, c] : f.c) {
            const Rat e(k, f.D);
            if (!(e < hi)) continue;
            if (lo && e < *lo) continue;
            exps[e] = 1;
        }
    };
    gather(a);
    gather(b);

    for (const auto& [e, tag] : exps) {
        (void)tag;
        const CycNum ca = coeff_if_known(a, e).value_or(CycNum(a.N));
        const CycNum cb = coeff_if_known(b, e).value_or(CycNum(b.N));
        if (!cyc_equal_cross(ca, cb)) {
            d.equal = false;
            d.has_location = true;
            d.exponent = e;
            d.lhs = ca.str();
            d.rhs = cb.str();
            std::ostringstream os;
            os << "first discrepancy at q^" << exp_str(e) << ": " << d.lhs << " vs " << d.rhs;
            d.message = os.str();
            return d;
        }
    }
    {
        std::ostringstream os;
        os << "series agree below q^" << exp_str(hi);
        if (lo) os << " (window floor q^" << exp_str(*lo) << ")";
        d.message = os.str();
    }
    return d;
}

/* ------------------------------------------------------------------ */
/*  eta quotients and Hilbert scheme Euler numbers                     */
/* ------------------------------------------------------------------ */

PuiseuxSeries eta_power(long exponent, const SeriesContext& ctx) {
    validate_context(ctx);
    if ((exponent * ctx.D) % 24 != 0) {
        const long g = std::gcd(exponent < 0 ? -exponent : exponent, 24L);
        throw std::invalid_argument("eta exponent " + std::to_string(exponent) + "/24 needs ramification divisible by " +
                                    std::to_string(24 / std::max(g, 1L)));
    }
    const Rat e0(exponent, 24);
    if (!(e0 < ctx.T)) {
        throw std::invalid_argument("truncation order " + ctx.T.str() + " lies at or below the lowest exponent " +
                                    e0.str());
    }
    const long nmax = ceil_long(ctx.T - e0) - 1;
    const auto v = euler_product_pow(exponent, nmax);
    PuiseuxSeries f = zero_series(ctx);
    const long base = exponent * ctx.D / 24;
    for (long n = 0; n <= nmax; ++n) {
        if (v[static_cast<size_t>(n)] == 0) continue;
        f.c[n * ctx.D + base] = CycNum(ctx.N, Rat(mpz_class(v[static_cast<size_t>(n)])));
    }
    canonicalize(f);
    return f;
}

PuiseuxSeries hilbert_euler_gf(const SeriesContext& ctx) {
    validate_context(ctx);
    PuiseuxSeries f = zero_series(ctx);
    const long nmax = ceil_long(ctx.T) - 1;
    if (nmax < 0) return f;
    const auto v = euler_product_pow(-24, nmax);
    for (long n = 0; n <= nmax; ++n) {
        if (v[static_cast<size_t>(n)] == 0) continue;
        f.c[n * ctx.D] = CycNum(ctx.N, Rat(mpz_class(v[static_cast<size_t>(n)])));
    }
    canonicalize(f);
    return f;
}

Rat hilbert_euler(long k) {
    if (k < 0) return Rat(0);
    static std::mutex mtx;
    static std::vector<mpz_class> cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (static_cast<size_t>(k) >= cache.size()) {
        cache = euler_product_pow(-24, k);
    }
    return Rat(cache[static_cast<size_t>(k)]);
}

}  // namespace vwlab
