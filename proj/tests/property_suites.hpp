#pragma once

/*
 * Randomized law checks shared by the unit runner and the acceptance
 * binary.  Every suite draws from a caller-supplied seed so failures
 * reproduce, and returns (cases, failures) instead of asserting.
 */

#include <random>
#include <string>

#include "vwlab/serialize.hpp"
#include "vwlab/transform.hpp"

namespace propsuite {

struct SuiteResult {
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures == 0) first_failure = what;
        ++failures;
    }
};

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline vwlab::Rat random_rat(Rng& rng) {
    return vwlab::Rat(pick(rng, -9, 9), pick(rng, 1, 4));
}

inline vwlab::CycNum random_cyc(Rng& rng, long order) {
    if (order == 1) return vwlab::CycNum(1, random_rat(rng));
    std::vector<vwlab::Rat> coords;
    for (long i = 0; i < vwlab::cyc_phi(order); ++i) coords.push_back(random_rat(rng));
    return vwlab::CycNum::from_coords(order, std::move(coords));
}

/* nonzero series with a handful of terms inside [-2, trunc) */
inline vwlab::PuiseuxSeries random_series(Rng& rng, const vwlab::SeriesContext& ctx) {
    for (;;) {
        vwlab::PuiseuxSeries f = vwlab::zero_series(ctx);
        const long lo = -2 * ctx.D;
        const long hi = (ctx.T * vwlab::Rat(ctx.D)).floor().get_si() - 1;
        const long n_terms = pick(rng, 1, 4);
        for (long i = 0; i < n_terms; ++i) {
            const long key = pick(rng, lo, hi);
            f = vwlab::add(f, vwlab::monomial(ctx, vwlab::Rat(key, ctx.D), random_cyc(rng, ctx.N)));
        }
        if (!f.c.empty()) return f;
    }
}

inline vwlab::SeriesContext random_context(Rng& rng) {
    const long orders[] = {1, 1, 2, 3};
    return vwlab::SeriesContext{pick(rng, 1, 4), orders[pick(rng, 0, 3)], vwlab::Rat(pick(rng, 3, 6))};
}

/* ---------------------------------------------------------------- */

inline SuiteResult series_ring_laws(unsigned long seed, long cases) {
    using namespace vwlab;
    Rng rng(seed);
    SuiteResult out;
    for (long i = 0; i < cases; ++i) {
        ++out.cases;
        const SeriesContext ctx = random_context(rng);
        const auto a = random_series(rng, ctx);
        const auto b = random_series(rng, ctx);
        const auto c = random_series(rng, ctx);
        if (!series_equal(add(a, b), add(b, a)).equal) {
            out.fail("a+b != b+a (case " + std::to_string(i) + ")");
            continue;
        }
        if (!series_equal(add(add(a, b), c), add(a, add(b, c))).equal) {
            out.fail("(a+b)+c != a+(b+c) (case " + std::to_string(i) + ")");
            continue;
        }
        if (!series_equal(mul(a, b), mul(b, a)).equal) {
            out.fail("a*b != b*a (case " + std::to_string(i) + ")");
            continue;
        }
        if (!series_equal(mul(mul(a, b), c), mul(a, mul(b, c))).equal) {
            out.fail("(a*b)*c != a*(b*c) (case " + std::to_string(i) + ")");
            continue;
        }
        const auto sum_bc = add(b, c);
        if (sum_bc.c.empty()) continue; /* cancellation leaves no valuation */
        if (!series_equal(mul(a, sum_bc), add(mul(a, b), mul(a, c))).equal) {
            out.fail("a*(b+c) != a*b + a*c (case " + std::to_string(i) + ")");
        }
    }
    return out;
}

inline SuiteResult substitution_homomorphism(unsigned long seed, long cases) {
    using namespace vwlab;
    Rng rng(seed);
    SuiteResult out;
    for (long i = 0; i < cases; ++i) {
        ++out.cases;
        const SeriesContext ctx = random_context(rng);
        const auto f = random_series(rng, ctx);
        const auto g = random_series(rng, ctx);
        const long root_order = (ctx.N > 1 && pick(rng, 0, 1)) ? ctx.N : 1;
        const long root_power = pick(rng, 0, root_order - 1);
        const long sn = pick(rng, 1, 3);
        const long sd = pick(rng, 1, 3);
        const auto sub1 = [&](const PuiseuxSeries& h) {
            return substitute(h, root_power, root_order, sn, sd);
        };
        if (!series_equal(sub1(mul(f, g)), mul(sub1(f), sub1(g))).equal) {
            out.fail("substitution is not multiplicative (case " + std::to_string(i) + ")");
            continue;
        }
        if (!series_equal(sub1(add(f, g)), add(sub1(f), sub1(g))).equal) {
            out.fail("substitution is not additive (case " + std::to_string(i) + ")");
        }
    }
    return out;
}

inline vwlab::EtaBasisExpr random_expr(Rng& rng, vwlab::BasisSet set) {
    using namespace vwlab;
    EtaBasisExpr e{set, {}};
    const long n_terms = pick(rng, 1, 4);
    for (long i = 0; i < n_terms; ++i) {
        BasisTerm t;
        t.coeff = random_rat(rng);
        t.weight_half = static_cast<int>(pick(rng, -4, 4));
        t.root2_parity = static_cast<int>(pick(rng, 0, 1));
        t.sym = set == BasisSet::k3_rank2
                    ? static_cast<BasisSym>(pick(rng, 0, 2))
                    : (pick(rng, 0, 1) ? BasisSym::f1 : BasisSym::f0);
        e.terms.push_back(t);
    }
    return e;
}

inline SuiteResult modular_involutions(unsigned long seed, long cases) {
    using namespace vwlab;
    Rng rng(seed);
    SuiteResult out;
    for (long i = 0; i < cases; ++i) {
        ++out.cases;
        const BasisSet set = pick(rng, 0, 1) ? BasisSet::p2 : BasisSet::k3_rank2;
        const auto e = random_expr(rng, set);
        EtaBasisExpr want = e;
        const int shift = set == BasisSet::k3_rank2 ? -48 : 6;
        for (auto& t : want.terms) t.weight_half += shift;
        if (!expr_equal(s_transform(s_transform(e)), canonical(want))) {
            out.fail("S^2 is not the weight shift (case " + std::to_string(i) + ")");
            continue;
        }
        if (set == BasisSet::k3_rank2 &&
            !expr_equal(t_transform_basis(t_transform_basis(e)), canonical(e))) {
            out.fail("T^2 != 1 (case " + std::to_string(i) + ")");
        }
    }
    return out;
}

inline SuiteResult serialization_round_trip(unsigned long seed, long cases) {
    using namespace vwlab;
    Rng rng(seed);
    SuiteResult out;
    for (long i = 0; i < cases; ++i) {
        ++out.cases;
        const SeriesContext ctx = random_context(rng);
        auto f = random_series(rng, ctx);
        if (pick(rng, 0, 3) == 0) f.floor_order = Rat(-2); /* descending window */
        const auto g = series_from_json(series_to_json(f));
        bool same = g.D == f.D && g.N == f.N && g.trunc == f.trunc &&
                    g.floor_order == f.floor_order && g.c.size() == f.c.size();
        if (same) {
            for (const auto& [k, c] : f.c) {
                auto it = g.c.find(k);
                same = same && it != g.c.end() && c == it->second;
            }
        }
        if (!same) {
            out.fail("series JSON round trip changed the value (case " + std::to_string(i) + ")");
            continue;
        }

        VWTable t;
        const long rows = pick(rng, 0, 4);
        for (long rix = 0; rix < rows; ++rix) {
            VWRow row;
            row.rank = pick(rng, 0, 1) ? 2 : 3;
            row.det = pick(rng, 0, 1) ? DetTag::trivial : DetTag::gerbe_line_bundle;
            row.c2 = random_rat(rng);
            row.value = random_rat(rng);
            row.provisional = pick(rng, 0, 3) == 0;
            t.rows.push_back(row);
        }
        const auto u = table_from_json(table_to_json(t));
        bool tsame = u.rows.size() == t.rows.size();
        for (size_t rix = 0; tsame && rix < t.rows.size(); ++rix) {
            const auto& x = t.rows[rix];
            const auto& y = u.rows[rix];
            tsame = x.rank == y.rank && x.det == y.det && x.c2 == y.c2 && x.value == y.value &&
                    x.provisional == y.provisional;
        }
        if (!tsame) out.fail("table JSON round trip changed the value (case " + std::to_string(i) + ")");
    }
    return out;
}

}  // namespace propsuite
