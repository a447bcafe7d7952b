/*
 * vwlab: exact twisted partition-function series, invariant tables, the
 * rank-22 lattice census, and the duality verification suite.
 *
 * Structured output goes to stdout, diagnostics to stderr.  Identical
 * invocations produce byte-identical output.  Exit codes: 0 success,
 * 1 failed verification, 2 invalid usage or parameters.
 */

#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vwlab/classnum.hpp"
#include "vwlab/lattice.hpp"
#include "vwlab/partition.hpp"
#include "vwlab/serialize.hpp"
#include "vwlab/series.hpp"
#include "vwlab/transform.hpp"

namespace {

using namespace vwlab;

/* ------------------------------------------------------------------ */
/*  configuration                                                      */
/* ------------------------------------------------------------------ */

struct Options {
    std::string prec_raw;  /* empty: VWLAB_PRECISION, then "12" */
    long rank = 2;
    long picard = 11;
    std::string format = "json";
    std::string c1_parity = "even";
    int c1_mod4 = 0;
    int lambda = 0;
    long twist = 0;
    std::string c2_max_raw = "5";
    bool drop_divisor = false;
    bool full_enumeration = false;
    bool as_stated = false;
    bool inject_fault = false;
};

Rat resolve_precision(const std::string& raw) {
    std::string s = raw;
    if (s.empty()) {
        const char* env = std::getenv("VWLAB_PRECISION");
        s = (env && *env) ? env : "12";
    }
    Rat p;
    try {
        p = Rat::parse(s);
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad precision \"" + s + "\": " + e.what());
    }
    if (!(Rat(0) < p)) throw std::invalid_argument("precision must be positive, got " + p.str());
    return p;
}

long ceil_to_long(const Rat& x) {
    const Rat f(x.floor());
    const mpz_class c = (f == x) ? x.floor() : x.floor() + 1;
    return static_cast<long>(c.get_si());
}

/* class-number terms for the descending series: ceil(prec), at least 1 */
long hurwitz_terms(const Rat& prec) {
    const long n = ceil_to_long(prec);
    return n < 1 ? 1 : n;
}

/* reject options that were passed explicitly but mean nothing for the
 * chosen selector */
void reject_stray(const CLI::App* cmd, const std::set<std::string>& relevant) {
    for (const auto* opt : cmd->get_options()) {
        const std::string name = opt->get_name();
        if (opt->count() == 0 || name.rfind("--", 0) != 0 || name == "--help") continue;
        if (!relevant.count(name)) {
            throw std::invalid_argument(name + " does not apply here");
        }
    }
}

void emit_series(const PuiseuxSeries& f, const std::string& format) {
    if (format == "json") {
        std::cout << series_to_json(f).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << series_to_csv(f);
    } else {
        std::cout << series_to_text(f);
    }
}

/* ------------------------------------------------------------------ */
/*  series                                                             */
/* ------------------------------------------------------------------ */

int cmd_series(const CLI::App* cmd, const std::string& selector, const Options& o) {
    const Rat prec = resolve_precision(o.prec_raw);
    const std::set<std::string> common{"--prec", "--format"};
    auto with = [&common](std::initializer_list<std::string> extra) {
        std::set<std::string> s = common;
        for (const auto& e : extra) s.insert(e);
        return s;
    };

    PuiseuxSeries f;
    if (selector == "p2-vb") {
        reject_stray(cmd, with({"--c1-parity", "--drop-divisor-term"}));
        const long c1 = o.c1_parity == "odd" ? 1 : 0;
        f = z_vb_p2_c1(c1, hurwitz_terms(prec), o.drop_divisor);
        if (prec < f.trunc) f = truncate_to(f, prec);
    } else if (selector == "p222-vb") {
        reject_stray(cmd, with({"--c1-mod4", "--lambda", "--drop-divisor-term"}));
        f = z_vb_p222(o.c1_mod4, o.lambda, hurwitz_terms(prec), o.drop_divisor);
        if (prec < f.trunc) f = truncate_to(f, prec);
    } else if (selector == "k3-su") {
        reject_stray(cmd, with({"--rank"}));
        f = z_k3_trivial_gerbe(o.rank, prec);
    } else if (selector == "k3-surzr") {
        reject_stray(cmd, with({"--rank", "--picard"}));
        f = z_k3_surzr(o.rank, o.picard, prec);
    } else if (selector == "k3-prediction") {
        reject_stray(cmd, with({"--rank"}));
        f = z_k3_complex_structure_free(o.rank, prec);
    } else if (selector == "k3-ess") {
        reject_stray(cmd, with({"--rank"}));
        f = z_ess_trivial(o.rank, prec);
    } else if (selector == "k3-opt") {
        reject_stray(cmd, with({"--rank", "--twist"}));
        f = z_optimal_twisted_sign(o.rank, o.twist, prec);
        try {
            f = certify_rational(f);
        } catch (const std::logic_error&) {
            /* genuinely cyclotomic coefficients stay in their field */
        }
    } else {
        throw std::invalid_argument("unknown series selector \"" + selector + "\"");
    }
    emit_series(f, o.format);
    return 0;
}

/* ------------------------------------------------------------------ */
/*  tables                                                             */
/* ------------------------------------------------------------------ */

int cmd_table(const CLI::App* cmd, const std::string& selector, const Options& o) {
    const Rat c2_max = Rat::parse(o.c2_max_raw);
    VWTable t;
    if (selector == "ess") {
        reject_stray(cmd, {"--rank", "--c2-max", "--as-stated-higher-rank", "--format"});
        t = vw_essentially_trivial(o.rank, static_cast<long>(c2_max.floor().get_si()), o.as_stated);
    } else if (selector == "opt") {
        reject_stray(cmd, {"--rank", "--c2-max", "--format"});
        t = vw_optimal(o.rank, c2_max);
    } else {
        throw std::invalid_argument("unknown table selector \"" + selector + "\"");
    }
    if (o.format == "json") {
        std::cout << table_to_json(t).dump(2) << "\n";
    } else if (o.format == "csv") {
        std::cout << table_to_csv(t);
    } else {
        std::cout << table_to_text(t);
    }
    return 0;
}

/* ------------------------------------------------------------------ */
/*  census                                                             */
/* ------------------------------------------------------------------ */

std::vector<GaussCheckRow> gauss_rows(long r) {
    std::vector<GaussCheckRow> rows;
    for (long m = 1; m < r; ++m) {
        GaussCheckRow row;
        row.m = m;
        const CycNum value = gauss_sum_value(m, r);
        const auto rational = cyc_is_rational(value);
        row.value = rational ? rational->str() : value.str();
        row.expected = Rat::ipow(r, 11).str();
        row.pass = gauss_sum_check(m, r);
        rows.push_back(row);
    }
    return rows;
}

int cmd_census(const Options& o) {
    const GerbeCensus census = gerbe_census(o.picard, o.rank);
    std::optional<ClassCensus> full;
    if (o.full_enumeration) {
        if (o.rank != 2) {
            throw std::invalid_argument("--full-lattice-enumeration walks the 2^22 classes; rank must be 2");
        }
        full = k3_class_census_full_enumeration();
    }
    if (o.format == "csv") {
        throw std::invalid_argument("census emits json or text");
    }
    const ordered_json j = census_to_json(census, gauss_rows(o.rank), full);
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << "\n";
    }
    return 0;
}

/* ------------------------------------------------------------------ */
/*  verify                                                             */
/* ------------------------------------------------------------------ */

/* compact randomized ring-law pass with a fixed seed; the heavyweight
 * 1000-case suites live in the test binaries */
CheckResult ring_law_check() {
    std::mt19937_64 rng(0x76574c4142ULL);
    auto rnd_int = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
    };
    const long orders[] = {1, 2, 3};
    for (int iter = 0; iter < 100; ++iter) {
        const long D = rnd_int(1, 4);
        const long N = orders[rnd_int(0, 2)];
        const Rat T(rnd_int(2, 5));
        SeriesContext ctx{D, N, T};
        auto rnd_series = [&]() {
            PuiseuxSeries f = zero_series(ctx);
            const int terms = static_cast<int>(rnd_int(0, 6));
            for (int t = 0; t < terms; ++t) {
                const Rat e(rnd_int(-4, static_cast<long>(T.floor().get_si()) * D - 1), D);
                std::vector<Rat> coords(static_cast<size_t>(cyc_phi(N)));
                for (auto& c : coords) c = Rat(rnd_int(-9, 9), rnd_int(1, 9));
                f = add(f, monomial(ctx, e, CycNum::from_coords(N, coords)));
            }
            return f;
        };
        const auto a = rnd_series(), b = rnd_series(), c = rnd_series();
        const auto assoc = series_equal(add(add(a, b), c), add(a, add(b, c)));
        const auto comm = series_equal(mul(a, b), mul(b, a));
        const auto dist = series_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
        if (!assoc.equal || !comm.equal || !dist.equal) {
            return {"ring-laws", false, "case " + std::to_string(iter) + ": " +
                    (!assoc.equal ? assoc.message : !comm.equal ? comm.message : dist.message)};
        }
    }
    return {"ring-laws", true, "100 randomized associativity/commutativity/distributivity cases"};
}

CheckResult eta_inverse_check(const Rat& prec) {
    const SeriesContext ctx{1, 1, prec};
    const auto g = eta_power(-24, ctx);
    const auto h = eta_power(24, ctx);
    const auto d = series_equal(mul(g, h), one_series(ctx));
    return {"eta-inverse", d.equal && !d.window_empty,
            d.equal ? "eta^-24 * eta^24 = 1 below q^" + prec.str() : d.message};
}

CheckResult eta_hilbert_check(const Rat& prec) {
    const auto g = eta_power(-24, SeriesContext{1, 1, prec});
    const long top = static_cast<long>(prec.floor().get_si());
    for (long n = -1; n < top; ++n) {
        const auto c = coeff_if_known(g, Rat(n));
        std::optional<Rat> r;
        if (c) r = cyc_is_rational(*c);
        if (!r || !(*r == hilbert_euler(n + 1))) {
            return {"eta-hilbert", false, "coefficient at q^" + std::to_string(n) +
                    " disagrees with the length-" + std::to_string(n + 1) + " Hilbert scheme Euler number"};
        }
    }
    return {"eta-hilbert", true,
            "eta^-24 coefficients match Hilbert scheme Euler numbers up to length " + std::to_string(top)};
}

CheckResult collapse_check(const Rat& prec) {
    const Rat p = Rat(3) < prec ? prec : Rat(4);
    try {
        const auto ess = z_ess_trivial(3, p);  /* certifies rationality internally */
        const auto t = vw_essentially_trivial(3, static_cast<long>(p.floor().get_si()));
        long checked = 0;
        for (const auto& row : t.rows) {
            if (row.provisional || !(row.c2 < ess.trunc)) continue;
            const auto c = coeff_if_known(ess, row.c2);
            std::optional<Rat> r;
            if (c) r = cyc_is_rational(*c);
            if (!r || !(*r == row.value)) {
                return {"cyclotomic-collapse", false,
                        "coefficient at q^" + row.c2.str() + " expected " + row.value.str() + ", got " +
                            (r ? r->str() : "unknown")};
            }
            ++checked;
        }
        return {"cyclotomic-collapse", true,
                "sum of the three twisted rank-3 pieces is rational; " + std::to_string(checked) +
                    " tabulated coefficients match"};
    } catch (const std::exception& e) {
        return {"cyclotomic-collapse", false, e.what()};
    }
}

CheckResult gerbe_sum_check_cli(long rank, long picard, const Rat& prec) {
    try {
        (void)z_k3_surzr(rank, picard, prec); /* hard-fails internally on mismatch */
        return {"gerbe-sum-closed-form", true,
                "gerbe-sum assembly equals the closed form at rank " + std::to_string(rank) +
                    ", picard " + std::to_string(picard)};
    } catch (const std::exception& e) {
        return {"gerbe-sum-closed-form", false, e.what()};
    }
}

CheckResult gauss_battery_check() {
    std::string detail;
    for (long r : {2L, 3L, 5L}) {
        for (long m = 1; m < r; ++m) {
            if (!gauss_sum_check(m, r)) {
                return {"gauss-sums", false,
                        "lattice sum disagrees with the closed form at r = " + std::to_string(r) +
                            ", m = " + std::to_string(m)};
            }
        }
        detail += (detail.empty() ? "r = " : ", ") + std::to_string(r);
    }
    return {"gauss-sums", true, detail + ": all residue sums equal r^11"};
}

CheckResult golden_check(const char* id, const PuiseuxSeries& f,
                         const std::vector<std::pair<Rat, Rat>>& golden) {
    long checked = 0;
    for (const auto& [e, want] : golden) {
        if (!(e < f.trunc)) continue;
        const auto c = coeff_if_known(f, e);
        std::optional<Rat> r;
        if (c) r = cyc_is_rational(*c);
        if (!r || !(*r == want)) {
            return {id, false, "coefficient at q^" + e.str() + " expected " + want.str() +
                    ", got " + (r ? r->str() : "non-rational")};
        }
        ++checked;
    }
    return {id, checked > 0, checked > 0
            ? std::to_string(checked) + " expansion coefficients match the published table"
            : "window too small to reach any tabulated coefficient"};
}

int cmd_verify(const Options& o) {
    const Rat prec = resolve_precision(o.prec_raw);
    Report rep;
    rep.checks.push_back(ring_law_check());
    rep.checks.push_back(eta_inverse_check(prec));
    rep.checks.push_back(eta_hilbert_check(prec));
    rep.checks.push_back(collapse_check(prec));
    rep.checks.push_back(gerbe_sum_check_cli(o.rank, o.picard, prec));
    for (auto& c : verify_su2_k3_sduality(prec, o.inject_fault).checks) rep.checks.push_back(std::move(c));
    for (auto& c : verify_even_odd_transforms().checks) rep.checks.push_back(std::move(c));
    {
        const long n = hurwitz_terms(prec);
        for (auto& c : verify_p2_sduality(n < 3 ? 3 : n).checks) rep.checks.push_back(std::move(c));
    }
    rep.checks.push_back(gauss_battery_check());
    rep.checks.push_back(golden_check("su2-expansion", z_k3_trivial_gerbe(2, prec),
                                      {{Rat(0), Rat(1, 4)},
                                       {Rat(2), Rat(30)},
                                       {Rat(3), Rat(3200)},
                                       {Rat(4), Rat(176337)},
                                       {Rat(5), Rat(5930496)},
                                       {Rat(6), Rat(143184800)},
                                       {Rat(7), Rat(2705114880)}}));
    rep.checks.push_back(golden_check("su2-z2-expansion", z_k3_surzr(2, 11, prec),
                                      {{Rat(0), Rat(1, 4)},
                                       {Rat(3, 2), Rat(2096128)},
                                       {Rat(2), Rat(50356230)},
                                       {Rat(5, 2), Rat(679145472)},
                                       {Rat(3), Rat(6714163200)},
                                       {Rat(7, 2), Rat(53765683200)},
                                       {Rat(4), Rat(369816109137)},
                                       {Rat(9, 2), Rat(2250654556160)},
                                       {Rat(5), Rat(12443224375296)},
                                       {Rat(11, 2), Rat(63258156057600)}}));

    if (o.format == "text") {
        std::cout << report_to_text(rep);
    } else if (o.format == "json") {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        throw std::invalid_argument("verify emits json or text");
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

/* ------------------------------------------------------------------ */
/*  entry point                                                        */
/* ------------------------------------------------------------------ */

int main(int argc, char** argv) {
    CLI::App app{"exact twisted partition-function series, tables, lattice census, and duality checks"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* cmd, bool with_rank) {
        cmd->add_option("--prec", o.prec_raw,
                        "truncation order in q-exponent units (rational; VWLAB_PRECISION overrides the default 12)");
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        if (with_rank) cmd->add_option("--rank", o.rank, "prime structure-group rank");
    };

    std::string series_selector, table_selector;
    CLI::App* series = app.add_subcommand("series", "compute one partition-function series");
    series->add_option("selector", series_selector,
                       "p2-vb | p222-vb | k3-su | k3-surzr | k3-prediction | k3-ess | k3-opt")
        ->required();
    add_common(series, true);
    series->add_option("--picard", o.picard, "K3 Picard number (0..20 or 22)");
    series->add_option("--c1-parity", o.c1_parity, "first Chern class parity for p2-vb")
        ->check(CLI::IsMember({"even", "odd"}));
    series->add_option("--c1-mod4", o.c1_mod4, "first Chern class residue for p222-vb")
        ->check(CLI::IsMember({0, 2}));
    series->add_option("--lambda", o.lambda, "gerbe weight for p222-vb")->check(CLI::IsMember({0, 1}));
    series->add_option("--twist", o.twist, "root-of-unity power for k3-opt");
    series->add_flag("--drop-divisor-term", o.drop_divisor,
                     "omit the divisor-sum correction in the even series");

    CLI::App* table = app.add_subcommand("table", "emit an invariant table");
    table->add_option("selector", table_selector, "ess | opt")->required();
    table->add_option("--rank", o.rank, "prime structure-group rank");
    table->add_option("--c2-max", o.c2_max_raw, "largest second Chern class listed");
    table->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    table->add_flag("--as-stated-higher-rank", o.as_stated,
                    "include provisional middle-residue rows for odd ranks");

    CLI::App* census = app.add_subcommand("census", "count lattice residue classes and gerbe types");
    census->add_option("--rank", o.rank, "prime structure-group rank");
    census->add_option("--picard", o.picard, "K3 Picard number (0..20 or 22)");
    census->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    census->add_flag("--full-lattice-enumeration", o.full_enumeration,
                     "re-derive the rank-2 census by walking all 2^22 classes");

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify, true);
    verify->add_option("--picard", o.picard, "Picard number for the gerbe-sum check");
    verify->add_flag("--inject-fault", o.inject_fault,
                     "corrupt one transformation rule to demonstrate failure detection");

    CLI11_PARSE(app, argc, argv);

    try {
        if (series->parsed()) return cmd_series(series, series_selector, o);
        if (table->parsed()) return cmd_table(table, table_selector, o);
        if (census->parsed()) return cmd_census(o);
        return cmd_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
