#include "vwlab/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace vwlab {

namespace {

ordered_json coeff_to_json(const CycNum& c, long series_order) {
    if (series_order == 1) return c.coords()[0].str();
    ordered_json coords = ordered_json::array();
    for (const auto& r : c.coords()) coords.push_back(r.str());
    return ordered_json{{"order", c.order()}, {"coords", coords}};
}

CycNum coeff_from_json(const ordered_json& j, long series_order) {
    if (series_order == 1) {
        if (!j.is_string()) throw std::invalid_argument("rational coefficient must be a \"num/den\" string");
        return CycNum(1, Rat::parse(j.get<std::string>()));
    }
    if (!j.is_object()) throw std::invalid_argument("cyclotomic coefficient must be an object");
    const long order = j.at("order").get<long>();
    if (order != series_order) {
        throw std::invalid_argument("coefficient order " + std::to_string(order) +
                                    " does not match the series field order " + std::to_string(series_order));
    }
    std::vector<Rat> coords;
    for (const auto& s : j.at("coords")) coords.push_back(Rat::parse(s.get<std::string>()));
    return CycNum::from_coords(order, std::move(coords));
}

/* exact JSON integers up to 2^53, decimal strings beyond */
ordered_json mpz_json(const mpz_class& v) {
    static const mpz_class limit = mpz_class(1) << 53;
    mpz_class a = abs(v);
    if (a < limit) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Rat coeff_as_rat(const PuiseuxSeries& f, long key) {
    const auto r = cyc_is_rational(f.c.at(key));
    if (!r) {
        throw std::invalid_argument("coefficient at q^" + f.exp_of(key).str() +
                                    " is not rational; use the json format");
    }
    return *r;
}

}  // namespace

/* ------------------------------------------------------------------ */
/*  series                                                             */
/* ------------------------------------------------------------------ */

ordered_json series_to_json(const PuiseuxSeries& f) {
    ordered_json j;
    j["ramification"] = f.D;
    j["cyc_order"] = f.N;
    j["trunc_order"] = f.trunc.str();
    if (f.floor_order) j["floor_order"] = f.floor_order->str();
    ordered_json terms = ordered_json::array();
    for (const auto& [k, c] : f.c) {
        terms.push_back(ordered_json{{"exp", f.exp_of(k).str()}, {"coeff", coeff_to_json(c, f.N)}});
    }
    j["terms"] = terms;
    return j;
}

PuiseuxSeries series_from_json(const ordered_json& j) {
    PuiseuxSeries f;
    f.D = j.at("ramification").get<long>();
    f.N = j.at("cyc_order").get<long>();
    validate_context(SeriesContext{f.D, f.N, Rat(0)});
    f.trunc = Rat::parse(j.at("trunc_order").get<std::string>());
    if (j.contains("floor_order")) f.floor_order = Rat::parse(j.at("floor_order").get<std::string>());
    for (const auto& entry : j.at("terms")) {
        const Rat e = Rat::parse(entry.at("exp").get<std::string>());
        const Rat scaled = e * Rat(f.D);
        if (!scaled.is_integer()) {
            throw std::invalid_argument("exponent " + e.str() + " does not fit ramification " +
                                        std::to_string(f.D));
        }
        const long key = static_cast<long>(mpz_class(scaled.num()).get_si());
        if (f.c.count(key)) throw std::invalid_argument("duplicate exponent " + e.str());
        f.c.emplace(key, coeff_from_json(entry.at("coeff"), f.N));
    }
    canonicalize(f);
    return f;
}

std::string series_to_csv(const PuiseuxSeries& f) {
    std::string out = "exponent,coefficient\n";
    for (const auto& [k, c] : f.c) {
        out += f.exp_of(k).str() + "," + coeff_as_rat(f, k).str() + "\n";
    }
    return out;
}

std::string series_to_text(const PuiseuxSeries& f) {
    std::ostringstream out;
    out << "# ramification " << f.D << ", coefficient field order " << f.N << ", window ";
    out << (f.floor_order ? "[" + f.floor_order->str() : "(-inf") << ", " << f.trunc.str() << ")\n";
    if (f.c.empty()) out << "0\n";
    for (const auto& [k, c] : f.c) {
        const auto r = cyc_is_rational(c);
        out << "q^" << f.exp_of(k).str() << ": " << (r ? r->str() : c.str()) << "\n";
    }
    return out.str();
}

/* ------------------------------------------------------------------ */
/*  tables                                                             */
/* ------------------------------------------------------------------ */

std::string det_tag_json_name(DetTag t) {
    return t == DetTag::trivial ? "trivial" : "gerbe-line-bundle";
}

std::string det_tag_csv_name(DetTag t) { return t == DetTag::trivial ? "trivial" : "gerbe"; }

static DetTag det_tag_parse(const std::string& s) {
    if (s == "trivial") return DetTag::trivial;
    if (s == "gerbe-line-bundle" || s == "gerbe") return DetTag::gerbe_line_bundle;
    throw std::invalid_argument("unknown determinant tag \"" + s + "\"");
}

ordered_json table_to_json(const VWTable& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        ordered_json row{{"rank", r.rank},
                         {"det_tag", det_tag_json_name(r.det)},
                         {"c2", r.c2.str()},
                         {"value", r.value.str()}};
        if (r.provisional) row["provisional"] = true;
        rows.push_back(row);
    }
    return ordered_json{{"rows", rows}};
}

VWTable table_from_json(const ordered_json& j) {
    VWTable t;
    for (const auto& row : j.at("rows")) {
        VWRow r;
        r.rank = row.at("rank").get<long>();
        r.det = det_tag_parse(row.at("det_tag").get<std::string>());
        r.c2 = Rat::parse(row.at("c2").get<std::string>());
        r.value = Rat::parse(row.at("value").get<std::string>());
        r.provisional = row.contains("provisional") && row.at("provisional").get<bool>();
        t.rows.push_back(r);
    }
    return t;
}

std::string table_to_csv(const VWTable& t) {
    bool any_provisional = false;
    for (const auto& r : t.rows) any_provisional = any_provisional || r.provisional;
    std::string out = any_provisional ? "rank,det_tag,c2,value,provisional\n" : "rank,det_tag,c2,value\n";
    for (const auto& r : t.rows) {
        out += std::to_string(r.rank) + "," + det_tag_csv_name(r.det) + "," + r.c2.str() + "," + r.value.str();
        if (any_provisional) out += r.provisional ? ",yes" : ",";
        out += "\n";
    }
    return out;
}

std::string table_to_text(const VWTable& t) {
    std::ostringstream out;
    for (const auto& r : t.rows) {
        out << "rank " << r.rank << "  det " << det_tag_csv_name(r.det) << "  c2 = " << r.c2.str()
            << "  vw = " << r.value.str();
        if (r.provisional) out << "  (provisional)";
        out << "\n";
    }
    return out.str();
}

/* ------------------------------------------------------------------ */
/*  census and reports                                                 */
/* ------------------------------------------------------------------ */

ordered_json census_to_json(const GerbeCensus& c, const std::vector<GaussCheckRow>& gauss,
                            const std::optional<ClassCensus>& full_enumeration) {
    ordered_json j;
    j["r"] = c.r;
    j["rho"] = c.rho;
    j["n_trivial"] = mpz_json(c.n_trivial);
    j["n_ess_nontrivial"] = mpz_json(c.n_ess_nontrivial);
    j["n_optimal"] = mpz_json(c.n_optimal);
    j["n_zero"] = mpz_json(c.n_zero_class);
    if (c.n_even) j["n_even"] = mpz_json(*c.n_even);
    if (c.n_odd) j["n_odd"] = mpz_json(*c.n_odd);
    ordered_json checks = ordered_json::array();
    for (const auto& g : gauss) {
        checks.push_back(ordered_json{
            {"m", g.m}, {"value", g.value}, {"expected", g.expected}, {"pass", g.pass}});
    }
    j["gauss_checks"] = checks;
    if (full_enumeration) {
        j["full_enumeration"] = ordered_json{{"n_zero", mpz_json(full_enumeration->n_zero)},
                                             {"n_even", mpz_json(full_enumeration->n_even)},
                                             {"n_odd", mpz_json(full_enumeration->n_odd)}};
    }
    return j;
}

ordered_json report_to_json(const Report& r) {
    ordered_json out = ordered_json::array();
    for (const auto& c : r.checks) {
        out.push_back(ordered_json{
            {"check_id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}});
    }
    return out;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    size_t failed = 0;
    for (const auto& c : r.checks) {
        if (!c.pass) ++failed;
        out << "[" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.detail << "\n";
    }
    if (failed == 0) {
        out << "all " << r.checks.size() << " checks passed\n";
    } else {
        out << failed << " of " << r.checks.size() << " checks FAILED\n";
    }
    return out.str();
}

}  // namespace vwlab
