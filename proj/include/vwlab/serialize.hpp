#pragma once

/*
 * JSON / CSV / text emitters and the matching parsers.  JSON round-trips
 * exactly: parse(emit(x)) reproduces the stored representation, including
 * ramification, coefficient field order, and the validity window.  CSV
 * exponents and values are exact "num/den" strings, never decimals.
 */

#include <string>
#include <vector>

#include "json.hpp"
#include "vwlab/lattice.hpp"
#include "vwlab/partition.hpp"
#include "vwlab/series.hpp"
#include "vwlab/transform.hpp"

namespace vwlab {

using ordered_json = nlohmann::ordered_json;

/* ------------------------------------------------------------------ */
/*  series                                                             */
/* ------------------------------------------------------------------ */

ordered_json series_to_json(const PuiseuxSeries& f);
PuiseuxSeries series_from_json(const ordered_json& j);

/* rational coefficients only; throws std::invalid_argument otherwise */
std::string series_to_csv(const PuiseuxSeries& f);
std::string series_to_text(const PuiseuxSeries& f);

/* ------------------------------------------------------------------ */
/*  tables                                                             */
/* ------------------------------------------------------------------ */

std::string det_tag_json_name(DetTag t);   /* "trivial" / "gerbe-line-bundle" */
std::string det_tag_csv_name(DetTag t);    /* "trivial" / "gerbe" */

ordered_json table_to_json(const VWTable& t);
VWTable table_from_json(const ordered_json& j);
std::string table_to_csv(const VWTable& t);
std::string table_to_text(const VWTable& t);

/* ------------------------------------------------------------------ */
/*  census and reports                                                 */
/* ------------------------------------------------------------------ */

struct GaussCheckRow {
    long m = 0;
    bool pass = false;
    std::string value;     /* exact sum, rendered */
    std::string expected;
};

/* counts below 2^53 are emitted as JSON numbers, larger ones as decimal
 * strings */
ordered_json census_to_json(const GerbeCensus& c, const std::vector<GaussCheckRow>& gauss,
                            const std::optional<ClassCensus>& full_enumeration);

ordered_json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace vwlab
