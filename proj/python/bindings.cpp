/*
 * Python face of the library.  Every structured result crosses the
 * boundary as a JSON string so the exact rationals survive; the vwlab
 * package turns them into Fractions.
 */

#include <pybind11/pybind11.h>

#include "vwlab/classnum.hpp"
#include "vwlab/serialize.hpp"

namespace py = pybind11;
using namespace vwlab;

namespace {

std::string dump_series(const PuiseuxSeries& f) { return series_to_json(f).dump(); }
std::string dump_table(const VWTable& t) { return table_to_json(t).dump(); }
std::string dump_report(const Report& r) { return report_to_json(r).dump(); }

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

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact twisted partition-function series and duality checks";

    m.def(
        "z_p2",
        [](long c1, long n_terms, bool drop_divisor) {
            return dump_series(z_vb_p2_c1(c1, n_terms, drop_divisor));
        },
        py::arg("c1"), py::arg("n_terms") = 12, py::arg("drop_divisor") = false,
        "rank-2 series over the plane; exponents descend from c1^2/4 + 3c1/2 + 2");

    m.def(
        "z_p222",
        [](int c1_mod4, int lambda, long n_terms, bool drop_divisor) {
            return dump_series(z_vb_p222(c1_mod4, lambda, n_terms, drop_divisor));
        },
        py::arg("c1_mod4"), py::arg("lam"), py::arg("n_terms") = 12, py::arg("drop_divisor") = false,
        "rank-2 series over the gerbe on the plane, one inertia component");

    m.def(
        "z_k3_su",
        [](long rank, const std::string& prec) {
            return dump_series(z_k3_trivial_gerbe(rank, Rat::parse(prec)));
        },
        py::arg("rank") = 2, py::arg("prec") = "12", "trivial-gerbe K3 series");

    m.def(
        "z_k3_surzr",
        [](long rank, long picard, const std::string& prec) {
            return dump_series(z_k3_surzr(rank, picard, Rat::parse(prec)));
        },
        py::arg("rank") = 2, py::arg("picard") = 11, py::arg("prec") = "12",
        "full gerbe sum; cross-checked against the closed form before returning");

    m.def(
        "z_k3_prediction",
        [](const std::string& prec) { return dump_series(z_k3_vw_prediction(Rat::parse(prec))); },
        py::arg("prec") = "12", "rank-2 image of the trivial series under the S rules");

    m.def(
        "z_k3_aggregate",
        [](long rank, const std::string& prec) {
            return dump_series(z_k3_complex_structure_free(rank, Rat::parse(prec)));
        },
        py::arg("rank") = 2, py::arg("prec") = "12",
        "census-weighted aggregate over all gerbe classes");

    m.def(
        "z_k3_ess",
        [](long rank, const std::string& prec) {
            return dump_series(z_ess_trivial(rank, Rat::parse(prec)));
        },
        py::arg("rank") = 2, py::arg("prec") = "12", "essentially trivial gerbe series");

    m.def(
        "z_k3_opt",
        [](long rank, long twist, const std::string& prec) {
            const auto f = z_optimal_twisted_sign(rank, twist, Rat::parse(prec));
            try {
                return dump_series(certify_rational(f));
            } catch (const std::logic_error&) {
                return dump_series(f);
            }
        },
        py::arg("rank") = 2, py::arg("twist") = 0, py::arg("prec") = "12",
        "optimal gerbe series with a root-of-unity twist");

    m.def(
        "table_ess",
        [](long rank, long c2_max, bool as_stated) {
            return dump_table(vw_essentially_trivial(rank, c2_max, as_stated));
        },
        py::arg("rank") = 2, py::arg("c2_max") = 5, py::arg("as_stated") = false,
        "essentially trivial invariants at integer c2");

    m.def(
        "table_opt",
        [](long rank, const std::string& c2_max) {
            return dump_table(vw_optimal(rank, Rat::parse(c2_max)));
        },
        py::arg("rank") = 2, py::arg("c2_max") = "5",
        "optimal-gerbe invariants on the fractional c2 ladder");

    m.def(
        "census",
        [](long rank, long picard, bool full_enumeration) {
            const GerbeCensus c = gerbe_census(picard, rank);
            std::optional<ClassCensus> full;
            if (full_enumeration) {
                if (rank != 2) throw std::invalid_argument("full enumeration is a rank-2 check");
                full = k3_class_census_full_enumeration();
            }
            return census_to_json(c, gauss_rows(rank), full).dump();
        },
        py::arg("rank") = 2, py::arg("picard") = 11, py::arg("full_enumeration") = false,
        "gerbe class counts with the Gauss-sum checks");

    m.def(
        "verify_k3",
        [](const std::string& prec, bool inject_fault) {
            return dump_report(verify_su2_k3_sduality(Rat::parse(prec), inject_fault));
        },
        py::arg("prec") = "8", py::arg("inject_fault") = false,
        "rank-2 S-duality battery; inject_fault corrupts one rule scalar");

    m.def("verify_even_odd", [] { return dump_report(verify_even_odd_transforms()); },
          "S on the even/odd combinations plus the census-weighted aggregate");

    m.def(
        "verify_p2",
        [](long n_terms) { return dump_report(verify_p2_sduality(n_terms)); },
        py::arg("n_terms") = 12, "plane identifications, Zagier matrix, leading coefficients");

    m.def(
        "hilbert_euler", [](long k) { return hilbert_euler(k).str(); }, py::arg("k"),
        "Euler number of the k-point Hilbert scheme of a K3, as an exact string");

    m.def(
        "hurwitz", [](long delta) { return hurwitz_class_number(delta).str(); }, py::arg("delta"),
        "Hurwitz class number H(delta), as an exact \"num/den\" string");

    m.def(
        "gauss_check", [](long m, long r) { return gauss_sum_check(m, r); }, py::arg("m"),
        py::arg("r"), "does the twisted Gauss sum collapse to r^11");
}
