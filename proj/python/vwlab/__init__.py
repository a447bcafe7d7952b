"""Exact twisted partition-function series, tables, and duality checks.

The compiled module hands every structured result over as a JSON string
so the rationals stay exact; the helpers here parse them into Fractions.
"""

import json
from fractions import Fraction

try:
    from . import _core as _impl
except ImportError:  # build-tree runs: _core sits on PYTHONPATH, not in the package
    import _core as _impl

census = _impl.census
gauss_check = _impl.gauss_check
hilbert_euler = _impl.hilbert_euler
hurwitz = _impl.hurwitz
table_ess = _impl.table_ess
table_opt = _impl.table_opt
verify_even_odd = _impl.verify_even_odd
verify_k3 = _impl.verify_k3
verify_p2 = _impl.verify_p2
z_k3_aggregate = _impl.z_k3_aggregate
z_k3_ess = _impl.z_k3_ess
z_k3_opt = _impl.z_k3_opt
z_k3_prediction = _impl.z_k3_prediction
z_k3_su = _impl.z_k3_su
z_k3_surzr = _impl.z_k3_surzr
z_p2 = _impl.z_p2
z_p222 = _impl.z_p222

__all__ = [
    "census",
    "census_counts",
    "gauss_check",
    "hilbert_euler",
    "hurwitz",
    "series_coeffs",
    "table_ess",
    "table_opt",
    "table_rows",
    "verify_even_odd",
    "verify_k3",
    "verify_p2",
    "report_checks",
    "z_k3_aggregate",
    "z_k3_ess",
    "z_k3_opt",
    "z_k3_prediction",
    "z_k3_su",
    "z_k3_surzr",
    "z_p2",
    "z_p222",
]


def series_coeffs(payload):
    """JSON series -> {Fraction(exponent): Fraction(coefficient)}.

    Only rational series convert; a cyclotomic coefficient raises ValueError.
    """
    doc = json.loads(payload)
    out = {}
    for entry in doc["terms"]:
        coeff = entry["coeff"]
        if not isinstance(coeff, str):
            raise ValueError(f"coefficient at q^{entry['exp']} is not rational")
        out[Fraction(entry["exp"])] = Fraction(coeff)
    return out


def table_rows(payload):
    """JSON table -> list of (rank, det_tag, Fraction(c2), Fraction(value), provisional)."""
    doc = json.loads(payload)
    return [
        (
            row["rank"],
            row["det_tag"],
            Fraction(row["c2"]),
            Fraction(row["value"]),
            bool(row.get("provisional", False)),
        )
        for row in doc["rows"]
    ]


def census_counts(payload):
    """JSON census -> {key: int} for the count fields (strings parse exactly)."""
    doc = json.loads(payload)
    out = {}
    for key, value in doc.items():
        if isinstance(value, int) and not isinstance(value, bool):
            out[key] = value
        elif isinstance(value, str) and key.startswith("n_"):
            out[key] = int(value)
    return out


def report_checks(payload):
    """JSON report -> list of (check_id, passed, detail)."""
    return [(c["check_id"], c["status"] == "pass", c["detail"]) for c in json.loads(payload)]
