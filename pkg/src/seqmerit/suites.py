"""Reproducible result tables: Barker closed forms, minimal merit, QMC convergence.

Each suite returns a list of row dicts with an ``ok`` column; a row is ok
when it meets its stated tolerance.
"""

from __future__ import annotations

from .autocorr import max_sidelobe
from .families import BARKER_CATALOG, all_ones, alternating, barker
from .merit import (
    barker_l4_prediction,
    barker_merit_prediction,
    l4_norm_fourth,
    merit_factor_discrete,
    minimal_merit_factor,
)
from .quadrature import exact_l4_integral, golden_nodes, qmc_l4_integral

QMC_REL_TOL = 1e-2


def barker_table() -> list[dict]:
    rows = []
    for n in sorted(BARKER_CATALOG):
        s = barker(n)
        f = merit_factor_discrete(s)
        l4 = l4_norm_fourth(s)
        side = max_sidelobe(s)
        rows.append({
            "n": n,
            "sequence": BARKER_CATALOG[n],
            "max_sidelobe": side,
            "F": str(f),
            "F_predicted": str(barker_merit_prediction(n)),
            "L4": l4,
            "L4_predicted": barker_l4_prediction(n),
            "ok": side <= 1 and f == barker_merit_prediction(n) and l4 == barker_l4_prediction(n),
        })
    return rows


def minimal_table(n_max: int = 16) -> list[dict]:
    rows = []
    for n in range(2, n_max + 1):
        f_ones = merit_factor_discrete(all_ones(n))
        f_alt = merit_factor_discrete(alternating(n))
        expected = minimal_merit_factor(n)
        rows.append({
            "n": n,
            "F_all_ones": str(f_ones),
            "F_alternating": str(f_alt),
            "F_formula": str(expected),
            "ok": f_ones == expected == f_alt,
        })
    return rows


def qmc_convergence(n: int = 13, node_counts=(10**3, 10**4, 10**5)) -> list[dict]:
    s = barker(n)
    exact = exact_l4_integral(s)
    rows = []
    for count in node_counts:
        q = qmc_l4_integral(s, golden_nodes(count))
        err = abs(q.value - exact)
        rel = err / exact
        within_bound = err <= q.error_bound
        rows.append({
            "n": n,
            "N": count,
            "qmc_value": q.value,
            "exact_value": exact,
            "abs_error": err,
            "rel_error": rel,
            "error_bound": q.error_bound,
            "within_bound": within_bound,
            "ok": within_bound and (count < 10**5 or rel <= QMC_REL_TOL),
        })
    return rows


SUITES = {
    "barker-table": barker_table,
    "minimal-table": minimal_table,
    "qmc-convergence": qmc_convergence,
}
