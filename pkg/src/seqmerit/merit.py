"""Merit factor, L4 norm and the closed-form predictions for special families.

For binary sequences every quantity is an exact ``Fraction`` or ``int``.
Complex sequences use |rho(t)|**2 in place of rho(t)**2 and floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .autocorr import aperiodic_autocorrelation
from .errors import DomainError, RouteFailureError
from .sequence import Sequence


def sidelobe_energy(s: Sequence, rho=None):
    """2 * sum_{t>=1} |rho(t)|**2 (int for binary sequences)."""
    if rho is None:
        rho = aperiodic_autocorrelation(s)
    if s.is_binary:
        return 2 * sum(v * v for v in rho[1:])
    return 2.0 * sum(abs(v) ** 2 for v in rho[1:])


def _peak(s: Sequence, rho):
    return rho[0] if s.is_binary else rho[0].real


def merit_factor_discrete(s: Sequence):
    """rho(0)**2 / (2 sum_{t>=1} |rho(t)|**2).

    Returns a Fraction for binary input. Zero sidelobe energy (impossible for
    binary sequences of length >= 2) yields ``math.inf`` rather than an error.
    """
    if s.n < 2:
        raise DomainError("merit factor needs n >= 2")
    rho = aperiodic_autocorrelation(s)
    energy = sidelobe_energy(s, rho)
    peak = _peak(s, rho)
    if energy == 0:
        return math.inf
    if s.is_binary:
        return Fraction(peak * peak, energy)
    return peak * peak / energy


def l4_norm_fourth(s: Sequence):
    """||f||_4^4 from the autocorrelation: rho(0)**2 + 2 sum |rho(t)|**2."""
    rho = aperiodic_autocorrelation(s)
    peak = _peak(s, rho)
    return peak * peak + sidelobe_energy(s, rho)


def merit_factor_analytic(s: Sequence, route: str = "exact", nodes=None) -> float:
    """Merit factor from the L4 integral: ||f||_2^4 / (||f||_4^4 - ||f||_2^4).

    ``route`` is "exact" (equispaced quadrature, exact for this trigonometric
    polynomial) or "qmc" with ``nodes`` an int (golden-ratio node count) or a
    NodeSet.
    """
    from . import quadrature

    if s.n < 2:
        raise DomainError("merit factor needs n >= 2")
    l2_sq = float(sum(abs(e) ** 2 for e in s.entries))
    if route == "exact":
        l4 = quadrature.exact_l4_integral(s)
    elif route == "qmc":
        if nodes is None:
            raise DomainError("qmc route needs a node count or NodeSet")
        node_set = quadrature.golden_nodes(nodes) if isinstance(nodes, int) else nodes
        l4 = quadrature.qmc_l4_integral(s, node_set).value
    else:
        raise DomainError(f"unknown route {route!r}")
    denom = l4 - l2_sq * l2_sq
    if denom <= 0:
        if route == "exact" and abs(denom) <= 1e-9 * l4:
            return math.inf
        raise RouteFailureError(
            f"nonpositive denominator {denom:.3e} on the {route} route; try route='exact'"
        )
    return l2_sq * l2_sq / denom


def minimal_merit_factor(n: int) -> Fraction:
    """Merit factor of the all-ones (and alternating) sequence: 3n^2 / (2n^3 - 3n^2 + n)."""
    if n < 2:
        raise DomainError("minimal merit factor needs n >= 2")
    return Fraction(3 * n * n, 2 * n**3 - 3 * n * n + n)


def all_ones_l4(n: int) -> Fraction:
    """||f||_4^4 of the all-ones sequence, n(2n^2 + 1)/3."""
    if n < 1:
        raise DomainError("n must be positive")
    return Fraction(n * (2 * n * n + 1), 3)


def barker_l4_prediction(n: int) -> int:
    if n < 2:
        raise DomainError("needs n >= 2")
    return n * n + n if n % 2 == 0 else n * n + n - 1


def barker_merit_prediction(n: int) -> Fraction:
    if n < 2:
        raise DomainError("needs n >= 2")
    return Fraction(n) if n % 2 == 0 else Fraction(n * n, n - 1)


class MeritLowerBound(NamedTuple):
    bound: Fraction | float
    weak_tail: Fraction | float


def merit_lower_bound(n: int, c) -> MeritLowerBound:
    """Lower bound on F for sequences with every |rho(t)| <= c, t >= 1.

    Since 2 sum rho(t)^2 <= 2(n-1)c^2, F >= n^2 / (2(n-1)c^2). The weaker
    n / (2c^2) is reported alongside.
    """
    if n < 2:
        raise DomainError("needs n >= 2")
    if c <= 0:
        raise DomainError("bound c must be positive")
    c_exact = Fraction(c) if isinstance(c, (int, Fraction)) else None
    if c_exact is not None:
        return MeritLowerBound(
            Fraction(n * n) / (2 * (n - 1) * c_exact**2), Fraction(n) / (2 * c_exact**2)
        )
    return MeritLowerBound(n * n / (2 * (n - 1) * c * c), n / (2 * c * c))


# -- reports ----------------------------------------------------------------

@dataclass
class MeritReport:
    n: int
    merit_factor: Fraction | float
    l4_fourth: Fraction | float
    sidelobe_energy: Fraction | float
    infinite: bool = False
    routes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def num(x):
            if isinstance(x, Fraction):
                return float(x)
            return x

        out = {
            "n": self.n,
            "merit_factor": None if self.infinite else num(self.merit_factor),
            "l4_fourth": num(self.l4_fourth),
            "sidelobe_energy": num(self.sidelobe_energy),
            "infinite": self.infinite,
            "routes": self.routes,
        }
        if isinstance(self.merit_factor, Fraction):
            out["merit_factor_exact"] = str(self.merit_factor)
        return out

    CSV_FIELDS = ("n", "merit_factor", "merit_factor_exact", "l4_fourth", "sidelobe_energy")

    def csv_row(self) -> list:
        d = self.to_dict()
        return [d["n"], d["merit_factor"], d.get("merit_factor_exact", ""), d["l4_fourth"],
                d["sidelobe_energy"]]


def merit_report(s: Sequence, qmc_nodes=None) -> MeritReport:
    """Merit quantities by the discrete route, cross-checked by the analytic routes.

    ``routes`` records each route's merit factor and L4 value and the
    relative deviation from the discrete route.
    """
    from . import quadrature

    if s.n < 2:
        raise DomainError("merit report needs n >= 2")
    rho = aperiodic_autocorrelation(s)
    energy = sidelobe_energy(s, rho)
    peak = _peak(s, rho)
    l4 = peak * peak + energy
    infinite = energy == 0
    if infinite:
        f = math.inf
    elif s.is_binary:
        f = Fraction(peak * peak, energy)
    else:
        f = peak * peak / energy

    routes = {"discrete": {"merit_factor": None if infinite else float(f), "l4_fourth": float(l4)}}
    exact_l4 = quadrature.exact_l4_integral(s)
    routes["analytic-exact"] = _route_entry(exact_l4, float(peak), float(f), float(l4))
    if qmc_nodes is not None:
        nodes = quadrature.golden_nodes(qmc_nodes) if isinstance(qmc_nodes, int) else qmc_nodes
        q = quadrature.qmc_l4_integral(s, nodes)
        entry = _route_entry(q.value, float(peak), float(f), float(l4))
        entry["N"] = q.N
        entry["error_bound"] = q.error_bound
        routes["analytic-qmc"] = entry
    return MeritReport(s.n, f, l4, energy, infinite, routes)


def _route_entry(l4_value: float, peak: float, f_ref: float, l4_ref: float) -> dict:
    denom = l4_value - peak * peak
    f = peak * peak / denom if denom > 0 else math.inf
    entry = {"l4_fourth": l4_value, "merit_factor": f if math.isfinite(f) else None,
             "l4_rel_deviation": abs(l4_value - l4_ref) / l4_ref}
    if math.isfinite(f) and math.isfinite(f_ref):
        entry["merit_rel_deviation"] = abs(f - f_ref) / f_ref
    return entry
