"""L4 integral by exact equispaced quadrature and by quasi-Monte Carlo.

Also houses the node sets used for QMC, their discrepancies, and two
checkable inequalities about exponential sums at those nodes.

|f(x)|**4 is a trigonometric polynomial with frequencies in
[-(2n-2), 2n-2], so averaging it over M >= 2n-1 equispaced points is
exact. We use M = 4n - 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .autocorr import aperiodic_autocorrelation, fourier_values, spectrum
from .errors import DomainError
from .sequence import Sequence

GOLDEN_RATIO = (1 + math.sqrt(5)) / 2
_CHUNK = 1 << 16


def _as_points(points) -> np.ndarray:
    x = np.asarray(points, dtype=np.float64).ravel()
    if x.size == 0:
        raise DomainError("point set is empty")
    bad = np.flatnonzero((x < 0.0) | (x >= 1.0) | ~np.isfinite(x))
    if bad.size:
        i = int(bad[0])
        raise DomainError(f"point {i} = {x[i]!r} is outside [0, 1)")
    return x


def star_discrepancy(points) -> float:
    """Exact D*_N = max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the sorted points."""
    x = np.sort(_as_points(points))
    n = x.size
    i = np.arange(1, n + 1, dtype=np.float64)
    return float(max(np.max(i / n - x), np.max(x - (i - 1) / n)))


def extreme_discrepancy(points) -> float:
    """Exact D_N over all subintervals [a, b) of [0, 1).

    With d_i = i/N - x_(i), D_N = 1/N + max d_i - min d_i. Always
    D*_N <= D_N <= 2 D*_N.
    """
    x = np.sort(_as_points(points))
    n = x.size
    d = np.arange(1, n + 1, dtype=np.float64) / n - x
    return float(1.0 / n + d.max() - d.min())


def min_separation(points) -> float:
    """Smallest distance ||x_i - x_j|| to the nearest integer over i != j.

    A single point is taken to have separation 1 (its distance to itself
    around the circle).
    """
    x = np.sort(_as_points(points))
    if x.size == 1:
        return 1.0
    gaps = np.diff(x)
    wrap = 1.0 - (x[-1] - x[0])
    return float(min(gaps.min(), wrap))


@dataclass(frozen=True, eq=False)
class NodeSet:
    points: np.ndarray
    star_discrepancy: float
    extreme_discrepancy: float
    min_separation: float
    generator: str = "explicit"

    @classmethod
    def from_points(cls, points, generator: str = "explicit") -> "NodeSet":
        x = _as_points(points)
        delta = min_separation(x)
        if delta <= 0.0:
            raise DomainError("node set contains repeated points")
        x.setflags(write=False)
        return cls(x, star_discrepancy(x), extreme_discrepancy(x), delta, generator)

    @property
    def N(self) -> int:
        return int(self.points.size)

    def __len__(self) -> int:
        return self.N

    def to_dict(self, include_points: bool = False) -> dict:
        out = {
            "N": self.N,
            "generator": self.generator,
            "star_discrepancy": self.star_discrepancy,
            "extreme_discrepancy": self.extreme_discrepancy,
            "min_separation": self.min_separation,
        }
        if include_points:
            out["points"] = self.points.tolist()
        return out


def golden_nodes(N: int, omega: float = GOLDEN_RATIO) -> NodeSet:
    """Fractional parts of m * omega for m = 1..N."""
    if N < 1:
        raise DomainError("need at least one node")
    m = np.arange(1, N + 1, dtype=np.float64)
    frac = omega - math.floor(omega)
    x = np.mod(m * frac, 1.0)
    name = "golden-ratio" if omega == GOLDEN_RATIO else f"kronecker({omega!r})"
    return NodeSet.from_points(x, name)


def equispaced_nodes(N: int, offset: float = 0.0) -> NodeSet:
    """Points (i + offset)/N, i = 0..N-1; offset 0.5 gives the midpoint rule."""
    if N < 1:
        raise DomainError("need at least one node")
    if not 0.0 <= offset < 1.0:
        raise DomainError("offset must lie in [0, 1)")
    x = (np.arange(N, dtype=np.float64) + offset) / N
    return NodeSet.from_points(x, "equispaced")


# -- L4 integral --------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureResult:
    value: float
    method: str
    N: int
    error_bound: float
    variation_bound: float = 0.0
    discrepancy: float = 0.0

    def to_dict(self) -> dict:
        return {"value": self.value, "method": self.method, "N": self.N,
                "error_bound": self.error_bound}


def exact_node_count(n: int) -> int:
    return 4 * n - 3


def exact_l4_integral(s: Sequence) -> float:
    """Integral of |f(x)|**4 over [0, 1), exact up to roundoff."""
    m = exact_node_count(s.n)
    # fft samples f at exp(-2 pi i j / m); that node set equals the
    # equispaced set, only visited in another order.
    vals = np.fft.fft(s.array().astype(np.complex128), m)
    return float(np.mean(np.abs(vals) ** 4))


def _fourth_powers(s: Sequence, x: np.ndarray) -> np.ndarray:
    out = np.empty(x.size)
    for lo in range(0, x.size, _CHUNK):
        hi = min(lo + _CHUNK, x.size)
        out[lo:hi] = np.abs(fourier_values(s, x[lo:hi])) ** 4
    return out


def peak_spectrum_bound(s: Sequence, rho=None) -> float:
    """rho(0) + 2 sum_{t>=1} |rho(t)|, an upper bound on max |f|**2."""
    if rho is None:
        rho = aperiodic_autocorrelation(s)
    return float(abs(rho[0]) + 2 * sum(abs(v) for v in rho[1:]))


def qmc_l4_integral(s: Sequence, nodes: NodeSet) -> QuadratureResult:
    """Average of |f|**4 over ``nodes`` with a Koksma-Hlawka error bound.

    The bound is V * D*_N where V = P**2 and P bounds |f|**2 from the
    autocorrelation expansion.
    """
    if nodes.N < 1:
        raise DomainError("empty node set")
    value = float(np.mean(_fourth_powers(s, nodes.points)))
    variation = peak_spectrum_bound(s) ** 2
    bound = variation * nodes.star_discrepancy
    return QuadratureResult(value, "qmc", nodes.N, bound, variation, nodes.star_discrepancy)


def exact_quadrature_result(s: Sequence) -> QuadratureResult:
    return QuadratureResult(exact_l4_integral(s), "exact", exact_node_count(s.n), 0.0)


def bernstein_variation_bound(s: Sequence) -> float:
    """Rigorous total-variation bound for |f|**4: 2 pi (2n - 2) * max|f|**4.

    Follows from Bernstein's inequality for the degree-(2n-2) trigonometric
    polynomial |f|**4. Reported for comparison; ``qmc_l4_integral`` uses the
    cruder P**2.
    """
    return 2 * math.pi * (2 * s.n - 2) * peak_spectrum_bound(s) ** 2


def l4_samples(s: Sequence, xs) -> np.ndarray:
    """Rows (x, |f(x)|**2, |f(x)|**4) for plotting."""
    xs = np.asarray(xs, dtype=np.float64)
    sq = spectrum(s, xs)
    return np.column_stack([xs, sq, sq * sq])


# -- inequalities -------------------------------------------------------------

class InequalityReport(NamedTuple):
    lhs: float
    rhs: float
    holds: bool

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


_REL_SLACK = 1e-12


def large_sieve_check(a: Sequence, nodes: NodeSet) -> InequalityReport:
    """sum_r |S(x_r)|**2 <= (len(a) + 1/delta) * sum |a_n|**2."""
    values = fourier_values(a, nodes.points)
    lhs = float(np.sum(np.abs(values) ** 2))
    energy = float(sum(abs(e) ** 2 for e in a.entries))
    rhs = (a.n + 1.0 / nodes.min_separation) * energy
    return InequalityReport(lhs, rhs, lhs <= rhs * (1 + _REL_SLACK))


def weyl_sum_check(nodes: NodeSet) -> InequalityReport:
    """|sum_m exp(2 pi i x_m)| <= 2 N D_N, with D_N the extreme discrepancy.

    It fails with the star discrepancy in its place: the nodes
    {0.4, 0.5, 0.6} give |sum| = 1 + 2 cos(pi/5) ~ 2.618 > 2 * 3 * 0.4.
    """
    total = abs(complex(np.sum(np.exp(2j * np.pi * nodes.points))))
    bound = 2.0 * nodes.N * nodes.extreme_discrepancy
    return InequalityReport(total, bound, total <= bound * (1 + _REL_SLACK) + 1e-12)


@dataclass(frozen=True)
class DeviationStats:
    mean: float
    max: float
    triangle_bound: float

    def to_dict(self) -> dict:
        return {"mean": self.mean, "max": self.max, "triangle_bound": self.triangle_bound}


def spectrum_deviation_stats(s: Sequence, nodes: NodeSet) -> DeviationStats:
    """Mean and max of | |f(x)|**2 - rho(0) | over the nodes.

    ``triangle_bound`` is 2 sum_{t>=1} |rho(t)|, which caps the maximum.
    """
    rho = aperiodic_autocorrelation(s)
    dev = np.abs(spectrum(s, nodes.points, rho) - float(abs(rho[0])))
    tri = 2.0 * sum(abs(v) for v in rho[1:])
    return DeviationStats(float(dev.mean()), float(dev.max()), float(tri))
