"""Cyclic difference sets, two-level autocorrelation and circulant Hadamard rows.

Difference-set parameters are written (v, k, lambda). A binary sequence of
period v whose +1 positions form a (v, k, lambda) difference set has
periodic autocorrelation v off-peak value gamma = v - 4(k - lambda); the
complementary sign convention negates the sequence and leaves theta alone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .autocorr import aperiodic_autocorrelation, periodic_autocorrelation
from .errors import (
    ConsistencyError,
    DifferenceSetRejection,
    DomainError,
    NotTwoLevelError,
)
from .sequence import Sequence, require_binary

PERFECT_TOL = 1e-9

BARKER_DESIGNS = {7: (7, 4, 2), 11: (11, 5, 2), 13: (13, 9, 6)}


@dataclass(frozen=True)
class DifferenceSet:
    v: int
    members: tuple
    lam: int

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def params(self) -> tuple:
        return (self.v, self.k, self.lam)

    def to_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "lambda": self.lam, "members": list(self.members),
                "verified": True}


def difference_counts(members, v: int) -> list[int]:
    """counts[r] = #{(a, b) in D x D, a != b : a - b = r mod v}."""
    counts = [0] * v
    for a in members:
        for b in members:
            if a != b:
                counts[(a - b) % v] += 1
    return counts


def verify_difference_set(members, v: int) -> DifferenceSet:
    """Return the verified difference set or raise DifferenceSetRejection."""
    if v < 2:
        raise DomainError("modulus must be at least 2")
    ds = sorted(set(members))
    if not ds:
        raise DomainError("a difference set needs at least one member")
    if any(not 0 <= a < v for a in ds):
        raise DomainError(f"members must lie in [0, {v})")
    counts = difference_counts(ds, v)
    lam = counts[1]
    for r in range(2, v):
        if counts[r] != lam:
            raise DifferenceSetRejection(
                f"residue 1 occurs {lam} times but residue {r} occurs {counts[r]} times",
                residues=(1, r), counts=(lam, counts[r]),
            )
    result = DifferenceSet(v, tuple(ds), lam)
    k = result.k
    if k * (k - 1) != lam * (v - 1):
        raise ConsistencyError(f"counting identity fails for {result.params}")
    return result


def characteristic_sequence(ds: DifferenceSet) -> Sequence:
    members = set(ds.members)
    return Sequence.binary([1 if i in members else -1 for i in range(ds.v)])


def two_level_gamma(s: Sequence, ds: DifferenceSet | None = None) -> int:
    """The common off-peak periodic autocorrelation value.

    When ``ds`` is given the value is also checked against v - 4(k - lambda).
    """
    require_binary(s)
    if s.n < 2:
        raise DomainError("two-level autocorrelation needs n >= 2")
    theta = periodic_autocorrelation(s)
    gamma = theta[1]
    for t in range(2, s.n):
        if theta[t] != gamma:
            raise NotTwoLevelError(
                f"theta(1) = {gamma} but theta({t}) = {theta[t]}", lags=(1, t),
                values=(gamma, theta[t]),
            )
    if ds is not None:
        expected = ds.v - 4 * (ds.k - ds.lam)
        if gamma != expected:
            raise ConsistencyError(f"gamma {gamma} != v - 4(k - lambda) = {expected}")
    return gamma


def menon_params(u: int, sign: str = "-") -> tuple:
    """(4u^2, 2u^2 - u, u^2 - u) for sign '-', (4u^2, 2u^2 + u, u^2 + u) for '+'."""
    if u < 1:
        raise DomainError("u must be positive")
    if sign not in ("+", "-"):
        raise DomainError("sign must be '+' or '-'")
    e = u if sign == "+" else -u
    return (4 * u * u, 2 * u * u + e, u * u + e)


def is_perfect(s: Sequence) -> bool:
    theta = periodic_autocorrelation(s)
    peak = abs(theta[0])
    if peak == 0:
        return False
    return all(abs(v) <= PERFECT_TOL * peak for v in theta[1:])


def circulant_matrix(row: Sequence) -> np.ndarray:
    """Row i is the row vector cyclically shifted right by i."""
    a = row.array()
    idx = np.arange(row.n)
    return a[(idx[None, :] - idx[:, None]) % row.n]


def circulant_hadamard_check(row: Sequence) -> bool:
    """True iff the circulant matrix H of ``row`` satisfies H H^T = n I.

    Computed from the matrix product and cross-checked against
    ``is_perfect``.
    """
    require_binary(row)
    if row.n < 2:
        raise DomainError("circulant Hadamard check needs n >= 2")
    h = circulant_matrix(row)
    result = bool(np.array_equal(h @ h.T, row.n * np.eye(row.n, dtype=h.dtype)))
    if result != is_perfect(row):
        raise ConsistencyError("matrix and autocorrelation routes disagree")
    return result


def hadamard_scan(n: int) -> list[Sequence]:
    """Every binary row of length n generating a circulant Hadamard matrix."""
    if n < 2:
        raise DomainError("scan needs n >= 2")
    return [_from_mask(m, n) for m in kernels.perfect_rows(n)]


def _from_mask(mask: int, n: int) -> Sequence:
    return Sequence.binary([-1 if (mask >> k) & 1 else 1 for k in range(n)])


def barker_difference_set_link(n: int) -> DifferenceSet:
    """Difference set carried by the odd Barker sequence of length n."""
    from .families import barker

    if n not in BARKER_DESIGNS:
        raise DomainError(f"n must be one of {sorted(BARKER_DESIGNS)}")
    s = barker(n)
    target = BARKER_DESIGNS[n]
    plus = [i for i, e in enumerate(s) if e == 1]
    minus = [i for i, e in enumerate(s) if e == -1]
    # Translating a difference set keeps its parameters, so only the two
    # sign classes need trying.
    for candidate in (plus, minus):
        try:
            ds = verify_difference_set(candidate, n)
        except DifferenceSetRejection:
            continue
        if ds.params == target:
            return ds
    raise ConsistencyError(f"Barker-{n} does not carry a {target} difference set")


def aperiodic_sidelobes_small(s: Sequence) -> bool:
    """Whether every aperiodic sidelobe lies in {0, +1, -1}.

    This is the aperiodic property conjectured (not proved) to follow from
    a perfect periodic autocorrelation; it is checked, never assumed.
    """
    rho = aperiodic_autocorrelation(s)
    return all(abs(v) <= 1 for v in rho[1:])


def difference_tally(members, v: int) -> dict:
    """Nonzero residues and how often each arises as a difference."""
    counts = difference_counts(sorted(set(members)), v)
    return {r: counts[r] for r in range(1, v)}
