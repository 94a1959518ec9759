"""Exhaustive search for binary sequences with bounded aperiodic sidelobes.

``enumerate_bounded`` runs a pruned depth-first search in the kernel
backend. ``brute_force_oracle`` scans every sequence with numpy and shares
no code with it; the two are compared in the test suite.

Symmetry reduction fixes s_0 = s_1 = -1, which every canonical form
(lexicographic orbit minimum with -1 < +1) satisfies, and keeps the leaves
that are canonical.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import DomainError, GuardError
from .merit import merit_factor_discrete, merit_lower_bound
from .sequence import Sequence, canonical_form, orbit, render_pm

DEFAULT_MAX_N = 34
ORACLE_MAX_N = 24
RECORDS_MAX_N = 24
MODES = ("enumerate", "count", "records")


def search_limit() -> int:
    """Length guard for the pruned search; SEQMERIT_MAX_N raises it."""
    env = os.environ.get("SEQMERIT_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"SEQMERIT_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


@dataclass(frozen=True)
class SearchSpec:
    n: int
    c: float
    mode: str = "enumerate"
    symmetry_reduction: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("search needs n >= 2")
        if self.c < 0:
            raise DomainError("sidelobe bound must be nonnegative")
        if self.mode not in MODES:
            raise DomainError(f"mode must be one of {MODES}")

    @property
    def int_bound(self) -> int:
        # rho(t) is an integer for binary sequences
        return int(self.c // 1)


def _from_mask(mask: int, n: int) -> Sequence:
    return Sequence.binary([-1 if (mask >> k) & 1 else 1 for k in range(n)])


def _guard(n: int, limit: int, allow_large: bool, what: str) -> None:
    if n > limit and not allow_large:
        raise GuardError(
            f"{what} refuses n = {n} > {limit}; pass allow_large=True "
            f"(CLI: --allow-large) or raise SEQMERIT_MAX_N"
        )


def _base_prefix(n: int, symmetry_reduction: bool) -> list[int]:
    if not symmetry_reduction:
        return []
    return [-1, -1] if n >= 2 else [-1]


def _leaf_masks(n: int, c: int, prefix: list[int], workers: int) -> list[int]:
    if workers <= 1:
        return kernels.bounded_leaves(n, c, prefix)
    depth = min(8, n // 2)
    extra = max(0, depth - len(prefix))
    prefixes = [prefix + list(tail) for tail in itertools.product((-1, 1), repeat=extra)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = list(pool.map(kernels.bounded_leaves, itertools.repeat(n),
                               itertools.repeat(c), prefixes))
    return [m for chunk in chunks for m in chunk]


def _survivors(spec: SearchSpec, workers: int, allow_large: bool) -> list[Sequence]:
    _guard(spec.n, search_limit(), allow_large, "pruned search")
    prefix = _base_prefix(spec.n, spec.symmetry_reduction)
    masks = _leaf_masks(spec.n, spec.int_bound, prefix, workers)
    seqs = [_from_mask(m, spec.n) for m in masks]
    if spec.symmetry_reduction:
        seqs = [s for s in seqs if canonical_form(s).entries == s.entries]
    return sorted(seqs, key=lambda s: s.entries)


def enumerate_bounded(spec: SearchSpec, *, workers: int = 1, allow_large: bool = False):
    """Binary sequences of length n with every |rho(t)| <= c, t >= 1.

    Mode "enumerate" returns the sorted list (canonical representatives
    only under symmetry reduction); "count" returns the total number of
    sequences, summing orbit sizes under symmetry reduction; "records"
    returns the best-merit survivor as a ``MeritRecord`` (or None).
    """
    seqs = _survivors(spec, workers, allow_large)
    if spec.mode == "enumerate":
        return seqs
    if spec.mode == "count":
        if spec.symmetry_reduction:
            return sum(len(orbit(s)) for s in seqs)
        return len(seqs)
    best = None
    for s in seqs:
        f = merit_factor_discrete(s)
        if best is None or f > best.merit_factor:
            best = MeritRecord(spec.n, f, canonical_form(s))
    return best


def bounded_sequences(n: int, c, **kwargs) -> list[Sequence]:
    return enumerate_bounded(SearchSpec(n, c), **kwargs)


def expand_orbits(representatives) -> list[Sequence]:
    out = set()
    for s in representatives:
        out |= orbit(s)
    return [Sequence.binary(e) for e in sorted(out)]


# -- oracle -----------------------------------------------------------------

def _all_sequences(n: int, lo: int, hi: int) -> np.ndarray:
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return (1 - 2 * bits).astype(np.int32)


def brute_force_oracle(n: int, c) -> list[Sequence]:
    """Unpruned scan of all 2**n binary sequences, computing every rho(t)."""
    if n < 1:
        raise DomainError("n must be positive")
    if n > ORACLE_MAX_N:
        raise GuardError(f"brute-force oracle refuses n = {n} > {ORACLE_MAX_N}")
    found = []
    block = 1 << 16
    for lo in range(0, 1 << n, block):
        hi = min(lo + block, 1 << n)
        S = _all_sequences(n, lo, hi)
        worst = np.zeros(hi - lo, dtype=np.int32)
        for t in range(1, n):
            rho = np.einsum("ij,ij->i", S[:, : n - t], S[:, t:])
            np.maximum(worst, np.abs(rho), out=worst)
        for row in S[worst <= c]:
            found.append(tuple(int(v) for v in row))
    return [Sequence.binary(e) for e in sorted(found)]


# -- merit records ------------------------------------------------------------

@dataclass(frozen=True)
class MeritRecord:
    n: int
    merit_factor: Fraction
    witness: Sequence

    def to_dict(self) -> dict:
        return {"n": self.n, "F_num": self.merit_factor.numerator,
                "F_den": self.merit_factor.denominator, "F": float(self.merit_factor),
                "witness": render_pm(self.witness)}


def merit_record(n: int) -> MeritRecord:
    """Largest merit factor over all binary sequences of length n.

    The witness is the lexicographically first optimal sequence, which is
    the canonical form of its orbit.
    """
    if n < 2:
        raise DomainError("needs n >= 2")
    energy, mask = kernels.min_energy(n, _base_prefix(n, True))
    witness = _from_mask(mask, n)
    f = Fraction(n * n, 2 * energy)
    return MeritRecord(n, f, canonical_form(witness))


def merit_records(n_max: int, *, n_min: int = 2, allow_large: bool = False) -> list[MeritRecord]:
    _guard(n_max, RECORDS_MAX_N, allow_large, "merit record scan")
    return [merit_record(n) for n in range(n_min, n_max + 1)]


# -- bound report ---------------------------------------------------------------

@dataclass
class BoundRow:
    n: int
    count: int
    bound: Fraction | None
    min_merit: Fraction | None
    violations: int

    def to_dict(self) -> dict:
        return {"n": self.n, "count": self.count,
                "bound": None if self.bound is None else str(self.bound),
                "min_merit": None if self.min_merit is None else str(self.min_merit),
                "violations": self.violations}


@dataclass
class BoundCheckReport:
    c: float
    rows: list = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(r.violations for r in self.rows)

    @property
    def vanishes_from(self) -> int | None:
        """Smallest scanned n from which every later count is zero."""
        first = None
        for row in self.rows:
            if row.count == 0:
                if first is None:
                    first = row.n
            else:
                first = None
        return first

    def to_dict(self) -> dict:
        return {"c": self.c, "rows": [r.to_dict() for r in self.rows],
                "violations": self.violations, "vanishes_from": self.vanishes_from}


def bound_check_report(c, n_values, *, allow_large: bool = False) -> BoundCheckReport:
    """Survivor counts over ``n_values`` and a check of F >= n^2 / (2(n-1)c^2)."""
    report = BoundCheckReport(c)
    for n in n_values:
        seqs = enumerate_bounded(SearchSpec(n, c), allow_large=allow_large)
        bound = merit_lower_bound(n, c).bound if c > 0 else None
        merits = [merit_factor_discrete(s) for s in seqs]
        bad = 0 if bound is None else sum(1 for f in merits if f < bound)
        report.rows.append(BoundRow(n, len(seqs), bound, min(merits) if merits else None, bad))
    return report
