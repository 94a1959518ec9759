"""Generators for the named sequence families."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, NoKnownBarkerError
from .sequence import Alphabet, Sequence, parse_pm_string

# s_0 first. Polynomial listings that start from the leading coefficient
# give the reversed sequence, which lies in the same symmetry orbit.
BARKER_CATALOG = {
    2: "++",
    3: "++-",
    4: "+++-",
    5: "+++-+",
    7: "+++--+-",
    11: "+++---+--+-",
    13: "+++++--++-+-+",
}

FAMILIES = ("all-ones", "alternating", "barker", "legendre", "chirp", "turyn-perfect")


def all_ones(n: int) -> Sequence:
    if n < 1:
        raise DomainError("n must be positive")
    return Sequence.binary([1] * n)


def alternating(n: int) -> Sequence:
    if n < 1:
        raise DomainError("n must be positive")
    return Sequence.binary([1 if k % 2 == 0 else -1 for k in range(n)])


def barker(n: int) -> Sequence:
    try:
        return parse_pm_string(BARKER_CATALOG[n])
    except KeyError:
        raise NoKnownBarkerError(
            f"no Barker sequence of length {n} is known; the known lengths are "
            f"{sorted(BARKER_CATALOG)} and none is believed to exist beyond 13"
        ) from None


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % d for d in range(3, math.isqrt(p) + 1, 2))


def legendre(p: int) -> Sequence:
    """s_k = Legendre symbol (k | p) for k >= 1, with s_0 = +1."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    half = (p - 1) // 2
    values = [1] + [1 if pow(k, half, p) == 1 else -1 for k in range(1, p)]
    return Sequence.binary(values)


def _quadratic_phase(n: int) -> list[complex]:
    # exp(i pi k(k+1)/n) = xi**(k(k+1)/2) with xi = exp(2 pi i / n); reduce
    # the integer exponent mod n before leaving exact arithmetic.
    return [cmath.exp(2j * math.pi * ((k * (k + 1) // 2) % n) / n) for k in range(n)]


def chirp(n: int) -> Sequence:
    """Entries exp(i pi k(k+1)/n); these are n-th roots of unity."""
    if n < 1:
        raise DomainError("n must be positive")
    return Sequence(tuple(_quadratic_phase(n)), Alphabet("roots", n))


def turyn_perfect(n: int) -> Sequence:
    """Quadratic-phase sequence over the n-th roots of unity, perfect for odd n."""
    if n < 3 or n % 2 == 0:
        raise DomainError("perfect root-of-unity construction needs odd n > 1")
    return Sequence(tuple(_quadratic_phase(n)), Alphabet("roots", n))


@dataclass(frozen=True)
class FamilyDescriptor:
    name: str
    parameter: int

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise DomainError(f"unknown family {self.name!r}; choose from {', '.join(FAMILIES)}")

    def generate(self) -> Sequence:
        return generate(self.name, self.parameter)


_GENERATORS = {
    "all-ones": all_ones,
    "alternating": alternating,
    "barker": barker,
    "legendre": legendre,
    "chirp": chirp,
    "turyn-perfect": turyn_perfect,
}


def generate(name: str, parameter: int) -> Sequence:
    try:
        gen = _GENERATORS[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    return gen(parameter)
