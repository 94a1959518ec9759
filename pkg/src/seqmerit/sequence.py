"""Sequence representation, alphabets, serialization and the symmetry group.

Binary sequences keep their entries as Python ints (+1/-1) so every
autocorrelation derived from them is exact. Root-of-unity and general
complex sequences keep ``complex`` entries.

The symmetry group acting on binary sequences is generated by negation,
reversal and alternation (multiplying entry k by (-1)**k). An element is
applied in the fixed order reverse, then alternate, then negate.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DomainError, ParseError, UnsupportedAlphabetError

TOL_ALPHABET = 1e-9

_PLUS = "+"
_MINUS = "-"
_MINUS_ALIASES = {"-", "−"}


@dataclass(frozen=True)
class Alphabet:
    kind: str  # "pm1" | "roots" | "complex"
    m: int | None = None

    def __post_init__(self):
        if self.kind not in ("pm1", "roots", "complex"):
            raise DomainError(f"unknown alphabet kind {self.kind!r}")
        if self.kind == "roots" and (self.m is None or self.m < 1):
            raise DomainError("roots alphabet needs a positive order m")

    @property
    def tag(self) -> str:
        return f"roots:{self.m}" if self.kind == "roots" else self.kind

    @classmethod
    def from_tag(cls, tag: str) -> "Alphabet":
        if tag in ("pm1", "complex"):
            return cls(tag)
        if tag.startswith("roots:"):
            try:
                m = int(tag.split(":", 1)[1])
            except ValueError:
                raise ParseError(f"bad alphabet tag {tag!r}") from None
            return cls("roots", m)
        raise ParseError(f"bad alphabet tag {tag!r}")


PM1 = Alphabet("pm1")
COMPLEX = Alphabet("complex")


@dataclass(frozen=True)
class Sequence:
    """A finite sequence s_0, ..., s_{n-1} tagged with its alphabet."""

    entries: tuple
    alphabet: Alphabet = PM1

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise DomainError("a sequence needs at least one entry")
        kind = self.alphabet.kind
        if kind == "pm1":
            checked = []
            for i, e in enumerate(entries):
                if e == 1:
                    checked.append(1)
                elif e == -1:
                    checked.append(-1)
                else:
                    raise DomainError(f"entry {i} = {e!r} is not +1 or -1")
            entries = tuple(checked)
        else:
            entries = tuple(complex(e) for e in entries)
            if kind == "roots":
                m = self.alphabet.m
                for i, e in enumerate(entries):
                    if abs(e**m - 1) > TOL_ALPHABET:
                        raise DomainError(f"entry {i} = {e!r} is not an {m}-th root of unity")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def binary(cls, values: Iterable[int]) -> "Sequence":
        return cls(tuple(values), PM1)

    @classmethod
    def roots(cls, values: Iterable[complex], m: int) -> "Sequence":
        return cls(tuple(values), Alphabet("roots", m))

    @classmethod
    def complex(cls, values: Iterable[complex]) -> "Sequence":
        return cls(tuple(values), COMPLEX)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def is_binary(self) -> bool:
        return self.alphabet.kind == "pm1"

    def array(self) -> np.ndarray:
        """Entries as an int64 array (binary) or complex128 array (otherwise)."""
        if self.is_binary:
            return np.array(self.entries, dtype=np.int64)
        return np.array(self.entries, dtype=np.complex128)

    def __str__(self) -> str:
        if self.is_binary:
            return render_pm(self)
        return f"Sequence({self.alphabet.tag}, n={self.n})"


def parse_pm_string(text: str) -> Sequence:
    """Parse a compact '+'/'-' string into a binary sequence.

    The Unicode minus sign U+2212 is accepted as an alias for '-'.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty sequence string")
    values = []
    for i, ch in enumerate(text):
        if ch == _PLUS:
            values.append(1)
        elif ch in _MINUS_ALIASES:
            values.append(-1)
        else:
            raise ParseError(f"illegal character {ch!r} at index {i}", index=i)
    return Sequence.binary(values)


def render_pm(s: Sequence) -> str:
    require_binary(s)
    return "".join(_PLUS if e == 1 else _MINUS for e in s.entries)


def require_binary(s: Sequence) -> None:
    if not s.is_binary:
        raise UnsupportedAlphabetError(f"operation needs a binary sequence, got {s.alphabet.tag}")


# -- JSON schema ------------------------------------------------------------

def to_json_obj(s: Sequence) -> dict:
    if s.is_binary:
        values = list(s.entries)
    else:
        values = [[e.real, e.imag] for e in s.entries]
    return {"alphabet": s.alphabet.tag, "values": values}


def from_json_obj(obj: dict) -> Sequence:
    try:
        alphabet = Alphabet.from_tag(obj["alphabet"])
        raw = obj["values"]
    except (KeyError, TypeError):
        raise ParseError("sequence JSON needs 'alphabet' and 'values'") from None
    if not isinstance(raw, list):
        raise ParseError("'values' must be a list")
    if alphabet.kind == "pm1":
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
            raise ParseError("pm1 values must be integers")
        try:
            return Sequence(tuple(raw), alphabet)
        except DomainError as exc:
            raise ParseError(str(exc)) from None
    values = []
    for i, v in enumerate(raw):
        if isinstance(v, (list, tuple)) and len(v) == 2:
            values.append(complex(float(v[0]), float(v[1])))
        elif isinstance(v, (int, float)) and not isinstance(v, bool):
            values.append(complex(v))
        else:
            raise ParseError(f"value {i} is not a [re, im] pair", index=i)
    try:
        return Sequence(tuple(values), alphabet)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def dumps(s: Sequence) -> str:
    return json.dumps(to_json_obj(s), sort_keys=True)


def loads(text: str) -> Sequence:
    """Read either the JSON schema or a bare '+/-' string."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return from_json_obj(obj)
    return parse_pm_string(stripped)


# -- symmetries -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class SymmetryElement:
    negate: bool = False
    reverse: bool = False
    alternate: bool = False

    def compose(self, first: "SymmetryElement", n: int) -> "SymmetryElement":
        """The element equal to applying ``first`` and then ``self`` on length ``n``.

        Reversal and alternation commute only up to a global sign
        (-1)**(n-1), which lands in the negate flag.
        """
        extra = self.reverse and first.alternate and (n - 1) % 2 == 1
        return SymmetryElement(
            negate=self.negate ^ first.negate ^ extra,
            reverse=self.reverse ^ first.reverse,
            alternate=self.alternate ^ first.alternate,
        )


IDENTITY = SymmetryElement()
SYMMETRIES = tuple(
    SymmetryElement(neg, rev, alt)
    for neg, rev, alt in itertools.product((False, True), repeat=3)
)


def apply_symmetry(s: Sequence, g: SymmetryElement) -> Sequence:
    entries = list(s.entries)
    if g.reverse:
        entries.reverse()
    if g.alternate:
        entries = [e if k % 2 == 0 else -e for k, e in enumerate(entries)]
    if g.negate:
        entries = [-e for e in entries]
    if s.is_binary:
        return Sequence(tuple(entries), s.alphabet)
    # -1 times a root of unity of odd order leaves that alphabet.
    alphabet = s.alphabet
    if alphabet.kind == "roots" and (g.negate or g.alternate) and alphabet.m % 2:
        alphabet = Alphabet("roots", 2 * alphabet.m)
    return Sequence(tuple(entries), alphabet)


def orbit(s: Sequence) -> set[tuple]:
    """Distinct entry tuples in the symmetry orbit of a binary sequence."""
    require_binary(s)
    return {apply_symmetry(s, g).entries for g in SYMMETRIES}


def canonical_form(s: Sequence) -> Sequence:
    """Lexicographic minimum of the orbit, comparing -1 < +1."""
    return Sequence(min(orbit(s)), PM1)


def is_canonical(s: Sequence) -> bool:
    return canonical_form(s).entries == s.entries
