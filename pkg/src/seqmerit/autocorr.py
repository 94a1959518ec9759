"""Aperiodic and periodic autocorrelation, Fourier evaluation and the spectrum.

Conventions, for a sequence s_0..s_{n-1}:

    rho(t)   = sum_{k=0}^{n-t-1} s_k conj(s_{k+t})      (aperiodic)
    theta(t) = sum_{k=0}^{n-1}   s_k conj(s_{(k+t) mod n})  (periodic)
    f(x)     = sum_k s_k z**k,  z = exp(2 pi i x)

Binary sequences produce exact integer autocorrelations. For complex
entries the wrap-around identity reads theta(t) = rho(t) + conj(rho(n-t)),
and the spectrum expands as

    |f(x)|**2 = rho(0) + 2 sum_{t>=1} Re(conj(rho(t)) z**t),

which reduces to the familiar rho(t)(z**t + conj(z)**t) for real rho.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import ConsistencyError, UndefinedSidelobeError
from .sequence import Sequence

TOL_SPEC = 1e-9


@dataclass(frozen=True)
class AutocorrelationProfile:
    aperiodic: tuple
    periodic: tuple
    peak: float
    max_sidelobe: float | None

    @property
    def n(self) -> int:
        return len(self.aperiodic)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "aperiodic": _jsonable(self.aperiodic),
            "periodic": _jsonable(self.periodic),
            "peak": self.peak,
            "max_sidelobe": self.max_sidelobe,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "re_rho", "im_rho", "re_theta", "im_theta"])
        for t, (r, th) in enumerate(zip(self.aperiodic, self.periodic)):
            r, th = complex(r), complex(th)
            writer.writerow([t, _num(r.real), _num(r.imag), _num(th.real), _num(th.imag)])
        return buf.getvalue()


def _num(x: float):
    return int(x) if float(x).is_integer() else repr(float(x))


def _jsonable(values):
    out = []
    for v in values:
        if isinstance(v, complex):
            out.append([v.real, v.imag])
        else:
            out.append(v)
    return out


def aperiodic_autocorrelation(s: Sequence) -> tuple:
    """rho(0..n-1) by direct summation; ints for binary input."""
    if s.is_binary:
        return tuple(kernels.aperiodic_pm(list(s.entries)))
    a = s.array()
    n = len(a)
    out = [complex(np.dot(a[: n - t], np.conj(a[t:]))) for t in range(n)]
    out[0] = complex(out[0].real, 0.0)
    return tuple(out)


def periodic_autocorrelation(s: Sequence) -> tuple:
    """theta(0..n-1) by direct summation with cyclic indexing."""
    a = s.array()
    n = len(a)
    idx = np.arange(n)
    shifted = a[(idx[:, None] + idx[None, :]) % n]  # row t holds a_{k+t}
    if s.is_binary:
        return tuple(int(v) for v in shifted @ a)
    out = [complex(v) for v in np.conj(shifted) @ a]
    out[0] = complex(np.dot(a, np.conj(a)).real, 0.0)  # same peak as the aperiodic route
    return tuple(out)


def aperiodic_autocorrelation_fft(s: Sequence) -> np.ndarray:
    """O(n log n) route to rho via zero-padded FFT; float/complex output."""
    a = s.array().astype(np.complex128)
    n = len(a)
    size = 1 << (2 * n - 1).bit_length()
    spec = np.fft.fft(a, size)
    # sum_k a_k conj(a_{k+t}) is the inverse transform of conj(A) * A
    # evaluated at -t, i.e. the conjugate of the lag-t correlation.
    corr = np.fft.ifft(np.abs(spec) ** 2)[:n]
    rho = np.conj(corr)
    if s.is_binary:
        return rho.real
    return rho


def autocorrelation_profile(s: Sequence) -> AutocorrelationProfile:
    rho = aperiodic_autocorrelation(s)
    theta = periodic_autocorrelation(s)
    peak = rho[0].real if isinstance(rho[0], complex) else rho[0]
    side = None if s.n < 2 else max(abs(v) for v in rho[1:])
    return AutocorrelationProfile(rho, theta, peak, side)


def max_sidelobe(s: Sequence):
    if s.n < 2:
        raise UndefinedSidelobeError("a length-1 sequence has no sidelobes")
    rho = aperiodic_autocorrelation(s)
    return max(abs(v) for v in rho[1:])


def sidelobe_values(rho) -> list:
    return [abs(v) for v in rho[1:]]


# -- Fourier side -----------------------------------------------------------

def fourier_values(s: Sequence, xs) -> np.ndarray:
    """f(x) = sum_k s_k exp(2 pi i k x) for each x in ``xs`` (vectorized Horner)."""
    xs = np.asarray(xs, dtype=np.float64)
    z = np.exp(2j * np.pi * xs)
    acc = np.zeros_like(z)
    for coeff in reversed(s.entries):
        acc = acc * z + coeff
    return acc


def fourier_eval(s: Sequence, x: float) -> complex:
    return complex(fourier_values(s, np.array([x]))[0])


def spectrum_from_autocorrelation(rho, xs) -> np.ndarray:
    """|f|**2 rebuilt from rho alone via the cosine expansion."""
    xs = np.asarray(xs, dtype=np.float64)
    r = np.asarray(rho, dtype=np.complex128)
    out = np.full(xs.shape, r[0].real)
    for t in range(1, len(r)):
        out += 2.0 * np.real(np.conj(r[t]) * np.exp(2j * np.pi * t * xs))
    return out


def spectrum(s: Sequence, xs, rho=None) -> np.ndarray:
    """|f(x)|**2 at each x, cross-checked against the autocorrelation expansion.

    Raises ConsistencyError if the two routes differ by more than
    ``TOL_SPEC * rho(0)``.
    """
    if rho is None:
        rho = aperiodic_autocorrelation(s)
    direct = np.abs(fourier_values(s, xs)) ** 2
    expanded = spectrum_from_autocorrelation(rho, xs)
    peak = float(abs(rho[0]))
    if direct.size:
        worst = float(np.max(np.abs(direct - expanded)))
        if worst > TOL_SPEC * peak:
            raise ConsistencyError(
                f"spectrum routes disagree by {worst:.3e} (tolerance {TOL_SPEC * peak:.3e})"
            )
    return direct


def spectrum_at(s: Sequence, x: float) -> float:
    return float(spectrum(s, np.array([x]))[0])
