"""Exponents k, asymptotic data m and Stokes parameters s of tt*-Toda solutions.

The exponents ``k_0, ..., k_n`` of the holomorphic form and the asymptotic
data ``m`` are exact rationals linked by

    m_{i-1} - m_i + 1 = ((n+1)/N) (k_i + 1),   N = n + 1 + sum_i k_i,

with indices mod n+1.  The Stokes parameters are the elementary symmetric
functions of the eigenvalues ``exp(2 pi i (m_j + rho_j)/(n+1))`` and are
handled in double precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .errors import NumericalError, ValidationError
from .lie import CartanVector, as_fraction, epsilon, format_fraction, rho

SYMMETRY_TOL = 1e-9


@dataclass(frozen=True)
class KParams:
    """Exponents ``k_0, ..., k_n``.

    ``tt_symmetric=True`` asserts ``k_i = k_{n-i+1}`` and is checked.  The
    domain condition ``k_i >= -1`` is reported by :attr:`valid`, not enforced,
    so that :func:`k_from_m` can return out-of-domain exponents.
    """

    k: tuple[Fraction, ...]
    tt_symmetric: bool = False

    def __post_init__(self):
        k = tuple(as_fraction(x) for x in self.k)
        if len(k) < 2:
            raise ValidationError("need k_0, ..., k_n with n >= 1")
        object.__setattr__(self, "k", k)
        if self.tt_symmetric and not self.is_symmetric():
            raise ValidationError(f"k is not tt*-symmetric: {[format_fraction(x) for x in k]}")

    @property
    def n(self) -> int:
        return len(self.k) - 1

    @property
    def N(self) -> Fraction:
        return self.n + 1 + sum(self.k)

    @property
    def valid(self) -> bool:
        return self.N > 0 and all(x >= -1 for x in self.k)

    @property
    def diagonalizable(self) -> bool:
        # monodromy root is conjugate to its diagonal form when all k_i > -1
        return all(x > -1 for x in self.k)

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.k[i] == self.k[(n - i + 1) % (n + 1)] for i in range(1, n + 1))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 and x >= 0 for x in self.k)

    def to_json(self) -> dict:
        return {"n": self.n, "k": [format_fraction(x) for x in self.k]}

    @classmethod
    def from_json(cls, data: dict, tt_symmetric: bool = False) -> KParams:
        kp = cls(tuple(data["k"]), tt_symmetric=tt_symmetric)
        if "n" in data and int(data["n"]) != kp.n:
            raise ValidationError(f"n={data['n']} does not match {len(kp.k)} exponents")
        return kp


@dataclass(frozen=True)
class MParams:
    """Asymptotic data ``m = diag(m_0, ..., m_n)`` (``w ~ -m log|t|`` as t -> 0)."""

    m: CartanVector

    def __post_init__(self):
        if not isinstance(self.m, CartanVector):
            object.__setattr__(self, "m", CartanVector(tuple(self.m)))

    @classmethod
    def of(cls, values: Sequence) -> MParams:
        return cls(CartanVector(tuple(values)))

    @property
    def n(self) -> int:
        return self.m.n

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self.m.entries

    def wall(self, i: int) -> Fraction:
        """``m_{i-1} - m_i + 1`` with cyclic indices."""
        e = self.m.entries
        return e[(i - 1) % (self.n + 1)] - e[i % (self.n + 1)] + 1

    def is_symmetric(self) -> bool:
        e = self.m.entries
        return all(e[i] + e[self.n - i] == 0 for i in range(self.n + 1))

    def to_json(self) -> dict:
        return {"m": self.m.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> MParams:
        return cls(CartanVector.from_json(data["m"]))


@dataclass(frozen=True)
class StokesParams:
    """Stokes parameters ``s_1, ..., s_n``."""

    s: tuple[complex, ...]

    def __post_init__(self):
        s = tuple(complex(x) for x in self.s)
        if len(s) < 1:
            raise ValidationError("need at least one Stokes parameter")
        if not all(cmath.isfinite(x) for x in s):
            raise ValidationError("Stokes parameters must be finite")
        object.__setattr__(self, "s", s)

    @property
    def n(self) -> int:
        return len(self.s)

    def is_real_symmetric(self, tol: float = SYMMETRY_TOL) -> bool:
        n = self.n
        return all(abs(x.imag) < tol for x in self.s) and all(
            abs(self.s[i] - self.s[n - 1 - i]) < tol for i in range(n)
        )

    def to_json(self) -> dict:
        return {"s": [{"re": x.real, "im": x.imag} for x in self.s]}

    @classmethod
    def from_json(cls, data: dict) -> StokesParams:
        out = []
        for item in data["s"]:
            if isinstance(item, dict):
                out.append(complex(float(item["re"]), float(item.get("im", 0.0))))
            else:
                out.append(complex(item))
        return cls(tuple(out))


class PolytopeStatus(NamedTuple):
    member: bool
    generic: bool
    symmetric: bool


def m_from_k(kp: KParams) -> MParams:
    """Balance the exponents: ``m = ((n+1)/N)(rho + sum_{i>=1} k_i eps_i) - rho``."""
    n, N = kp.n, kp.N
    if N <= 0:
        raise ValidationError(f"N = n+1+sum(k) must be positive, got {format_fraction(N)}")
    r = rho(n)
    acc = r
    for i in range(1, n + 1):
        if kp.k[i]:
            acc = acc + kp.k[i] * epsilon(n, i)
    return MParams(acc * Fraction(n + 1) / N - r)


def k_from_m(m: MParams, N) -> KParams:
    """Invert :func:`m_from_k` for a given ``N``: ``k_i = (N/(n+1)) (m_{i-1} - m_i + 1) - 1``."""
    N = as_fraction(N)
    if N <= 0:
        raise ValidationError(f"N must be positive, got {format_fraction(N)}")
    scale = N / (m.n + 1)
    return KParams(tuple(scale * m.wall(i) - 1 for i in range(m.n + 1)))


def polytope_status(m: MParams) -> PolytopeStatus:
    walls = [m.wall(i) for i in range(m.n + 1)]
    return PolytopeStatus(
        member=all(x >= 0 for x in walls),
        generic=all(x > 0 for x in walls),
        symmetric=m.is_symmetric(),
    )


def monodromy_exponents(m: MParams) -> CartanVector:
    """``(m + rho)/(n+1)``: the eigenvalues of the monodromy root are ``exp(2 pi i c_j)``."""
    return (m.m + rho(m.n)) / (m.n + 1)


def monodromy_eigenvalues(m: MParams) -> np.ndarray:
    c = monodromy_exponents(m)
    # reduce mod 1 exactly before going to floats
    frac = [x - math.floor(x) for x in c.entries]
    return np.array([cmath.exp(2j * math.pi * float(x)) for x in frac])


def elementary_symmetric(values: Sequence[complex]) -> np.ndarray:
    """``[e_0, e_1, ..., e_len]`` of the given values."""
    e = np.zeros(len(values) + 1, dtype=complex)
    e[0] = 1.0
    for x in values:
        e[1:] = e[1:] + x * e[:-1]
    return e


def stokes_from_m(m: MParams) -> StokesParams:
    """``s_i`` = i-th elementary symmetric function of the monodromy eigenvalues."""
    e = elementary_symmetric(monodromy_eigenvalues(m))
    return StokesParams(tuple(e[1:-1]))


def stokes_from_k(kp: KParams) -> StokesParams:
    return stokes_from_m(m_from_k(kp))


def char_poly_from_stokes(s: StokesParams) -> np.ndarray:
    """Monic coefficients, highest degree first, of
    ``x^{n+1} - s_1 x^n + s_2 x^{n-1} - ... + (-1)^{n+1}``.
    """
    n = s.n
    coeffs = np.empty(n + 2, dtype=complex)
    coeffs[0] = 1.0
    for i, si in enumerate(s.s, start=1):
        coeffs[i] = (-1) ** i * si
    coeffs[n + 1] = (-1) ** (n + 1)
    return coeffs


def _polish_roots(coeffs: np.ndarray, roots: np.ndarray, iters: int = 3) -> np.ndarray:
    dcoeffs = np.polyder(coeffs)
    roots = roots.copy()
    for _ in range(iters):
        d = np.polyval(dcoeffs, roots)
        ok = np.abs(d) > 1e-14
        roots[ok] -= np.polyval(coeffs, roots[ok]) / d[ok]
    return roots


def m_from_stokes(s: StokesParams, root_sep: float = 1e-6, unit_tol: float = 1e-6) -> np.ndarray:
    """Recover ``m`` (as floats) from Stokes parameters.

    The roots of the characteristic polynomial are written ``exp(2 pi i c_j)``
    and the arguments are unwound so that ``c`` is the alcove point
    ``c_0 > c_1 > ... > c_n > c_0 - 1`` with ``sum c_j = 0``; then
    ``m = (n+1) c - rho``.  Sorting fractional parts descending leaves one
    cyclic rotation (and a global integer shift) to fix, and the trace
    condition selects it uniquely.

    Raises NumericalError for repeated or off-circle roots.
    """
    n = s.n
    coeffs = char_poly_from_stokes(s)
    roots = _polish_roots(coeffs, np.roots(coeffs))
    resid = np.max(np.abs(np.polyval(coeffs, roots)))
    if not np.all(np.isfinite(roots)) or resid > 1e-8:
        raise NumericalError(f"root finding failed (residual {resid:.3g})")
    if np.max(np.abs(np.abs(roots) - 1.0)) > unit_tol:
        raise NumericalError("characteristic roots are not on the unit circle; no alcove point")
    gaps = np.abs(roots[:, None] - roots[None, :]) + np.eye(n + 1) * 10
    if gaps.min() < root_sep:
        raise NumericalError(
            f"repeated characteristic roots (separation {gaps.min():.3g}); "
            "monodromy root not diagonalizable, alcove point on the boundary"
        )
    f = np.mod(np.angle(roots) / (2 * np.pi), 1.0)
    f[f >= 1.0] = 0.0
    f = np.sort(f)[::-1]
    total = f.sum()
    S = int(round(total))
    if abs(total - S) > 1e-6:
        raise NumericalError(f"arguments sum to {total:.12g}, not an integer; determinant != 1")
    r = S % (n + 1)
    g = (r - S) // (n + 1)
    c = np.concatenate([f[r:], f[:r] - 1.0]) + g
    if not (np.all(np.diff(c) < 0) and c[0] - c[-1] < 1.0):
        raise NumericalError("could not place arguments as an interior alcove point")
    rho_f = np.array([n / 2 - j for j in range(n + 1)], dtype=float)
    return (n + 1) * c - rho_f


def rational_m(m_numeric: Sequence[float], tol: float = 1e-9) -> MParams:
    """Snap a numeric ``m`` to exact rationals, keeping the trace exactly zero.

    Small denominators are preferred when they fit within ``tol``.
    """
    vals = [float(x) for x in m_numeric]
    out = []
    for x in vals[:-1]:
        q = Fraction(x).limit_denominator(10**6)
        if abs(float(q) - x) > tol:
            q = Fraction(x).limit_denominator(10**12)
        out.append(q)
    out.append(-sum(out))
    if abs(float(out[-1]) - vals[-1]) > max(tol, 1e-9 * len(vals)):
        raise ValidationError("numeric m is not trace-zero")
    return MParams.of(out)
