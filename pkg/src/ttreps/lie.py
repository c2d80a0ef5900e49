"""Exact root and weight machinery for sl(n+1).

Elements of the diagonal Cartan subalgebra are stored as their length-(n+1)
diagonal with :class:`fractions.Fraction` entries.  Coordinates in the basis
of basic weights ``eps_1, ..., eps_n`` are recovered by applying the simple
roots ``alpha_i(h) = h_{i-1} - h_i``.

Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from numbers import Rational
from typing import Iterable, Sequence

from .errors import ValidationError

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction.

    Floats are refused: silently converting 0.1 to 3602879701896397/2**55 is
    never what the caller meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValidationError(f"not a rational number: {x!r}")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse rational {x!r}") from exc
    raise ValidationError(f"expected an exact rational, got {type(x).__name__} {x!r}")


def format_fraction(x: Fraction) -> str:
    """Canonical ``"p/q"`` form (lowest terms, q > 0); integers print bare."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CartanVector:
    """Trace-zero diagonal ``diag(h_0, ..., h_n)`` with exact entries."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(as_fraction(h) for h in self.entries)
        if len(entries) < 2:
            raise ValidationError("a Cartan vector needs at least two entries (n >= 1)")
        if sum(entries) != 0:
            raise ValidationError(f"entries must sum to zero, got sum {sum(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zero(cls, n: int) -> CartanVector:
        return cls((Fraction(0),) * (n + 1))

    @classmethod
    def from_eps(cls, coeffs: Sequence) -> CartanVector:
        """Build ``sum_i v_i eps_i`` from the coefficients ``(v_1, ..., v_n)``."""
        coeffs = [as_fraction(v) for v in coeffs]
        n = len(coeffs)
        if n < 1:
            raise ValidationError("need at least one coefficient")
        total = sum(coeffs)
        # h_j = sum_{i > j} v_i - (1/(n+1)) sum_i i v_i, from the explicit eps_i
        shift = sum(i * v for i, v in enumerate(coeffs, start=1)) / (n + 1)
        entries = []
        tail = total
        for j in range(n + 1):
            entries.append(tail - shift)
            if j < n:
                tail -= coeffs[j]
        return cls(tuple(entries))

    @property
    def n(self) -> int:
        return len(self.entries) - 1

    def alpha(self, i: int) -> Fraction:
        """Simple root ``alpha_i`` (1 <= i <= n) evaluated on this vector."""
        if not 1 <= i <= self.n:
            raise ValidationError(f"simple root index {i} out of range 1..{self.n}")
        return self.entries[i - 1] - self.entries[i]

    def eps_coeffs(self) -> tuple[Fraction, ...]:
        return tuple(self.entries[i - 1] - self.entries[i] for i in range(1, self.n + 1))

    def _check(self, other: CartanVector):
        if not isinstance(other, CartanVector):
            return NotImplemented
        if other.n != self.n:
            raise ValidationError(f"rank mismatch: n={self.n} vs n={other.n}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CartanVector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return CartanVector(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return CartanVector(tuple(-a for a in self.entries))

    def __mul__(self, scalar):
        if isinstance(scalar, CartanVector):
            return NotImplemented
        c = as_fraction(scalar)
        return CartanVector(tuple(c * a for a in self.entries))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        c = as_fraction(scalar)
        if c == 0:
            raise ZeroDivisionError("division of Cartan vector by zero")
        return CartanVector(tuple(a / c for a in self.entries))

    def to_json(self) -> list[str]:
        return [format_fraction(h) for h in self.entries]

    @classmethod
    def from_json(cls, data: Iterable) -> CartanVector:
        return cls(tuple(as_fraction(h) for h in data))

    def __repr__(self):
        return f"CartanVector({', '.join(format_fraction(h) for h in self.entries)})"


def _check_rank(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValidationError(f"rank n must be a positive integer, got {n!r}")


def rho(n: int) -> CartanVector:
    """Half-sum of positive roots, ``diag(n/2, n/2 - 1, ..., -n/2)``."""
    _check_rank(n)
    return CartanVector(tuple(Fraction(n, 2) - j for j in range(n + 1)))


def epsilon(n: int, i: int) -> CartanVector:
    """Basic weight ``eps_i``, dual to the simple roots under ``alpha_i(eps_j) = delta_ij``."""
    _check_rank(n)
    if not 1 <= i <= n:
        raise ValidationError(f"basic weight index {i} out of range 1..{n}")
    hi = 1 - Fraction(i, n + 1)
    lo = -Fraction(i, n + 1)
    return CartanVector((hi,) * i + (lo,) * (n + 1 - i))


def bilinear_form(x: CartanVector, y: CartanVector) -> Fraction:
    """Trace form ``B(x, y) = tr(xy)``."""
    if x.n != y.n:
        raise ValidationError(f"rank mismatch: n={x.n} vs n={y.n}")
    return sum((a * b for a, b in zip(x.entries, y.entries)), Fraction(0))


def norm2(x: CartanVector) -> Fraction:
    return bilinear_form(x, x)


def alcove_classify(x: CartanVector) -> str:
    """Locate ``x`` relative to the fundamental Weyl alcove.

    Returns ``"interior"``, ``"boundary"`` or ``"outside"``.
    """
    v = x.eps_coeffs()
    total = sum(v)
    if any(c < 0 for c in v) or total > 1:
        return OUTSIDE
    if all(c > 0 for c in v) and total < 1:
        return INTERIOR
    return BOUNDARY


def enumerate_P_k(n: int, k: int) -> list[tuple[int, ...]]:
    """Level-``k`` dominant weights as eps-coefficient tuples, lexicographic order."""
    _check_rank(n)
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValidationError(f"level must be a nonnegative integer, got {k!r}")
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], budget: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(budget + 1):
            prefix.append(v)
            rec(prefix, budget - v)
            prefix.pop()

    rec([], k)
    assert len(out) == comb(n + k, n)
    return out


def theta(v: CartanVector, k: int) -> CartanVector:
    """Identify a point of the rational alcove grid with an element of ``P_k + rho``.

    ``v`` must be interior to the alcove with ``(k+n+1) v`` integral in the
    eps basis; the image is ``(k+n+1) v``.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise ValidationError(f"level must be a nonnegative integer, got {k!r}")
    where = alcove_classify(v)
    if where != INTERIOR:
        raise ValidationError(f"theta: point is {where} the alcove, not interior")
    image = v * (k + v.n + 1)
    bad = [c for c in image.eps_coeffs() if c.denominator != 1]
    if bad:
        raise ValidationError(
            f"theta: (k+n+1)*v has non-integer eps-coefficients {[format_fraction(c) for c in bad]}"
        )
    return image


def in_open_scaled_alcove(v: Sequence[int], scale: int) -> bool:
    """Integer eps-coefficients ``v`` with all ``v_i > 0`` and ``sum v_i < scale``."""
    return all(c > 0 for c in v) and sum(v) < scale


def verify_lemma_pk(n: int, k: int) -> bool:
    """Compare ``P_k + rho`` against dominant weights inside ``(k+n+1)`` times the open alcove.

    Both sides are built independently as finite sets of eps-coefficient tuples.
    """
    left = {tuple(c + 1 for c in v) for v in enumerate_P_k(n, k)}
    scale = k + n + 1
    # brute force over the bounding box of the dilated alcove
    right = {v for v in product(range(scale + 1), repeat=n) if in_open_scaled_alcove(v, scale)}
    return left == right
