"""Special elements of the level-k fusion ring and characters evaluated there."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

import numpy as np

from .errors import NumericalError, ValidationError
from .lie import INTERIOR, CartanVector, alcove_classify, enumerate_P_k, rho
from .params import KParams, m_from_k
from .reps import AffineDominantWeight, weight_from_k

VANISH_TOL = 1e-8
VANDERMONDE_GUARD = 1e-10


@dataclass(frozen=True)
class SpecialElement:
    """Diagonal torus element ``diag(x_0, ..., x_n)`` with unit-modulus entries."""

    x: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(complex(v) for v in self.x))

    @property
    def n(self) -> int:
        return len(self.x) - 1

    def min_separation(self) -> float:
        return min(abs(a - b) for a, b in combinations(self.x, 2))

    def to_json(self) -> dict:
        return {"x": [{"re": v.real, "im": v.imag} for v in self.x]}

    @classmethod
    def from_json(cls, data: dict) -> SpecialElement:
        return cls(tuple(complex(float(d["re"]), float(d["im"])) for d in data["x"]))


def zeta(w: AffineDominantWeight) -> CartanVector:
    """``(Lambda + rho)/(k + n + 1)``, an interior point of the alcove."""
    z = (w.weight + rho(w.n)) / (w.level + w.n + 1)
    assert alcove_classify(z) == INTERIOR
    return z


def special_element(w: AffineDominantWeight) -> SpecialElement:
    z = zeta(w)
    # exponents reduced mod 1 exactly so the float phase stays accurate
    return SpecialElement(tuple(cmath.exp(2j * math.pi * float(c - math.floor(c))) for c in z.entries))


def verify_zeta_identity(kp: KParams) -> bool:
    """``zeta_Lambda`` equals ``(m + rho)/(n+1)`` exactly for the weight of ``kp``."""
    w = weight_from_k(kp)
    return zeta(w) == (m_from_k(kp).m + rho(kp.n)) / (kp.n + 1)


Weight = Union[AffineDominantWeight, Sequence[int]]


def _coeffs(mu: Weight) -> tuple[int, ...]:
    v = mu.v if isinstance(mu, AffineDominantWeight) else tuple(mu)
    for c in v:
        if isinstance(c, bool) or not isinstance(c, (int, Fraction)) or c < 0 or Fraction(c).denominator != 1:
            raise ValidationError(f"dominant weight needs nonnegative integer coefficients, got {v}")
    return tuple(int(c) for c in v)


def partition_of(mu: Weight) -> tuple[int, ...]:
    """Partition ``lambda_j = v_{j+1} + ... + v_n`` (length n+1, last part 0)."""
    v = _coeffs(mu)
    return tuple(sum(v[j:]) for j in range(len(v))) + (0,)


def character_value(mu: Weight, t: SpecialElement) -> complex:
    """Weyl character of the irreducible sl(n+1) representation with highest weight ``mu``
    at the diagonal element ``t``, as the bialternant ``a_{lambda+delta}/a_delta``.
    """
    lam = partition_of(mu)
    n = t.n
    if len(lam) != n + 1:
        raise ValidationError(f"weight has rank {len(lam) - 1}, element has rank {n}")
    x = np.asarray(t.x)
    delta = np.arange(n, -1, -1)
    denom_mat = x[None, :] ** delta[:, None]
    denom = np.linalg.det(denom_mat)
    if abs(denom) < VANDERMONDE_GUARD:
        raise NumericalError(f"Vandermonde determinant {abs(denom):.3g} too small: entries collide")
    num = np.linalg.det(x[None, :] ** (np.asarray(lam) + delta)[:, None])
    return complex(num / denom)


def in_fusion_ideal(mu: Weight, n: int, k: int, tol: float = VANISH_TOL) -> bool:
    """True iff the character of ``mu`` vanishes at every special element of level ``k``."""
    return all(abs(character_value(mu, special_element(AffineDominantWeight(n, v, k)))) < tol for v in enumerate_P_k(n, k))


def character_table(mu: Weight, n: int, k: int) -> list[dict]:
    """Rows ``{Lambda, t_Lambda, chi_mu(t_Lambda)}`` over ``P_k``."""
    rows = []
    for v in enumerate_P_k(n, k):
        t = special_element(AffineDominantWeight(n, v, k))
        chi = character_value(mu, t)
        rows.append({"Lambda": list(v), "t": t.to_json()["x"], "chi": {"re": chi.real, "im": chi.imag}})
    return rows
