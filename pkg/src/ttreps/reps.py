"""Dominant-weight labels of positive energy representations from integer exponents.

Integer exponents ``k_0, ..., k_n >= 0`` correspond to the affine dominant
weight ``(Lambda, k) = (sum_{i>=1} k_i eps_i, sum_i k_i)``, and the alcove
point ``(m + rho)/(n+1)`` is sent by ``theta`` to ``Lambda + rho``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Optional

from .errors import ValidationError
from .lie import INTERIOR, CartanVector, alcove_classify, rho, theta
from .params import KParams, MParams, k_from_m, m_from_k, monodromy_exponents


@dataclass(frozen=True)
class AffineDominantWeight:
    """``(Lambda, level)`` with ``Lambda = sum v_i eps_i``, ``v_i >= 0`` and ``sum v_i <= level``."""

    n: int
    v: tuple[int, ...]
    level: int

    def __post_init__(self):
        v = tuple(_as_nonneg_int(x, "weight coefficient") for x in self.v)
        level = _as_nonneg_int(self.level, "level")
        if len(v) != self.n:
            raise ValidationError(f"expected {self.n} coefficients, got {len(v)}")
        if sum(v) > level:
            raise ValidationError(f"weight {v} has sum {sum(v)} > level {level}")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "level", level)

    @property
    def weight(self) -> CartanVector:
        return CartanVector.from_eps(self.v)

    def to_json(self) -> dict:
        return {"n": self.n, "v": list(self.v), "level": self.level}

    @classmethod
    def from_json(cls, data: dict) -> AffineDominantWeight:
        return cls(int(data["n"]), tuple(data["v"]), int(data["level"]))


def _as_nonneg_int(x, what: str) -> int:
    if isinstance(x, bool):
        raise ValidationError(f"{what} must be an integer, got {x!r}")
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise ValidationError(f"{what} must be an integer, got {x}")
        x = x.numerator
    if not isinstance(x, int):
        raise ValidationError(f"{what} must be an integer, got {x!r}")
    if x < 0:
        raise ValidationError(f"{what} must be nonnegative, got {x}")
    return x


def _integer_k(kp: KParams) -> list[int]:
    return [_as_nonneg_int(x, "exponent k_i") for x in kp.k]


def weight_from_k(kp: KParams) -> AffineDominantWeight:
    k = _integer_k(kp)
    return AffineDominantWeight(kp.n, tuple(k[1:]), sum(k))


def k_from_weight(w: AffineDominantWeight) -> KParams:
    return KParams((w.level - sum(w.v),) + w.v)


class TheoremCheck(NamedTuple):
    alcove_ok: bool
    theta_ok: bool


def verify_main_theorem(kp: KParams) -> TheoremCheck:
    """Exact check that ``(m+rho)/(n+1)`` lies on the level-k alcove grid and maps to ``Lambda + rho``."""
    k = _integer_k(kp)
    n, level = kp.n, sum(k)
    c = monodromy_exponents(m_from_k(kp))
    scaled = c * (level + n + 1)
    alcove_ok = alcove_classify(c) == INTERIOR and all(x.denominator == 1 for x in scaled.eps_coeffs())
    if not alcove_ok:
        return TheoremCheck(False, False)
    target = CartanVector.from_eps(k[1:]) + rho(n)
    return TheoremCheck(True, theta(c, level) == target)


class MClassification(NamedTuple):
    generic: bool
    rational: bool
    representation: Optional[AffineDominantWeight]
    N: Optional[Fraction] = None
    note: str = ""


def classify_m(m: MParams) -> MClassification:
    """Find the smallest ``N`` realising ``m`` by nonnegative integer exponents.

    With ``a_i = (m_{i-1} - m_i + 1)/(n+1)`` (which sum to 1), the exponents
    are ``k_i = N a_i - 1``, so integrality holds exactly when ``N`` is a
    multiple of the lcm of the denominators of the ``a_i``; the smallest such
    ``N`` is that lcm.  It divides ``(n+1)`` times the common denominator of
    ``m``, so no search is needed.
    """
    n = m.n
    walls = [m.wall(i) for i in range(n + 1)]
    if not all(x > 0 for x in walls):
        return MClassification(False, True, None, note="not generic: some k_i would be <= -1")
    N = lcm(*((x / (n + 1)).denominator for x in walls))
    kp = k_from_m(m, N)
    return MClassification(True, True, weight_from_k(kp), Fraction(N))
