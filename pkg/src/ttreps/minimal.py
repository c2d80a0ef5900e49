"""W_{n+1} minimal models: central charges, conformal dimensions and primary counting.

Everything is exact.  The scalars ``alpha_+ = sqrt(p'/p)`` and
``alpha_- = -sqrt(p/p')`` only enter through ``alpha_+^2 = p'/p``,
``alpha_-^2 = p/p'`` and ``alpha_+ alpha_- = -1``.

For the family ``p = n+1, p' = N`` the primaries are labelled by
``(n+1)``-tuples ``k_0, ..., k_n >= 0`` summing to ``N - (n+1)``, taken up to
cyclic rotation (the action of the centre of SU(n+1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import ValidationError
from .lie import CartanVector, bilinear_form, enumerate_P_k, norm2, rho
from .params import KParams, MParams, m_from_k
from .reps import AffineDominantWeight


def _pos_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise ValidationError(f"{what} must be a positive integer, got {x!r}")
    return x


@dataclass(frozen=True)
class MinimalModelSpec:
    n: int
    p: int
    pp: int

    def __post_init__(self):
        _pos_int(self.n, "n")
        _pos_int(self.p, "p")
        _pos_int(self.pp, "p'")
        if gcd(self.p, self.pp) != 1:
            raise ValidationError(f"p={self.p} and p'={self.pp} are not coprime")

    @property
    def plus_level(self) -> int:
        return self.p - (self.n + 1)

    @property
    def minus_level(self) -> int:
        return self.pp - (self.n + 1)


@dataclass(frozen=True)
class PrimaryField:
    """Pair of dominant weights ``(Lambda^+, Lambda^-)`` given by eps-coefficients."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]


def central_charge(spec: MinimalModelSpec) -> Fraction:
    n, p, pp = spec.n, spec.p, spec.pp
    return n - Fraction(n * (n + 1) * (n + 2) * (pp - p) ** 2, p * pp)


def _check_levels(spec: MinimalModelSpec, f: PrimaryField) -> tuple[CartanVector, CartanVector]:
    lp, lm = spec.plus_level, spec.minus_level
    if lp < 0 or lm < 0:
        raise ValidationError(f"p, p' must be at least n+1 = {spec.n + 1}")
    plus = AffineDominantWeight(spec.n, tuple(f.plus), lp)
    minus = AffineDominantWeight(spec.n, tuple(f.minus), lm)
    return plus.weight, minus.weight


def conformal_dim(spec: MinimalModelSpec, f: PrimaryField) -> Fraction:
    """``h`` from ``c - 24h = n - 12 |alpha_+ (Lambda^+ + rho) + alpha_- (Lambda^- + rho)|^2``."""
    lp, lm = _check_levels(spec, f)
    r = rho(spec.n)
    a, b = lp + r, lm + r
    q = Fraction(spec.pp, spec.p) * norm2(a) + Fraction(spec.p, spec.pp) * norm2(b) - 2 * bilinear_form(a, b)
    return (central_charge(spec) - spec.n + 12 * q) / 24


def _check_fn(n: int, N: int) -> None:
    _pos_int(n, "n")
    _pos_int(N, "N")
    if N <= n + 1:
        raise ValidationError(f"need N > n+1, got N={N}, n={n}")
    if gcd(n + 1, N) != 1:
        raise ValidationError(f"n+1={n + 1} and N={N} are not coprime")


def fn_central_charge(n: int, N: int) -> Fraction:
    """Central charge of the ``(n+1, N)`` model: ``n - n(n+2)(N-(n+1))^2 / N``."""
    _check_fn(n, N)
    return n - Fraction(n * (n + 2) * (N - (n + 1)) ** 2, N)


def rho_norm2(n: int) -> Fraction:
    """Closed form ``|rho|^2 = n(n+1)(n+2)/12``."""
    return Fraction(n * (n + 1) * (n + 2), 12)


class FourFormH(NamedTuple):
    h_A: Fraction
    h_B: Fraction
    h_C: Fraction
    h_D: Fraction

    def agree(self) -> bool:
        return self.h_A == self.h_B == self.h_C == self.h_D


def kstring_of_weight(n: int, N: int, v: Sequence[int]) -> tuple[int, ...]:
    """Exponents ``(k_0, ..., k_n)`` with ``k_i = v_i`` (i >= 1) summing to ``N - (n+1)``."""
    return (N - (n + 1) - sum(v),) + tuple(v)


def fn_conformal_dim(n: int, N: int, v: Sequence[int]) -> FourFormH:
    """Conformal dimension of ``Lambda = sum v_i eps_i`` in the ``(n+1, N)`` model, four ways.

    * ``h_A``: via ``|Lambda - ((N-n-1)/(n+1)) rho|^2``;
    * ``h_B``: via ``|m|^2`` with ``m`` from the exponent string of ``Lambda``;
    * ``h_C``: the explicit ``24h`` expression in ``|m|^2``;
    * ``h_D``: difference of squared norms, using the closed form of ``|rho|^2``.
    """
    _check_fn(n, N)
    k = N - (n + 1)
    lam = AffineDominantWeight(n, tuple(v), k).weight
    c = fn_central_charge(n, N)
    a = Fraction(k, n + 1)
    shifted = lam - a * rho(n)

    h_A = (c - n + 12 * Fraction(n + 1, N) * norm2(shifted)) / 24

    m = m_from_k(KParams(kstring_of_weight(n, N, v))).m
    m2 = norm2(m)
    h_B = (c - n + 12 * Fraction(N, n + 1) * m2) / 24

    h_C = (-Fraction(n * (n + 2) * k**2, N) + 12 * Fraction(N, n + 1) * m2) / 24

    h_D = Fraction(n + 1, 2 * N) * (norm2(shifted) - a * a * rho_norm2(n))
    return FourFormH(h_A, h_B, h_C, h_D)


def mu(m: MParams, N) -> Fraction:
    """Regulated norm ``(N/(n+1)) |m|^2``."""
    return Fraction(N) / (m.n + 1) * norm2(m.m)


def nonunitarity_scan(n: int, N: int) -> bool:
    """True iff every weight of the ``(n+1, N)`` model has ``h <= 0``."""
    return all(fn_conformal_dim(n, N, v).h_D <= 0 for v in enumerate_P_k(n, N - (n + 1)))


@dataclass(frozen=True)
class KString:
    k: tuple[int, ...]

    def __post_init__(self):
        k = tuple(self.k)
        if len(k) < 2:
            raise ValidationError("a k-string needs n+1 >= 2 entries")
        for x in k:
            if isinstance(x, bool) or not isinstance(x, int) or x < 0:
                raise ValidationError(f"k-string entries must be nonnegative integers, got {k}")
        object.__setattr__(self, "k", k)

    @property
    def n(self) -> int:
        return len(self.k) - 1

    @property
    def N(self) -> int:
        return self.n + 1 + sum(self.k)


def centre_act(ks: KString, steps: int = 1) -> KString:
    """Cyclic relabelling ``l_i = k_{i - steps}`` (indices mod n+1)."""
    size = len(ks.k)
    s = steps % size
    return KString(tuple(ks.k[(i - s) % size] for i in range(size)))


def centre_orbit(ks: KString) -> set[tuple[int, ...]]:
    return {centre_act(ks, s).k for s in range(len(ks.k))}


def kstrings(n: int, N: int) -> Iterator[tuple[int, ...]]:
    """All ``(k_0, ..., k_n)`` in Z_{>=0}^{n+1} with sum ``N - (n+1)``, lexicographic."""
    total = N - (n + 1)
    if total < 0:
        return

    def rec(prefix: list[int], budget: int):
        if len(prefix) == n:
            yield tuple(prefix) + (budget,)
            return
        for x in range(budget + 1):
            prefix.append(x)
            yield from rec(prefix, budget - x)
            prefix.pop()

    yield from rec([], total)


def enumerate_primaries(n: int, N: int) -> list[KString]:
    """One lexicographically minimal representative per cyclic orbit."""
    _pos_int(n, "n")
    _pos_int(N, "N")
    reps = []
    for k in kstrings(n, N):
        if k == min(centre_orbit(KString(k))):
            reps.append(KString(k))
    return reps


class NecklaceCount(NamedTuple):
    enumerated: int
    formula: Fraction
    formula_applicable: bool


def necklace_count(n: int, N: int) -> NecklaceCount:
    enumerated = len(enumerate_primaries(n, N))
    formula = Fraction(comb(N, n + 1), N)
    return NecklaceCount(enumerated, formula, gcd(n + 1, N) == 1)


@dataclass(frozen=True)
class OperatorString:
    """Word over ``D`` (derivative) and ``Z`` (multiplication by 1/z)."""

    tokens: str

    def __post_init__(self):
        if set(self.tokens) - {"D", "Z"}:
            raise ValidationError(f"operator string may only contain D and Z: {self.tokens!r}")

    def rotations(self) -> set[str]:
        t = self.tokens
        return {t[i:] + t[:i] for i in range(len(t))}

    def is_rotation_of(self, other: OperatorString) -> bool:
        return len(self.tokens) == len(other.tokens) and other.tokens in self.rotations()

    def __str__(self):
        return " ".join(self.tokens)


def operator_string(ks: KString, i: Optional[int] = None) -> OperatorString:
    """Token word of ``z^{-k_i} D z^{-k_{i-1}} D ... D z^{-k_{i-n}} D``, read left to right."""
    size = len(ks.k)
    if i is None:
        i = ks.n
    parts = []
    for j in range(size):
        parts.append("Z" * ks.k[(i - j) % size] + "D")
    return OperatorString("".join(parts))


def model_table(n: int, N: int) -> dict:
    """Central charge and one row per primary of the ``(n+1, N)`` model."""
    c = fn_central_charge(n, N)
    rows = []
    for ks in enumerate_primaries(n, N):
        v = ks.k[1:]
        h = fn_conformal_dim(n, N, v).h_D
        m = m_from_k(KParams(ks.k))
        rows.append({"kstring": list(ks.k), "Lambda": list(v), "h": h, "mu": mu(m, N), "c_minus_24h": c - 24 * h})
    return {"n": n, "N": N, "c": c, "primaries": rows}


def general_model_table(spec: MinimalModelSpec) -> dict:
    """All weight pairs for a general ``(p, p')`` model, without the centre quotient."""
    c = central_charge(spec)
    rows = []
    if spec.plus_level >= 0 and spec.minus_level >= 0:
        for vp in enumerate_P_k(spec.n, spec.plus_level):
            for vm in enumerate_P_k(spec.n, spec.minus_level):
                h = conformal_dim(spec, PrimaryField(vp, vm))
                rows.append({"Lambda_plus": list(vp), "Lambda_minus": list(vm), "h": h, "c_minus_24h": c - 24 * h})
    return {"n": spec.n, "p": spec.p, "pp": spec.pp, "c": c, "primaries": rows}
