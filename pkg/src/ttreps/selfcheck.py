"""Invariant checks runnable without pytest (``ttreps selfcheck``)."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from math import comb, gcd
from typing import Callable, NamedTuple

import numpy as np

from .fusion import in_fusion_ideal, special_element, verify_zeta_identity
from .lie import (
    CartanVector,
    bilinear_form,
    enumerate_P_k,
    epsilon,
    rho,
    verify_lemma_pk,
)
from .minimal import (
    enumerate_primaries,
    fn_central_charge,
    central_charge,
    fn_conformal_dim,
    kstrings,
    mu,
    necklace_count,
    nonunitarity_scan,
    MinimalModelSpec,
)
from .ode import init_asymptotic, integrate, TodaState
from .params import (
    KParams,
    MParams,
    k_from_m,
    m_from_k,
    m_from_stokes,
    monodromy_eigenvalues,
    stokes_from_m,
)
from .reps import AffineDominantWeight, k_from_weight, verify_main_theorem, weight_from_k


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def _integer_ktuples(max_n: int, max_total: int):
    for n in range(1, max_n + 1):
        for total in range(max_total + 1):
            for k in product(range(total + 1), repeat=n + 1):
                if sum(k) == total:
                    yield KParams(k)


def check_lie_core(rng: random.Random) -> list[str]:
    bad = []
    for n in range(1, 7):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if epsilon(n, j).alpha(i) != (1 if i == j else 0):
                    bad.append(f"alpha_{i}(eps_{j}) n={n}")
        total = CartanVector.zero(n)
        for i in range(1, n + 1):
            total = total + epsilon(n, i)
        if total != rho(n):
            bad.append(f"rho != sum eps, n={n}")
    for n in range(1, 11):
        if bilinear_form(rho(n), rho(n)) != Fraction(n * (n + 1) * (n + 2), 12):
            bad.append(f"|rho|^2 n={n}")
    for n in range(1, 5):
        for k in range(6):
            if len(enumerate_P_k(n, k)) != comb(n + k, n) or not verify_lemma_pk(n, k):
                bad.append(f"P_k n={n} k={k}")
    for _ in range(50):
        n = rng.randint(1, 6)
        v = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(n)]
        if list(CartanVector.from_eps(v).eps_coeffs()) != v:
            bad.append(f"eps round trip {v}")
    return bad


def _random_k(rng: random.Random, n: int) -> KParams:
    while True:
        k = tuple(Fraction(rng.randint(-9, 30), rng.randint(1, 9)) for _ in range(n + 1))
        if n + 1 + sum(k) > 0:
            return KParams(k)


def random_generic_symmetric_m(rng: random.Random, n: int) -> MParams:
    """Random rational tt*-symmetric ``m`` strictly inside the polytope.

    Built from symmetric exponents ``k_i = k_{n-i+1} >= -0.9``, which makes
    every wall ``m_{i-1} - m_i + 1`` positive.
    """
    k = [Fraction(rng.randint(-9, 40), 10) for _ in range(n + 1)]
    for i in range(1, n + 1):
        k[n - i + 1] = k[i]
    return m_from_k(KParams(tuple(k), tt_symmetric=True))


def check_toda_params(rng: random.Random) -> list[str]:
    bad = []
    for _ in range(300):
        kp = _random_k(rng, rng.randint(1, 6))
        if k_from_m(m_from_k(kp), kp.N).k != kp.k:
            bad.append(f"k round trip {kp.k}")
    for n in range(1, 9):
        s = stokes_from_m(MParams(-rho(n)))
        if np.max(np.abs(np.array(s.s) - [comb(n + 1, i) for i in range(1, n + 1)])) > 1e-9:
            bad.append(f"CP^n Stokes n={n}")
    for _ in range(60):
        n = rng.randint(1, 6)
        m = random_generic_symmetric_m(rng, n)
        lam = monodromy_eigenvalues(m)
        s = stokes_from_m(m)
        if abs(np.prod(lam) - 1) > 1e-12 or not s.is_real_symmetric():
            bad.append(f"symmetric Stokes m={m.m}")
        back = m_from_stokes(s)
        if np.max(np.abs(back - [float(x) for x in m.entries])) > 1e-8:
            bad.append(f"m->s->m n={n}")
    return bad


def check_rep_map(rng: random.Random) -> list[str]:
    bad = []
    for kp in _integer_ktuples(3, 4):
        if verify_main_theorem(kp) != (True, True):
            bad.append(f"main theorem k={kp.k}")
        if not verify_zeta_identity(kp):
            bad.append(f"zeta identity k={kp.k}")
        if k_from_weight(weight_from_k(kp)).k != kp.k:
            bad.append(f"weight round trip k={kp.k}")
    return bad


def check_fusion(rng: random.Random) -> list[str]:
    bad = []
    for k in range(1, 5):
        if not in_fusion_ideal((k + 1,), 1, k):
            bad.append(f"(k+1)eps_1 not in ideal, k={k}")
        if in_fusion_ideal((0,), 1, k):
            bad.append(f"trivial character in ideal, k={k}")
    for n in range(1, 4):
        for k in range(5):
            for v in enumerate_P_k(n, k):
                w = AffineDominantWeight(n, v, k)
                if special_element(w).min_separation() <= 1e-9:
                    bad.append(f"special element collision {v}, k={k}")
    return bad


def check_minimal_models(rng: random.Random) -> list[str]:
    bad = []
    if central_charge(MinimalModelSpec(1, 2, 5)) != Fraction(-22, 5):
        bad.append("c(1,2,5)")
    for n in range(1, 4):
        for N in range(n + 2, 13):
            if gcd(n + 1, N) != 1:
                continue
            c = fn_central_charge(n, N)
            if c != central_charge(MinimalModelSpec(n, n + 1, N)):
                bad.append(f"c mismatch ({n},{N})")
            for v in enumerate_P_k(n, N - (n + 1)):
                hs = fn_conformal_dim(n, N, v)
                m = m_from_k(KParams((N - (n + 1) - sum(v),) + tuple(v)))
                if not hs.agree() or c - 24 * hs.h_A != n - 12 * mu(m, N):
                    bad.append(f"h forms ({n},{N},{v})")
            if not nonunitarity_scan(n, N):
                bad.append(f"nonunitarity ({n},{N})")
    for n1 in range(2, 7):
        for N in range(n1 + 1, 19):
            if gcd(n1, N) == 1:
                cnt = necklace_count(n1 - 1, N)
                if cnt.enumerated != cnt.formula:
                    bad.append(f"necklaces ({n1},{N})")
    for n1 in range(2, 5):
        for N in range(n1, 9):
            reps = enumerate_primaries(n1 - 1, N)
            if sum(len({tuple(np.roll(r.k, s)) for s in range(n1)}) for r in reps) != len(list(kstrings(n1 - 1, N))):
                bad.append(f"orbit partition ({n1},{N})")
    return bad


def check_ode(rng: random.Random) -> list[str]:
    bad = []
    traj = integrate(TodaState(0.1, np.zeros(3), np.zeros(3)), 10.0, steps=200)
    if np.max(np.abs(traj.w)) > 1e-12:
        bad.append("zero solution drifted")
    m = MParams.of([Fraction(-1, 7), Fraction(0), Fraction(1, 7)])
    traj = integrate(init_asymptotic(m, 0.05), 1.0, steps=400)
    if traj.blowup:
        bad.append("unexpected blow-up")
    if np.max(np.abs(traj.w.sum(axis=1))) > 1e-8 or np.max(np.abs(traj.wprime.sum(axis=1))) > 1e-8:
        bad.append("trace not conserved")
    if np.max(np.abs(traj.w + traj.w[:, ::-1])) > 1e-8:
        bad.append("symmetry not preserved")
    return bad


CHECKS: dict[str, Callable[[random.Random], list[str]]] = {
    "lie_core": check_lie_core,
    "toda_params": check_toda_params,
    "rep_map": check_rep_map,
    "fusion": check_fusion,
    "minimal_models": check_minimal_models,
    "toda_ode": check_ode,
}


def run_all(seed: int = 0) -> list[CheckResult]:
    out = []
    for name, fn in CHECKS.items():
        rng = random.Random(seed)
        try:
            bad = fn(rng)
        except Exception as exc:  # a crash is a failed check, reported as such
            out.append(CheckResult(name, False, f"{type(exc).__name__}: {exc}"))
            continue
        out.append(CheckResult(name, not bad, "; ".join(bad[:5])))
    return out
