"""Independent reference computations used only by the tests.

Each oracle takes a different route from the library code it checks.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb

import numpy as np
import sympy as sp


def epsilon_by_linear_solve(n, j):
    """Solve alpha_i(x) = delta_ij, trace(x) = 0 for the diagonal x."""
    rows = []
    rhs = []
    for i in range(1, n + 1):
        row = [0] * (n + 1)
        row[i - 1], row[i] = 1, -1
        rows.append(row)
        rhs.append(1 if i == j else 0)
    rows.append([1] * (n + 1))
    rhs.append(0)
    sol = sp.Matrix(rows).LUsolve(sp.Matrix(rhs))
    return tuple(Fraction(int(sp.fraction(x)[0]), int(sp.fraction(x)[1])) for x in sol)


def stokes_via_np_poly(eigs):
    """s_i = (-1)^i * coefficient of x^{n+1-i} of prod (x - lambda_j)."""
    coeffs = np.poly(np.asarray(eigs))
    return np.array([(-1) ** i * coeffs[i] for i in range(1, len(eigs))])


def complete_homogeneous(k, x):
    if k < 0:
        return 0
    total = 0
    for combo in combinations_with_replacement(range(len(x)), k):
        term = 1
        for idx in combo:
            term *= x[idx]
        total += term
    return total


def schur_jacobi_trudi(partition, x):
    """Schur polynomial by s_lambda = det(h_{lambda_i - i + j})."""
    lam = [p for p in partition if p > 0]
    if not lam:
        return 1.0 + 0j
    L = len(lam)
    mat = np.array([[complete_homogeneous(lam[i] - i + j, x) for j in range(L)] for i in range(L)], dtype=complex)
    return complex(np.linalg.det(mat))


def conformal_dim_sympy(n, p, pp, lam_plus, lam_minus):
    """h from c - 24h = n - 12|a_+(L+ + rho) + a_-(L- + rho)|^2 with genuine square roots."""
    ap = sp.sqrt(sp.Rational(pp, p))
    am = -sp.sqrt(sp.Rational(p, pp))

    def diag_of(v):
        shift = sp.Rational(sum(i * c for i, c in enumerate(v, start=1)), n + 1)
        out = []
        for j in range(n + 1):
            out.append(sum(v[j:]) - shift)
        return out

    rho = [sp.Rational(n, 2) - j for j in range(n + 1)]
    a = [x + r for x, r in zip(diag_of(lam_plus), rho)]
    b = [x + r for x, r in zip(diag_of(lam_minus), rho)]
    vec = [ap * x + am * y for x, y in zip(a, b)]
    q = sp.expand(sum(x * x for x in vec))
    c = n - sp.Rational(n * (n + 1) * (n + 2) * (pp - p) ** 2, p * pp)
    h = sp.nsimplify(sp.simplify((c - n + 12 * q) / 24))
    return Fraction(int(sp.fraction(h)[0]), int(sp.fraction(h)[1]))


def orbit_partition(n1, total):
    """Partition all length-n1 tuples with the given sum into rotation orbits (by BFS)."""
    # stars and bars: choose n1-1 bar positions among total + n1 - 1 slots
    tuples = []
    for bars in combinations(range(total + n1 - 1), n1 - 1):
        edges = (-1,) + bars + (total + n1 - 1,)
        tuples.append(tuple(edges[i + 1] - edges[i] - 1 for i in range(n1)))
    assert len(tuples) == comb(total + n1 - 1, n1 - 1)
    seen = set()
    orbits = []
    for t in tuples:
        if t in seen:
            continue
        orbit = set()
        frontier = [t]
        while frontier:
            u = frontier.pop()
            if u in orbit:
                continue
            orbit.add(u)
            frontier.append(u[-1:] + u[:-1])
        seen |= orbit
        orbits.append(orbit)
    return orbits


def binary_string_orbits(length, ones):
    """Rotation orbits of all 0/1 strings of given length with `ones` ones."""
    strings = {tuple(1 if i in pos else 0 for i in range(length)) for pos in combinations(range(length), ones)}
    orbits = []
    remaining = set(strings)
    while remaining:
        s = remaining.pop()
        orb = {s[i:] + s[:i] for i in range(length)}
        remaining -= orb
        orbits.append(orb)
    assert sum(len(o) for o in orbits) == comb(length, ones)
    return orbits
