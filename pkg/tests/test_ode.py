import csv
import json
import math
from fractions import Fraction as F

import numpy as np
import pytest
import sympy as sp
from scipy.integrate import solve_ivp

from ttreps.errors import NumericalError, ValidationError
from ttreps.lie import rho
from ttreps.ode import TodaState, init_asymptotic, integrate, radial_rhs
from ttreps.params import KParams, MParams, m_from_k

M3 = MParams.of([F(-1, 7), 0, F(1, 7)])


def test_rhs_zero_state():
    assert np.all(radial_rhs(TodaState(0.3, np.zeros(4), np.zeros(4))) == 0)


def test_rhs_n1_formula():
    a, wp0, r = 0.21, 0.4, 0.7
    out = radial_rhs(TodaState(r, [a, -a], [wp0, -wp0]))
    assert out[0] == pytest.approx(-wp0 / r + 2 * (-math.exp(-4 * a) + math.exp(4 * a)), rel=1e-14)
    assert out[1] == pytest.approx(-out[0], rel=1e-14)


def test_rhs_telescopes():
    rng = np.random.default_rng(0)
    for _ in range(100):
        n1 = rng.integers(2, 8)
        s = TodaState(rng.uniform(0.1, 3), rng.normal(scale=0.3, size=n1), rng.normal(size=n1))
        assert abs(radial_rhs(s).sum() + s.wprime.sum() / s.r) < 1e-12


def test_rhs_rejects_nonpositive_radius():
    with pytest.raises(ValidationError):
        radial_rhs(TodaState(0.0, np.zeros(2), np.zeros(2)))


def test_radial_reduction_of_laplacian():
    # 4 d^2/dt dtbar on a radial function equals the planar Laplacian = g'' + g'/r
    x, y, r = sp.symbols("x y r", positive=True)
    g = sp.Function("g")
    rr = sp.sqrt(x**2 + y**2)
    lap = sp.diff(g(rr), x, 2) + sp.diff(g(rr), y, 2)
    expected = (sp.diff(g(r), r, 2) + sp.diff(g(r), r) / r).subs(r, rr)
    assert sp.simplify(lap - expected) == 0


def test_init_asymptotic():
    s = init_asymptotic(MParams(rho(2) * 0), 0.1, shift=[1.0, 0.0, -1.0])
    assert np.all(s.w == [1.0, 0.0, -1.0]) and np.all(s.wprime == 0)
    m = MParams(-rho(1) / 3)
    s = init_asymptotic(m, 0.01)
    np.testing.assert_allclose(s.w, [-(-1 / 6) * math.log(0.01), -(1 / 6) * math.log(0.01)], rtol=1e-15)
    np.testing.assert_allclose(s.wprime, [(1 / 6) / 0.01, -(1 / 6) / 0.01], rtol=1e-15)
    assert abs(s.w.sum()) < 1e-15 and abs(s.wprime.sum()) < 1e-15
    with pytest.raises(ValidationError):
        init_asymptotic(m, 0.0)


def test_zero_solution_is_stationary():
    traj = integrate(TodaState(0.1, np.zeros(4), np.zeros(4)), 10.0, steps=500)
    assert np.max(np.abs(traj.w)) < 1e-12 and np.max(np.abs(traj.wprime)) < 1e-12
    assert np.all(np.diff(traj.r) > 0)


@pytest.mark.parametrize(
    "m",
    [M3, m_from_k(KParams((1, 0, 0, 0))), m_from_k(KParams((2, 1, 0, 0, 1)))],
)
def test_trace_and_symmetry_preserved(m):
    assert m.is_symmetric()
    traj = integrate(init_asymptotic(m, 0.05), 0.8, steps=800)
    assert not traj.blowup
    assert np.max(np.abs(traj.w.sum(axis=1))) < 1e-8
    assert np.max(np.abs(traj.wprime.sum(axis=1))) < 1e-8
    n = m.n
    assert np.max(np.abs(traj.w + traj.w[:, ::-1])) < 1e-8
    assert np.max(np.abs(traj.wprime + traj.wprime[:, ::-1])) < 1e-8
    assert traj.w.shape == (len(traj), n + 1)


def test_matches_scipy_reference():
    s0 = init_asymptotic(M3, 0.1)
    traj = integrate(s0, 1.0, steps=2000)

    def f(r, y):
        w, wp = y[:3], y[3:]
        up = np.roll(w, -1) - w
        down = w - np.roll(w, 1)
        return np.concatenate([wp, -wp / r + 2 * (-np.exp(2 * up) + np.exp(2 * down))])

    ref = solve_ivp(f, (0.1, 1.0), np.concatenate([s0.w, s0.wprime]), method="DOP853", rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(traj.final.w, ref.y[:3, -1], atol=1e-8)
    np.testing.assert_allclose(traj.final.wprime, ref.y[3:, -1], atol=1e-7)


def test_rk4_refinement_ratio():
    s0 = init_asymptotic(M3, 0.1)
    ends = []
    for steps in (40, 80, 160):
        fin = integrate(s0, 1.0, steps=steps).final
        ends.append(np.concatenate([fin.w, fin.wprime]))
    ratio = np.max(np.abs(ends[0] - ends[1])) / np.max(np.abs(ends[1] - ends[2]))
    assert 12 <= ratio <= 20


def test_adaptive_policy():
    s0 = init_asymptotic(M3, 0.1)
    traj = integrate(s0, 1.0, tol=1e-9)
    assert traj.metadata["policy"]["kind"] == "rk4_halving"
    assert traj.metadata["policy"]["last_difference"] < 1e-9
    fine = integrate(s0, 1.0, steps=4 * traj.metadata["policy"]["steps"]).final
    assert np.max(np.abs(traj.final.w - fine.w)) < 1e-8


def test_adaptive_gives_up():
    with pytest.raises(NumericalError):
        integrate(init_asymptotic(M3, 0.1), 1.0, tol=1e-30, max_refinements=2)


def test_blowup_is_reported():
    traj = integrate(init_asymptotic(M3, 0.05), 5.0, steps=2000, m=M3)
    assert traj.blowup
    assert 0.05 < traj.metadata["last_valid_r"] < 5.0
    assert np.all(np.isfinite(traj.w))
    assert traj.metadata["m"] == ["-1/7", "0", "1/7"]


def test_backward_integration_reproduces_start():
    tol = 1e-10
    s0 = init_asymptotic(M3, 0.05)
    out = integrate(s0, 0.6, tol=tol)
    back = integrate(out.final, 0.05, tol=tol)
    assert back.metadata["direction"] == -1
    assert np.all(np.diff(back.r) > 0)
    assert abs(back.final.r - 0.05) < 1e-12
    assert np.max(np.abs(back.final.w - s0.w)) < 10 * tol


def test_policy_arguments():
    s0 = init_asymptotic(M3, 0.1)
    with pytest.raises(ValidationError):
        integrate(s0, 1.0)
    with pytest.raises(ValidationError):
        integrate(s0, 1.0, steps=10, tol=1e-3)
    with pytest.raises(ValidationError):
        integrate(s0, 0.1, steps=10)


def test_csv_export(tmp_path):
    traj = integrate(init_asymptotic(M3, 0.1), 0.5, steps=20, m=M3)
    path = traj.to_csv(tmp_path / "traj.csv")
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["r", "w_0", "w_1", "w_2", "wprime_0", "wprime_1", "wprime_2"]
    assert len(rows) == 22
    np.testing.assert_allclose([float(x) for x in rows[-1][1:4]], traj.final.w, rtol=0, atol=0)
    meta = json.loads(traj.write_sidecar(tmp_path / "traj.json").read_text())
    assert meta["m"] == ["-1/7", "0", "1/7"] and meta["blowup"] is False
