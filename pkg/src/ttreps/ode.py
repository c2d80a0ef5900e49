"""Radial integration of the tt*-Toda system.

For radial ``w_i = w_i(r)``, ``r = |t|``, the Laplacian is
``w_{t tbar} = (w_rr + w_r / r) / 4``, so the system

    2 w_{i, t tbar} = -exp(2(w_{i+1} - w_i)) + exp(2(w_i - w_{i-1}))

becomes the second-order ODE

    w_i'' = -w_i'/r + 2 (-exp(2(w_{i+1} - w_i)) + exp(2(w_i - w_{i-1}))),

indices mod n+1.  All coefficients in front of the exponentials are 1.

Initial data near r = 0 follow the leading asymptotics ``w ~ -m log r``; the
constant term of the true global solution is not known here and defaults to
zero (``shift``).  This is an exploratory integrator, not a solver of the
connection problem.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from .errors import NumericalError, ValidationError
from .lie import format_fraction
from .params import MParams

# exp(2 * 350) is still finite in double precision
_MAX_EXPONENT = 350.0


@dataclass
class TodaState:
    r: float
    w: np.ndarray
    wprime: np.ndarray

    def __post_init__(self):
        self.r = float(self.r)
        self.w = np.asarray(self.w, dtype=float)
        self.wprime = np.asarray(self.wprime, dtype=float)
        if self.w.shape != self.wprime.shape or self.w.ndim != 1 or self.w.size < 2:
            raise ValidationError("w and wprime must be vectors of equal length n+1 >= 2")

    @property
    def n(self) -> int:
        return self.w.size - 1


def _accel(r: float, w: np.ndarray, wp: np.ndarray) -> np.ndarray:
    up = np.roll(w, -1) - w  # w_{i+1} - w_i
    down = w - np.roll(w, 1)  # w_i - w_{i-1}
    if max(np.max(np.abs(up)), np.max(np.abs(down))) > _MAX_EXPONENT:
        raise FloatingPointError("exponential overflow")
    return -wp / r + 2.0 * (-np.exp(2.0 * up) + np.exp(2.0 * down))


def radial_rhs(s: TodaState) -> np.ndarray:
    """Second derivatives ``w''`` at the given state."""
    if s.r <= 0:
        raise ValidationError(f"radius must be positive, got {s.r}")
    try:
        return _accel(s.r, s.w, s.wprime)
    except FloatingPointError as exc:
        raise NumericalError(str(exc)) from exc


def init_asymptotic(m: MParams, epsilon: float, shift: Optional[Sequence[float]] = None) -> TodaState:
    """State at ``r = epsilon`` from ``w = -m log(epsilon) + shift``, ``w' = -m/epsilon``."""
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be positive, got {epsilon}")
    mf = np.array([float(x) for x in m.entries])
    base = np.zeros_like(mf) if shift is None else np.asarray(shift, dtype=float)
    if base.shape != mf.shape:
        raise ValidationError(f"shift must have length {mf.size}")
    return TodaState(epsilon, -mf * math.log(epsilon) + base, -mf / epsilon)


@dataclass
class TodaTrajectory:
    """Samples ``(r, w, w')`` in increasing ``r``.

    ``metadata`` records the step policy, the direction of integration,
    the blow-up flag and the last radius reached.
    """

    r: np.ndarray
    w: np.ndarray
    wprime: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return self.r.size

    def __getitem__(self, idx: int) -> TodaState:
        return TodaState(self.r[idx], self.w[idx], self.wprime[idx])

    def states(self) -> Iterator[TodaState]:
        for i in range(len(self)):
            yield self[i]

    @property
    def blowup(self) -> bool:
        return bool(self.metadata.get("blowup", False))

    @property
    def final(self) -> TodaState:
        """State where the integration stopped (r_end unless it blew up)."""
        return self[0] if self.metadata.get("direction", 1) < 0 else self[-1]

    def to_csv(self, path) -> Path:
        path = Path(path)
        n1 = self.w.shape[1]
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["r"] + [f"w_{i}" for i in range(n1)] + [f"wprime_{i}" for i in range(n1)])
            for r, w, wp in zip(self.r, self.w, self.wprime):
                writer.writerow([repr(float(r))] + [repr(float(x)) for x in w] + [repr(float(x)) for x in wp])
        return path

    def write_sidecar(self, path) -> Path:
        path = Path(path)
        path.write_text(json.dumps(self.metadata, indent=2, sort_keys=True))
        return path


def _rk4_run(s0: TodaState, r_end: float, steps: int):
    h = (r_end - s0.r) / steps
    y = np.concatenate([s0.w, s0.wprime])
    size = s0.w.size

    def f(r, y):
        w, wp = y[:size], y[size:]
        return np.concatenate([wp, _accel(r, w, wp)])

    rs = [s0.r]
    ys = [y.copy()]
    r = s0.r
    blowup = False
    with np.errstate(over="raise", invalid="raise"):
        for i in range(steps):
            try:
                k1 = f(r, y)
                k2 = f(r + h / 2, y + h / 2 * k1)
                k3 = f(r + h / 2, y + h / 2 * k2)
                k4 = f(r + h, y + h * k3)
                y_new = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            except FloatingPointError:
                blowup = True
                break
            if not np.all(np.isfinite(y_new)):
                blowup = True
                break
            y = y_new
            r = s0.r + (i + 1) * h
            rs.append(r)
            ys.append(y.copy())
    return np.array(rs), np.array(ys), blowup


def integrate(
    s0: TodaState,
    r_end: float,
    steps: Optional[int] = None,
    tol: Optional[float] = None,
    m: Optional[MParams] = None,
    initial_steps: int = 64,
    max_refinements: int = 14,
) -> TodaTrajectory:
    """Classical RK4 from ``s0.r`` to ``r_end``.

    Give either ``steps`` (fixed step count) or ``tol``: the step is halved
    until two successive refinements agree to ``tol`` in sup norm at
    ``r_end``.  ``r_end < s0.r`` integrates inward; samples are stored in
    increasing ``r`` regardless.  Overflow of the exponentials truncates the
    trajectory and sets ``metadata["blowup"]``.
    """
    if (steps is None) == (tol is None):
        raise ValidationError("give exactly one of steps= or tol=")
    if r_end <= 0 or s0.r <= 0:
        raise ValidationError("radii must be positive")
    if r_end == s0.r:
        raise ValidationError("r_end must differ from the starting radius")

    if steps is not None:
        if steps < 1:
            raise ValidationError("steps must be positive")
        rs, ys, blowup = _rk4_run(s0, r_end, steps)
        policy = {"kind": "rk4_fixed", "steps": steps}
    else:
        if not tol > 0:
            raise ValidationError("tol must be positive")
        k = initial_steps
        rs, ys, blowup = _rk4_run(s0, r_end, k)
        diff = math.inf
        for _ in range(max_refinements):
            if blowup:
                break
            k *= 2
            rs2, ys2, blowup = _rk4_run(s0, r_end, k)
            if not blowup:
                diff = float(np.max(np.abs(ys2[-1] - ys[-1])))
            rs, ys = rs2, ys2
            if diff < tol:
                break
        else:
            if not blowup:
                raise NumericalError(f"adaptive refinement did not reach tol={tol} (last difference {diff:.3g})")
        policy = {"kind": "rk4_halving", "tol": tol, "steps": k, "last_difference": diff}

    size = s0.w.size
    direction = 1 if r_end > s0.r else -1
    meta = {
        "n": s0.n,
        "policy": policy,
        "direction": direction,
        "blowup": bool(blowup),
        "last_valid_r": float(rs[-1]),
        "r_start": s0.r,
        "r_end": float(r_end),
    }
    if m is not None:
        meta["m"] = [format_fraction(x) for x in m.entries]
    if direction < 0:
        rs, ys = rs[::-1], ys[::-1]
    return TodaTrajectory(rs.copy(), ys[:, :size].copy(), ys[:, size:].copy(), meta)
