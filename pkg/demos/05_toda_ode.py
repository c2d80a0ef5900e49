"""Integrate the radial tt*-Toda system from its small-r asymptotics.

The constant term of the global solution is unknown here, so the start
uses shift 0; for larger |m| the trajectory may blow up, which is flagged
rather than hidden.
"""

from fractions import Fraction as F

import numpy as np

from ttreps import MParams, init_asymptotic, integrate, m_from_k, KParams

m = MParams.of([F(-1, 7), 0, F(1, 7)])
s0 = init_asymptotic(m, 0.05)
traj = integrate(s0, 1.0, tol=1e-10, m=m)
print("policy:", traj.metadata["policy"])
print("final w:", traj.final.w, " trace:", traj.final.w.sum())
print("anti-symmetry residual:", np.max(np.abs(traj.w + traj.w[:, ::-1])))

for steps in (40, 80, 160):
    print(steps, "steps ->", integrate(init_asymptotic(m, 0.1), 1.0, steps=steps).final.w)

wide = m_from_k(KParams((0, 1, 0, 1)))
t = integrate(init_asymptotic(wide, 0.05), 2.0, steps=400)
print("m =", [str(x) for x in wide.entries], "blow-up:", t.blowup, "last valid r:", t.metadata["last_valid_r"])
