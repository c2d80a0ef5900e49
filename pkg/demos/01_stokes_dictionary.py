"""Walk one parameter set through every chart of the dictionary.

Start from exponents k, pass to the asymptotic data m, then to Stokes
numbers s, and recover m from s numerically.
"""

from fractions import Fraction as F

import numpy as np

from ttreps import KParams, char_poly_from_stokes, k_from_m, m_from_k, m_from_stokes, polytope_status, stokes_from_m
from ttreps.params import rational_m

kp = KParams((F(1, 2), F(3, 4), F(1, 3), F(3, 4)))
m = m_from_k(kp)
print("k =", [str(x) for x in kp.k], " N =", kp.N)
print("m =", [str(x) for x in m.entries])
print("walls inside polytope:", polytope_status(m))

s = stokes_from_m(m)
print("s =", np.round(s.s, 12))
print("char poly of M0:", np.round(char_poly_from_stokes(s), 12))

back = m_from_stokes(s)
print("m recovered from s:", back)
print("snapped to rationals:", [str(x) for x in rational_m(back).entries])
print("k recovered from m:", [str(x) for x in k_from_m(m, kp.N).k])

# two named cases: the basic representation and projective space
for n in (2, 3, 4):
    basic = stokes_from_m(m_from_k(KParams((1,) + (0,) * n)))
    cpn = stokes_from_m(m_from_k(KParams((0,) + (-1,) * n)))
    print(f"n={n}: k=(1,0..0) gives s={np.round(basic.s, 12)}, k=(0,-1..-1) gives s={np.round(cpn.s, 12)}")
