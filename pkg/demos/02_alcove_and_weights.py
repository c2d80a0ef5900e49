"""Integer exponents are affine dominant weights.

For integral k the point (m + rho)/(n+1) lands strictly inside the Weyl
alcove, and scaling by k+n+1 gives Lambda + rho for a level-k weight.
"""

from ttreps import KParams, alcove_classify, classify_m, enumerate_P_k, m_from_k, theta, verify_lemma_pk, weight_from_k
from ttreps.lie import rho

n, level = 2, 3
print(f"P_{level} for sl({n + 1}):", enumerate_P_k(n, level))
print("P_k + rho equals the dominant lattice points of the scaled open alcove:", verify_lemma_pk(n, level))

for k in [(3, 0, 0), (1, 1, 1), (0, 2, 1)]:
    kp = KParams(k)
    m = m_from_k(kp)
    w = weight_from_k(kp)
    z = (m.m + rho(n)) / (n + 1)
    print(f"k={k}: Lambda={w.v} at level {w.level}, alcove position {alcove_classify(z)},",
          "theta(z) - rho =", [str(x) for x in (theta(z, w.level) - rho(n)).eps_coeffs()])
    # classify_m picks the smallest N, so proportional k such as (1,1,1) and (0,0,0) coincide
    print("   classify_m ->", classify_m(m))
