"""Characters at the special elements t_Lambda of the level-k fusion ring.

The character of (k+1) eps_1 vanishes at every t_Lambda, so it lies in the
fusion ideal; the trivial character never vanishes.
"""

from ttreps import AffineDominantWeight, character_value, in_fusion_ideal, special_element
from ttreps.fusion import character_table

n, k = 1, 3
for v in [(0,), (1,), (k + 1,)]:
    row = [abs(r["chi"]["re"] + 1j * r["chi"]["im"]) for r in character_table(v, n, k)]
    print(f"|chi_{v}| over P_{k}:", [f"{x:.3e}" for x in row], " in ideal:", in_fusion_ideal(v, n, k))

# a rank-2 example: Schur polynomial at t for Lambda = eps_1 + eps_2, level 2
t = special_element(AffineDominantWeight(2, (1, 0), 2))
print("t =", [f"{x:.4f}" for x in t.x])
print("chi_(1,1)(t) =", f"{character_value((1, 1), t):.6f}")
