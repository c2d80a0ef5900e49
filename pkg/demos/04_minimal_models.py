"""Central charges, conformal dimensions and primaries of W minimal models."""

from ttreps import MinimalModelSpec, PrimaryField, central_charge, conformal_dim, fn_conformal_dim, necklace_count
from ttreps.minimal import model_table, operator_string, enumerate_primaries

print("Lee-Yang c =", central_charge(MinimalModelSpec(1, 2, 5)))
print("h(eps_1) =", conformal_dim(MinimalModelSpec(1, 2, 5), PrimaryField((0,), (1,))))
print("four formulas for h at n=2, N=7, Lambda=(1,2):", fn_conformal_dim(2, 7, (1, 2)))

table = model_table(2, 7)
print(f"(3,7) model, c = {table['c']}")
for row in table["primaries"]:
    print("  k =", row["kstring"], " h =", row["h"], " mu =", row["mu"], " c-24h =", row["c_minus_24h"])

cnt = necklace_count(2, 7)
print("primaries:", cnt.enumerated, " binom(N, n+1)/N =", cnt.formula)
for ks in enumerate_primaries(2, 7)[:3]:
    print("  operator word for", ks.k, ":", operator_string(ks))
