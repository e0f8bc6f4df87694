"""
Riemann-Roch on a K3 surface with Mukai vectors
===============================================

A sheaf on a polarized K3 surface of genus g has Mukai vector (r, d, s):
rank r, first Chern class d times the polarization, and r + s equal to the
Euler characteristic.  The Euler pairing is then bilinear arithmetic.
"""

# %%
from fractions import Fraction

from mukaiverify import k3num
from mukaiverify.k3num import BNProblem, MukaiVector

# %%
# Mukai bundles are rigid: the pairing of their vector with itself is 2.
for g, (r, s) in {8: (2, 4), 9: (3, 3), 10: (2, 5), 12: (3, 4)}.items():
    v = MukaiVector(g, r, -1, s)
    print(f"g={g}: v={v.r, v.d, v.s}, chi(v, v) = {v.pairing(v)}, chi(v(H)) = {v.twist(1).euler_chi()}")

# %%
# Genus 7: two rigid bundles and their extension.
r2, r3 = MukaiVector(7, 2, -1, 3), MukaiVector(7, 3, -1, 2)
us = r2 + r3
print("v(U_S) =", (us.r, us.d, us.s), "chi(U_S, U_S) =", us.pairing(us))
report = k3num.verify_genus7_tables()
for col in report.columns:
    print(f"  {col.name:12s} table {col.table_chi:3d}  from vectors {col.computed_chi:3d}")
print("  chi(Lambda^2 U_S):", report.wedge2_us)

# %%
# Brill-Noether numbers and the smallest denominator in a slope window.
print("rho(7, 3, 6) =", k3num.bn_number(BNProblem(7, 3, 6)))
print("rho(7, 2, 4) =", k3num.bn_number(BNProblem(7, 2, 4)))
print("simplest slope in (-1/2, -1/3):", k3num.min_denominator_in_interval(Fraction(-1, 2), Fraction(-1, 3)))
