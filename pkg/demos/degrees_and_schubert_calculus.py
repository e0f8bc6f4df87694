"""
Degrees of the Mukai models from Schubert calculus
==================================================

The model of genus g sits in a Grassmannian Gr(r, r+s) as the zero locus of
a bundle E_0.  Its degree is the integral of the top Chern class of E_0
times a power of the hyperplane class.  Everything below is exact integer
arithmetic in the Schubert basis.
"""

# %%
from mukaiverify import schur

# %%
# Standard Young tableaux count the degree of a Grassmannian itself.
for parts in [(3, 2, 2), (2, 2, 2), (5, 3), (5, 2), (5, 1)]:
    lam = schur.partition(*parts)
    print(parts, "hooks", schur.hook_lengths(lam), "tableaux", schur.syt_count(lam))

# %%
# Products of Schubert classes on Gr(2, 4): sigma_1 squared splits in two.
s1 = schur.SchurClass.sigma(2, 4, 1)
print("sigma_1^2 =", s1 * s1)
print("deg Gr(2,4) =", schur.grassmannian_integral(s1 ** 4))

# %%
# Chern classes of the bundles that cut out each model, then the degree.
for g, (r, s, n) in sorted(schur.MUKAI_GRASSMANNIANS.items()):
    print(f"g={g}: Gr({r},{r + s}), dimension {n}, degree {schur.mukai_degree(g)}")

# %%
# The genus 12 degree as a signed sum of Schubert integrals.
terms = schur.mukai_degree_terms(12)
print(" + ".join(f"({c})*{v}" for c, v in terms), "=", sum(c * v for c, v in terms))
