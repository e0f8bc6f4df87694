"""
A net of skew forms on a 7-dimensional space
============================================

The genus 12 model is determined by three skew forms on V_7.  A general
member has rank 6, and its kernel line gives a cubic map from the plane of
parameters to P(V_7).  Nondegeneracy over the algebraic closure is proven
with a Nullstellensatz certificate; finite-field scans look for isotropic
subspaces.
"""

# %%
from mukaiverify import models, nets
from mukaiverify.exactlin import GF

net = models.reference_net()
print("reference net over", net.field)

# %%
# The kernel map: seven cubics, linearly independent.
cubics = nets.net_cubics(net)
print("cubic rank", nets.cubic_coefficient_rank(cubics))
print("kernel at [1:0:0]:", [str(x) for x in nets.kappa(net, (1, 0, 0))])

# %%
# No member drops rank, even over the algebraic closure.
print(nets.is_nondegenerate_net(net))
print(nets.is_nondegenerate_net(models.degenerate_reference_net()))

# %%
# The conic of lines through a kernel point is smooth.
print("conic ranks:", [nets.conic_at(net, a) for a in [(1, 0, 0), (0, 1, 0), (1, 1, 1), (2, -1, 3)]])

# %%
# Over F_2 there are no isotropic 4-spaces, and every isotropic 3-space
# is swept out by a conic.
mod2 = net.reduce_mod(2)
stats = {}
print("isotropic V4:", len(nets.isotropic_scan(mod2, 4, stats=stats)), "of", stats["total"])
v3 = nets.isotropic_scan(mod2, 3)
print("isotropic V3:", len(v3), "covered:", sum(bool(nets.covering_conic_exists(mod2, u)) for u in v3))
print("constant rank on P^2(F_3):",
      nets.constant_rank_check(net, [tuple(int(x) for x in a) for a in nets.projective_points(GF(3))]))
