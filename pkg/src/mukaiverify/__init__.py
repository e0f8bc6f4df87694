"""Exact verification toolkit for Mukai models of prime Fano varieties and K3 surfaces.

Submodules:

``exactlin``   rational and prime-field linear algebra, polynomials, certificates
``exterior``   exterior algebra of a based vector space
``schur``      Schubert calculus on Grassmannians and Chern classes of tautological bundles
``bbw``        Borel-Bott-Weil cohomology on Grassmannians
``k3num``      Mukai vectors and Riemann-Roch on K3 surfaces
``models``     per-genus model table and section linear algebra
``nets``       nets of skew forms on a 7-dimensional space
``cli``        command line front end
"""

from . import bbw, exactlin, exterior, k3num, models, nets, schur
from .exactlin import GF, QQ, Field, Matrix, MultiPoly, kernel_basis, rank
from .exterior import MultiVector, Subspace

__version__ = "0.1.0"

__all__ = [
    "bbw",
    "exactlin",
    "exterior",
    "k3num",
    "models",
    "nets",
    "schur",
    "GF",
    "QQ",
    "Field",
    "Matrix",
    "MultiPoly",
    "MultiVector",
    "Subspace",
    "kernel_basis",
    "rank",
]
