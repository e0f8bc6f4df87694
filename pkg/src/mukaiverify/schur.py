"""Schubert calculus on the Grassmannian ``Gr(k, n)``.

Classes are integer combinations of Schubert classes ``sigma_lambda`` for
partitions inside the ``k x (n-k)`` box.  Multiplication expands the second
factor by the dual Jacobi-Trudi identity into elementary classes
``e_i = sigma_{1^i}`` and applies the vertical-strip Pieri rule, discarding
shapes that leave the box at every step (the quotient by those shapes is a
ring homomorphism, so early truncation is exact).

Chern classes of bundles built from ``U^*``, ``V/U`` and line bundles are
obtained from their Chern characters (additive, multiplicative, Adams
operations for exterior squares) and Newton's identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterable, Mapping

__all__ = [
    "Partition",
    "partition",
    "conjugate",
    "hook_lengths",
    "syt_count",
    "SchurClass",
    "schur_multiply",
    "grassmannian_integral",
    "UDual",
    "Quotient",
    "LineBundle",
    "Dual",
    "DirectSum",
    "Tensor",
    "Twist",
    "Wedge2",
    "chern_character",
    "chern_classes",
    "mukai_bundle_e0",
    "mukai_degree",
    "mukai_degree_terms",
    "MUKAI_GRASSMANNIANS",
]

Partition = tuple[int, ...]


def partition(*parts: int) -> Partition:
    """Normalize to a weakly decreasing tuple of positive parts."""
    if len(parts) == 1 and isinstance(parts[0], (tuple, list)):
        parts = tuple(parts[0])
    p = tuple(x for x in parts if x)
    if any(x < 0 for x in p) or list(p) != sorted(p, reverse=True):
        raise ValueError(f"{parts} is not a partition")
    return p


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    lam = partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux by the hook length formula."""
    lam = partition(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


def _fits(lam: Partition, k: int, m: int) -> bool:
    return len(lam) <= k and (not lam or lam[0] <= m)


def _normalize_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SchurClass:
    """Linear combination of Schubert classes on ``Gr(k, n)``.

    Coefficients are ints; Fractions are tolerated as intermediate values in
    Chern character computations.
    """

    __slots__ = ("k", "n", "coeffs")

    def __init__(self, k: int, n: int, coeffs: Mapping[Partition, int] | None = None):
        if not 0 <= k <= n:
            raise ValueError(f"invalid Grassmannian Gr({k},{n})")
        self.k = k
        self.n = n
        clean: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            lam = partition(lam)
            if not _fits(lam, k, n - k):
                raise ValueError(f"{lam} does not fit in the {k}x{n - k} box")
            if c:
                clean[lam] = _normalize_coeff(clean.get(lam, 0) + c)
                if not clean[lam]:
                    del clean[lam]
        self.coeffs = clean

    @classmethod
    def sigma(cls, k: int, n: int, *parts: int) -> "SchurClass":
        lam = partition(*parts)
        if not _fits(lam, k, n - k):
            return cls(k, n)
        return cls(k, n, {lam: 1})

    @classmethod
    def one(cls, k: int, n: int) -> "SchurClass":
        return cls(k, n, {(): 1})

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    def _check(self, other: "SchurClass"):
        if (self.k, self.n) != (other.k, other.n):
            raise ValueError(f"Gr({self.k},{self.n}) vs Gr({other.k},{other.n})")

    def __add__(self, other):
        if not isinstance(other, SchurClass):
            other = SchurClass(self.k, self.n, {(): other})
        self._check(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SchurClass(self.k, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SchurClass(self.k, self.n, {lam: -c for lam, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SchurClass):
            return schur_multiply(self, other)
        return SchurClass(self.k, self.n, {lam: c * other for lam, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __truediv__(self, d):
        return SchurClass(self.k, self.n, {lam: Fraction(c) / d for lam, c in self.coeffs.items()})

    def __pow__(self, e: int):
        out = SchurClass.one(self.k, self.n)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, SchurClass):
            return (self.k, self.n, self.coeffs) == (other.k, other.n, other.coeffs)
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self.coeffs.items())))

    def degree_part(self, d: int) -> "SchurClass":
        return SchurClass(self.k, self.n, {lam: c for lam, c in self.coeffs.items() if sum(lam) == d})

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def transpose(self) -> "SchurClass":
        """Image under ``Gr(k, n) = Gr(n-k, n)``: conjugate every shape."""
        return SchurClass(self.n - self.k, self.n, {conjugate(lam): c for lam, c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return f"0 [Gr({self.k},{self.n})]"
        terms = sorted(self.coeffs.items(), key=lambda t: (-sum(t[0]), t[0]))
        body = " + ".join(f"{c}*s{''.join(map(str, lam)) or '0'}" for lam, c in terms)
        return f"{body} [Gr({self.k},{self.n})]"


def _vertical_pieri(lam: Partition, m: int, k: int, width: int) -> list[Partition]:
    """Shapes obtained from ``lam`` by adding a vertical ``m``-strip inside the box."""
    base = list(lam) + [0] * (k - len(lam))
    out = []
    for rows in combinations(range(k), m):
        new = base[:]
        for r in rows:
            new[r] += 1
        if new[0] > width:
            continue
        if all(new[i] >= new[i + 1] for i in range(k - 1)):
            out.append(partition(new))
    return out


@lru_cache(maxsize=None)
def _elementary_expansion(mu: Partition) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """``s_mu = det(e_{mu'_i - i + j})`` as ``(sign, e-indices)`` terms."""
    conj = conjugate(mu)
    L = len(conj)
    terms = []
    for perm in permutations(range(L)):
        idx = []
        ok = True
        for i in range(L):
            a = conj[i] - i + perm[i]
            if a < 0:
                ok = False
                break
            if a:
                idx.append(a)
        if not ok:
            continue
        inversions = sum(1 for i in range(L) for j in range(i + 1, L) if perm[i] > perm[j])
        terms.append((-1 if inversions % 2 else 1, tuple(sorted(idx, reverse=True))))
    return tuple(terms)


@lru_cache(maxsize=None)
def _basis_product(lam: Partition, mu: Partition, k: int, n: int) -> tuple[tuple[Partition, int], ...]:
    width = n - k
    result: dict[Partition, int] = {}
    for sign, idx in _elementary_expansion(mu):
        current = {lam: 1}
        for m in idx:
            nxt: dict[Partition, int] = {}
            for shape, c in current.items():
                for new in _vertical_pieri(shape, m, k, width):
                    nxt[new] = nxt.get(new, 0) + c
            current = nxt
            if not current:
                break
        for shape, c in current.items():
            result[shape] = result.get(shape, 0) + sign * c
    return tuple((s, c) for s, c in result.items() if c)


def schur_multiply(a: SchurClass, b: SchurClass) -> SchurClass:
    """Product in the Chow ring of ``Gr(k, n)``."""
    a._check(b)
    out: dict[Partition, int] = {}
    for lam, ca in a.coeffs.items():
        for mu, cb in b.coeffs.items():
            for nu, c in _basis_product(lam, mu, a.k, a.n):
                out[nu] = out.get(nu, 0) + ca * cb * c
    return SchurClass(a.k, a.n, out)


def grassmannian_integral(c: SchurClass) -> int:
    """Coefficient of the point class (the full box)."""
    top = tuple([c.n - c.k] * c.k) if c.n > c.k else ()
    return c.coeffs.get(partition(top), 0)


# ---------------------------------------------------------------------------
# bundles and Chern classes


class BundleExpr:
    """Symbolic equivariant bundle on ``Gr(k, n)``."""


@dataclass(frozen=True)
class UDual(BundleExpr):
    """Dual of the tautological subbundle."""


@dataclass(frozen=True)
class Quotient(BundleExpr):
    """The quotient bundle ``V/U``."""


@dataclass(frozen=True)
class LineBundle(BundleExpr):
    """``O(t)``; ``O(1)`` is the Plucker polarization."""

    t: int = 1


@dataclass(frozen=True)
class Dual(BundleExpr):
    bundle: BundleExpr


@dataclass(frozen=True)
class DirectSum(BundleExpr):
    summands: tuple[BundleExpr, ...]

    def __init__(self, *summands: BundleExpr):
        object.__setattr__(self, "summands", tuple(summands))


@dataclass(frozen=True)
class Tensor(BundleExpr):
    left: BundleExpr
    right: BundleExpr


@dataclass(frozen=True)
class Twist(BundleExpr):
    """``E (x) O(t)``."""

    bundle: BundleExpr
    t: int


@dataclass(frozen=True)
class Wedge2(BundleExpr):
    bundle: BundleExpr


def _newton_power_sums(e: list[SchurClass], top: int, one: SchurClass) -> list[SchurClass]:
    """Power sums ``p_1..p_top`` of the roots from elementary classes ``e``."""
    zero = one * 0

    def ei(i):
        return e[i] if i < len(e) else zero

    p = [zero]
    for m in range(1, top + 1):
        val = ei(m) * m * (-1) ** (m - 1)
        for i in range(1, m):
            val = val + ei(i) * p[m - i] * (-1) ** (i - 1)
        p.append(val)
    return p


def _ch_from_elementary(rk: int, e: list[SchurClass], dim: int, one: SchurClass) -> tuple[int, list[SchurClass]]:
    p = _newton_power_sums(e, dim, one)
    ch = [one * rk] + [p[m] / factorial(m) for m in range(1, dim + 1)]
    return rk, ch


def chern_character(bundle: BundleExpr, k: int, n: int) -> tuple[int, list[SchurClass]]:
    """``(rank, [ch_0, ..., ch_dim])`` with rational coefficients."""
    dim = k * (n - k)
    one = SchurClass.one(k, n)
    zero = one * 0
    if isinstance(bundle, UDual):
        e = [one] + [SchurClass.sigma(k, n, *([1] * i)) for i in range(1, k + 1)]
        return _ch_from_elementary(k, e, dim, one)
    if isinstance(bundle, Quotient):
        e = [one] + [SchurClass.sigma(k, n, i) for i in range(1, n - k + 1)]
        return _ch_from_elementary(n - k, e, dim, one)
    if isinstance(bundle, LineBundle):
        h = SchurClass.sigma(k, n, 1) * bundle.t
        ch = [one]
        for m in range(1, dim + 1):
            ch.append(ch[-1] * h / m)
        return 1, ch
    if isinstance(bundle, Dual):
        rk, ch = chern_character(bundle.bundle, k, n)
        return rk, [c * (-1) ** m for m, c in enumerate(ch)]
    if isinstance(bundle, DirectSum):
        rk, ch = 0, [zero] * (dim + 1)
        for s in bundle.summands:
            r2, ch2 = chern_character(s, k, n)
            rk += r2
            ch = [a + b for a, b in zip(ch, ch2)]
        return rk, ch
    if isinstance(bundle, (Tensor, Twist)):
        left = bundle.left if isinstance(bundle, Tensor) else bundle.bundle
        right = bundle.right if isinstance(bundle, Tensor) else LineBundle(bundle.t)
        r1, ch1 = chern_character(left, k, n)
        r2, ch2 = chern_character(right, k, n)
        return r1 * r2, _convolve(ch1, ch2, dim, zero)
    if isinstance(bundle, Wedge2):
        rk, ch = chern_character(bundle.bundle, k, n)
        sq = _convolve(ch, ch, dim, zero)
        adams = [c * 2**m for m, c in enumerate(ch)]
        return rk * (rk - 1) // 2, [(a - b) / 2 for a, b in zip(sq, adams)]
    raise TypeError(f"unsupported bundle constructor {bundle!r}")


def _convolve(a: list[SchurClass], b: list[SchurClass], dim: int, zero: SchurClass) -> list[SchurClass]:
    out = []
    for m in range(dim + 1):
        total = zero
        for i in range(m + 1):
            if a[i].coeffs and b[m - i].coeffs:
                total = total + a[i] * b[m - i]
        out.append(total)
    return out


def chern_classes(bundle: BundleExpr, k: int, n: int) -> list[SchurClass]:
    """``[c_0, ..., c_rank]`` by the splitting principle."""
    rk, ch = chern_character(bundle, k, n)
    dim = k * (n - k)
    one = SchurClass.one(k, n)
    p = [None] + [ch[m] * factorial(m) for m in range(1, dim + 1)]
    e = [one]
    for m in range(1, min(rk, dim) + 1):
        total = one * 0
        for i in range(1, m + 1):
            total = total + e[m - i] * p[i] * (-1) ** (i - 1)
        e.append(total / m)
    for i, c in enumerate(e):
        c = SchurClass(k, n, c.coeffs)
        if not c.is_integral():
            raise ArithmeticError(f"non-integral Chern class c_{i}: {c}")
        e[i] = c
    e += [one * 0] * (rk + 1 - len(e))
    return e


# ---------------------------------------------------------------------------
# Mukai model degrees

# genus -> (r, s, n_g)
MUKAI_GRASSMANNIANS = {8: (2, 4, 8), 9: (3, 3, 6), 10: (2, 5, 5), 12: (3, 4, 3)}


def mukai_bundle_e0(g: int) -> BundleExpr:
    """The bundle ``E_0`` on ``Gr(r, r+s)`` cutting out the genus-``g`` model."""
    if g == 8:
        return DirectSum()
    if g == 9:
        return Wedge2(UDual())
    if g == 10:
        return Twist(Dual(Quotient()), 1)
    if g == 12:
        return DirectSum(Wedge2(UDual()), Wedge2(UDual()), Wedge2(UDual()))
    raise ValueError(f"no Grassmannian model for genus {g}")


def _check_genus(g: int) -> tuple[int, int, int]:
    if g not in MUKAI_GRASSMANNIANS:
        raise ValueError(f"unsupported genus {g}; expected one of 8, 9, 10, 12")
    return MUKAI_GRASSMANNIANS[g]


def mukai_degree(g: int) -> int:
    """Degree ``c_{g - n_g}(E_0) . H^{n_g}`` on ``Gr(r, r+s)``."""
    r, s, ng = _check_genus(g)
    k, n = r, r + s
    c = chern_classes(mukai_bundle_e0(g), k, n)
    top = c[g - ng] if g - ng < len(c) else SchurClass(k, n)
    return grassmannian_integral(top * SchurClass.sigma(k, n, 1) ** ng)


def mukai_degree_terms(g: int) -> list[tuple[int, int]]:
    """Monomial expansion of the top Chern class as ``(coefficient, integral)`` pairs.

    The monomials are the explicit expansions in Chern classes of ``U^*``
    (genera 9 and 12) or ``V/U`` (genus 10); each integral is computed by
    multiplying Schubert classes directly, independently of
    :func:`chern_classes`.
    """
    r, s, ng = _check_genus(g)
    k, n = r, r + s
    H = SchurClass.sigma(k, n, 1)

    def cu(i):
        return SchurClass.sigma(k, n, *([1] * i))

    def cq(i):
        return SchurClass.sigma(k, n, i)

    if g == 8:
        monos: list[tuple[int, Iterable[SchurClass]]] = [(1, [])]
    elif g == 9:
        monos = [(1, [cu(1), cu(2)]), (-1, [cu(3)])]
    elif g == 10:
        monos = [(1, [cq(1)] * 3 + [cq(2)]), (-1, [cq(1)] * 2 + [cq(3)]), (1, [cq(1), cq(4)]), (-1, [cq(5)])]
    else:
        monos = [
            (1, [cu(1)] * 3 + [cu(2)] * 3),
            (-3, [cu(1)] * 2 + [cu(2)] * 2 + [cu(3)]),
            (3, [cu(1), cu(2)] + [cu(3)] * 2),
            (-1, [cu(3)] * 3),
        ]
    out = []
    for coeff, factors in monos:
        cls = H**ng
        for f in factors:
            cls = cls * f
        out.append((coeff, grassmannian_integral(cls)))
    return out
