"""Riemann-Roch arithmetic on K3 surfaces with Picard group generated by ``H``.

A Mukai vector is stored as ``(r, d, s)`` meaning ``(r, d*H, s)`` with
``H^2 = 2g - 2``; then ``chi(F) = r + s`` and ``ch_2(F) = s - r``.  The Euler
pairing is ``chi(E, F) = r_E s_F + r_F s_E - d_E d_F (2g - 2)`` and it equals
``chi(E^* (x) F)``; duals flip the sign of ``d`` only, so
``chi(E (x) F) = chi(E^*, F)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

__all__ = [
    "MukaiVector",
    "BNProblem",
    "bn_number",
    "euler_chi",
    "euler_pairing_chi",
    "twist",
    "min_denominator_in_interval",
    "conormal_factor_slopes",
    "Genus7Column",
    "Genus7Report",
    "verify_genus7_tables",
    "ProjectionCount",
    "projection_counts",
    "CONE_CASES",
    "cone_terminality",
]


@dataclass(frozen=True)
class MukaiVector:
    g: int
    r: int
    d: int
    s: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"genus must be at least 2, got {self.g}")

    @property
    def h2(self) -> int:
        return 2 * self.g - 2

    @property
    def ch2(self) -> Fraction:
        # ch_2 = s - r, kept as a Fraction so Lambda^2/Sym^2 halving stays exact
        return Fraction(self.s - self.r)

    @classmethod
    def from_chern_character(cls, g: int, rank: int, d, ch2) -> "MukaiVector":
        s = Fraction(ch2) + rank
        d = Fraction(d)
        if s.denominator != 1 or d.denominator != 1:
            raise ArithmeticError(f"non-integral Mukai vector ({rank}, {d}, {s})")
        return cls(g, rank, int(d), int(s))

    def euler_chi(self) -> int:
        return self.r + self.s

    def dual(self) -> "MukaiVector":
        return MukaiVector(self.g, self.r, -self.d, self.s)

    def twist(self, m: int) -> "MukaiVector":
        """Tensor with ``O(mH)``."""
        return MukaiVector(
            self.g,
            self.r,
            self.d + self.r * m,
            self.s + m * self.d * self.h2 + self.r * m * m * (self.g - 1),
        )

    def _check_same(self, other: "MukaiVector"):
        if self.g != other.g:
            raise ValueError(f"genus mismatch: {self.g} vs {other.g}")

    def pairing(self, other: "MukaiVector") -> int:
        self._check_same(other)
        return self.r * other.s + other.r * self.s - self.d * other.d * self.h2

    def tensor(self, other: "MukaiVector") -> "MukaiVector":
        self._check_same(other)
        r = self.r * other.r
        d = self.r * other.d + other.r * self.d
        ch2 = self.r * other.ch2 + other.r * self.ch2 + self.d * other.d * self.h2
        return MukaiVector.from_chern_character(self.g, r, d, ch2)

    def wedge2(self) -> "MukaiVector":
        r = self.r
        ch2 = (r - 2) * self.ch2 + Fraction(self.d * self.d * self.h2, 2)
        return MukaiVector.from_chern_character(self.g, r * (r - 1) // 2, (r - 1) * self.d, ch2)

    def sym2(self) -> "MukaiVector":
        sq = self.tensor(self)
        w = self.wedge2()
        return MukaiVector(self.g, sq.r - w.r, sq.d - w.d, sq.s - w.s)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        self._check_same(other)
        return MukaiVector(self.g, self.r + other.r, self.d + other.d, self.s + other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(self.g, -self.r, -self.d, -self.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return self + (-other)


def euler_chi(v: MukaiVector) -> int:
    return v.euler_chi()


def euler_pairing_chi(v: MukaiVector, w: MukaiVector) -> int:
    return v.pairing(w)


def twist(v: MukaiVector, m: int) -> MukaiVector:
    return v.twist(m)


@dataclass(frozen=True)
class BNProblem:
    g: int
    r: int
    d: int

    def __post_init__(self):
        if min(self.g, self.r, self.d) < 0:
            raise ValueError("Brill-Noether data must be nonnegative")


def bn_number(p: BNProblem) -> int:
    """Brill-Noether number for line bundles of degree ``d`` with at least ``r`` sections."""
    return p.g - p.r * (p.g - 1 - p.d + p.r)


def _simplest_positive(a: Fraction, b: Fraction) -> Fraction:
    """Smallest-denominator rational in the open interval ``(a, b)``, ``0 <= a < b``."""
    n = floor(a)
    if n + 1 < b:
        return Fraction(n + 1)
    # a and b share the integer part n (b may equal n + 1); recurse on reciprocals
    lo = a - n
    hi = b - n
    if lo == 0:
        # (n, n + hi): simplest is n + 1/m with m the least integer > 1/hi
        return n + Fraction(1, floor(1 / hi) + 1)
    return n + 1 / _simplest_positive(1 / hi, 1 / lo)


def min_denominator_in_interval(a, b) -> Fraction:
    """The rational of least denominator strictly between ``a`` and ``b``.

    Ties on the denominator are broken by the smallest numerator.  For an
    interval containing integers this is the smallest such integer.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError(f"empty interval ({a}, {b})")
    if a < 0 < b:
        # 0 is the only denominator-1 candidate we need to compare with smaller integers
        lo_int = floor(a) + 1
        return Fraction(lo_int)
    if b <= 0:
        # mirror; the least numerator on the negative side is the leftmost, so
        # pick the candidate of least denominator and then its leftmost sibling
        x = -_simplest_positive(-b, -a)
        return _leftmost_with_denominator(a, b, x.denominator)
    x = _simplest_positive(a, b)
    return _leftmost_with_denominator(a, b, x.denominator)


def _leftmost_with_denominator(a: Fraction, b: Fraction, q: int) -> Fraction:
    p = floor(a * q) + 1
    x = Fraction(p, q)
    if not a < x < b:  # pragma: no cover - guarded by construction
        raise AssertionError("descent produced a point outside the interval")
    return x


def conormal_factor_slopes(r: int, s: int, i: int) -> Fraction:
    """Slope ``1 - i (1/r + 1/s)`` of the ``i``-th factor in the conormal filtration."""
    if not 2 <= i <= r:
        raise ValueError(f"need 2 <= i <= r, got i={i}, r={r}")
    return 1 - i * (Fraction(1, r) + Fraction(1, s))


@dataclass(frozen=True)
class Genus7Column:
    name: str
    table: tuple[int, int, int]  # (h0, h1, h2) as tabulated
    computed_chi: int

    @property
    def table_chi(self) -> int:
        h0, h1, h2 = self.table
        return h0 - h1 + h2

    @property
    def ok(self) -> bool:
        return self.table_chi == self.computed_chi


@dataclass
class Genus7Report:
    columns: list[Genus7Column]
    self_pairings: dict[str, tuple[int, int]]  # name -> (expected, computed)
    wedge2_us: tuple[int, int]

    @property
    def verified(self) -> bool:
        return (
            all(c.ok for c in self.columns)
            and all(e == c for e, c in self.self_pairings.values())
            and self.wedge2_us[0] == self.wedge2_us[1]
        )

    def mismatches(self) -> list[str]:
        out = [f"{c.name}: table {c.table_chi} vs computed {c.computed_chi}" for c in self.columns if not c.ok]
        out += [f"chi({k},{k}): {e} vs {c}" for k, (e, c) in self.self_pairings.items() if e != c]
        if self.wedge2_us[0] != self.wedge2_us[1]:
            out.append(f"chi(Lambda^2 U_S): {self.wedge2_us[0]} vs {self.wedge2_us[1]}")
        return out


# (h0, h1, h2) of the six tabulated bundles on a genus-7 K3 surface
GENUS7_TABLE = {
    "Lambda2 R2": (0, 0, 8),
    "Lambda2 R3": (0, 0, 11),
    "R2 x R3^*": (1, 0, 0),
    "R2 x R3": (0, 1, 26),
    "Sym2 R2": (0, 0, 16),
    "Sym2 R3": (0, 0, 13),
}
GENUS7_WEDGE2_US = (0, 1, 45)


def verify_genus7_tables(table: dict | None = None) -> Genus7Report:
    """Cross-check the genus-7 table against Mukai-vector arithmetic."""
    table = dict(GENUS7_TABLE if table is None else table)
    r2 = MukaiVector(7, 2, -1, 3)
    r3 = MukaiVector(7, 3, -1, 2)
    computed = {
        # Lambda^2 R2 = det R2 = O(-H); Lambda^2 R3 = R3^*(-H)
        "Lambda2 R2": r2.wedge2().euler_chi(),
        "Lambda2 R3": r3.dual().twist(-1).euler_chi(),
        "R2 x R3^*": euler_pairing_chi(r3, r2),
        "R2 x R3": euler_pairing_chi(r3.dual(), r2),
        "Sym2 R2": euler_pairing_chi(r2.dual(), r2) - r2.wedge2().euler_chi(),
        "Sym2 R3": euler_pairing_chi(r3.dual(), r3) - r3.dual().twist(-1).euler_chi(),
    }
    columns = [Genus7Column(k, tuple(table[k]), computed[k]) for k in GENUS7_TABLE]
    pairings = {
        "R2": (0, euler_pairing_chi(r2, r2)),
        "R3": (0, euler_pairing_chi(r3, r3)),
        "U_S": (2, euler_pairing_chi(MukaiVector(7, 5, -2, 5), MukaiVector(7, 5, -2, 5))),
    }
    h0, h1, h2 = GENUS7_WEDGE2_US
    wedge = (h0 - h1 + h2, MukaiVector(7, 5, -2, 5).wedge2().euler_chi())
    return Genus7Report(columns, pairings, wedge)


@dataclass(frozen=True)
class ProjectionCount:
    genus: int
    vector: MukaiVector
    expected: int

    @property
    def computed(self) -> int:
        return self.vector.twist(1).euler_chi()

    @property
    def ok(self) -> bool:
        return self.computed == self.expected


def projection_counts() -> list[ProjectionCount]:
    """``chi`` of the twisted Mukai bundles used in the genus 9, 10, 12 counts."""
    return [
        ProjectionCount(9, MukaiVector(9, 3, -1, 3), 4 * 9 // 3 + 2),
        ProjectionCount(10, MukaiVector(10, 5, -1, 2), 34),
        ProjectionCount(12, MukaiVector(12, 3, -1, 4), 18),
    ]


CONE_CASES = {
    # least anticanonical index m0 giving terminal singularities
    "plain": 2,
    "general_quadric": 2,
    "vertex_in_quadric": 3,
    "vertex_mult2": 4,
}


def cone_terminality(m0: int, case: str) -> bool:
    """Whether the cone singularity of the given type is terminal."""
    if case not in CONE_CASES:
        raise ValueError(f"unknown cone case {case!r}; expected one of {sorted(CONE_CASES)}")
    if m0 < 0:
        raise ValueError("m0 must be nonnegative")
    return m0 >= CONE_CASES[case]
