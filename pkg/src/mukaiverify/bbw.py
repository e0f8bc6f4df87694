"""Borel-Bott-Weil for ``GL_n``-equivariant bundles on ``Gr(r, n)``.

Weight convention: ``(beta | gamma)`` with ``beta`` of length ``r`` and
``gamma`` of length ``n - r``, each weakly decreasing, encodes
``S^beta U^* (x) S^gamma (V/U)^*``.  So ``U^*`` is ``(1, 0, ..|0, ..)``,
``O(1) = det U^*`` is ``(1, .., 1|0, .., 0)`` and ``V/U`` is
``(0, ..|0, .., 0, -1)``.  Dominant weights give ``H^0 = S^w V^*``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Iterator

from .schur import MUKAI_GRASSMANNIANS, conjugate

__all__ = [
    "GLWeight",
    "CohomologyResult",
    "bbw_cohomology",
    "weyl_dim",
    "exterior_power_summands",
    "twisted_summands",
    "HiWeTable",
    "verify_hi_we",
    "connectedness_violations",
    "verify_connectedness_vanishing",
    "serre_dual_weight",
    "e0_rank",
]


@dataclass(frozen=True)
class GLWeight:
    entries: tuple[int, ...]
    r: int

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if not 0 <= self.r <= len(e):
            raise ValueError(f"block size {self.r} out of range")
        first, second = e[: self.r], e[self.r :]
        for block in (first, second):
            if any(block[i] < block[i + 1] for i in range(len(block) - 1)):
                raise ValueError(f"weight {e} is not block-monotone for r={self.r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def from_blocks(cls, first, second) -> "GLWeight":
        first, second = tuple(first), tuple(second)
        return cls(first + second, len(first))

    def twist(self, t: int) -> "GLWeight":
        """Tensor with ``O(t)``."""
        return GLWeight(tuple(x + t for x in self.entries[: self.r]) + self.entries[self.r :], self.r)


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    highest_weight: tuple[int, ...]
    dimension: int


def weyl_dim(mu, n: int | None = None) -> int:
    """Dimension of the irreducible ``GL_n``-module of highest weight ``mu``."""
    mu = list(mu)
    if n is None:
        n = len(mu)
    if len(mu) > n:
        if any(mu[n:]):
            raise ValueError("weight longer than n")
        mu = mu[:n]
    mu = mu + [0] * (n - len(mu))
    if any(mu[i] < mu[i + 1] for i in range(n - 1)):
        raise ValueError(f"{mu} is not dominant")
    num = prod(mu[i] - mu[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def bbw_cohomology(w: GLWeight) -> CohomologyResult | None:
    """The unique nonvanishing cohomology of the bundle, or ``None`` if acyclic."""
    n = w.n
    shifted = [x + n - i for i, x in enumerate(w.entries)]
    if len(set(shifted)) < n:
        return None
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    srt = sorted(shifted, reverse=True)
    mu = tuple(x - (n - i) for i, x in enumerate(srt))
    return CohomologyResult(inversions, mu, weyl_dim(mu, n))


def serre_dual_weight(w: GLWeight) -> GLWeight:
    """Weight of ``E^* (x) omega`` with ``omega = O(-n)``."""
    first = tuple(-x - w.n for x in reversed(w.entries[: w.r]))
    second = tuple(-x for x in reversed(w.entries[w.r :]))
    return GLWeight(first + second, w.r)


def _partitions_in_box(size: int, rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    def rec(remaining, max_part, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for part in range(min(max_part, remaining), 0, -1):
            for rest in rec(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from rec(size, cols, rows)


def e0_rank(g: int) -> int:
    return {8: 0, 9: 3, 10: 5, 12: 9}[_check(g)[0]]


def _check(g: int) -> tuple[int, int, int, int]:
    if g not in MUKAI_GRASSMANNIANS:
        raise ValueError(f"unsupported genus {g}; expected one of 8, 9, 10, 12")
    r, s, ng = MUKAI_GRASSMANNIANS[g]
    return g, r, s, ng


def exterior_power_summands(g: int, i: int) -> list[tuple[GLWeight, int]]:
    """Irreducible summands of ``Lambda^i E_0^*`` with multiplicities.

    ``E_0^*`` is ``U^*(-1)`` (g=9), ``(V/U)(-1)`` (g=10), ``U^*(-1) (x) k^3``
    (g=12) and zero (g=8); the last case uses the Cauchy decomposition of
    ``Lambda^i(U^* (x) k^3)``.
    """
    _, r, s, _ = _check(g)
    n = r + s
    rk = e0_rank(g)
    if not 0 <= i <= rk:
        raise ValueError(f"i={i} outside 0..{rk}")
    if g == 8:
        return [(GLWeight((0,) * n, r), 1)]
    if g == 9:
        return [(GLWeight.from_blocks([1] * i + [0] * (r - i), [0] * s).twist(-i), 1)]
    if g == 10:
        return [(GLWeight.from_blocks([0] * r, [0] * (s - i) + [-1] * i).twist(-i), 1)]
    out = []
    for lam in _partitions_in_box(i, 3, 3):
        first = list(lam) + [0] * (r - len(lam))
        mult = weyl_dim(list(conjugate(lam)) + [0] * (3 - len(conjugate(lam))), 3)
        out.append((GLWeight.from_blocks(first, [0] * s).twist(-i), mult))
    return out


def twisted_summands(g: int, i: int, j: int) -> list[tuple[GLWeight, int]]:
    """Summands of ``Lambda^i E_0^* (-j)``."""
    return [(w.twist(-j), m) for w, m in exterior_power_summands(g, i)]


def cohomology_of_summands(summands) -> dict[int, int]:
    """Total ``{p: h^p}`` of a direct sum of irreducible bundles."""
    out: dict[int, int] = {}
    for w, mult in summands:
        res = bbw_cohomology(w)
        if res is not None:
            out[res.degree] = out.get(res.degree, 0) + mult * res.dimension
    return out


@dataclass
class HiWeTable:
    """Cohomology of ``Lambda^i E_0^*(-j)`` over the full ``(i, j)`` grid."""

    genus: int
    rows: list[tuple[int, int, int, int]] = field(default_factory=list)  # (i, j, p, dim), nonzero only
    expected: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return sorted(self.rows) == sorted(self.expected)


def verify_hi_we(g: int, j_range: range | None = None) -> HiWeTable:
    """Exhaustive table for ``0 <= i <= rank E_0``, ``0 <= j <= n_g - 2``.

    The expected pattern is exactly two one-dimensional entries: ``(0, 0, 0)``
    and ``(i, j, p) = (g - n_g, n_g - 2, g)``.
    """
    _, r, s, ng = _check(g)
    js = j_range if j_range is not None else range(0, ng - 1)
    table = HiWeTable(g, expected=[(0, 0, 0, 1), (g - ng, ng - 2, g, 1)])
    for i in range(e0_rank(g) + 1):
        for j in js:
            for p, d in sorted(cohomology_of_summands(twisted_summands(g, i, j)).items()):
                if d:
                    table.rows.append((i, j, p, d))
    return table


def _wedge_e_dual_summands(g: int, q: int) -> Iterator[tuple[int, int, list[tuple[GLWeight, int]]]]:
    """``Lambda^q E^* = sum_i Lambda^i E_0^* (i-q)^{C(n_g-2, q-i)}`` with ``E = O(1)^{n_g-2} + E_0``."""
    _, r, s, ng = _check(g)
    for i in range(0, min(q, e0_rank(g)) + 1):
        mult = comb(ng - 2, q - i)
        if mult:
            yield i, mult, [(w, m * mult) for w, m in twisted_summands(g, i, q - i)]


def connectedness_violations(g: int) -> list[tuple[int, int, int, int]]:
    """Entries ``(q, i, p, dim)`` with ``H^p(Lambda^q E^*) != 0`` and ``p <= q``, ``1 <= q <= g - 2``."""
    bad = []
    for q in range(1, g - 1):
        for i, _, summands in _wedge_e_dual_summands(g, q):
            for p, d in cohomology_of_summands(summands).items():
                if d and p <= q:
                    bad.append((q, i, p, d))
    return bad


def verify_connectedness_vanishing(g: int) -> bool:
    return not connectedness_violations(g)


def wedge_e_dual_cohomology(g: int, q: int) -> dict[int, int]:
    """Total ``{p: h^p(Lambda^q E^*)}``."""
    total: dict[int, int] = {}
    for _, _, summands in _wedge_e_dual_summands(g, q):
        for p, d in cohomology_of_summands(summands).items():
            total[p] = total.get(p, 0) + d
    return {p: d for p, d in total.items() if d}


def slope_e0(g: int) -> Fraction:
    """Slope ``c_1(E_0) / rank(E_0)`` in units of ``H``."""
    return {9: Fraction(2, 3), 10: Fraction(4, 5), 12: Fraction(2, 3)}[g]


def summand_ranks(g: int, i: int) -> int:
    """Total rank of ``Lambda^i E_0^*`` from its summands (should be ``C(rank, i)``)."""
    _, r, s, _ = _check(g)
    total = 0
    for w, m in exterior_power_summands(g, i):
        first = list(w.entries[:r])
        second = list(w.entries[r:])
        # rank of S^beta U^* (x) S^gamma Q^* = weyl_dim(beta, r) * weyl_dim(gamma, s)
        base = first[-1]
        total += m * weyl_dim([x - base for x in first], r) * weyl_dim([x - second[-1] for x in second], s)
    return total

