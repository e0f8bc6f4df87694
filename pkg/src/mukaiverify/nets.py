"""Nets of skew forms on a 7-dimensional space.

A net is a triple of alternating ``7 x 7`` matrices ``s_1, s_2, s_3``; the
member at a parameter ``a`` is ``a_1 s_1 + a_2 s_2 + a_3 s_3``.  The net is
nondegenerate when every nonzero member has rank 6.  Its kernel map sends
``a`` to the kernel generator of that member, computed as the cube divided
power (sub-Pfaffian vector), so it is a cubic in ``a`` and vanishes exactly
where the rank drops to 4 or less.

Nondegeneracy is decided by two searches: rational points where the rank
drops, and a degree ``D`` at which the seven kernel cubics generate every
form of degree ``D``.  The latter proves the cubics have no common zero over
the algebraic closure.  For rational nets it is enough to find it after
reduction modulo a prime: the rank of the multiplication map can only fall
under reduction, so surjectivity mod ``p`` forces surjectivity over ``QQ``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from pathlib import Path
from typing import Iterator, Sequence

from .exactlin import (
    GF,
    QQ,
    Field,
    Fp,
    Matrix,
    MultiPoly,
    certificate_degree,
    graded_multiplication_map,
    kernel_basis,
    rank,
)
from .exterior import MultiVector, Subspace, divided_power, vector_from_hyperform

__all__ = [
    "SkewNet",
    "NondegenerateOverClosure",
    "DegenerateWitness",
    "Undetermined",
    "NondegeneracyCertificate",
    "kappa",
    "net_cubics",
    "cubic_coefficient_rank",
    "is_nondegenerate_net",
    "projective_points",
    "conic_at",
    "isotropic_scan",
    "gaussian_binomial",
    "ConicCover",
    "covering_conic_exists",
    "constant_rank_check",
    "load_net",
    "dump_net",
    "net_from_json",
    "net_to_json",
    "DEFAULT_PRIMES",
]

DIM = 7
DEFAULT_PRIMES = (101, 9973)


class SkewNet:
    """Three alternating ``7 x 7`` matrices over a common field."""

    __slots__ = ("field", "forms", "metadata")

    def __init__(
        self,
        forms: Sequence[Matrix | Sequence[Sequence]],
        field: Field | None = None,
        require_independent: bool = True,
        metadata: dict | None = None,
    ):
        if len(forms) != 3:
            raise ValueError(f"a net has three forms, got {len(forms)}")
        mats = [f if isinstance(f, Matrix) else Matrix(f, field) for f in forms]
        if field is None:
            field = mats[0].field
        mats = [Matrix(m.rows(), field, ncols=m.ncols) if m.field != field else m for m in mats]
        for i, m in enumerate(mats):
            if m.shape != (DIM, DIM):
                raise ValueError(f"form {i + 1} has shape {m.shape}, expected 7x7")
            if not m.is_skew():
                raise ValueError(f"form {i + 1} is not alternating")
        self.field = field
        self.forms = tuple(mats)
        self.metadata = dict(metadata or {})
        if require_independent and self.span_dimension() != 3:
            raise ValueError("the three forms are linearly dependent")

    def span_dimension(self) -> int:
        rows = [[m[i, j] for i in range(DIM) for j in range(i + 1, DIM)] for m in self.forms]
        return rank(Matrix(rows, self.field))

    def _coerce(self, a) -> tuple:
        a = tuple(self.field(x) for x in a)
        if len(a) != 3:
            raise ValueError("a parameter is a triple")
        return a

    def member(self, a) -> Matrix:
        a = self._coerce(a)
        out = Matrix.zeros(DIM, DIM, self.field)
        for c, m in zip(a, self.forms):
            if c:
                out = out + m.scale(c)
        return out

    def member_form(self, a) -> MultiVector:
        return MultiVector.from_skew_matrix(self.member(a))

    def reduce_mod(self, p: int) -> "SkewNet":
        if not self.field.is_rational:
            raise ValueError("only rational nets can be reduced")
        return SkewNet([m.reduce_mod(p) for m in self.forms], GF(p), require_independent=False)

    def change_basis(self, g: Matrix) -> "SkewNet":
        """Pull the forms back along ``g``: ``s_i -> g^T s_i g``."""
        return SkewNet([g.T @ m @ g for m in self.forms], self.field, require_independent=False)

    def __eq__(self, other):
        return isinstance(other, SkewNet) and self.field == other.field and self.forms == other.forms

    def __repr__(self):
        return f"SkewNet[{self.field}]"


def kappa(net: SkewNet, a) -> tuple:
    """Kernel generator of the member at ``a``; zero iff its rank is below 6."""
    a = net._coerce(a)
    if not any(a):
        raise ValueError("parameter must be nonzero")
    return vector_from_hyperform(divided_power(net.member_form(a), 3))


def _poly_pfaffian(rows, idx: tuple[int, ...], zero, one):
    if not idx:
        return one
    first = idx[0]
    total = zero
    for pos in range(1, len(idx)):
        entry = rows[first][idx[pos]]
        if entry.is_zero():
            continue
        rest = idx[1:pos] + idx[pos + 1 :]
        term = entry * _poly_pfaffian(rows, rest, zero, one)
        total = total + term if pos % 2 == 1 else total - term
    return total


def net_cubics(net: SkewNet) -> list[MultiPoly]:
    """The seven coordinates of :func:`kappa` as cubics in ``a_1, a_2, a_3``."""
    F = net.field
    a = [MultiPoly.variable(i, 3, F) for i in range(3)]
    zero = MultiPoly(3, {}, F)
    one = MultiPoly.constant(1, 3, F)
    rows = [[zero] * DIM for _ in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            entry = zero
            for var, m in zip(a, net.forms):
                if m[i, j]:
                    entry = entry + var * MultiPoly.constant(m[i, j], 3, F)
            rows[i][j] = entry
    cubics = []
    for i in range(DIM):
        rest = tuple(j for j in range(DIM) if j != i)
        pf = _poly_pfaffian(rows, rest, zero, one)
        cubics.append(pf if i % 2 == 0 else -pf)
    return cubics


def cubic_coefficient_rank(cubics: Sequence[MultiPoly]) -> int:
    """Rank of the ``7 x 10`` coefficient matrix of the kernel cubics."""
    F = cubics[0].field
    return rank(Matrix([c.coefficient_vector(3) for c in cubics], F, ncols=10))


@dataclass(frozen=True)
class NondegenerateOverClosure:
    degree: int
    field: str = "Q"

    status = "VERIFIED"


@dataclass(frozen=True)
class DegenerateWitness:
    point: tuple
    rank: int

    status = "FAILED"

    def __post_init__(self):
        if self.rank > 4:
            raise ValueError("a degeneracy witness has rank at most 4")


@dataclass(frozen=True)
class Undetermined:
    max_degree: int
    reason: str = ""

    status = "UNDETERMINED"


NondegeneracyCertificate = NondegenerateOverClosure | DegenerateWitness | Undetermined


def projective_points(F: Field, height: int = 2) -> Iterator[tuple]:
    """Points of ``P^2``: all of ``P^2(F_p)``, or primitive integer points up to ``height``.

    The coordinate points come first; every point is normalized so its first
    nonzero coordinate is 1 (positive over ``QQ``).
    """
    seen = set()
    for unit in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        seen.add(unit)
        yield tuple(F(x) for x in unit)
    if F.is_rational:
        for h in range(1, height + 1):
            for pt in product(range(-h, h + 1), repeat=3):
                if max(map(abs, pt)) != h or gcd(gcd(*pt[:2]), pt[2]) != 1:
                    continue
                lead = next(x for x in pt if x)
                if lead < 0 or pt in seen:
                    continue
                seen.add(pt)
                yield tuple(F(x) for x in pt)
        return
    p = F.characteristic
    for lead in range(3):
        for tail in product(range(p), repeat=2 - lead):
            pt = (0,) * lead + (1,) + tail
            if pt in seen:
                continue
            seen.add(pt)
            yield tuple(F(x) for x in pt)


def _degenerate_point(net: SkewNet, height: int, max_points: int) -> DegenerateWitness | None:
    F = net.field
    if not F.is_rational and F.characteristic**2 + F.characteristic + 1 > max_points:
        return None
    for pt in projective_points(F, height):
        r = rank(net.member(pt))
        if r < 6:
            return DegenerateWitness(tuple(_plain(x) for x in pt), r)
    return None


def _plain(x):
    if isinstance(x, Fp):
        return x.value
    x = Fraction(x)
    return int(x) if x.denominator == 1 else x


def is_nondegenerate_net(
    net: SkewNet,
    max_certificate_degree: int = 8,
    primes: Sequence[int] = DEFAULT_PRIMES,
    height: int = 2,
    max_points: int = 20000,
) -> NondegeneracyCertificate:
    """Decide whether every nonzero member of the net has rank 6.

    Prime-field nets are first scanned for a degenerate point (when
    ``P^2(F_p)`` has at most ``max_points`` points).  Rational nets first try
    the certificate modulo each prime, then the bounded-height point search,
    then the certificate over ``QQ``.
    """
    cubics = net_cubics(net)
    if not net.field.is_rational:
        witness = _degenerate_point(net, height, max_points)
        if witness is not None:
            return witness
        d = certificate_degree(cubics, max_certificate_degree, min_degree=3)
        if d is not None:
            return NondegenerateOverClosure(d, str(net.field))
    else:
        for p in primes:
            try:
                reduced = [c.reduce_mod(p) for c in cubics]
            except ZeroDivisionError:
                continue
            d = certificate_degree(reduced, max_certificate_degree, min_degree=3)
            if d is not None:
                return NondegenerateOverClosure(d, f"GF({p})")
        witness = _degenerate_point(net, height, max_points)
        if witness is not None:
            return witness
        d = certificate_degree(cubics, max_certificate_degree, min_degree=3)
        if d is not None:
            return NondegenerateOverClosure(d, "Q")
    reason = "no rational degeneracy point found and no certificate up to the degree bound"
    if max_certificate_degree >= 7:
        # seven cubics in three variables without a common zero generate everything from degree 7 on
        reason = "the kernel cubics have a common zero over the algebraic closure"
    return Undetermined(max_certificate_degree, reason)


def _bilinear(m: Matrix, u: Sequence, w: Sequence):
    F = m.field
    total = F.zero
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = m.row(i)
        for j, wj in enumerate(w):
            if wj and row[j]:
                total = total + ui * row[j] * wj
    return total


def _complement(vectors: Sequence[Sequence], F: Field, n: int) -> list[tuple]:
    """Standard basis vectors completing ``vectors`` to a basis."""
    chosen = [tuple(F(x) for x in v) for v in vectors]
    out = []
    r = rank(Matrix(chosen, F, ncols=n)) if chosen else 0
    for i in range(n):
        e = tuple(F.one if j == i else F.zero for j in range(n))
        if rank(Matrix(chosen + [e], F, ncols=n)) > r:
            chosen.append(e)
            out.append(e)
            r += 1
    return out


# Plucker quadric of Gr(2,4) on coordinates ordered 12, 13, 14, 23, 24, 34
_PAIRS4 = list(combinations(range(4), 2))
_PLUCKER_POLAR = {(0, 5): 1, (5, 0): 1, (1, 4): -1, (4, 1): -1, (2, 3): 1, (3, 2): 1}


def conic_at(net: SkewNet, a) -> int:
    """Rank of the conic of isotropic 3-spaces through the kernel of the member at ``a``.

    Returns the rank (0..3) of the ternary quadratic form obtained by
    restricting the Plucker quadric of ``Gr(2, V_5 / k v)`` to the annihilator
    of the induced net; rank 3 is a smooth conic.
    """
    F = net.field
    if F.characteristic == 2:
        raise ValueError("conic rank via the polar form is undefined in characteristic 2")
    v = kappa(net, a)
    if not any(v):
        raise ValueError(f"member at {tuple(a)} is degenerate")
    pairing = Matrix([m.apply(v) for m in net.forms], F)
    v5 = kernel_basis(pairing)
    if len(v5) != 5:
        raise ValueError(f"orthogonal complement of the kernel has dimension {len(v5)}, expected 5")
    # basis of V_5 / k v: a complement of v inside V_5
    w = []
    span = [v]
    for b in v5:
        if rank(Matrix(span + [b], F)) > len(span):
            span.append(b)
            w.append(b)
        if len(w) == 4:
            break
    induced = [[_bilinear(m, w[i], w[j]) for i, j in _PAIRS4] for m in net.forms]
    ann = kernel_basis(Matrix(induced, F, ncols=6))
    if len(ann) != 3:
        raise ValueError(f"annihilator of the induced net has dimension {len(ann)}, expected 3")
    gram = [
        [sum((F(c) * x[i] * y[j] for (i, j), c in _PLUCKER_POLAR.items()), F.zero) for y in ann] for x in ann
    ]
    return rank(Matrix(gram, F))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of ``k``-dimensional subspaces of ``F_q^n``."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def isotropic_scan(net: SkewNet, k: int, max_q: int = 5, stats: dict | None = None) -> list[Subspace]:
    """All ``k``-subspaces of ``F_q^7`` isotropic for every form of the net.

    Subspaces are enumerated by reduced row echelon form (pivot columns, then
    free entries row by row), pruning as soon as a new row fails to be
    orthogonal to itself or to an earlier row.  The result is in lexicographic
    order of pivot sets and entries.
    """
    F = net.field
    if F.is_rational:
        raise ValueError("isotropic scans need a prime field")
    q = F.characteristic
    if q > max_q:
        raise ValueError(f"q={q} exceeds the scan limit {max_q}")
    if not 1 <= k <= DIM:
        raise ValueError("subspace dimension out of range")
    forms = [[[x.value for x in r] for r in m.rows()] for m in net.forms]

    def pair(m, u, w):
        return sum(u[i] * m[i][j] * w[j] for i in range(DIM) if u[i] for j in range(DIM) if w[j]) % q

    found: list[Subspace] = []
    visited = 0

    for pivots in combinations(range(DIM), k):
        pivot_set = set(pivots)

        def extend(rows: list[list[int]]):
            nonlocal visited
            j = len(rows)
            if j == k:
                visited += 1
                found.append(Subspace(Matrix(rows, F)))
                return
            pc = pivots[j]
            free = [c for c in range(pc + 1, DIM) if c not in pivot_set]
            for vals in product(range(q), repeat=len(free)):
                row = [0] * DIM
                row[pc] = 1
                for c, x in zip(free, vals):
                    row[c] = x
                if all(pair(m, prev, row) == 0 for prev in rows for m in forms):
                    extend(rows + [row])

        extend([])
    if stats is not None:
        stats["found"] = len(found)
        stats["total"] = gaussian_binomial(DIM, k, q)
    return found


def _is_isotropic(net: SkewNet, basis: Sequence[Sequence]) -> bool:
    return all(not _bilinear(m, u, w) for m in net.forms for u, w in combinations(basis, 2))


@dataclass(frozen=True)
class ConicCover:
    """Existence of a member whose kernel lies in a given isotropic 3-space."""

    exists: bool
    degree: int
    witness: tuple | None = None

    def __bool__(self):
        return self.exists


def covering_conic_exists(net: SkewNet, u3: Subspace, max_degree: int = 8) -> ConicCover:
    """Certify that the ``4 x 3`` pencil ``a -> (s_a(w, u))`` drops rank somewhere.

    ``w`` runs over a complement of ``u3`` and ``u`` over ``u3``.  A common
    zero of the four maximal minors over the algebraic closure exists exactly
    when the minors fail to generate the degree-``max_degree`` forms (for
    ``max_degree >= 7``).  A base-field parameter with rank at most 2 is
    reported as a witness when one turns up among the small points.
    """
    F = net.field
    basis = [tuple(F(x) for x in v) for v in u3.vectors()]
    if len(basis) != 3:
        raise ValueError("expected a 3-dimensional subspace")
    if not _is_isotropic(net, basis):
        raise ValueError("subspace is not totally isotropic")
    comp = _complement(basis, F, DIM)
    avars = [MultiPoly.variable(i, 3, F) for i in range(3)]
    zero = MultiPoly(3, {}, F)
    pencil = []
    for w in comp:
        row = []
        for u in basis:
            entry = zero
            for var, m in zip(avars, net.forms):
                c = _bilinear(m, w, u)
                if c:
                    entry = entry + var * MultiPoly.constant(c, 3, F)
            row.append(entry)
        pencil.append(row)
    minors = [_det3([pencil[i] for i in rows]) for rows in combinations(range(4), 3)]
    nonzero = [m for m in minors if not m.is_zero()]
    exists = True
    if nonzero:
        gm = graded_multiplication_map(nonzero, max_degree)
        exists = rank(gm) < gm.nrows
    witness = None
    if exists and (F.is_rational or F.characteristic <= 101):
        for pt in projective_points(F, 2):
            if all(not m(*pt) for m in minors):
                witness = tuple(_plain(x) for x in pt)
                break
    return ConicCover(exists, max_degree, witness)


def _det3(r):
    return (
        r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
        - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
        + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
    )


def constant_rank_check(net: SkewNet, samples: Sequence) -> bool:
    """Whether every sampled member has rank 6."""
    return all(rank(net.member(a)) == 6 for a in samples)


# ---------------------------------------------------------------------------
# file format


def _encode(x, F: Field):
    if F.is_rational:
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x.value


def net_to_json(net: SkewNet) -> dict:
    doc = {
        "field": "Q" if net.field.is_rational else {"p": net.field.characteristic},
        "forms": [[[_encode(x, net.field) for x in row] for row in m.rows()] for m in net.forms],
    }
    if net.metadata:
        doc["metadata"] = net.metadata
    return doc


def _parse_field(desc) -> Field:
    if desc in ("Q", "QQ"):
        return QQ
    if isinstance(desc, dict) and set(desc) == {"p"}:
        return GF(int(desc["p"]))
    raise ValueError(f"unrecognized field descriptor {desc!r}")


def _parse_entry(x, F: Field):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValueError(f"entries must be integers or 'num/den' strings, got {x!r}")
    if isinstance(x, str):
        x = Fraction(x.strip())
    return F(x)


def net_from_json(doc: dict) -> SkewNet:
    if not isinstance(doc, dict) or "field" not in doc or "forms" not in doc:
        raise ValueError("net document needs 'field' and 'forms'")
    F = _parse_field(doc["field"])
    forms = doc["forms"]
    if not isinstance(forms, list) or len(forms) != 3:
        raise ValueError("'forms' must be a list of three 7x7 arrays")
    mats = []
    for f in forms:
        if not isinstance(f, list) or len(f) != DIM or any(not isinstance(r, list) or len(r) != DIM for r in f):
            raise ValueError("each form must be a 7x7 array")
        mats.append(Matrix([[_parse_entry(x, F) for x in r] for r in f], F))
    return SkewNet(mats, F, metadata=doc.get("metadata"))


def load_net(path: str | Path) -> SkewNet:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return net_from_json(doc)


def dump_net(net: SkewNet, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(net_to_json(net), fh, indent=1)
        fh.write("\n")
