"""Exterior algebra of a based vector space.

A :class:`MultiVector` of degree ``k`` on an ``n``-dimensional space stores
its coordinates on the basis ``e_I = e_{i_1} ^ ... ^ e_{i_k}`` (``i_1 < ... <
i_k``).  Index sets are bitmasks over ``{0, ..., n-1}``; public helpers take
and return 1-based index tuples.

The same class is used for forms on ``V`` and on ``V^*``; contraction pairs a
vector with the first slot using the standard dual basis.

Volume convention: the ``(n-1)``-form ``omega`` is identified with the vector
``v`` satisfying ``contract(v, vol) == omega`` where ``vol = e_1 ^ ... ^ e_n``.
Explicitly ``v_i = (-1)**(i-1) * omega[{1..n} minus {i}]``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .exactlin import QQ, Field, FieldMismatchError, Matrix, field_of, rank

__all__ = [
    "MultiVector",
    "Subspace",
    "wedge",
    "contract",
    "two_form_rank",
    "is_decomposable",
    "orbit_dimension",
    "three_form_orbit_dim",
    "plucker",
    "pfaffian",
    "divided_power",
    "vector_from_hyperform",
    "hyperform_from_vector",
    "subsets",
]


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << (i - 1)
    return m


def _indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _wedge_sign(a: int, b: int) -> int:
    """Sign of sorting ``e_A ^ e_B`` into increasing order (A, B disjoint)."""
    inversions = 0
    while b:
        low = b & -b
        # elements of A above this element of B must hop over it
        inversions += bin(a & ~((low << 1) - 1)).count("1")
        b ^= low
    return -1 if inversions & 1 else 1


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """All 1-based ``k``-subsets of ``{1..n}`` in lexicographic order."""
    return list(combinations(range(1, n + 1), k))


class MultiVector:
    """Element of ``Lambda^k`` of an ``n``-dimensional space."""

    __slots__ = ("n", "k", "field", "coords")

    def __init__(self, n: int, k: int, coords: dict | None = None, field: Field | None = None):
        if not 0 <= k <= n:
            raise ValueError(f"degree {k} out of range for dimension {n}")
        coords = coords or {}
        if field is None:
            field = field_of(coords.values())
        clean = {}
        for key, c in coords.items():
            mask = key if isinstance(key, int) else _mask(key)
            if not isinstance(key, int):
                idx = tuple(key)
                if list(idx) != sorted(set(idx)):
                    raise ValueError(f"index set {idx} is not strictly increasing")
            if bin(mask).count("1") != k or mask >> n:
                raise ValueError(f"index set {_indices(mask)} invalid for degree {k}, dimension {n}")
            c = field(c)
            if c:
                clean[mask] = c
        self.n = n
        self.k = k
        self.field = field
        self.coords = clean

    # construction helpers
    @classmethod
    def basis(cls, n: int, indices: Sequence[int], field: Field = QQ) -> "MultiVector":
        """``e_{i_1} ^ ... ^ e_{i_k}`` for 1-based, not necessarily sorted indices."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            return cls(n, len(idx), {}, field)
        sign = 1
        for i in range(len(idx)):
            for j in range(i + 1, len(idx)):
                if idx[i] > idx[j]:
                    sign = -sign
        return cls(n, len(idx), {_mask(idx): sign}, field)

    @classmethod
    def vector(cls, values: Sequence, field: Field | None = None) -> "MultiVector":
        n = len(values)
        return cls(n, 1, {1 << i: x for i, x in enumerate(values)}, field or field_of(values))

    @classmethod
    def from_list(cls, n: int, k: int, values: Sequence, field: Field | None = None) -> "MultiVector":
        """Coordinates listed in lexicographic order of ``k``-subsets."""
        subs = subsets(n, k)
        if len(values) != len(subs):
            raise ValueError(f"expected {len(subs)} coordinates, got {len(values)}")
        return cls(n, k, {_mask(s): v for s, v in zip(subs, values)}, field or field_of(values))

    @classmethod
    def from_skew_matrix(cls, m: Matrix) -> "MultiVector":
        if not m.is_skew():
            raise ValueError("matrix is not skew-symmetric")
        n = m.nrows
        return cls(n, 2, {(1 << i) | (1 << j): m[i, j] for i in range(n) for j in range(i + 1, n)}, m.field)

    def skew_matrix(self) -> Matrix:
        if self.k != 2:
            raise ValueError("skew matrix only defined for 2-forms")
        F = self.field
        rows = [[F.zero] * self.n for _ in range(self.n)]
        for mask, c in self.coords.items():
            i, j = (x - 1 for x in _indices(mask))
            rows[i][j] = c
            rows[j][i] = -c
        return Matrix(rows, F, ncols=self.n)

    def to_list(self) -> list:
        return [self[s] for s in subsets(self.n, self.k)]

    def __getitem__(self, indices: Sequence[int]):
        return self.coords.get(_mask(indices), self.field.zero)

    def items(self):
        """``(index tuple, coefficient)`` pairs, lexicographic."""
        return sorted(((_indices(m), c) for m, c in self.coords.items()))

    # arithmetic
    def _compatible(self, other: "MultiVector"):
        if self.n != other.n:
            raise ValueError(f"ambient dimensions {self.n} and {other.n} differ")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._compatible(other)
        if self.k != other.k:
            raise ValueError("cannot add forms of different degree")
        coords = dict(self.coords)
        for m, c in other.coords.items():
            coords[m] = coords.get(m, self.field.zero) + c
        return MultiVector(self.n, self.k, coords, self.field)

    def __neg__(self) -> "MultiVector":
        return MultiVector(self.n, self.k, {m: -c for m, c in self.coords.items()}, self.field)

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + (-other)

    def __mul__(self, scalar) -> "MultiVector":
        c = self.field(scalar)
        return MultiVector(self.n, self.k, {m: c * x for m, x in self.coords.items()}, self.field)

    __rmul__ = __mul__

    def __xor__(self, other: "MultiVector") -> "MultiVector":
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, MultiVector):
            return NotImplemented
        return (self.n, self.k, self.field, self.coords) == (other.n, other.k, other.field, other.coords)

    def __hash__(self):
        return hash((self.n, self.k, self.field, frozenset(self.coords.items())))

    def is_zero(self) -> bool:
        return not self.coords

    def reduce_mod(self, p: int) -> "MultiVector":
        from .exactlin import GF

        return MultiVector(self.n, self.k, self.coords, GF(p))

    def change_basis(self, g: Matrix) -> "MultiVector":
        """Image under the linear map sending ``e_j`` to column ``j`` of ``g``."""
        if g.shape != (self.n, self.n):
            raise ValueError("basis change must be n x n")
        cols = [MultiVector.vector(list(g.column(j)), self.field) for j in range(self.n)]
        out = MultiVector(self.n, self.k, {}, self.field)
        for mask, c in self.coords.items():
            term = MultiVector(self.n, 0, {0: c}, self.field)
            for i in _indices(mask):
                term = wedge(term, cols[i - 1])
            out = out + term
        return out

    def __repr__(self):
        if not self.coords:
            return f"MultiVector(n={self.n}, k={self.k}, 0)"
        body = " + ".join(f"{c}*e{''.join(map(str, idx))}" for idx, c in self.items())
        return f"MultiVector(n={self.n}, k={self.k}, {body})"


def wedge(a: MultiVector, b: MultiVector) -> MultiVector:
    """Exterior product ``a ^ b``."""
    a._compatible(b)
    if a.k + b.k > a.n:
        raise ValueError(f"degree {a.k + b.k} exceeds ambient dimension {a.n}")
    zero = a.field.zero
    coords: dict[int, object] = {}
    for ma, ca in a.coords.items():
        for mb, cb in b.coords.items():
            if ma & mb:
                continue
            m = ma | mb
            term = ca * cb
            coords[m] = coords.get(m, zero) + (term if _wedge_sign(ma, mb) > 0 else -term)
    return MultiVector(a.n, a.k + b.k, coords, a.field)


def _as_vector(v, n: int, field: Field) -> list:
    if isinstance(v, MultiVector):
        if v.k != 1:
            raise ValueError("expected a vector")
        return [v[(i,)] for i in range(1, v.n + 1)]
    vals = list(v)
    if len(vals) != n:
        raise ValueError(f"vector of length {len(vals)} in dimension {n}")
    return [field(x) for x in vals]


def contract(v, omega: MultiVector) -> MultiVector:
    """Interior product ``i_v omega`` (``v`` fills the first slot)."""
    if omega.k == 0:
        raise ValueError("cannot contract a scalar")
    vec = _as_vector(v, omega.n, omega.field)
    zero = omega.field.zero
    coords: dict[int, object] = {}
    for mask, c in omega.coords.items():
        pos = 0
        rest = mask
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            if vec[i]:
                m = mask ^ low
                term = vec[i] * c
                coords[m] = coords.get(m, zero) + (term if pos % 2 == 0 else -term)
            pos += 1
            rest ^= low
    return MultiVector(omega.n, omega.k - 1, coords, omega.field)


def contraction_matrix(omega: MultiVector) -> Matrix:
    """Matrix of ``v -> contract(v, omega)`` (columns indexed by basis vectors)."""
    F = omega.field
    cols = []
    for i in range(omega.n):
        unit = [F.zero] * omega.n
        unit[i] = F.one
        cols.append(contract(unit, omega).to_list())
    return Matrix.from_columns(cols, F)


def two_form_rank(sigma: MultiVector) -> int:
    """Rank of the skew matrix of a 2-form."""
    return rank(sigma.skew_matrix())


def is_decomposable(omega: MultiVector) -> bool:
    """Whether ``omega`` is a product of ``k`` vectors.

    Decided by the rank of ``v -> contract(v, omega)``, which equals ``k``
    exactly for nonzero decomposable forms.
    """
    if omega.is_zero():
        raise ValueError("zero form")
    if omega.k <= 1:
        return True
    return rank(contraction_matrix(omega)) == omega.k


def orbit_dimension(omega: MultiVector) -> int:
    """Dimension of the ``GL_n``-orbit of ``omega``.

    The tangent space is spanned by the images of the elementary matrices
    ``E_ab`` acting as derivations ``e_a ^ contract(e_b, -)``.
    """
    n = omega.n
    F = omega.field
    cols = []
    for a in range(1, n + 1):
        ea = MultiVector.basis(n, [a], F)
        for b in range(1, n + 1):
            unit = [F.zero] * n
            unit[b - 1] = F.one
            cols.append(wedge(ea, contract(unit, omega)).to_list())
    return rank(Matrix.from_columns(cols, F))


def three_form_orbit_dim(sigma: MultiVector) -> int:
    """Orbit dimension of a 3-form on a 7-dimensional space (35 on the open orbit)."""
    if sigma.n != 7 or sigma.k != 3:
        raise ValueError("expected a 3-form in dimension 7")
    return orbit_dimension(sigma)


class Subspace:
    """Row span of a full-rank ``r x n`` matrix."""

    __slots__ = ("basis",)

    def __init__(self, basis: Matrix | Sequence[Sequence]):
        if not isinstance(basis, Matrix):
            basis = Matrix(basis)
        if rank(basis) != basis.nrows:
            raise ValueError("basis rows are linearly dependent")
        self.basis = basis

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def ambient(self) -> int:
        return self.basis.ncols

    @property
    def field(self) -> Field:
        return self.basis.field

    def vectors(self) -> list[tuple]:
        return list(self.basis.rows())

    def __repr__(self):
        return f"Subspace({self.dim} in {self.ambient}: {self.basis!r})"


def plucker(U: Subspace) -> MultiVector:
    """Plucker coordinates: the wedge of the basis rows."""
    F = U.field
    out = MultiVector(U.ambient, 0, {0: 1}, F)
    for row in U.vectors():
        out = wedge(out, MultiVector.vector(list(row), F))
    return out


def pfaffian(m: Matrix):
    """Pfaffian of a skew-symmetric matrix (expansion along the first row)."""
    if not m.is_skew():
        raise ValueError("matrix is not skew-symmetric")
    rows = [list(r) for r in m.rows()]
    return _pfaffian(rows, tuple(range(m.nrows)), m.field)


def _pfaffian(rows, idx: tuple[int, ...], F: Field):
    if not idx:
        return F.one
    if len(idx) % 2:
        return F.zero
    first = idx[0]
    total = F.zero
    for pos in range(1, len(idx)):
        a = rows[first][idx[pos]]
        if not a:
            continue
        rest = idx[1:pos] + idx[pos + 1 :]
        term = a * _pfaffian(rows, rest, F)
        total = total + term if pos % 2 == 1 else total - term
    return total


def divided_power(sigma: MultiVector, m: int) -> MultiVector:
    """``sigma^[m] = sigma^m / m!`` for a 2-form, defined in every characteristic.

    The coefficient on a ``2m``-subset ``I`` is the Pfaffian of the principal
    submatrix on ``I``.
    """
    if sigma.k != 2:
        raise ValueError("divided powers are taken of 2-forms")
    if 2 * m > sigma.n:
        raise ValueError("degree exceeds ambient dimension")
    F = sigma.field
    rows = [list(r) for r in sigma.skew_matrix().rows()]
    coords = {}
    for s in subsets(sigma.n, 2 * m):
        coords[_mask(s)] = _pfaffian(rows, tuple(i - 1 for i in s), F)
    return MultiVector(sigma.n, 2 * m, coords, F)


def vector_from_hyperform(omega: MultiVector) -> tuple:
    """Vector ``v`` with ``contract(v, vol) == omega`` for an ``(n-1)``-form."""
    n = omega.n
    if omega.k != n - 1:
        raise ValueError("expected an (n-1)-form")
    full = (1 << n) - 1
    return tuple(
        omega.coords.get(full ^ (1 << (i - 1)), omega.field.zero) * (1 if i % 2 == 1 else -1) for i in range(1, n + 1)
    )


def hyperform_from_vector(v: Sequence, field: Field | None = None) -> MultiVector:
    """Inverse of :func:`vector_from_hyperform`."""
    field = field or field_of(v)
    n = len(v)
    vol = MultiVector(n, n, {(1 << n) - 1: 1}, field)
    return contract(list(v), vol)

