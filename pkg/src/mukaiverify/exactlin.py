"""Exact scalars, dense matrices and multivariate polynomials.

Two kinds of base field are supported: the rationals (elements are
:class:`fractions.Fraction`) and prime fields ``GF(p)`` (elements are
:class:`Fp`).  Plain Python ints are accepted everywhere and coerced into
whichever field the surrounding data lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "FieldMismatchError",
    "Field",
    "QQ",
    "GF",
    "Fp",
    "Matrix",
    "rank",
    "kernel_basis",
    "MultiPoly",
    "monomials",
    "graded_multiplication_map",
    "certificate_degree",
]

MAX_PRIME = 2**61


class FieldMismatchError(ValueError):
    """Raised when scalars from different fields are combined."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin for p < 3.3e24
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """A base field: ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
            if p >= MAX_PRIME:
                raise ValueError("prime fields are limited to p < 2**61")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, x):
        """Coerce ``x`` into this field."""
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fp):
                raise FieldMismatchError(f"cannot use a GF({x.p}) element over QQ")
            if isinstance(x, str):
                return Fraction(x.strip())
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != p:
                raise FieldMismatchError(f"GF({x.p}) element used over GF({p})")
            return x
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no reduction modulo {p}")
            return Fp(x.numerator * pow(x.denominator, -1, p), p)
        if isinstance(x, str):
            return self(Fraction(x.strip()))
        return Fp(int(x), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __repr__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


class Fp:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("Fp elements are immutable")

    def _other(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) and GF({other.p}) mixed")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError("cannot mix rationals with GF(p) elements")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Fp(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


def field_of(values: Iterable) -> Field:
    """Infer the common field of a collection of scalars (ints are neutral)."""
    found: Field | None = None
    for x in values:
        if isinstance(x, Fp):
            f = Field(x.p)
        elif isinstance(x, (int, Fraction)):
            if isinstance(x, Fraction) and x.denominator == 1:
                continue
            if isinstance(x, int):
                continue
            f = QQ
        else:
            raise TypeError(f"unsupported scalar {x!r}")
        if found is None:
            found = f
        elif found != f:
            raise FieldMismatchError(f"entries from {found} and {f} mixed")
    return found if found is not None else QQ


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row; row scaling preserves rank and kernel."""
    out = []
    for row in rows:
        den = reduce(_lcm, (x.denominator for x in row), 1)
        out.append([int(x * den) for x in row])
    return out


def _bareiss_rank(a: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Bareiss elimination."""
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, n):
                ai[j] = (p * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r


def _rref_mod(a: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    a = [[x % p for x in row] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _rref_rational(a: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [row[:] for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


class Matrix:
    """Immutable dense matrix over ``QQ`` or ``GF(p)``.

    Entries are stored as ``Fraction`` (rationals) or ``Fp`` (prime field).
    """

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, rows: Sequence[Sequence], field: Field | None = None, ncols: int | None = None):
        rows = [list(r) for r in rows]
        if field is None:
            field = field_of(x for r in rows for x in r)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = ncols or 0
        self.field = field
        self.nrows = len(rows)
        self.ncols = width
        self._rows = tuple(tuple(field(x) for x in r) for r in rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = QQ) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], field, ncols=ncols)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field, ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field | None = None, nrows: int | None = None) -> "Matrix":
        if not columns:
            return cls([[] for _ in range(nrows or 0)], field or QQ, ncols=0)
        return cls([list(r) for r in zip(*columns)], field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def rows(self) -> tuple[tuple, ...]:
        return self._rows

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix([list(c) for c in zip(*self._rows)], self.field, ncols=self.nrows)

    T = property(transpose)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} @ {other.field}")
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.transpose()._rows
        zero = self.field.zero
        out = [[sum((a * b for a, b in zip(r, c)), zero) for c in cols] for r in self._rows]
        return Matrix(out, self.field, ncols=other.ncols)

    def apply(self, vec: Sequence) -> tuple:
        zero = self.field.zero
        v = [self.field(x) for x in vec]
        return tuple(sum((a * b for a, b in zip(r, v)), zero) for r in self._rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} + {other.field}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.field, ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix([[c * a for a in r] for r in self._rows], self.field, ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.field, self.shape, self._rows))

    def is_zero(self) -> bool:
        return all(not x for r in self._rows for x in r)

    def is_skew(self) -> bool:
        if self.nrows != self.ncols:
            return False
        n = self.nrows
        # alternating, so that the diagonal is forced to vanish in characteristic 2 as well
        if any(self._rows[i][i] for i in range(n)):
            return False
        return all(self._rows[i][j] == -self._rows[j][i] for i in range(n) for j in range(i + 1, n))

    def reduce_mod(self, p: int) -> "Matrix":
        if not self.field.is_rational:
            raise ValueError("only rational matrices can be reduced")
        F = GF(p)
        return Matrix(self._rows, F, ncols=self.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self._rows[i][j] for j in cols] for i in rows], self.field, ncols=len(cols))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"Matrix[{self.field}]({body})"


def _check_matrix(m: Matrix):
    if not isinstance(m, Matrix):
        raise TypeError("expected a Matrix")


def rank(m: Matrix) -> int:
    """Row rank of ``m`` over its field."""
    _check_matrix(m)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    if m.field.is_rational:
        return _bareiss_rank(_integer_rows(m.rows()))
    rows = [[x.value for x in r] for r in m.rows()]
    return len(_rref_mod(rows, m.field.characteristic)[1])


def kernel_basis(m: Matrix) -> list[tuple]:
    """Exact basis of the right kernel ``{x : m x = 0}``.

    Over the rationals each vector is a primitive integer vector (stored as
    Fractions) with positive leading entry; over GF(p) the leading entry is 1.
    """
    _check_matrix(m)
    n = m.ncols
    F = m.field
    if m.nrows == 0:
        rref, pivots = [], []
    elif F.is_rational:
        rref, pivots = _rref_rational([[Fraction(x) for x in r] for r in _integer_rows(m.rows())])
    else:
        rref, pivots = _rref_mod([[x.value for x in r] for r in m.rows()], F.characteristic)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for row, pc in zip(rref, pivots):
            vec[pc] = -row[f]
        if F.is_rational:
            den = reduce(_lcm, (Fraction(x).denominator for x in vec), 1)
            ints = [int(Fraction(x) * den) for x in vec]
            g = reduce(gcd, ints, 0)
            lead = next(x for x in ints if x)
            sgn = 1 if lead > 0 else -1
            basis.append(tuple(Fraction(sgn * x // g) for x in ints))
        else:
            p = F.characteristic
            lead = next(x for x in vec if x % p)
            inv = pow(lead, -1, p)
            basis.append(tuple(Fp(x * inv, p) for x in vec))
    return basis


# ---------------------------------------------------------------------------
# multivariate polynomials


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total degree ``degree`` in graded-lex order (descending)."""
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with exact coefficients."""

    __slots__ = ("nvars", "field", "terms")

    def __init__(self, nvars: int, terms: dict | None = None, field: Field = QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e}")
            c = field(c)
            if c:
                clean[e] = clean.get(e, field.zero) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def variable(cls, i: int, nvars: int, field: Field = QQ) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, field)

    @classmethod
    def constant(cls, c, nvars: int, field: Field = QQ) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c}, field)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        return MultiPoly.constant(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, self.field.zero) + c
        return MultiPoly(self.nvars, terms, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        terms: dict = {}
        zero = self.field.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, zero) + c1 * c2
        return MultiPoly(self.nvars, terms, self.field)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(1, self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.field == other.field and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.field, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exponent: Sequence[int]):
        return self.terms.get(tuple(exponent), self.field.zero)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        point = [self.field(x) for x in point]
        total = self.field.zero
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def reduce_mod(self, p: int) -> "MultiPoly":
        if not self.field.is_rational:
            raise ValueError("only rational polynomials can be reduced")
        return MultiPoly(self.nvars, self.terms, GF(p))

    def coefficient_vector(self, degree: int) -> list:
        return [self.coefficient(e) for e in monomials(self.nvars, degree)]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            mono = "*".join(f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"({self.terms[e]})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def graded_multiplication_map(generators: Sequence[MultiPoly], target_degree: int) -> Matrix:
    """Matrix of ``(q_1, ..., q_m) -> sum q_i g_i`` from ``S_{D-d}^m`` to ``S_D``.

    Rows are the degree-``D`` monomials, columns run over generators (outer)
    and degree-``D-d`` monomials (inner), both in graded-lex order.  The map is
    surjective exactly when the generators span the whole degree-``D`` piece of
    the ideal they generate.
    """
    if not generators:
        raise ValueError("need at least one generator")
    nvars = generators[0].nvars
    field = generators[0].field
    degrees = set()
    for g in generators:
        if g.nvars != nvars:
            raise ValueError("variable count mismatch")
        if g.field != field:
            raise FieldMismatchError("generators over different fields")
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        if not g.is_zero():
            degrees.add(g.degree())
    if len(degrees) > 1:
        raise ValueError("generators must share one degree")
    d = degrees.pop() if degrees else 0
    if d > target_degree:
        raise ValueError("target degree below generator degree")
    rows = monomials(nvars, target_degree)
    index = {e: i for i, e in enumerate(rows)}
    cols = []
    zero = field.zero
    for g in generators:
        for m in monomials(nvars, target_degree - d):
            col = [zero] * len(rows)
            for e, c in g.terms.items():
                col[index[tuple(a + b for a, b in zip(e, m))]] = c
            cols.append(col)
    return Matrix.from_columns(cols, field, nrows=len(rows))


def certificate_degree(generators: Sequence[MultiPoly], max_degree: int, min_degree: int | None = None) -> int | None:
    """Smallest ``D <= max_degree`` at which the multiplication map is onto."""
    nonzero = [g for g in generators if not g.is_zero()]
    if not nonzero:
        return None
    d = nonzero[0].degree()
    start = d if min_degree is None else max(d, min_degree)
    for D in range(start, max_degree + 1):
        m = graded_multiplication_map(nonzero, D)
        if rank(m) == m.nrows:
            return D
    return None

