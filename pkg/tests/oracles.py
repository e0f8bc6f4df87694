"""Independent reference computations for the test suite.

Nothing here imports the algorithms under test: determinants use the
Leibniz expansion, Schur classes come from semistandard tableaux, tableau
counts from corner removal, subspace counts from ordered bases, and so on.
Slow but small.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import floor, prod


# ---------------------------------------------------------------------------
# linear algebra


def perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def det_leibniz(m):
    n = len(m)
    return sum(perm_sign(p) * prod(m[i][p[i]] for i in range(n)) for p in permutations(range(n)))


def rank_by_minors(m) -> int:
    """Largest size of a nonzero minor (rationals only; tiny matrices)."""
    rows, cols = len(m), len(m[0]) if m else 0
    for r in range(min(rows, cols), 0, -1):
        for ri in combinations(range(rows), r):
            for ci in combinations(range(cols), r):
                if det_leibniz([[Fraction(m[i][j]) for j in ci] for i in ri]) != 0:
                    return r
    return 0


def rank_mod_p(m, p: int) -> int:
    a = [[x % p for x in row] for row in m]
    r = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# exterior algebra as alternating tensors


def alt_tensor(n: int, coords: dict) -> dict:
    """Full antisymmetric tensor {index tuple: value} of a form given on sorted index sets."""
    out = {}
    for idx, c in coords.items():
        for p in permutations(range(len(idx))):
            out[tuple(idx[i] for i in p)] = perm_sign(p) * c
    return out


def wedge_oracle(n: int, a: dict, ka: int, b: dict, kb: int) -> dict:
    """Wedge of sorted-coordinate forms via the shuffle-free alternation formula."""
    ta, tb = alt_tensor(n, a), alt_tensor(n, b)
    out = {}
    for idx in combinations(range(1, n + 1), ka + kb):
        total = Fraction(0)
        for p in permutations(range(ka + kb)):
            seq = tuple(idx[i] for i in p)
            x = ta.get(seq[:ka], 0)
            if x:
                total += perm_sign(p) * x * tb.get(seq[ka:], 0)
        total /= prod(range(1, ka + 1)) * prod(range(1, kb + 1))
        if total:
            out[idx] = total
    return out


# ---------------------------------------------------------------------------
# partitions, tableaux, Schur polynomials


def partitions_of(m: int, max_part: int | None = None):
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions_of(m - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def syt_brute(lam: tuple) -> int:
    """Standard tableaux by removing the cell holding the largest entry."""
    if sum(lam) == 0:
        return 1
    total = 0
    for i, part in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if part > below:
            smaller = list(lam)
            smaller[i] -= 1
            total += syt_brute(tuple(x for x in smaller if x))
    return total


def ssyt(lam: tuple, nvars: int):
    """All semistandard fillings of ``lam`` with entries 0..nvars-1 (row-major tuples)."""
    cells = [(i, j) for i, part in enumerate(lam) for j in range(part)]
    filling = {}

    def rec(pos):
        if pos == len(cells):
            yield dict(filling)
            return
        i, j = cells[pos]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, nvars):
            filling[(i, j)] = v
            yield from rec(pos + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_poly(lam: tuple, nvars: int) -> dict:
    """Schur polynomial as {exponent tuple: coefficient}."""
    out: dict = {}
    for t in ssyt(lam, nvars):
        e = [0] * nvars
        for v in t.values():
            e[v] += 1
        e = tuple(e)
        out[e] = out.get(e, 0) + 1
    return out


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def schur_expand(poly: dict, nvars: int) -> dict:
    """Expand a symmetric polynomial in Schur polynomials by peeling leading terms."""
    poly = dict(poly)
    out = {}
    while poly:
        lead = max(e for e in poly if list(e) == sorted(e, reverse=True))
        c = poly[lead]
        lam = tuple(x for x in lead if x)
        out[lam] = c
        for e, v in schur_poly(lam, nvars).items():
            poly[e] = poly.get(e, 0) - c * v
            if not poly[e]:
                del poly[e]
    return out


def schubert_product_oracle(lam: tuple, mu: tuple, k: int, n: int) -> dict:
    """Product in ``H^*(Gr(k, n))`` via Schur polynomials in ``k`` variables, truncated to the box."""
    prodpoly = poly_mul(schur_poly(lam, k), schur_poly(mu, k))
    full = schur_expand(prodpoly, k)
    return {nu: c for nu, c in full.items() if (not nu or nu[0] <= n - k) and len(nu) <= k}


def weyl_dim_ssyt(lam: tuple, n: int) -> int:
    """``dim`` of the ``GL_n`` irrep as the number of SSYT with entries below ``n``."""
    return sum(1 for _ in ssyt(tuple(x for x in lam if x), n))


# ---------------------------------------------------------------------------
# K3 numerics in the ring Q[H]/(H^3), with ch = (rank, c1 coefficient, ch2 number)


def ch_of_mukai(g: int, r: int, d: int, s: int):
    return (Fraction(r), Fraction(d), Fraction(s - r))


def ch_mul(a, b, g: int):
    h2 = 2 * g - 2
    return (a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[2] * b[0] + a[1] * b[1] * h2)


def ch_adams2(a):
    return (a[0], 2 * a[1], 4 * a[2])


def ch_wedge2(a, g: int):
    sq = ch_mul(a, a, g)
    ad = ch_adams2(a)
    return tuple((x - y) / 2 for x, y in zip(sq, ad))


def chi_of_ch(a) -> Fraction:
    # Riemann-Roch on a K3 surface: chi = ch_2 + 2 rank
    return a[2] + 2 * a[0]


def ch_twist(a, m: int, g: int):
    line = (Fraction(1), Fraction(m), Fraction(m * m * (2 * g - 2), 2))
    return ch_mul(a, line, g)


def simplest_by_scan(a: Fraction, b: Fraction, qmax: int = 200):
    for q in range(1, qmax + 1):
        p = floor(a * q) + 1
        if Fraction(p, q) < b:
            return Fraction(p, q)
    return None


# ---------------------------------------------------------------------------
# finite geometry over F_2 with bitmask vectors


def subspace_count_ordered_bases(n: int, k: int, q: int) -> int:
    num = prod(q**n - q**i for i in range(k))
    den = prod(q**k - q**i for i in range(k))
    return num // den


def _span_f2(vectors) -> frozenset:
    span = {0}
    for v in vectors:
        span |= {x ^ v for x in span}
    return frozenset(span)


def form_f2(matrix):
    """Bilinear form on bitmask vectors from an integer matrix (entries mod 2)."""
    n = len(matrix)
    rows = [sum(1 << j for j in range(n) if matrix[i][j] % 2) for i in range(n)]

    def b(u: int, w: int) -> int:
        acc = 0
        for i in range(n):
            if u >> i & 1:
                acc ^= bin(rows[i] & w).count("1") & 1
        return acc

    return b


def isotropic_3spaces_f2(matrices, n: int = 7) -> set:
    """All 3-dimensional subspaces of F_2^n isotropic for the given forms (as spans)."""
    forms = [form_f2(m) for m in matrices]
    found = set()
    vecs = range(1, 1 << n)
    for u in vecs:
        for v in vecs:
            if v <= u or any(b(u, v) for b in forms):
                continue
            plane = _span_f2([u, v])
            for w in vecs:
                if w <= v or w in plane:
                    continue
                if any(b(u, w) or b(v, w) for b in forms):
                    continue
                found.add(_span_f2([u, v, w]))
    return found


def extends_to_isotropic_4space(matrices, span3: frozenset, n: int = 7) -> bool:
    forms = [form_f2(m) for m in matrices]
    basis = []
    for x in sorted(span3):
        if x and x not in _span_f2(basis):
            basis.append(x)
    for w in range(1, 1 << n):
        if w in span3:
            continue
        if all(not b(u, w) for b in forms for u in basis):
            return True
    return False


# ---------------------------------------------------------------------------
# GF(2^m) for checking degeneracy points over small extensions


class GF2m:
    """Arithmetic in GF(2^m) with elements stored as ints below 2^m."""

    MODULI = {2: 0b111, 3: 0b1011, 4: 0b10011}

    def __init__(self, m: int):
        self.m = m
        self.size = 1 << m
        self.mod = self.MODULI[m]

    def mul(self, a: int, b: int) -> int:
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & self.size:
                a ^= self.mod
        return out

    def inv(self, a: int) -> int:
        r = 1
        for _ in range(self.size - 2):
            r = self.mul(r, a)
        return r

    def rank(self, m) -> int:
        a = [list(r) for r in m]
        r = 0
        for c in range(len(a[0])):
            piv = next((i for i in range(r, len(a)) if a[i][c]), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = self.inv(a[r][c])
            for i in range(len(a)):
                if i != r and a[i][c]:
                    f = self.mul(a[i][c], inv)
                    a[i] = [x ^ self.mul(f, y) for x, y in zip(a[i], a[r])]
            r += 1
        return r

    def projective_plane(self):
        q = self.size
        for lead in range(3):
            for tail in product(range(q), repeat=2 - lead):
                yield (0,) * lead + (1,) + tail

    def member_rank(self, matrices, a) -> int:
        n = len(matrices[0])
        m = [[0] * n for _ in range(n)]
        for coeff, mat in zip(a, matrices):
            if not coeff:
                continue
            for i in range(n):
                for j in range(n):
                    if mat[i][j] % 2:
                        m[i][j] ^= coeff
        return self.rank(m)


# ---------------------------------------------------------------------------
# conics over a prime field by point counting


def conic_points_mod_p(gram, p: int):
    """Points of ``P^2(F_p)`` on the conic with the given symmetric Gram matrix."""
    pts = []
    for lead in range(3):
        for tail in product(range(p), repeat=2 - lead):
            x = (0,) * lead + (1,) + tail
            val = sum(gram[i][j] * x[i] * x[j] for i in range(3) for j in range(3)) % p
            if val == 0:
                pts.append(x)
    return pts


def collinear_mod_p(points, p: int) -> bool:
    if len(points) < 3:
        return True
    return rank_mod_p([list(x) for x in points], p) <= 2
