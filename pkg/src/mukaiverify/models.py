"""Per-genus bookkeeping for the Mukai models and their defining sections.

For ``g`` in 9, 10, 12 the model is the zero locus in ``Gr(r, r+s)`` of a
section of ``E_0``, given by linear algebra data: a 2-form on ``V_6``, a
3-form on ``V_7`` and a net of 2-forms on ``V_7`` respectively.  The span of
the model in the Plucker embedding is computed from the kernel of the map
sending a linear form (or vector) to its product (or contraction) with the
section.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from math import comb
from typing import Iterator

from .exactlin import QQ, Field, Matrix, rank
from .exterior import (
    MultiVector,
    contract,
    is_decomposable,
    three_form_orbit_dim,
    two_form_rank,
    wedge,
)
from .nets import (
    DegenerateWitness,
    NondegenerateOverClosure,
    SkewNet,
    is_nondegenerate_net,
    load_net,
    net_from_json,
)

__all__ = [
    "MukaiModel",
    "model_table",
    "check_model",
    "Section",
    "is_nondegenerate_section",
    "KernelMap",
    "section_kernel_map",
    "linear_span_dimension",
    "SectionWitness",
    "degenerate_witness",
    "random_section",
    "random_nondegenerate_sections",
    "reference_net",
    "degenerate_reference_net",
    "reference_three_form",
    "load_section",
]


@dataclass(frozen=True)
class MukaiModel:
    genus: int
    name: str
    r: int
    s: int
    n: int  # dimension n_g
    N: int  # linear span P^{N_g}
    e0: str
    notes: str = ""

    @property
    def grassmannian(self) -> tuple[int, int]:
        return (self.r, self.r + self.s)


_MODELS = (
    MukaiModel(6, "Gr(2,5)", 2, 3, 6, 9, "", "quadric section of the cone over Gr(2,5) in P^9"),
    MukaiModel(7, "OGr+(5,10)", 5, 5, 10, 15, "", "spinor tenfold of degree 12 cut out by 10 quadrics"),
    MukaiModel(8, "Gr(2,6)", 2, 4, 8, 14, "0"),
    MukaiModel(9, "LGr(3,6)", 3, 3, 6, 13, "Lambda^2 U^*"),
    MukaiModel(10, "G2/P2", 2, 5, 5, 13, "U^perp(1)"),
    MukaiModel(12, "M12 in Gr(3,7)", 3, 4, 3, 13, "(Lambda^2 U^*)^3"),
)


def check_model(m: MukaiModel) -> list[str]:
    """Violated invariants of a table row (empty when consistent)."""
    problems = []
    if m.genus >= 7 and m.N != m.n + m.genus - 2:
        problems.append(f"g={m.genus}: N_g={m.N} but n_g + g - 2 = {m.n + m.genus - 2}")
    if m.genus == 6 and m.N - m.n != 3:
        problems.append(f"g=6: codimension {m.N - m.n}, expected 3")
    if m.genus != 7 and m.r * m.s != m.genus:
        problems.append(f"g={m.genus}: r*s = {m.r * m.s}")
    return problems


def model_table() -> list[MukaiModel]:
    """The six models; raises if any row violates its invariants."""
    for m in _MODELS:
        problems = check_model(m)
        if problems:  # pragma: no cover - constants are fixed
            raise AssertionError("; ".join(problems))
    return list(_MODELS)


@dataclass(frozen=True)
class Section:
    """The linear algebra datum defining a Mukai model of genus 9, 10 or 12."""

    genus: int
    data: MultiVector | SkewNet

    def __post_init__(self):
        g, d = self.genus, self.data
        if g == 9:
            ok = isinstance(d, MultiVector) and (d.n, d.k) == (6, 2)
        elif g == 10:
            ok = isinstance(d, MultiVector) and (d.n, d.k) == (7, 3)
        elif g == 12:
            ok = isinstance(d, SkewNet)
        else:
            raise ValueError(f"genus {g} has no section datum (only 9, 10, 12)")
        if not ok:
            raise ValueError(f"section datum does not match genus {g}")

    @property
    def field(self) -> Field:
        return self.data.field

    def change_basis(self, g: Matrix) -> "Section":
        if isinstance(self.data, SkewNet):
            return Section(12, self.data.change_basis(g))
        return Section(self.genus, self.data.change_basis(g))


def is_nondegenerate_section(sigma: Section) -> bool:
    if sigma.genus == 9:
        return two_form_rank(sigma.data) == 6
    if sigma.genus == 10:
        return three_form_orbit_dim(sigma.data) == 35
    return isinstance(is_nondegenerate_net(sigma.data), NondegenerateOverClosure)


@dataclass(frozen=True)
class KernelMap:
    matrix: Matrix
    injective: bool
    h0: int


def _unit(n: int, i: int, F: Field) -> MultiVector:
    return MultiVector.basis(n, [i + 1], F)


def section_kernel_map(sigma: Section) -> KernelMap:
    """The map whose cokernel is the Plucker span of the model.

    Genus 9: ``f -> f ^ s`` from ``V^*`` to ``Lambda^3 V^*``.  Genus 10:
    ``v -> s(v, -, -)`` from ``V`` to ``Lambda^2 V^*``.  Genus 12:
    ``(f_1, f_2, f_3) -> sum f_i ^ s_i`` from ``(V^*)^3`` to ``Lambda^3 V^*``.
    """
    F = sigma.field
    g = sigma.genus
    if g == 9:
        cols = [wedge(_unit(6, i, F), sigma.data).to_list() for i in range(6)]
        target = comb(6, 3)
    elif g == 10:
        cols = []
        for i in range(7):
            e = [F.zero] * 7
            e[i] = F.one
            cols.append(contract(e, sigma.data).to_list())
        target = comb(7, 2)
    else:
        forms = [MultiVector.from_skew_matrix(m) for m in sigma.data.forms]
        cols = [wedge(_unit(7, i, F), s).to_list() for s in forms for i in range(7)]
        target = comb(7, 3)
    m = Matrix.from_columns(cols, F, nrows=target)
    r = rank(m)
    return KernelMap(m, r == m.ncols, target - r)


def linear_span_dimension(genus: int, sigma: Section | None = None) -> int:
    """``h^0`` of the hyperplane bundle on the model (``N_g + 1``)."""
    if genus == 8:
        return comb(6, 2)
    if sigma is None:
        raise ValueError(f"genus {genus} needs a section")
    if sigma.genus != genus:
        raise ValueError("section genus mismatch")
    return section_kernel_map(sigma).h0


@dataclass(frozen=True)
class SectionWitness:
    """A decomposable form exhibiting a degenerate section."""

    vector: tuple
    form: MultiVector
    parameter: tuple | None = None


_MAX_TRIALS = 10_000


def _candidates(n: int, F: Field, rng: random.Random) -> Iterator[list]:
    for i in range(n):
        yield [F.one if j == i else F.zero for j in range(n)]
    for trial in range(_MAX_TRIALS):
        height = 1 + trial // 500
        v = [F(rng.randint(-height, height)) for _ in range(n)]
        if any(v):
            yield v


def _covector_witness(form: MultiVector, rng: random.Random) -> SectionWitness | None:
    F = form.field
    for f in _candidates(form.n, F, rng):
        w = wedge(MultiVector.vector(f, F), form)
        if not w.is_zero() and is_decomposable(w):
            return SectionWitness(tuple(f), w)
    return None


def degenerate_witness(sigma: Section, seed: int = 0) -> SectionWitness | None:
    """Search for a decomposable form certifying a degenerate section.

    Basis directions are tried first, then random integer directions of
    growing height, up to 10^4 trials.  ``None`` means the search was
    inconclusive: a witness may still exist over an extension field.
    """
    if is_nondegenerate_section(sigma):
        raise ValueError("section is nondegenerate")
    rng = random.Random(seed)
    if sigma.genus == 9:
        return _covector_witness(sigma.data, rng)
    if sigma.genus == 10:
        F = sigma.field
        for v in _candidates(7, F, rng):
            w = contract(v, sigma.data)
            if not w.is_zero() and is_decomposable(w):
                return SectionWitness(tuple(v), w)
        return None
    cert = is_nondegenerate_net(sigma.data)
    if not isinstance(cert, DegenerateWitness):
        return None
    member = sigma.data.member_form(cert.point)
    found = _covector_witness(member, rng)
    if found is None:
        return None
    return SectionWitness(found.vector, found.form, tuple(cert.point))


def random_section(genus: int, rng: random.Random, height: int = 3, field: Field = QQ) -> Section:
    """A section with independent uniform integer coordinates in ``[-height, height]``."""
    if genus == 9:
        return Section(9, MultiVector.from_list(6, 2, [rng.randint(-height, height) for _ in range(15)], field))
    if genus == 10:
        return Section(10, MultiVector.from_list(7, 3, [rng.randint(-height, height) for _ in range(35)], field))
    if genus == 12:
        while True:
            forms = []
            for _ in range(3):
                m = [[0] * 7 for _ in range(7)]
                for i in range(7):
                    for j in range(i + 1, 7):
                        x = rng.randint(-height, height)
                        m[i][j], m[j][i] = x, -x
                forms.append(Matrix(m, field))
            try:
                return Section(12, SkewNet(forms, field))
            except ValueError:
                continue
    raise ValueError(f"genus {genus} has no section datum (only 9, 10, 12)")


def random_nondegenerate_sections(genus: int, count: int, seed: int = 0, height: int = 3) -> list[Section]:
    """``count`` random sections, each certified nondegenerate (degenerate draws are skipped)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = random_section(genus, rng, height)
        if is_nondegenerate_section(s):
            out.append(s)
    return out


def _data_text(name: str) -> str:
    return resources.files("mukaiverify").joinpath("data", name).read_text()


def reference_net() -> SkewNet:
    return net_from_json(json.loads(_data_text("reference_net.json")))


def degenerate_reference_net() -> SkewNet:
    return net_from_json(json.loads(_data_text("degenerate_net.json")))


def reference_three_form() -> MultiVector:
    doc = json.loads(_data_text("reference_3form.json"))
    return MultiVector.from_list(doc["n"], doc["k"], doc["coordinates"], QQ)


def load_section(genus: int, path) -> Section:
    """Read a section file: a net document for genus 12, otherwise
    ``{"n": .., "k": .., "coordinates": [...]}`` listing coordinates in
    lexicographic order of index sets (integers or ``"num/den"`` strings)."""
    if genus == 12:
        return Section(12, load_net(path))
    with open(path) as fh:
        doc = json.load(fh)
    try:
        coords = [QQ(x) for x in doc["coordinates"]]
        form = MultiVector.from_list(int(doc["n"]), int(doc["k"]), coords, QQ)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{path}: malformed form document ({exc})") from exc
    return Section(genus, form)
