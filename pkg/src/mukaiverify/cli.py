"""Command line front end: ``mukaiverify <command> ...``.

Every command prints one report per check, as text or as a JSON document
(``--format json``).  The exit code is the largest severity among the
reports: 0 verified, 1 failed, 2 undetermined, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import bbw, k3num, models, nets, schur
from .exactlin import Fp
from .exterior import MultiVector

SCHEMA_VERSION = 1
SEVERITY = {"VERIFIED": 0, "FAILED": 1, "UNDETERMINED": 2}
INPUT_ERROR = 3
DEFAULT_SEED = 20240601


@dataclass
class Report:
    check: str
    status: str
    expected: Any = None
    computed: Any = None
    payload: dict = field(default_factory=dict)
    duration: float = 0.0

    def __post_init__(self):
        if self.status not in SEVERITY:
            raise ValueError(f"unknown status {self.status}")
        if self.status == "FAILED" and (self.expected is None or self.computed is None):
            raise ValueError("a FAILED report needs expected and computed values")

    @property
    def severity(self) -> int:
        return SEVERITY[self.status]

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "payload": _jsonable(self.payload),
            "duration": round(self.duration, 6),
        }

    def to_text(self) -> str:
        line = f"[{self.status}] {self.check}: expected {_text(self.expected)}, computed {_text(self.computed)}"
        if self.payload:
            line += " | " + ", ".join(f"{k}={_text(v)}" for k, v in self.payload.items())
        return line + f" ({self.duration:.3f}s)"


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Fp):
        return x.value
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _text(x) -> str:
    # same canonical form as the JSON document so both outputs agree value for value
    return json.dumps(_jsonable(x), separators=(",", ":"))


def _timed(check: str, fn: Callable[[], tuple[str, Any, Any, dict]]) -> Report:
    t0 = time.perf_counter()
    status, expected, computed, payload = fn()
    return Report(check, status, expected, computed, payload, time.perf_counter() - t0)


def _status(ok: bool) -> str:
    return "VERIFIED" if ok else "FAILED"


# ---------------------------------------------------------------------------
# commands


def cmd_tables(table: Sequence[models.MukaiModel] | None = None) -> list[Report]:
    """Self-check of the model table; ``table`` replaces the built-in rows (test hook)."""
    rows = list(table) if table is not None else models.model_table()
    out = []
    for m in rows:

        def run(m=m):
            problems = models.check_model(m)
            expected = {"N_g": m.n + m.genus - 2 if m.genus >= 7 else m.n + 3}
            if m.genus != 7:
                expected["g"] = m.genus
            computed = {"N_g": m.N}
            if m.genus != 7:
                computed["g"] = m.r * m.s
            payload = {"model": m.name, "r": m.r, "s": m.s, "n_g": m.n}
            if problems:
                payload["problems"] = problems
            return _status(not problems), expected, computed, payload

        out.append(_timed(f"table g={m.genus}", run))
    return out


def cmd_degree(genus: int) -> list[Report]:
    def run():
        d = schur.mukai_degree(genus)
        return _status(d == 2 * genus - 2), 2 * genus - 2, d, {}

    return [_timed(f"degree g={genus}", run)]


def cmd_bbw(genus: int) -> list[Report]:
    def hi_we():
        t = bbw.verify_hi_we(genus)
        return _status(t.verified), [list(r) for r in t.expected], [list(r) for r in t.rows], {"columns": "i,j,p,dim"}

    def vanishing():
        bad = bbw.connectedness_violations(genus)
        return _status(not bad), [], [list(b) for b in bad], {"columns": "q,i,p,dim"}

    return [_timed(f"bbw table g={genus}", hi_we), _timed(f"bbw vanishing g={genus}", vanishing)]


def cmd_euler(genus: int) -> list[Report]:
    out = []
    rows = {m.genus: m for m in models.model_table()}
    if genus == 7:

        def table():
            rep = k3num.verify_genus7_tables()
            computed = {c.name: c.computed_chi for c in rep.columns}
            expected = {c.name: c.table_chi for c in rep.columns}
            return _status(all(c.ok for c in rep.columns)), expected, computed, {}

        def pairings():
            rep = k3num.verify_genus7_tables()
            exp = {k: e for k, (e, _) in rep.self_pairings.items()}
            exp["chi(Lambda2 U_S)"] = rep.wedge2_us[0]
            comp = {k: c for k, (_, c) in rep.self_pairings.items()}
            comp["chi(Lambda2 U_S)"] = rep.wedge2_us[1]
            return _status(exp == comp), exp, comp, {}

        def us():
            v = k3num.MukaiVector(7, 5, -2, 5)
            return _status(v.euler_chi() == 10), 10, v.euler_chi(), {"vector": [5, -2, 5]}

        out += [
            _timed("euler g=7 table", table),
            _timed("euler g=7 self-pairings", pairings),
            _timed("euler g=7 chi(U_S^*)", us),
        ]
    elif genus in rows:
        m = rows[genus]

        def mukai():
            v = k3num.MukaiVector(genus, m.r, -1, m.s)
            return _status(v.pairing(v) == 2), 2, v.pairing(v), {"vector": [m.r, -1, m.s]}

        out.append(_timed(f"euler g={genus} chi(U_S,U_S)", mukai))
        for pc in k3num.projection_counts():
            if pc.genus == genus:

                def count(pc=pc):
                    v = pc.vector
                    return _status(pc.ok), pc.expected, pc.computed, {"vector": [v.r, v.d, v.s], "twist": 1}

                out.append(_timed(f"euler g={genus} chi(twist)", count))
    else:
        raise UsageError(f"genus {genus} not in the model table")
    return out


def _cert_report(cert, check: str, duration: float) -> Report:
    if isinstance(cert, nets.NondegenerateOverClosure):
        return Report(check, "VERIFIED", "nondegenerate", "nondegenerate",
                      {"certificate": "NondegenerateOverClosure", "degree": cert.degree, "field": cert.field}, duration)
    if isinstance(cert, nets.DegenerateWitness):
        return Report(check, "FAILED", "nondegenerate", "degenerate",
                      {"certificate": "DegenerateWitness", "point": list(cert.point), "rank": cert.rank}, duration)
    return Report(check, "UNDETERMINED", "nondegenerate", None,
                  {"certificate": "Undetermined", "max_degree": cert.max_degree, "reason": cert.reason}, duration)


def cmd_net(sub: str, path: str, sigma=None, field_p: int | None = None, nss_bound: int = 8,
            max_q: int = 5, k: int = 4, seed: int = DEFAULT_SEED, samples: int = 20) -> list[Report]:
    net = nets.load_net(path)
    if field_p is not None:
        if net.field.is_rational:
            net = net.reduce_mod(field_p)
        elif net.field.characteristic != field_p:
            raise UsageError(f"net is over {net.field}, cannot move to GF({field_p})")
    if sub == "check":
        t0 = time.perf_counter()
        cert = nets.is_nondegenerate_net(net, nss_bound)
        return [_cert_report(cert, "net check", time.perf_counter() - t0)]
    if sub == "cubics":

        def run():
            cubics = nets.net_cubics(net)
            r = nets.cubic_coefficient_rank(cubics)
            return _status(r == 7), 7, r, {"cokernel": 10 - r}

        return [_timed("net cubics rank", run)]
    if sub == "conic":
        if sigma is not None:
            params = [tuple(sigma)]
        else:
            rng = random.Random(seed)
            params = []
            while len(params) < samples:
                a = tuple(rng.randint(-50, 50) for _ in range(3))
                if any(a):
                    params.append(a)
        out = []
        for a in params:

            def run(a=a):
                try:
                    r = nets.conic_at(net, a)
                except ValueError as exc:
                    return "FAILED", 3, "degenerate", {"error": str(exc)}
                return _status(r == 3), 3, r, {}

            out.append(_timed(f"net conic at {_text(list(a))}", run))
        return out
    if sub == "scan":
        if net.field.is_rational:
            net = net.reduce_mod(2)

        def run():
            stats = {}
            found = nets.isotropic_scan(net, k, max_q=max_q, stats=stats)
            payload = {"field": str(net.field), "k": k, "grassmannian_points": stats["total"]}
            if k == 4:
                return _status(not found), 0, len(found), payload
            covered = [bool(nets.covering_conic_exists(net, u, max(nss_bound, 7))) for u in found]
            payload["covered_by_conics"] = sum(covered)
            return _status(all(covered)), len(found), sum(covered), payload

        return [_timed(f"net scan k={k}", run)]
    raise UsageError(f"unknown net subcommand {sub}")


def _default_section(genus: int) -> models.Section:
    if genus == 9:
        e = lambda i, j: MultiVector.basis(6, [i, j])
        return models.Section(9, e(1, 2) + e(3, 4) + e(5, 6))
    if genus == 10:
        return models.Section(10, models.reference_three_form())
    return models.Section(12, models.reference_net())


def cmd_model_h0(genus: int, section_path: str | None = None) -> list[Report]:
    rows = {m.genus: m for m in models.model_table()}
    if genus not in (8, 9, 10, 12):
        raise UsageError(f"genus must be one of 8, 9, 10, 12, got {genus}")
    expected = rows[genus].n + genus - 1

    def run():
        if genus == 8:
            h0 = models.linear_span_dimension(8)
            return _status(h0 == expected), expected, h0, {}
        sec = models.load_section(genus, section_path) if section_path else _default_section(genus)
        km = models.section_kernel_map(sec)
        return _status(km.injective and km.h0 == expected), expected, km.h0, {"injective": km.injective}

    return [_timed(f"model h0 g={genus}", run)]


# ---------------------------------------------------------------------------
# argument parsing


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _sigma(text: str) -> tuple[Fraction, ...]:
    try:
        vals = tuple(Fraction(x.strip()) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad parameter {text!r}") from exc
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("--sigma takes three comma-separated numbers")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized searches")

    p = _Parser(prog="mukaiverify", description="Exact checks for Mukai models.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("tables", parents=[common], help="model table self-check")
    for name, helptext in (("degree", "Plucker degree of the model"), ("bbw", "Borel-Bott-Weil tables"),
                           ("euler", "K3 Euler characteristic identities")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--genus", type=int, required=True)

    np_ = sub.add_parser("net", parents=[common], help="checks on a net of skew forms")
    np_.add_argument("action", choices=("check", "conic", "scan", "cubics"))
    np_.add_argument("file")
    np_.add_argument("--sigma", type=_sigma, help="parameter a1,a2,a3 for 'conic'")
    np_.add_argument("--field", type=int, dest="field_p", help="reduce a rational net modulo this prime")
    np_.add_argument("--nss-bound", type=int, default=8, help="largest certificate degree tried")
    np_.add_argument("--max-q", type=int, default=5, help="largest field size for subspace scans")
    np_.add_argument("--k", type=int, choices=(3, 4), default=4, help="subspace dimension for 'scan'")

    mp = sub.add_parser("model", parents=[common], help="linear span of a model")
    mp.add_argument("action", choices=("h0",))
    mp.add_argument("--genus", type=int, required=True)
    mp.add_argument("--section", help="section file (defaults to the built-in reference)")
    return p


def run(argv: Sequence[str] | None = None) -> tuple[list[Report], str]:
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "tables":
        reports = cmd_tables()
    elif cmd == "degree":
        if args.genus not in schur.MUKAI_GRASSMANNIANS:
            raise UsageError(f"degree is computed for genus 8, 9, 10, 12, got {args.genus}")
        reports = cmd_degree(args.genus)
    elif cmd == "bbw":
        if args.genus not in schur.MUKAI_GRASSMANNIANS:
            raise UsageError(f"bbw tables exist for genus 8, 9, 10, 12, got {args.genus}")
        reports = cmd_bbw(args.genus)
    elif cmd == "euler":
        reports = cmd_euler(args.genus)
    elif cmd == "net":
        reports = cmd_net(args.action, args.file, args.sigma, args.field_p, args.nss_bound, args.max_q,
                          args.k, args.seed)
    else:
        reports = cmd_model_h0(args.genus, args.section)
    return reports, args.format


def exit_code(reports: Sequence[Report]) -> int:
    return max((r.severity for r in reports), default=0)


def render(reports: Sequence[Report], fmt: str) -> str:
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "exit_code": exit_code(reports),
               "reports": [r.to_json() for r in reports]}
        return json.dumps(doc, indent=2)
    return "\n".join(r.to_text() for r in reports)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        reports, fmt = run(argv)
    except SystemExit as exc:  # argparse: --help exits 0, bad arguments exit 3
        return exc.code if isinstance(exc.code, int) else INPUT_ERROR
    except UsageError as exc:
        print(f"mukaiverify: error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (OSError, ValueError) as exc:
        print(f"mukaiverify: input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    print(render(reports, fmt))
    return exit_code(reports)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
