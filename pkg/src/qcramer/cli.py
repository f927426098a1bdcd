"""``qcramer`` command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 inconsistent equation,
3 size cap exceeded, 4 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import determinants
from .determinants import cdet, det_hermitian, rdet
from .errors import InconsistentEquationError, QCramerError, SizeCapError
from .ginverse import DRAZIN_ROUTES, MP_ROUTES, drazin, inverse, mp_inverse
from .oracle import AxiomReport, verify_drazin, verify_penrose, verify_wdrazin
from .qmatrix import QMatrix, format_matrix, is_hermitian, mat_mul, matrix_to_json, parse_matrix
from .quaternion import format_fraction
from .solvers import LEFT_ROUTES, TWO_SIDED_ROUTES, solve_left, solve_right, solve_two_sided
from .wdrazin import WDRAZIN_ROUTES, wdrazin

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT, EXIT_SIZE_CAP, EXIT_VERIFY = 0, 1, 2, 3, 4

_INPUTS = {
    "inverse": ("A",),
    "mp": ("A",),
    "drazin": ("A",),
    "wdrazin": ("A", "W"),
    "solve-left": ("A", "W", "D"),
    "solve-right": ("A", "W", "D"),
    "solve-two-sided": ("A", "W1", "D", "B", "W2"),
    "det": ("M",),
}

_ROUTES = {
    "mp": MP_ROUTES,
    "drazin": DRAZIN_ROUTES,
    "wdrazin": WDRAZIN_ROUTES,
    "solve-left": LEFT_ROUTES,
    "solve-right": LEFT_ROUTES,
    "solve-two-sided": TWO_SIDED_ROUTES,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _lf(text: str) -> tuple[int, int]:
    if len(text) != 2 or any(c not in "12" for c in text):
        raise argparse.ArgumentTypeError("expected one of 11, 12, 21, 22")
    return int(text[0]), int(text[1])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--route", default="auto", help="representation route (default: auto)")
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--no-verify", action="store_true", help="skip the axiom checks")
    common.add_argument("--decimal", action="store_true", help="print terminating decimals instead of p/q")
    common.add_argument("--max-n", type=int, default=8, metavar="K", help="largest determinant order (default 8)")
    common.add_argument("--lf", type=_lf, default=(1, 1), metavar="LF",
                        help="Drazin factor forms for squared inverses: 11, 12, 21 or 22")

    parser = _Parser(prog="qcramer", description="Exact generalized inverses and Cramer-rule solvers over quaternion matrices.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    helps = {
        "inverse": "two-sided inverse of a square matrix",
        "mp": "Moore-Penrose inverse",
        "drazin": "Drazin inverse",
        "wdrazin": "W-weighted Drazin inverse",
        "solve-left": "solve W A W X = D",
        "solve-right": "solve X W A W = D",
        "solve-two-sided": "solve W1 A W1 X W2 B W2 = D",
        "det": "determinant of a Hermitian matrix, or a chosen row/column determinant",
    }
    for verb, names in _INPUTS.items():
        p = sub.add_parser(verb, parents=[common], help=helps[verb])
        for name in names:
            p.add_argument(name, help=f"matrix file for {name}")
        if verb == "det":
            g = p.add_mutually_exclusive_group()
            g.add_argument("--row", type=int, help="1-based index of the row determinant")
            g.add_argument("--col", type=int, help="1-based index of the column determinant")
    p = sub.add_parser("verify", parents=[common], help="check a candidate inverse against its defining axioms")
    p.add_argument("kind", choices=("mp", "drazin", "wdrazin"))
    p.add_argument("files", nargs="+", help="A X  (or A W X for wdrazin)")
    return parser


def _read(path: str) -> QMatrix:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return parse_matrix(text)
    except QCramerError as exc:
        raise QCramerError(f"{path}: {exc}") from None


def _frac(x) -> str:
    return format_fraction(Fraction(x))


class _Output:
    """Collects one result and renders it as text or JSON."""

    def __init__(self, args):
        self.args = args
        self.doc: dict = {"verb": args.verb}
        self.blocks: list[str] = []
        self.failed = False

    def meta(self, key: str, value) -> None:
        self.doc[key] = value
        if isinstance(value, (list, tuple)):
            shown = ", ".join(str(v) for v in value)
        else:
            shown = str(value)
        self.blocks.append(f"# {key}: {shown}\n")

    def matrix(self, key: str, m: QMatrix) -> None:
        self.doc[key] = matrix_to_json(m)
        self.blocks.append(format_matrix(m, self.args.decimal))

    def axioms(self, reports: list[AxiomReport]) -> None:
        self.doc["axioms"] = [
            {"id": r.axiom_id, "holds": r.holds, "residual": matrix_to_json(r.residual)} for r in reports
        ]
        for r in reports:
            self.blocks.append(f"# axiom {r.axiom_id}: {'ok' if r.holds else 'FAILED'}\n")
        self.failed |= not all(r.holds for r in reports)

    def checks(self, checks: dict) -> None:
        self.doc["checks"] = checks
        for name, ok in checks.items():
            self.blocks.append(f"# check {name}: {'ok' if ok else 'FAILED'}\n")
        self.failed |= not all(checks.values())

    def emit(self) -> None:
        if self.args.json:
            sys.stdout.write(json.dumps(self.doc, indent=2) + "\n")
        else:
            sys.stdout.write("".join(self.blocks))


def _identity_checks(a: QMatrix, x: QMatrix) -> dict:
    i = QMatrix.identity(a.rows)
    return {"AX=I": mat_mul(a, x) == i, "XA=I": mat_mul(x, a) == i}


def _run(args, out: _Output) -> int:
    verify = not args.no_verify
    verb = args.verb
    route = args.route
    if verb in _ROUTES and route != "auto" and route not in _ROUTES[verb]:
        raise _UsageError(f"unknown route {route!r} for {verb}; choose from auto, {', '.join(_ROUTES[verb])}")

    if verb == "inverse":
        a = _read(args.A)
        x = inverse(a)
        out.meta("route", "inverse")
        out.matrix("matrix", x)
        if verify:
            out.checks(_identity_checks(a, x))
    elif verb == "mp":
        a = _read(args.A)
        res = mp_inverse(a, "mp-left" if route == "auto" else route)
        out.meta("route", res.route)
        out.meta("rank", res.rank)
        out.meta("denominators", [_frac(res.denominator)])
        out.matrix("matrix", res.matrix)
        if verify:
            out.axioms(verify_penrose(a, res.matrix))
    elif verb == "drazin":
        a = _read(args.A)
        res = drazin(a, route)
        out.meta("route", res.route)
        out.meta("k", res.index)
        if res.denominator is not None:
            out.meta("denominators", [_frac(res.denominator)])
        out.matrix("matrix", res.matrix)
        if verify:
            out.axioms(verify_drazin(a, res.matrix))
    elif verb == "wdrazin":
        a, w = _read(args.A), _read(args.W)
        res = wdrazin(a, w, route, args.lf)
        out.meta("route", res.route)
        out.meta("k", res.k)
        if res.denominators:
            out.meta("denominators", [_frac(d) for d in res.denominators])
        out.matrix("matrix", res.matrix)
        if verify:
            out.axioms(verify_wdrazin(a, w, res.matrix))
    elif verb in ("solve-left", "solve-right", "solve-two-sided"):
        mats = [_read(getattr(args, n)) for n in _INPUTS[verb]]
        solver = {"solve-left": solve_left, "solve-right": solve_right, "solve-two-sided": solve_two_sided}[verb]
        try:
            rep = solver(*mats, route=route, lf=args.lf, verify=verify)
        except InconsistentEquationError as exc:
            rep = exc.report
            out.doc["status"] = "inconsistent"
            out.meta("route", rep.route)
            out.blocks.append("# inconsistent equation; residual (left-hand side minus D):\n")
            out.matrix("residual", rep.residual)
            out.blocks.append("# best-effort X:\n")
            out.matrix("matrix", rep.X)
            print(f"qcramer: {exc}", file=sys.stderr)
            return EXIT_INCONSISTENT
        out.doc["status"] = "consistent"
        out.meta("route", rep.route)
        out.meta("k", list(rep.k))
        if rep.denominators:
            out.meta("denominators", [_frac(d) for d in rep.denominators])
        out.matrix("matrix", rep.X)
        if verify:
            out.checks(dict(rep.verification))
    elif verb == "det":
        m = _read(args.M)
        if args.row is not None:
            out.meta("functional", f"rdet_{args.row}")
            val = rdet(m, args.row - 1)
        elif args.col is not None:
            out.meta("functional", f"cdet_{args.col}")
            val = cdet(m, args.col - 1)
        else:
            if not is_hermitian(m):
                raise _UsageError("matrix is not Hermitian; pass --row I or --col J for a row or column determinant")
            val = det_hermitian(m)
            out.meta("functional", "det")
            out.doc["value"] = _frac(val)
            out.blocks.append(format_fraction(val, args.decimal) + "\n")
            return EXIT_OK
        out.doc["value"] = [_frac(c) for c in val.components]
        out.blocks.append(val.format(args.decimal) + "\n")
    elif verb == "verify":
        mats = [_read(f) for f in args.files]
        need = 3 if args.kind == "wdrazin" else 2
        if len(mats) != need:
            raise _UsageError(f"verify {args.kind} takes {need} matrix files, got {len(mats)}")
        fn = {"mp": verify_penrose, "drazin": verify_drazin, "wdrazin": verify_wdrazin}[args.kind]
        out.axioms(fn(*mats))
    return EXIT_VERIFY if out.failed else EXIT_OK


class _UsageError(Exception):
    pass


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_n < 1:
        print("qcramer: --max-n must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    out = _Output(args)
    try:
        with determinants.size_cap(args.max_n):
            code = _run(args, out)
    except SizeCapError as exc:
        print(f"qcramer: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except (_UsageError, QCramerError, OSError, ValueError) as exc:
        print(f"qcramer: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
