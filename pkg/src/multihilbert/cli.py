"""Command-line front end.

Every subcommand builds a JSON-compatible payload; ``--format json`` dumps
it and the text format is rendered from the same payload, so the two always
agree.

Exit codes: 0 success, 1 infeasible verdict or failed verification,
2 parse error, 3 arity error, 4 wrong ambient space.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .combinatorics import Partition, conjugate, gale_ryser_feasible, ryser_construct
from .errors import (
    ArityError,
    MultiHilbertError,
    PartitionError,
    PointSetError,
    WrongAmbient,
)
from .hilbert import border, hilbert_table, hilbert_value, separators, verify_properties
from .monomials import monomial_name
from .p1p1 import (
    BorderPair,
    alpha_beta,
    border_from_partitions,
    classify_border,
    line_counts,
    witness_from_matrix,
)
from .points import PointSet, parse_point_set

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_ARITY, EXIT_AMBIENT = 0, 1, 2, 3, 4


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _naturals(text: str) -> list[int]:
    tokens = [t.strip() for t in text.split(",")]
    if not tokens or any(not t.isdigit() for t in tokens):
        raise argparse.ArgumentTypeError(f"expected comma-separated naturals, got {text!r}")
    return [int(t) for t in tokens]


def _load(path: str) -> PointSet:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from None
    try:
        return parse_point_set(text)
    except ArityError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_ARITY) from None
    except PointSetError as exc:
        raise CLIError(f"{path}: {exc}", EXIT_PARSE) from None


def _header(x: PointSet) -> dict[str, Any]:
    return {"dims": list(x.dims), "s": x.s, "t": list(x.t())}


def _check_degree(x: PointSet, degree: list[int]) -> tuple[int, ...]:
    if len(degree) != x.k:
        raise CLIError(f"degree {degree} needs {x.k} entries for dims {list(x.dims)}", EXIT_ARITY)
    return tuple(degree)


# payload builders -----------------------------------------------------------

def hilbert_payload(x: PointSet, degree: list[int] | None = None) -> dict[str, Any]:
    out = _header(x)
    if degree is not None:
        j = _check_degree(x, degree)
        out["degree"] = list(j)
        out["value"] = hilbert_value(x, j)
    else:
        table = hilbert_table(x)
        out["table"] = table.nested()
        out["border"] = {"arrays": list(border(table).arrays)}
    return out


def border_payload(x: PointSet) -> dict[str, Any]:
    out = _header(x)
    out["border"] = {"arrays": list(border(hilbert_table(x)).arrays)}
    return out


def classify_payload(bc: list[int], br: list[int]) -> dict[str, Any]:
    verdict = classify_border(BorderPair(bc, br))
    return {"bc": bc, "br": br, "feasible": verdict.feasible, "reasons": verdict.reasons}


def construct_payload(alpha: list[int], beta: list[int], emit: str) -> dict[str, Any]:
    try:
        a, b = Partition.sorted(alpha), Partition.sorted(beta)
    except PartitionError as exc:
        raise CLIError(str(exc), EXIT_PARSE) from None
    if not gale_ryser_feasible(a, b):
        raise CLIError("infeasible: alpha* does not majorize beta", EXIT_FAIL)
    matrix = ryser_construct(a, b)
    out: dict[str, Any] = {"alpha": list(a), "beta": list(b), "emit": emit}
    if emit == "matrix":
        out["matrix"] = str(matrix).splitlines()
    else:
        x = witness_from_matrix(matrix)
        out.update(_header(x))
        out["points"] = [[[str(c) for c in vec] for vec in p.coords] for p in x.points]
    return out


def partitions_payload(x: PointSet) -> dict[str, Any]:
    try:
        alpha, beta = alpha_beta(x)
    except WrongAmbient as exc:
        raise CLIError(str(exc), EXIT_AMBIENT) from None
    out = _header(x)
    out.update(
        alpha=list(alpha),
        alpha_conjugate=list(conjugate(alpha)),
        beta=list(beta),
        beta_conjugate=list(conjugate(beta)),
    )
    b = border_from_partitions(alpha, beta)
    # entry j-1: number of rulings of each family holding exactly j points
    out["line_counts"] = {"10": line_counts(b.bc), "01": line_counts(b.br)}
    return out


def separators_payload(x: PointSet, degree: list[int]) -> dict[str, Any]:
    j = _check_degree(x, degree)
    subset, forms = separators(x, j)
    out = _header(x)
    out["degree"] = list(j)
    out["subset"] = subset
    out["forms"] = [
        {"point": i, "terms": [[monomial_name(m), str(c)] for m, c in f.terms()]}
        for i, f in zip(subset, forms)
    ]
    out["check"] = [[str(f.evaluate(x.points[l].coords)) for l in subset] for f in forms]
    return out


def verify_payload(x: PointSet) -> dict[str, Any]:
    report = verify_properties(x, hilbert_table(x))
    out = _header(x)
    out["checks"] = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]
    out["ok"] = report.ok
    return out


# text rendering -------------------------------------------------------------

def _tuple(v: Sequence) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _matrix_lines(rows: list[list[Any]]) -> list[str]:
    width = max(len(str(v)) for r in rows for v in r)
    return [" ".join(str(v).rjust(width) for v in r) for r in rows]


def _table_lines(table: Any, k: int, prefix: tuple[int, ...] = ()) -> list[str]:
    if k == 1:
        return _matrix_lines([table])
    if k == 2:
        return _matrix_lines(table)
    lines = []
    for i, sub in enumerate(table):
        idx = prefix + (i,)
        lines.append("[" + ", ".join(f"j{n + 1}={v}" for n, v in enumerate(idx)) + "]")
        lines.extend(_table_lines(sub, k - 1, idx))
    return lines


def _border_lines(arrays: list[Any], k: int) -> list[str]:
    if k == 2:
        return [f"B_C = {_tuple(arrays[0])}", f"B_R = {_tuple(arrays[1])}"]
    if k == 1:
        return [f"B_1 = {arrays[0]}"]
    return [f"B_{i + 1} = {json.dumps(a)}" for i, a in enumerate(arrays)]


def _header_lines(p: dict[str, Any]) -> list[str]:
    return [f"dims = {_tuple(p['dims'])}", f"s = {p['s']}", f"t = {_tuple(p['t'])}"]


def render_text(command: str, p: dict[str, Any]) -> str:
    lines: list[str] = []
    if command == "hilbert":
        if "value" in p:
            lines.append(str(p["value"]))
        else:
            lines += _header_lines(p)
            lines += _table_lines(p["table"], len(p["dims"]))
    elif command == "border":
        lines += _header_lines(p)
        lines += _border_lines(p["border"]["arrays"], len(p["dims"]))
    elif command == "classify":
        lines.append("FEASIBLE" if p["feasible"] else "INFEASIBLE")
        lines += [f"  - {r}" for r in p["reasons"]]
    elif command == "construct":
        if p["emit"] == "matrix":
            lines += p["matrix"]
        else:
            lines.append(f"# witness for alpha={_tuple(p['alpha'])} beta={_tuple(p['beta'])}")
            lines.append("dims: " + " ".join(str(n) for n in p["dims"]))
            lines += ["|".join(",".join(vec) for vec in pt) for pt in p["points"]]
    elif command == "partitions":
        lines += _header_lines(p)
        lines.append(f"alpha  = {_tuple(p['alpha'])}")
        lines.append(f"alpha* = {_tuple(p['alpha_conjugate'])}")
        lines.append(f"beta   = {_tuple(p['beta'])}")
        lines.append(f"beta*  = {_tuple(p['beta_conjugate'])}")
        lines.append(f"(1,0)-lines with j = 1.. points: {_tuple(p['line_counts']['10'])}")
        lines.append(f"(0,1)-lines with j = 1.. points: {_tuple(p['line_counts']['01'])}")
    elif command == "separators":
        lines += _header_lines(p)
        lines.append(f"degree = {_tuple(p['degree'])}")
        lines.append(f"subset = {_tuple(p['subset'])}")
        for f in p["forms"]:
            terms = ", ".join(f"{m}: {c}" for m, c in f["terms"])
            lines.append(f"G[{f['point']}] = {{{terms}}}")
        lines.append("check (row = form, column = subset point):")
        lines += _matrix_lines(p["check"])
    elif command == "verify":
        lines += _header_lines(p)
        for c in p["checks"]:
            status = "PASS" if c["passed"] else "FAIL"
            lines.append(f"{status} {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
        lines.append("ALL PASS" if p["ok"] else "FAILURES")
    else:
        raise ValueError(f"unknown command {command!r}")
    return "\n".join(lines) + "\n"


def _exit_code(command: str, p: dict[str, Any]) -> int:
    if command == "classify" and not p["feasible"]:
        return EXIT_FAIL
    if command == "verify" and not p["ok"]:
        return EXIT_FAIL
    return EXIT_OK


# argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multihilbert",
        description="Hilbert functions and borders of points in products of projective spaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, with_file: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if with_file:
            p.add_argument("file", help="point-set file, or - for standard input")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("hilbert", "Hilbert table on the box, or one value with --degree")
    p.add_argument("--degree", type=_naturals, help="multidegree j1,...,jk")
    add("border", "border arrays of the Hilbert function")
    p = add("classify", "is (B_C, B_R) the border of points in P1 x P1?", with_file=False)
    p.add_argument("--bc", type=_naturals, required=True, help="eventual column vector")
    p.add_argument("--br", type=_naturals, required=True, help="eventual row vector")
    p = add("construct", "realize fiber partitions by a (0,1)-matrix or point set", with_file=False)
    p.add_argument("--alpha", type=_naturals, required=True)
    p.add_argument("--beta", type=_naturals, required=True)
    p.add_argument("--emit", choices=("points", "matrix"), default="points")
    add("partitions", "fiber partitions alpha_X, beta_X and their conjugates (P1 x P1)")
    p = add("separators", "separating forms in a given degree")
    p.add_argument("--degree", type=_naturals, required=True)
    add("verify", "check monotonicity, stabilization and axis properties")
    return parser


def run(args: argparse.Namespace) -> tuple[dict[str, Any], int]:
    cmd = args.command
    if cmd == "classify":
        payload = classify_payload(args.bc, args.br)
    elif cmd == "construct":
        payload = construct_payload(args.alpha, args.beta, args.emit)
    else:
        x = _load(args.file)
        if cmd == "hilbert":
            payload = hilbert_payload(x, args.degree)
        elif cmd == "border":
            payload = border_payload(x)
        elif cmd == "partitions":
            payload = partitions_payload(x)
        elif cmd == "separators":
            payload = separators_payload(x, args.degree)
        else:
            payload = verify_payload(x)
    return payload, _exit_code(cmd, payload)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, code = run(args)
    except CLIError as exc:
        print(f"multihilbert: {exc}", file=sys.stderr)
        return exc.code
    except MultiHilbertError as exc:
        print(f"multihilbert: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(args.command, payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
