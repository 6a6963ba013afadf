"""Command-line interface: ``weyltoric <subcommand> --type A --rank 4 ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional

from .basis_ring import SizeCapExceeded, check_size_cap, pairing_matrix, structure_constants
from .diagram import I_G2, YoungDiagram, build_lambda
from .fan_oracle import DEFAULT_SEED, verify_family
from .intersect import class_X, class_Y, diagram_value, intersection_number, parse_monomial
from .weyl import FAMILIES, RootSystemId, enumerate_weyl, format_element, parse_element

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SIZE_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _system(args) -> RootSystemId:
    if args.type == "G2":
        if args.rank not in (None, 2):
            raise UsageError("--rank is not accepted for G2")
        return RootSystemId("G2")
    if args.rank is None:
        raise UsageError(f"--rank is required for type {args.type}")
    try:
        return RootSystemId(args.type, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _element(system, text, flag):
    try:
        return parse_element(system, text)
    except ValueError as exc:
        raise UsageError(f"{flag} {text!r}: {exc}") from None


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _tau(text: str) -> str:
    if not text:
        return "1"
    return "*".join(f"tau[{S}]" for S in text.split(";"))


def _head(system) -> dict:
    return {"system": str(system), "type": system.family, "rank": system.rank}


# ---------------------------------------------------------------------------
# subcommands

def cmd_triple(args) -> tuple[str, int]:
    system = _system(args)
    u = _element(system, args.u, "--u")
    v = _element(system, args.v, "--v")
    w = _element(system, args.w, "--w")
    lam = build_lambda(u, v, w)
    value = diagram_value(system, lam)
    names = [format_element(x) for x in (u, v, w)]
    if args.format == "json":
        return _json({**_head(system), "u": names[0], "v": names[1], "w": names[2],
                      "diagram": lam.to_json() if lam else None, "value": value}), EXIT_OK
    if args.format == "csv":
        return _csv(["type", "rank", "u", "v", "w", "value"],
                    [[system.family, system.rank, *names, value]]), EXIT_OK
    return (f"<[Y^{names[2]}][X_{names[0]}][X_{names[1]}]> on {system}\n"
            f"diagram: {lam if lam else 'empty'}\n"
            f"value: {value}\n"), EXIT_OK


def cmd_intersect(args) -> tuple[str, int]:
    system = _system(args)
    try:
        m = parse_monomial(system, args.monomial)
    except ValueError as exc:
        raise UsageError(f"--monomial: {exc}") from None
    result = intersection_number(m)
    if args.format == "json":
        return _json({**_head(system), "monomial": str(m), **result.to_json()}), EXIT_OK
    if args.format == "csv":
        return _csv(["type", "rank", "monomial", "value", "reason"],
                    [[system.family, system.rank, str(m), result.value, result.reason.value]]), EXIT_OK
    return (f"monomial: {m}\n"
            f"diagram: {result.diagram if result.diagram else 'empty'}\n"
            f"reason: {result.reason.value}\n"
            f"value: {result.value}\n"), EXIT_OK


def cmd_structconst(args) -> tuple[str, int]:
    system = _system(args)
    u = _element(system, args.u, "--u")
    v = _element(system, args.v, "--v")
    combo = structure_constants(u, v, args.size_cap)
    nu, nv = format_element(u), format_element(v)
    if args.format == "json":
        return _json({**_head(system), "u": nu, "v": nv, "terms": combo.to_json()}), EXIT_OK
    if args.format == "csv":
        return _csv(["type", "rank", "u", "v", "w", "c"],
                    [[system.family, system.rank, nu, nv, format_element(w), c]
                     for w, c in combo.terms()]), EXIT_OK
    return f"[X_{nu}][X_{nv}] = {combo}\n", EXIT_OK


def cmd_table(args) -> tuple[str, int]:
    system = _system(args)
    check_size_cap(system, args.size_cap)
    W = enumerate_weyl(system)
    rows = []
    for u in W:
        for v in W:
            for w, c in structure_constants(u, v, args.size_cap).terms():
                rows.append([format_element(u), format_element(v), format_element(w), c])
    if args.format == "json":
        return _json({**_head(system), "constants": [
            {"u": u, "v": v, "w": w, "c": c} for u, v, w, c in rows]}), EXIT_OK
    if args.format == "csv":
        return _csv(["type", "rank", "u", "v", "w", "c"],
                    [[system.family, system.rank, *row] for row in rows]), EXIT_OK
    return "".join(f"{u} {v} {w} {c}\n" for u, v, w, c in rows), EXIT_OK


def cmd_pairing(args) -> tuple[str, int]:
    system = _system(args)
    matrix = pairing_matrix(system, args.size_cap)
    rows = [[format_element(u), format_element(v), c] for u, v, c in matrix.rows()]
    if args.format == "json":
        return _json({**_head(system), "size": len(matrix.elements), "entries": [
            {"u": u, "v": v, "value": c} for u, v, c in rows]}), EXIT_OK
    if args.format == "csv":
        return _csv(["type", "rank", "u", "v", "value"],
                    [[system.family, system.rank, *row] for row in rows]), EXIT_OK
    return "".join(f"I[{u},{v}] = {c}\n" for u, v, c in rows), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    system = _system(args)
    report = verify_family(system, args.mode, args.sample_size, args.seed, args.size_cap)
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.format == "json":
        return report.dumps() + "\n", code
    if args.format == "csv":
        return _csv(["type", "rank", "monomial", "formula", "oracle"],
                    [[system.family, system.rank, m["monomial"], m["formula"], m["oracle"]]
                     for m in report.mismatches]), code
    lines = [f"system: {system}", f"mode: {report.mode}", f"seed: {report.seed}",
             f"chain monomials: {report.chain_count}",
             f"non-chain monomials: {report.nonchain_count}",
             f"total: {report.total}", f"mismatches: {len(report.mismatches)}"]
    lines += [f"  {m['monomial']}: formula {m['formula']}, oracle {m['oracle']}"
              for m in report.mismatches]
    return "\n".join(lines) + "\n", code


def cmd_g2_table(args) -> tuple[str, int]:
    if args.type not in (None, "G2") or args.rank not in (None, 2):
        raise UsageError("g2-table takes no --type/--rank other than G2")
    system = RootSystemId("G2")
    W = enumerate_weyl(system)
    values = [(rows, I_G2(YoungDiagram(rows))) for rows in ((2, 1), (1, 1), (2, 2))]
    X = [(format_element(u), str(class_X(u))) for u in W]
    Y = [(format_element(u), str(class_Y(u))) for u in W]
    if args.format == "json":
        return _json({**_head(system),
                      "X": [{"u": u, "monomial": m} for u, m in X],
                      "Y": [{"w": w, "monomial": m} for w, m in Y],
                      "I_G2": [{"rows": list(r), "value": v} for r, v in values]}), EXIT_OK
    if args.format == "csv":
        return _csv(["class", "element", "monomial"],
                    [["X", u, m] for u, m in X] + [["Y", w, m] for w, m in Y]), EXIT_OK
    lines = ["classes [X_u]:"]
    lines += [f"  X_{u} = {_tau(m)}" for u, m in X]
    lines += ["classes [Y^w]:"]
    lines += [f"  Y^{w} = {_tau(m)}" for w, m in Y]
    lines += ["I_G2:"]
    lines += [f"  ({','.join(map(str, r))}) -> {v}" for r, v in values]
    return "\n".join(lines) + "\n", EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", choices=FAMILIES)
    common.add_argument("--rank", type=int)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--size-cap", type=int, default=None,
                        help="maximum |W| for full-group operations")

    parser = argparse.ArgumentParser(
        prog="weyltoric",
        description="Intersection numbers and structure constants for Weyl-chamber toric manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triple", parents=[common], help="<[Y^w][X_u][X_v]>")
    for flag in ("--u", "--v", "--w"):
        p.add_argument(flag, required=True)
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("intersect", parents=[common], help="degree of a tau monomial")
    p.add_argument("--monomial", required=True, help='e.g. "3;1,2,3,5;1,2,3,5;3"')
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("structconst", parents=[common], help="expand [X_u][X_v]")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_structconst)

    p = sub.add_parser("table", parents=[common], help="all structure constants")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("pairing", parents=[common], help="the pairing matrix <[Y^u][X_v]>")
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("verify", parents=[common], help="compare formulas with localization")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--sample-size", type=int, default=1000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("g2-table", parents=[common], help="G2 class lists and values")
    p.set_defaults(func=cmd_g2_table)
    return parser


_VALUE_FLAGS = ("--u", "--v", "--w", "--monomial")


def _attach_values(argv: list[str]) -> list[str]:
    """Glue ``--u -1,2`` into ``--u=-1,2`` so signed values are not read as flags."""
    out, k = [], 0
    while k < len(argv):
        if argv[k] in _VALUE_FLAGS and k + 1 < len(argv):
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _attach_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command != "g2-table" and args.type is None:
        print(f"{parser.prog} {args.command}: error: --type is required", file=stderr)
        return EXIT_USAGE
    try:
        text, code = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SizeCapExceeded as exc:
        print(f"{parser.prog} {args.command}: refused: {exc}", file=stderr)
        return EXIT_SIZE_CAP
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
