"""Command line front end.

Exit codes: 0 ok, 2 malformed input, 3 validation failure, 4 invariant
violation (closed-form or covering-identity mismatch).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import io
from .families import (graph_associahedron_cover, hessenberg_betti_closed_form,
                       permutahedron_cover, secant_numbers)
from .small_cover import (InconsistencyError, SmallCover, ValidationError, betti_numbers,
                          check_faces, euler_characteristic, is_orientable, mod2_betti,
                          moment_angle_euler, subset_members, validate)

EXIT_FORMAT, EXIT_INVALID, EXIT_MISMATCH = 2, 3, 4


def _subset(S: int) -> dict:
    return {"bitmask": S, "members": subset_members(S)}


def build_report(cover: SmallCover, description: str, breakdown: bool = False,
                 jobs: int = 1) -> dict:
    """Everything computed for one cover, as a JSON-ready dict."""
    betti = betti_numbers(cover, jobs=jobs)
    orientable, witness = is_orientable(cover)
    report = {
        "input": description,
        "n": cover.n,
        "m": cover.m,
        "betti": list(betti),
        "mod2_betti": mod2_betti(cover),
        "orientable": orientable,
        "witness": _subset(witness) if orientable else None,
        "euler": euler_characteristic(cover, betti),
    }
    if breakdown:
        report["breakdown"] = [
            dict(_subset(S), contributions={str(q): r for q, r in sorted(c.items())})
            for S, c in sorted(betti.breakdown.items())
        ]
    return report


def _print_report(report: dict, out):
    print(f"input: {report['input']}  (n={report['n']}, m={report['m']})", file=out)
    closed = report.get("closed_form")
    head = f"{'degree':>6} {'betti':>8} {'mod2':>8}" + (f" {'closed':>8}" if closed else "")
    print(head, file=out)
    for q, b in enumerate(report["betti"]):
        line = f"{q:>6} {b:>8} {report['mod2_betti'][q]:>8}"
        if closed:
            line += f" {closed[q]:>8}"
        print(line, file=out)
    if closed:
        print(f"closed form A_2i*C(n,2i): {report['verdict']}", file=out)
    if report["orientable"]:
        w = report["witness"]
        members = ",".join(map(str, w["members"]))
        print(f"orientable: yes (S = {{{members}}}, bitmask {w['bitmask']})", file=out)
    else:
        print("orientable: no", file=out)
    print(f"euler characteristic: {report['euler']}", file=out)
    if "breakdown" in report:
        print("per-subset contributions (degree: rank):", file=out)
        for row in report["breakdown"]:
            members = ",".join(map(str, row["members"]))
            contrib = ", ".join(f"{q}: {r}" for q, r in row["contributions"].items()) or "-"
            print(f"  S={{{members}}} (bitmask {row['bitmask']}): {contrib}", file=out)


def _emit_report(report: dict, args, elapsed: float, out):
    if args.json:
        # no timing here: reports must be reproducible byte for byte
        print(json.dumps(report, indent=2), file=out)
    else:
        _print_report(report, out)
        print(f"time: {elapsed:.3f} s", file=out)


def _load_cover(path: str) -> SmallCover:
    K, chi = io.load_problem(path)
    return validate(K, chi)


def cmd_betti(args, out) -> int:
    t0 = time.perf_counter()
    cover = _load_cover(args.problem)
    report = build_report(cover, args.problem, args.breakdown, args.jobs)
    _emit_report(report, args, time.perf_counter() - t0, out)
    return 0


def cmd_permutahedron(args, out) -> int:
    t0 = time.perf_counter()
    cover = permutahedron_cover(args.n)
    if args.emit:
        io.write_json(io.cover_to_json(cover), args.emit)
    report = build_report(cover, f"permutahedron n={args.n}", args.breakdown, args.jobs)
    closed = [hessenberg_betti_closed_form(args.n, i) for i in range(len(report["betti"]))]
    report["closed_form"] = closed
    report["verdict"] = "MATCH" if closed == report["betti"] else "MISMATCH"
    _emit_report(report, args, time.perf_counter() - t0, out)
    return 0 if report["verdict"] == "MATCH" else EXIT_MISMATCH


def cmd_graph_assoc(args, out) -> int:
    t0 = time.perf_counter()
    g = io.load_graph(args.graph)
    try:
        cover = graph_associahedron_cover(g)
    except ValueError as e:
        if isinstance(e, ValidationError):
            raise
        raise io.FormatError(str(e)) from e
    if args.emit:
        io.write_json(io.cover_to_json(cover), args.emit)
    report = build_report(cover, args.graph, args.breakdown, args.jobs)
    _emit_report(report, args, time.perf_counter() - t0, out)
    return 0


def cmd_validate(args, out) -> int:
    K, chi = io.load_problem(args.problem)
    results = check_faces(K, chi)
    for face, ok in results:
        names = ", ".join(K.labels[v] for v in face)
        print(f"{'pass' if ok else 'FAIL'}  [{names}]", file=out)
    try:
        validate(K, chi)
    except ValidationError as e:
        print(f"invalid: {e}", file=out)
        return EXIT_INVALID
    print(f"valid: {len(results)} maximal faces checked", file=out)
    return 0


def cmd_ma_euler(args, out) -> int:
    cover = _load_cover(args.problem)
    za = moment_angle_euler(cover.K, cover.m)
    chi_n = euler_characteristic(cover)
    scaled = 2 ** (cover.m - cover.n) * chi_n
    verdict = "MATCH" if za == scaled else "MISMATCH"
    if args.json:
        print(json.dumps({"input": args.problem, "moment_angle_euler": za,
                          "euler": chi_n, "sheets": 2 ** (cover.m - cover.n),
                          "verdict": verdict}, indent=2), file=out)
    else:
        print(f"chi(Z_K(D1,S0)) = {za}", file=out)
        print(f"2^(m-n) * chi(N) = {2 ** (cover.m - cover.n)} * {chi_n} = {scaled}", file=out)
        print(verdict, file=out)
    return 0 if verdict == "MATCH" else EXIT_MISMATCH


def cmd_secant(args, out) -> int:
    table = secant_numbers(args.k)
    if args.json:
        print(json.dumps(table), file=out)
    else:
        for i, a in enumerate(table):
            print(f"A_{2 * i} = {a}", file=out)
    return 0


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realtoric", description="Rational Betti numbers of real toric manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, emit=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--breakdown", action="store_true", help="per-subset contributions")
        p.add_argument("--jobs", type=_positive, default=1, help="worker processes")
        if emit:
            p.add_argument("--emit", metavar="PATH", help="write the generated problem JSON")

    p = sub.add_parser("validate", help="check the minor condition face by face")
    p.add_argument("problem")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("betti", help="Betti numbers of a problem file")
    p.add_argument("problem")
    common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("permutahedron", help="real permutahedral variety on n letters")
    p.add_argument("n", type=int)
    common(p, emit=True)
    p.set_defaults(func=cmd_permutahedron)

    p = sub.add_parser("graph-assoc", help="real toric variety of a graph associahedron")
    p.add_argument("graph")
    common(p, emit=True)
    p.set_defaults(func=cmd_graph_assoc)

    p = sub.add_parser("ma-euler", help="check the moment-angle covering identity")
    p.add_argument("problem")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ma_euler)

    p = sub.add_parser("secant", help="Euler secant numbers A_0..A_2k")
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_secant)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except io.FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT
    except ValidationError as e:
        print(f"invalid: {e}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as e:
        print(f"internal inconsistency: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except ValueError as e:
        # bad generator arguments (n < 2, negative k, ...)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
