"""Command-line interface.

Exit codes: 0 on success (or a positive answer), 1 on bad input or usage,
2 when the mathematical answer is negative (an expansion that does not
terminate, unresolved probe values, a non-direct collection, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import canonical, fractran, reductions, render, specfile, sumsets
from .errors import BudgetExceeded, NotAdditiveSystemError, NotFactorableError

OK, BAD_INPUT, NEGATIVE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _spec(path: str) -> canonical.LevelSpec:
    try:
        return specfile.from_document(_read_json(path))
    except specfile.SpecError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _collection(path: str) -> sumsets.FiniteCollection:
    doc = _read_json(path)
    if not isinstance(doc, list) or not all(
        isinstance(s, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in s) for s in doc
    ):
        raise UsageError(f"{path}: expected a JSON list of integer lists")
    try:
        return sumsets.FiniteCollection(doc)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_expand(args) -> int:
    spec = _spec(args.spec)
    e = canonical.expand(spec, args.n, args.depth)
    lines = [f"{e.target} = {e}"]
    if e.zeroed:
        total = sum(e.terms)
        lines.append(f"status: zeroed at depth {e.depth}")
        lines.append(f"check: sum of terms = {total} ({'ok' if total == e.target else 'MISMATCH'})")
    else:
        lines.append(f"status: exhausted after {e.depth} steps")
        lines.append(f"remainder: {e.scales[-1]} * {e.values[-1]} = {e.remainder_at(e.depth)}")
    payload = {
        "target": e.target,
        "terms": list(e.terms),
        "status": e.status,
        "depth": e.depth,
        "remainder": e.remainder_at(e.depth),
    }
    _emit(args, payload, lines)
    return OK if e.zeroed else NEGATIVE


def cmd_trajectory(args) -> int:
    spec = _spec(args.spec)
    rec = canonical.trajectory(spec, args.n, args.depth)
    lines = [" -> ".join(map(str, rec.values)), f"status: {rec.status} at depth {rec.depth}"]
    if rec.captured_at is not None:
        lines.append(f"captured at step {rec.captured_at}")
    payload = {
        "start": rec.start,
        "values": list(rec.values),
        "status": rec.status,
        "depth": rec.depth,
        "captured_at": rec.captured_at,
    }
    _emit(args, payload, lines)
    return OK if rec.zeroed else NEGATIVE


def cmd_probe(args) -> int:
    if args.lo > args.hi:
        raise UsageError(f"--lo {args.lo} exceeds --hi {args.hi}")
    spec = _spec(args.spec)
    rep = canonical.probe_window(spec, args.lo, args.hi, args.depth)
    lines = [f"{rep.resolved}/{rep.total} resolved within depth {rep.max_depth}"]
    if rep.unresolved:
        lines.append("unresolved: " + " ".join(map(str, rep.unresolved)))
    hist = rep.histogram()
    if hist:
        lines.append("zeroing depths: " + ", ".join(f"{d}:{c}" for d, c in hist.items()))
    _emit(args, rep.to_dict(), lines)
    return OK if rep.all_resolved else NEGATIVE


def cmd_fractran(args) -> int:
    source = args.program
    path = Path(source)
    if path.is_file():
        source = path.read_text()
    try:
        program = fractran.parse(source)
    except fractran.FractranSyntaxError as exc:
        raise UsageError(str(exc)) from exc
    if args.n < 0:
        raise UsageError("input must be >= 0")
    values, halted = fractran.run(program, args.n, args.max_steps)
    status = "HALTED" if halted else "BUDGET"
    _emit(args, {"values": values, "halted": halted}, [" ".join(map(str, values)), status])
    return OK


def cmd_factor(args) -> int:
    c = _collection(args.sets)
    try:
        fac = sumsets.debruijn_factor(c)
    except NotAdditiveSystemError as exc:
        print(str(exc))
        if exc.witness is not None:
            print(f"witness: {exc.witness}")
        return NEGATIVE
    except NotFactorableError as exc:
        print(f"not factorable: {exc}")
        return NEGATIVE
    lines = ["bases: " + " ".join(map(str, fac.bases))]
    for i, group in enumerate(fac.grouping):
        lines.append(f"set {i} <- levels {' '.join(map(str, group))}")
    _emit(args, {"bases": list(fac.bases), "grouping": [list(g) for g in fac.grouping]}, lines)
    return OK


def cmd_check_direct(args) -> int:
    c = _collection(args.sets)
    res = sumsets.sumset(c)
    lines = [f"{'direct' if res.is_direct else 'not direct'}, {len(res.sum)} sums from {c.tuple_count()} tuples"]
    payload = {"direct": res.is_direct, "size": len(res.sum), "tuples": c.tuple_count()}
    if res.witness is not None:
        lines.append(f"witness: {res.witness}")
        payload["witness"] = {
            "value": res.witness.value,
            "first": list(res.witness.first),
            "second": list(res.witness.second),
        }
    ok = res.is_direct
    if args.modulus is not None:
        tiles = sumsets.tiles_mod(c, args.modulus)
        lines.append(f"tiles Z/{args.modulus}Z: {'yes' if tiles else 'no'}")
        payload["tiles_mod"] = tiles
        ok = ok and tiles
    _emit(args, payload, lines)
    return OK if ok else NEGATIVE


def cmd_render(args) -> int:
    spec = _spec(args.spec)
    strips = render.coverage_strips(spec, args.depth, args.lo, args.hi)
    if args.format == "svg":
        out = render.render_svg(strips, title=f"{spec.kind} levels 0..{args.depth}")
    else:
        out = render.render_text(strips)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return OK


def cmd_decide_consecutive(args) -> int:
    verdict = canonical.decide_consecutive(_spec(args.spec))
    print(verdict.value)
    return NEGATIVE if verdict is canonical.Completeness.INCOMPLETE else OK


def cmd_verify_tail(args) -> int:
    holds = canonical.verify_tail_condition(_spec(args.spec), args.k, args.window, args.depth)
    print("no counterexample found" if holds else "counterexample found")
    return OK if holds else NEGATIVE


def cmd_build(args) -> int:
    if args.kind == "collatz":
        spec = reductions.build_collatz()
    else:
        if not args.program:
            raise UsageError("build fractran needs --program")
        try:
            spec = reductions.build_fractran_type(fractran.parse(args.program))
        except fractran.FractranSyntaxError as exc:
            raise UsageError(str(exc)) from exc
    print(specfile.dumps(spec))
    return OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="addsys", description="Canonical collections and their dynamical systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand an integer in a canonical collection")
    p.add_argument("spec")
    p.add_argument("n", type=int)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("trajectory", help="print the trajectory of an integer")
    p.add_argument("spec")
    p.add_argument("n", type=int)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("probe", help="run every trajectory in a window")
    p.add_argument("spec")
    p.add_argument("--lo", type=int, default=-256)
    p.add_argument("--hi", type=int, default=256)
    p.add_argument("--depth", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("fractran", help="run a Fractran program (file or literal)")
    p.add_argument("program")
    p.add_argument("n", type=int)
    p.add_argument("--max-steps", type=int, default=10_000)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fractran)

    p = sub.add_parser("factor", help="factor an additive system for [N] into British levels")
    p.add_argument("sets")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("check-direct", help="decide whether a finite sumset is direct")
    p.add_argument("sets")
    p.add_argument("--modulus", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_direct)

    p = sub.add_parser("render", help="draw cumulative coverage strips")
    p.add_argument("spec")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--lo", type=int, default=-16)
    p.add_argument("--hi", type=int, default=32)
    p.add_argument("--format", choices=("svg", "text"), default="text")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("decide-consecutive", help="exact completeness test for interval digit sets")
    p.add_argument("spec")
    p.set_defaults(func=cmd_decide_consecutive)

    p = sub.add_parser("verify-tail", help="bounded check that levels k, k+1, ... cover N Z")
    p.add_argument("spec")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--window", type=int, default=20)
    p.add_argument("--depth", type=int, default=64)
    p.set_defaults(func=cmd_verify_tail)

    p = sub.add_parser("build", help="emit the spec document of a Collatz or Fractran-type collection")
    p.add_argument("kind", choices=("collatz", "fractran"))
    p.add_argument("--program")
    p.set_defaults(func=cmd_build)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
