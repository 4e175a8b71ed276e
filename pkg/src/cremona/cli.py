"""Command-line front end: ``cremona <command> ...``.

Exit codes: 0 computed (whatever the mathematical answer), 2 parse error,
3 precondition violation, 4 internal error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import degeneration, enumeration, halphen, maps
from .errors import ParseError, PreconditionError
from .lattice import (HomaloidalType, LatticeVector, characteristic_matrix,
                      dual_type, format_type, hudson_test, noether_check,
                      parse_type_literal)
from .polynomial import Poly

log = logging.getLogger("cremona")

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_INTERNAL = 0, 2, 3, 4


def _emit(args, payload, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _matrix_text(rows) -> str:
    width = max(len(str(v)) for row in rows for v in row)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in rows)


def _read_literal(text: str) -> str:
    """Inline literal, or the contents of a file when ``text`` names one (or starts with @)."""
    path = Path(text[1:]) if text.startswith("@") else Path(text)
    try:
        if text.startswith("@") or (len(text) < 256 and path.is_file()):
            return path.read_text().strip()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return text


def _parse_map(text: str) -> maps.MapTriple:
    return maps.MapTriple.parse(_read_literal(text))


# --------------------------------------------------------------------------
# type
# --------------------------------------------------------------------------

def cmd_type(args) -> int:
    d, mults = parse_type_literal(args.type)
    if args.action == "check":
        if not noether_check(d, mults):
            raise PreconditionError(f"{format_type(d, mults)} fails the Noether equalities")
        res = hudson_test(LatticeVector.of(d, mults))
        verdict = "proper" if res.proper else "improper"
        payload = {"input": {"degree": d, "multiplicities": sorted(mults, reverse=True)},
                   "proper": res.proper, "sigma_steps": res.word.sigma_count if res.proper else None,
                   "witness": list(res.witness.coefficients) if res.witness else None}
        human = verdict if res.proper else f"{verdict} (witness {res.witness})"
        _emit(args, payload, human)
        return EXIT_OK
    t = HomaloidalType(d, tuple(mults))
    if args.action == "dual":
        dual = dual_type(t)
        _emit(args, {"type": t.to_json(), "dual": dual.to_json()}, str(dual))
    else:
        m = characteristic_matrix(t)
        _emit(args, {"type": t.to_json(), "matrix": m.tolist()}, _matrix_text(m.tolist()))
    return EXIT_OK


# --------------------------------------------------------------------------
# enum
# --------------------------------------------------------------------------

def cmd_enum(args) -> int:
    fn = enumeration.enumerate_proper if args.proper_only else enumeration.enumerate_noether
    types = fn(args.degree, threads=args.threads, cache_dir=args.cache)
    if args.json:
        rows = []
        for t in types:
            row = t.to_json()
            if not args.proper_only:
                row["proper"] = hudson_test(t).proper
            rows.append(row)
        print(json.dumps({"degree": args.degree, "proper_only": args.proper_only,
                          "count": len(types), "types": rows}, sort_keys=True))
    else:
        for t in types:
            mark = "" if args.proper_only else ("  proper" if hudson_test(t).proper else "  improper")
            print(f"{t}{mark}")
        print(f"# {len(types)} types")
    return EXIT_OK


# --------------------------------------------------------------------------
# degen / theorem1
# --------------------------------------------------------------------------

def _fmt_set(s) -> str:
    return "{" + ", ".join(map(str, sorted(s))) + "}"


def cmd_degen(args) -> int:
    if args.action == "analyze":
        if args.arg is None:
            raise PreconditionError("degen analyze needs a type")
        t = HomaloidalType.parse(args.arg)
        rep = degeneration.analyze(t, horizon=args.horizon)
        human = "\n".join([
            f"type               {t}",
            f"pair offsets       {_fmt_set(rep.pair_offsets)}",
            f"quintic offsets    {_fmt_set(rep.quintic_offsets)}",
            f"collinear offsets  {_fmt_set(rep.collinear_offsets)} (special position only)",
            f"plus one           {rep.plus_one}",
            f"min general offset {rep.min_general_offset}",
            f"reachable          {_fmt_set(rep.reachable_degrees)}",
        ])
        _emit(args, rep.to_json(), human)
        return EXIT_OK
    try:
        d = int(args.arg)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"degen plus-one needs an integer degree, got {args.arg!r}") from exc
    holds, failing = degeneration.degree_plus_one_holds(d)
    payload = {"degree": d, "holds": holds, "failing": [t.to_json() for t in failing]}
    human = "\n".join([f"degree {d}: +1 inclusion {'holds' if holds else 'fails'}"]
                      + [f"  {t}" for t in failing])
    _emit(args, payload, human)
    return EXIT_OK


def cmd_theorem1(args) -> int:
    verdicts = degeneration.theorem1_battery(args.max_degree)
    lines = []
    for v in verdicts:
        word = {True: "holds", False: "fails", None: "undecided"}[v.holds]
        extra = ""
        if v.holds is False:
            extra = f" (+1 fails at degree {v.blocking}: " + ", ".join(map(str, v.failing_types)) + ")"
        elif v.holds is None:
            extra = f" (no inclusion proof from degree {v.blocking})"
        lines.append(f"d={v.degree:<3} closure(Bir_d) = Bir_<=d {word}{extra}")
    _emit(args, {"verdicts": [v.to_json() for v in verdicts]}, "\n".join(lines))
    return EXIT_OK


# --------------------------------------------------------------------------
# halphen
# --------------------------------------------------------------------------

def _int(text, what: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what} must be an integer, got {text!r}") from exc


def cmd_halphen(args) -> int:
    a = _int(args.a, "a")
    if args.action == "lambda":
        t = halphen.lambda_a(a)
        res = hudson_test(t)
        payload = {"a": a, "type": t.to_json(), "proper": res.proper,
                   "self_dual": res.proper and dual_type(t) == t}
        _emit(args, payload, f"{t} proper={payload['proper']} self_dual={payload['self_dual']}")
    elif args.action == "matrix":
        m = halphen.nu_b_power(a)
        ok = m == halphen.nu_b_closed_form(a)
        _emit(args, {"a": a, "matrix": m.tolist(), "closed_form_agrees": ok},
              _matrix_text(m.tolist()) + f"\nclosed form agrees: {ok}")
    else:
        k = _int(args.k, "k") if args.k is not None else a
        rep = halphen.obstruction_candidates(a, k)
        human = [f"Lambda_{a} in degree {rep.degree}, target degree {rep.degree + k}",
                 f"solutions: {len(rep.solutions)}; all with 9 points: {rep.all_r9}",
                 f"verdict: {rep.verdict}"]
        for s in rep.solutions:
            human.append(f"  eps={s.eps} extras={s.extras} {s.type} "
                         f"{'proper' if s.proper else 'improper'}")
        _emit(args, rep.to_json(), "\n".join(human))
    return EXIT_OK


# --------------------------------------------------------------------------
# map
# --------------------------------------------------------------------------

def cmd_map(args) -> int:
    ops = args.operands
    need = {"degree": 1, "jacobian": 1, "reduce": 1, "compose": 2, "inverse-check": 2,
            "mult": 2, "contracted": 3}[args.action]
    if len(ops) != need:
        raise PreconditionError(f"map {args.action} takes {need} operand(s), got {len(ops)}")
    f = _parse_map(ops[0])
    if args.action == "degree":
        _emit(args, {"degree": f.degree}, str(f.degree))
    elif args.action == "jacobian":
        j = maps.jacobian(f)
        _emit(args, {"jacobian": str(j)}, str(j))
    elif args.action == "reduce":
        red, h = maps.primitive_part(f)
        red = red.canonical()
        _emit(args, {"map": str(red), "factor": str(h.canonical()), "degree": red.degree},
              f"{red}\ncommon factor: {h.canonical()}")
    elif args.action == "compose":
        c = maps.compose(f, _parse_map(ops[1]))
        _emit(args, {"map": str(c), "degree": c.degree}, str(c))
    elif args.action == "inverse-check":
        g = _parse_map(ops[1])
        ok = maps.is_inverse_pair(f, g) and maps.is_inverse_pair(g, f)
        _emit(args, {"inverse": ok}, "inverse" if ok else "not inverse")
    elif args.action == "mult":
        p = maps.ProjPoint.parse(_read_literal(ops[1]))
        m = maps.multiplicity_at(f, p)
        _emit(args, {"point": str(p), "multiplicity": m}, str(m))
    else:
        h = Poly.parse(_read_literal(ops[1]))
        q = maps.ProjPoint.parse(_read_literal(ops[2]))
        ok = maps.is_contracted(f, h, q)
        _emit(args, {"contracted": ok}, str(ok).lower())
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker threads for enumeration")

    p = argparse.ArgumentParser(prog="cremona", description=__doc__.splitlines()[0])
    p.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("type", parents=[common], help="Hudson's test, dual type, characteristic matrix")
    s.add_argument("action", choices=["check", "dual", "matrix"])
    s.add_argument("type", help='type literal such as "5;2^6"')
    s.set_defaults(func=cmd_type)

    s = sub.add_parser("enum", parents=[common], help="enumerate homaloidal types of a degree")
    s.add_argument("degree", type=int)
    s.add_argument("--proper-only", action="store_true")
    s.add_argument("--cache", type=Path, default=enumeration.DEFAULT_CACHE_DIR,
                   help="cache directory (default ./.cremona-cache)")
    s.add_argument("--no-cache", dest="cache", action="store_const", const=None)
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("degen", parents=[common], help="degeneration offsets and +1 criterion")
    s.add_argument("action", choices=["analyze", "plus-one"])
    s.add_argument("arg", help="type literal (analyze) or degree (plus-one)")
    s.add_argument("--horizon", type=int, default=4)
    s.set_defaults(func=cmd_degen)

    s = sub.add_parser("theorem1", parents=[common], help="closure battery by degree")
    s.add_argument("--max-degree", type=int, default=12)
    s.set_defaults(func=cmd_theorem1)

    s = sub.add_parser("halphen", parents=[common], help="Bertini/Halphen computations")
    s.add_argument("action", choices=["lambda", "matrix", "obstruct"])
    s.add_argument("a")
    s.add_argument("k", nargs="?")
    s.set_defaults(func=cmd_halphen)

    s = sub.add_parser("map", parents=[common], help="operations on explicit maps")
    s.add_argument("action", choices=["degree", "jacobian", "compose", "inverse-check",
                                      "mult", "contracted", "reduce"])
    s.add_argument("operands", nargs="+", help="inline literals, or files holding them")
    s.set_defaults(func=cmd_map)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ArithmeticError, AssertionError, RecursionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
