"""Command line front end.

Subcommands: verify, fuzz, check, enumerate.  Exit status is 0 when every
checked property holds, 1 on a property failure, 2 on usage or parse
errors.  ``--format structured`` emits sorted-key JSON that depends only on
the arguments (timings are omitted unless ``--timings`` is given).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import ProjPlaneError
from .fields import parse_field
from .identities import eval_D, eval_P, random_configuration
from .plane_enum import (
    EXHAUSTIVE_MAX_Q,
    enumerate_plane,
    join_meet_agree,
    sweep_desargues,
    sweep_pappus,
)
from .report import analyze, format_config, parse_config_json, parse_config_text, render_text
from .symbolic import IDENTITIES, prove_identity

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, structured: dict, text: str) -> None:
    if args.format == "structured":
        payload = json.dumps(structured, indent=2, sort_keys=True) + "\n"
    else:
        payload = text
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)


def cmd_verify(args) -> int:
    names = list(IDENTITIES)
    if args.only:
        unknown = [n for n in args.only if n not in IDENTITIES]
        if unknown:
            raise UsageError(f"unknown identity: {', '.join(unknown)} (choose from {', '.join(IDENTITIES)})")
        names = args.only
    reports = [prove_identity(n) for n in names]
    proved = sum(r.is_zero for r in reports)
    lines = []
    for r in reports:
        status = "proved" if r.is_zero else "FAILED"
        lines.append(
            f"{r.name:<14} {status:<7} lhs terms {r.lhs_terms:>6}  rhs terms {r.rhs_terms:>6}"
            f"  difference terms {r.difference_terms}  ({r.seconds:.3f}s)"
        )
    lines.append(f"{proved}/{len(reports)} proved")
    structured = {
        "command": "verify",
        "identities": [r.to_dict(timings=args.timings) for r in reports],
        "proved": proved,
        "total": len(reports),
    }
    _emit(args, structured, "\n".join(lines) + "\n")
    return EXIT_OK if proved == len(reports) else EXIT_FAIL


def cmd_fuzz(args) -> int:
    field = parse_field(args.field)
    rng = random.Random(args.seed)
    failures = []
    for i in range(args.n):
        c = random_configuration(field, rng, args.bound)
        P, D = eval_P(c), eval_D(c)
        if not (P.holds and D.holds):
            failures.append({"index": i, "P": P.holds, "D": D.holds, "configuration": format_config(field, c)})
    lines = [f"field {field.name}  seed {args.seed}  configurations {args.n}  failures {len(failures)}"]
    for f in failures:
        lines.append(f"mismatch at #{f['index']} (P holds: {f['P']}, D holds: {f['D']}):")
        lines.append(f["configuration"].rstrip())
    structured = {
        "command": "fuzz",
        "field": field.name,
        "seed": args.seed,
        "n": args.n,
        "bound": args.bound,
        "failures": failures,
    }
    _emit(args, structured, "\n".join(lines) + "\n")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_check(args) -> int:
    text = Path(args.path).read_text()
    json_input = args.input_format == "structured" or (
        args.input_format == "auto" and args.path.endswith(".json")
    )
    field, config = (parse_config_json if json_input else parse_config_text)(text)
    report = analyze(field, config)
    _emit(args, {"command": "check", **report}, render_text(report))
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.exhaustive and args.q > EXHAUSTIVE_MAX_Q:
        raise UsageError(f"--exhaustive is limited to q <= {EXHAUSTIVE_MAX_Q}")
    cat = enumerate_plane(args.q)
    inv = cat.invariants()
    inv["join_meet_agree"] = join_meet_agree(cat)
    exhaustive = True if args.exhaustive else None
    pap = sweep_pappus(args.q, n=args.n, seed=args.seed, exhaustive=exhaustive, catalog=cat)
    des = sweep_desargues(args.q, n=args.n, seed=args.seed, exhaustive=exhaustive, catalog=cat)
    ok = all(inv.values()) and pap.ok and des.ok
    lines = [f"PG(2,{args.q}): {len(cat.points)} points, {len(cat.lines)} lines, {args.q + 1} per line"]
    lines += [f"  {k}: {'ok' if v else 'FAILED'}" for k, v in inv.items()]
    pd, dd = pap.to_dict(), des.to_dict()
    lines.append(f"pappus sweep ({pap.mode}):")
    lines += [f"  {k}: {v}" for k, v in pd.items() if k not in ("q", "mode")]
    lines.append(f"desargues sweep ({des.mode}):")
    lines += [f"  {k}: {v}" for k, v in dd.items() if k not in ("q", "mode")]
    lines.append("all sweeps pass" if ok else "FAILURES FOUND")
    structured = {
        "command": "enumerate",
        "q": args.q,
        "points": len(cat.points),
        "lines": len(cat.lines),
        "invariants": inv,
        "pappus": pd,
        "desargues": dd,
        "ok": ok,
    }
    _emit(args, structured, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--out", help="write output to this path instead of stdout")

    parser = argparse.ArgumentParser(prog="projplane", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="prove the identity catalog symbolically")
    p.add_argument("--only", action="append", metavar="NAME", help="prove only this identity (repeatable)")
    p.add_argument("--timings", action="store_true", help="include wall times in structured output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", parents=[common], help="evaluate both formulas on random configurations")
    p.add_argument("--field", default="rational")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--bound", type=int, default=10, help="rational numerator/denominator bound")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("check", parents=[common], help="analyze one configuration file")
    p.add_argument("path")
    p.add_argument("--input-format", choices=("auto", "text", "structured"), default="auto")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate PG(2,q) and sweep both theorems")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--n", type=int, help="sample count for sampled sweeps")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ProjPlaneError, OSError) as e:
        print(f"projplane {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
