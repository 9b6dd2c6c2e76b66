"""Command-line entry point: ``ulamcodes <subcommand> ...``.

Exit status is 0 on success, 1 when decoding fails or a verification check
does not hold, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

import numpy as np

from ulamcodes import codefile
from ulamcodes.basecode import AmbiguousDecode, DecodeError, verify_min_distance
from ulamcodes.bounds import bounds_report
from ulamcodes.channel import all_patterns, delete_at, sample_pattern
from ulamcodes.deletion import build_code, decode, encode, size_report, verify_deletion_code
from ulamcodes.mapping import build_erased_word, f_inverse, f_map
from ulamcodes.metrics import distance, metric_names
from ulamcodes.perm import format_perm, parse_perm, parse_sequence

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


def _thread_limit() -> int:
    raw = os.environ.get("ULAMCODES_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"ULAMCODES_THREADS must be a non-negative integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"ULAMCODES_THREADS must be a non-negative integer, got {raw!r}")
    return value


def _emit_json(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _read_lines(path: str) -> list[str]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return [ln for ln in text.splitlines() if ln.strip()]


def cmd_distance(args) -> int:
    lines = _read_lines(args.file)
    if len(lines) != 2:
        raise UsageError(f"expected exactly two lines, found {len(lines)}")
    x, y = (parse_perm(ln) for ln in lines)
    print(distance(args.metric, x, y))
    return 0


def cmd_map(args) -> int:
    for line in _read_lines(args.file):
        if args.dir == "forward":
            seq = parse_sequence(line)
            if args.n is not None and len(seq) < args.n:
                print(build_erased_word(seq, args.n))
            else:
                print(format_perm(f_map(seq)))
        else:
            print(format_perm(f_inverse(parse_perm(line)).base))
    return 0


def _parse_label(raw: str):
    if raw == "auto":
        return "auto"
    return tuple(int(c) for c in raw.split(",")) if raw else ()


def cmd_construct(args) -> int:
    if args.n < 1 or args.t < 0:
        raise UsageError("need n >= 1 and t >= 0")
    if args.t and args.n + 1 < 3 * args.t + 1:
        raise UsageError(f"need n+1 >= 3t+1, got n={args.n}, t={args.t}")
    code = build_code(args.n, args.t, label=_parse_label(args.label), construction=args.construction)
    text = codefile.dumps_base(code.base, args.n, args.t) if args.base else codefile.dumps_code(code)
    Path(args.output).write_text(text, encoding="utf-8")
    _emit_json({"schema_version": SCHEMA_VERSION, **size_report(code)})
    return 0


def cmd_encode(args) -> int:
    code = codefile.to_code(codefile.read(args.code))
    print(format_perm(encode(code, args.index)))
    return 0


def cmd_decode(args) -> int:
    code = codefile.to_code(codefile.read(args.code))
    received = parse_sequence(" ".join(args.received))
    try:
        print(format_perm(decode(code, received)))
    except AmbiguousDecode as exc:
        print(f"AMBIGUOUS: {exc}", file=sys.stderr)
        return 1
    except DecodeError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    return 0


def _simulate(code, trials: int, seed: int, exhaustive: bool) -> dict:
    n, t = code.n, code.t
    counts = {"successes": 0, "failures": 0, "ambiguous": 0, "miscorrections": 0}
    if exhaustive:
        jobs = ((w, pat) for w in code.words for pat in all_patterns(n, t))
    else:
        rng = random.Random(seed)
        jobs = (
            (code.words[rng.randrange(len(code))], sample_pattern(n, t, rng.randrange(2**32)))
            for _ in range(trials)
        )
    total = 0
    for word, pat in jobs:
        total += 1
        try:
            out = decode(code, delete_at(word, pat))
        except AmbiguousDecode:
            counts["ambiguous"] += 1
            continue
        except DecodeError:
            counts["failures"] += 1
            continue
        if out == word:
            counts["successes"] += 1
        else:
            counts["failures"] += 1
            counts["miscorrections"] += 1
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": "exhaustive" if exhaustive else "random",
        "seed": None if exhaustive else seed,
        "n": n,
        "t": t,
        "code_size": len(code),
        "trials": total,
        **counts,
    }


def cmd_simulate(args) -> int:
    code = codefile.to_code(codefile.read(args.code))
    if len(code) == 0:
        raise UsageError("code is empty")
    if not args.exhaustive and args.trials < 0:
        raise UsageError("--trials must be non-negative")
    _emit_json(_simulate(code, args.trials, args.seed, args.exhaustive))
    return 0


def cmd_bounds(args) -> int:
    if not 0 <= args.t < args.n:
        raise UsageError("need 0 <= t < n")
    _emit_json(bounds_report(args.n, args.t, graph=args.graph))
    return 0


def cmd_verify(args) -> int:
    cf = codefile.read(args.file)
    if args.ulam:
        t = cf.t if args.t is None else args.t
        words = cf.words if cf.metric == "ulam" else codefile.to_code(cf).words
        ok = verify_deletion_code(words, t)
    else:
        words = cf.words if cf.metric == "hamming" else [f_map(w) for w in cf.words]
        ok = verify_min_distance(np.array(words, dtype=np.int16).reshape(len(words), -1), args.dmin)
    print("true" if ok else "false")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ulamcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="distance between the two permutations in a file")
    p.add_argument("--metric", required=True, choices=list(metric_names()))
    p.add_argument("file")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("map", help="apply the successor map or its inverse line by line")
    p.add_argument("--dir", required=True, choices=["forward", "inverse"])
    p.add_argument("--n", type=int, help="original length, for forward-mapping sequences with deletions")
    p.add_argument("file")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("construct", help="build a t-deletion code and write it to a file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--label", default="auto", help="'auto' or comma-separated syndrome components")
    p.add_argument("--construction", choices=["syndrome", "greedy"], default="syndrome")
    p.add_argument("--base", action="store_true", help="write the length n+1 Hamming base code instead")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="message index to codeword")
    p.add_argument("--code", required=True)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="recover a codeword from a sequence with deletions")
    p.add_argument("--code", required=True)
    p.add_argument("received", nargs="+")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run the deletion channel against a code")
    p.add_argument("--code", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("bounds", help="bound evaluators and confusability-graph statistics")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--graph", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check a code file's minimum distance")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dmin", type=int, help="Hamming distance the base words must reach")
    group.add_argument("--ulam", action="store_true", help="check Ulam distance > t instead")
    p.add_argument("--t", type=int)
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _thread_limit()
        return args.func(args)
    except (UsageError, ValueError, IndexError, KeyError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
