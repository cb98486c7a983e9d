"""codedist command line.

Exit codes: 0 success, 1 parse or usage error, 2 budget exceeded (any
skipped computation), 3 ``compare`` found no distinguishing invariant.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .budget import default_budget
from .codefile import format_code, parse_code, parse_generator, read_code
from .constructions import (
    builtin,
    builtin_names,
    even_weight,
    gabidulin,
    hadamard_rank,
    reed_solomon,
    simplex,
    twisted_reed_solomon,
)
from .errors import (
    AmbientMismatch,
    BadParams,
    BudgetExceeded,
    CodeDistError,
    ParseError,
    RankDeficient,
    UnknownConstruction,
    UnknownName,
)
from .field import GF, field_new
from .goldens import run_goldens
from .invariants import compare_codes, greedy_generator, partial_distances
from .report import RunConfig, build_report, format_tsv

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_SAME = 0, 1, 2, 3


def _range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


def _config(args) -> RunConfig:
    return RunConfig(budget=args.budget, level_cap=args.level_cap, workers=args.workers,
                     output=args.output, alpha_range=getattr(args, "alpha_range", None))


def _err(msg: str):
    print(f"codedist: {msg}", file=sys.stderr)


# -- invariants -------------------------------------------------------------------------------


def cmd_invariants(args) -> int:
    C = read_code(args.file)
    wants_other = args.greedy or args.radii or args.mu or args.sld or args.bounds or args.extend or args.asymptotic
    alpha = args.alpha is not None or not wants_other
    args.alpha_range = args.alpha if isinstance(args.alpha, tuple) else None
    if args.alpha_range is not None:
        lo, hi = args.alpha_range
        if not 1 <= lo <= hi <= C.N:
            raise BadParams(f"alpha range must lie in 1..{C.N}")
    cfg = _config(args)
    rep = build_report(C, cfg, alpha=alpha, greedy=args.greedy, radii=args.radii, mu=args.mu, sld=args.sld,
                       bounds=args.bounds, extend=args.extend, asymptotic=args.asymptotic)
    sys.stdout.write(rep.emit() if cfg.output == "json" else format_tsv(rep))
    for key, why in rep.data.get("skipped", {}).items():
        _err(f"skipped {key}: {why}")
    for i, why in rep.data.get("alpha", {}).get("skipped", {}).items():
        _err(f"skipped alpha_{i}: {why}")
    return EXIT_BUDGET if rep.budget_exceeded else EXIT_OK


# -- compare ----------------------------------------------------------------------------------


def cmd_compare(args) -> int:
    A, B = read_code(args.file_a), read_code(args.file_b)
    indices = range(args.alpha[0], args.alpha[1] + 1) if isinstance(args.alpha, tuple) else None
    cmp = compare_codes(A, B, indices, args.budget, greedy=args.greedy, radii=args.radii, mu=args.mu,
                        sld=args.sld, asymptotic=args.asymptotic)
    if args.output == "json":
        data = {"schema": 1, "verdict": cmp.verdict, "first_difference": cmp.first_difference,
                "rows": [[name, a, b] for name, a, b in cmp.rows]}
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        print(f"verdict\t{cmp.verdict}")
        for name, a, b in cmp.rows:
            mark = "*" if a is not None and b is not None and a != b else ""
            print(f"{name}\t{'?' if a is None else a}\t{'?' if b is None else b}\t{mark}".rstrip("\t"))
    skipped = any(a is None or b is None for _, a, b in cmp.rows)
    if cmp.inequivalent:
        return EXIT_OK
    return EXIT_BUDGET if skipped else EXIT_SAME


# -- construct --------------------------------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise BadParams(f"{args.name} needs " + ", ".join("--" + m for m in missing))


def _points(text):
    return None if text is None else [int(t) for t in text.split(",")]


def construct(args):
    name = args.name
    if name == "rs":
        _need(args, "q", "k")
        return reed_solomon(GF(args.q), args.k, _points(args.points))
    if name == "twisted-rs":
        return twisted_reed_solomon()
    if name == "gabidulin":
        _need(args, "q", "m", "k")
        base = GF(args.q)
        ext = field_new(base.p, base.e * args.m)
        return gabidulin(base, ext, args.k, _points(args.points))
    if name == "simplex":
        _need(args, "q", "k")
        return simplex(args.q, args.k)
    if name == "even-weight":
        _need(args, "n")
        return even_weight(args.n)
    if name == "hadamard":
        _need(args, "q", "m", "k")
        return hadamard_rank(args.q, args.m, args.k)
    if name == "builtin":
        if not args.params:
            raise BadParams("builtin needs a name: " + ", ".join(builtin_names()))
        try:
            return builtin(args.params[0])
        except UnknownName:
            raise UnknownConstruction(f"unknown builtin {args.params[0]!r}") from None
    raise UnknownConstruction(f"unknown construction {name!r}")


def cmd_construct(args) -> int:
    try:
        C = construct(args)
    except (ValueError, KeyError) as exc:
        if isinstance(exc, (UnknownConstruction, BadParams)):
            raise
        raise BadParams(str(exc)) from None
    text = format_code(C)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- partial ----------------------------------------------------------------------------------


def cmd_partial(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    C = parse_code(text)
    if args.from_code:
        A = greedy_generator(C, args.budget, args.level_cap)
    else:
        _, _, ext, rows = parse_generator(text)
        A = C.gen if ext is not None else rows
    prof = partial_distances(C.field, A, C.ambient, args.budget)
    if args.output == "json":
        data = {"schema": 1, "matrix": [[int(x) for x in r] for r in np.asarray(prof.matrix)],
                "deltas": prof.deltas, "exponent": prof.exponent, "exponent_ceiling": prof.ceiling}
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        if args.from_code:
            for row in np.asarray(prof.matrix):
                print("row\t" + " ".join(str(int(x)) for x in row))
        print("delta\t" + ",".join(map(str, prof.deltas)))
        if prof.exponent is not None:
            print(f"exponent\t{prof.exponent:.6f}")
            print(f"exponent_ceiling\t{prof.ceiling:.6f}")
    return EXIT_OK


# -- goldens ----------------------------------------------------------------------------------


def cmd_goldens(args) -> int:
    results = run_goldens()
    bad = 0
    for r in results:
        fail = r.status == "FAIL" or (args.strict and r.status == "corrected")
        bad += fail
        line = f"{r.status}\t{r.seconds:.2f}s\t{r.name}"
        if r.diff:
            line += f"\t{r.diff}"
        print(line)
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "corrected", "FAIL")}
    print(f"summary\tpass={counts['pass']}\tcorrected={counts['corrected']}\tFAIL={counts['FAIL']}")
    return 1 if bad else EXIT_OK


# -- parser -----------------------------------------------------------------------------------


def _common(p):
    p.add_argument("--budget", type=int, default=None, help="weight evaluations per computation")
    p.add_argument("--level-cap", type=int, default=10**6, help="greedy level-set size cap")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", choices=("tsv", "json"), default="tsv")


def _flags(p):
    p.add_argument("--alpha", nargs="?", const=True, default=None, type=_range, metavar="LO..HI",
                   help="code distances, optionally restricted to an index range")
    p.add_argument("--greedy", action="store_true")
    p.add_argument("--radii", action="store_true")
    p.add_argument("--mu", action="store_true")
    p.add_argument("--sld", action="store_true")
    p.add_argument("--asymptotic", type=int, metavar="LMAX")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="codedist", description="Code distances of linear codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="compute invariants of one code")
    p.add_argument("file")
    _flags(p)
    p.add_argument("--bounds", action="store_true")
    p.add_argument("--extend", type=int, metavar="L")
    _common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("compare", help="compare two codes in the same ambient space")
    p.add_argument("file_a")
    p.add_argument("file_b")
    _flags(p)
    _common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("construct", help="write a code file")
    p.add_argument("name", help="rs, twisted-rs, gabidulin, simplex, even-weight, hadamard or builtin")
    p.add_argument("params", nargs="*")
    for opt in ("q", "k", "m", "n"):
        p.add_argument(f"--{opt}", type=int)
    p.add_argument("--points", help="comma-separated evaluation points")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("partial", help="partial distances and exponent of a generator")
    p.add_argument("file")
    p.add_argument("--from-code", action="store_true", help="use the greedy generator of the code")
    _common(p)
    p.set_defaults(func=cmd_partial)

    p = sub.add_parser("goldens", help="re-run the worked examples")
    p.add_argument("--strict", action="store_true", help="count verified corrections as failures")
    p.set_defaults(func=cmd_goldens)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if getattr(args, "budget", 0) is None:
        args.budget = default_budget()
    try:
        return args.func(args)
    except ParseError as exc:
        _err(f"{getattr(args, 'file', '')}: {exc}")
        return EXIT_PARSE
    except BudgetExceeded as exc:
        _err(str(exc))
        return EXIT_BUDGET
    except (UnknownConstruction, BadParams, AmbientMismatch, RankDeficient, ValueError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    except OSError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except CodeDistError as exc:
        _err(str(exc))
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
