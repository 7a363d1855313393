"""Command-line front end.

Exit codes: 0 success / inconclusive, 1 error, 2 entanglement certified.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .bloch import decompose
from .detection import (
    NEG_MARGIN,
    SearchStrategy,
    StrategyKind,
    Verdict,
    detect,
    parse_subset,
    ppt_check,
    sweep,
)
from .gamma import TransformPair, gamma_min_eig, ppt_as_gamma, transpose_pair
from .io import dumps_report, load_state, loads_report, save_state
from .states import FAMILIES, family

EXIT_OK, EXIT_ERROR, EXIT_ENTANGLED = 0, 1, 2

STRATEGIES = {k.value: k for k in StrategyKind}


def _family_dims(name: str, n: int) -> tuple[int, int]:
    return (n, 1) if name == "isotropic" else (n, n)


def _transform(args) -> TransformPair:
    dims = _family_dims(args.family, args.dim)
    if args.witness:
        with open(args.witness) as fh:
            report = loads_report(fh.read())
        if report.witness is None:
            raise ValueError(f"{args.witness} carries no witness")
        return report.witness
    if args.transform == "transpose":
        return transpose_pair(dims)
    return ppt_as_gamma(args.transform.split("-", 1)[1], dims)


def cmd_gen(args) -> int:
    rho = family(args.family)(args.dim, args.p)
    save_state(rho, args.out)
    return EXIT_OK


def cmd_detect(args) -> int:
    rho = load_state(args.state)
    strategy = SearchStrategy(STRATEGIES[args.strategy], args.samples, args.seed)
    start = time.perf_counter()
    report = detect(rho, strategy)
    wall = time.perf_counter() - start
    text = dumps_report(report, wall_time=wall)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(text)
    return EXIT_ENTANGLED if report.verdict is Verdict.ENTANGLED else EXIT_OK


def cmd_sweep(args) -> int:
    if not args.lo < args.hi:
        raise ValueError("--from must be smaller than --to")
    t = _transform(args)
    result = sweep(args.family, t, args.lo, args.hi, args.steps, n=args.dim, tol=args.tol)
    make = family(args.family)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(out)
        w.writerow(["kind", "p", "min_eig", "verdict"])
        for row in result.rows:
            w.writerow(["grid", repr(row.p), repr(row.min_eig), row.verdict.value])
        for root in result.roots:
            f = gamma_min_eig(decompose(make(args.dim, root)), t)
            verdict = Verdict.ENTANGLED if f < -NEG_MARGIN else Verdict.INCONCLUSIVE
            w.writerow(["onset", repr(root), repr(f), verdict.value])
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_ppt(args) -> int:
    rho = load_state(args.state)
    subsets = None
    if args.subset:
        subsets = [parse_subset(s, rho.nparties) for s in args.subset]
    values = ppt_check(rho, subsets)
    for name, v in values.items():
        print(f"{name}\t{v!r}")
    return EXIT_ENTANGLED if min(values.values()) < -NEG_MARGIN else EXIT_OK


def cmd_decompose(args) -> int:
    rho = load_state(args.state)
    b = decompose(rho)
    print(json.dumps({"dims": list(b.dims), "norms": b.norms()}, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blochsep", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write an example state file")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("detect", help="search for an entanglement witness")
    p.add_argument("--state", required=True)
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default="sign-diag")
    p.add_argument("--samples", type=int, default=SearchStrategy().samples)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="also write the report here")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("sweep", help="scan a state family and locate sign changes")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--from", dest="lo", type=float, default=0.0)
    p.add_argument("--to", dest="hi", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument(
        "--transform",
        choices=["transpose", "ppt-A", "ppt-B", "ppt-AB"],
        default="transpose",
        help="scaled transpose diagonal on each leading party, or a 2x2xN partial-transpose pair",
    )
    p.add_argument("--witness", help="use the witness stored in a detect report instead")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("ppt", help="smallest eigenvalue of partial transposes")
    p.add_argument("--state", required=True)
    p.add_argument("--subset", action="append", help="party letters, e.g. A or AB; repeatable")
    p.set_defaults(func=cmd_ppt)

    p = sub.add_parser("decompose", help="print coefficient-operator norms")
    p.add_argument("--state", required=True)
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"blochsep {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
