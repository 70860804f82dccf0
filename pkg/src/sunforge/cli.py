"""Command-line front end.

Subcommands: verify, construct, bounds, search, count.  Every run echoes its
resolved configuration into the report.  Exit codes: 0 success / no violation,
1 violation found, 2 parse or parameter errors, 3 enumeration cap exceeded.
The search cache directory honours the SUNFORGE_CACHE environment variable.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bounds as bounds_mod
from . import construct as construct_mod
from . import detect, search
from .bitfam import Family, FamilyParseError, dump_family, load_family
from .gf import Field

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_CAP = 3


@dataclasses.dataclass
class RunConfig:
    """Resolved invocation parameters, echoed into every report."""

    subcommand: str
    params: dict
    seed: Optional[int]
    input_path: Optional[str]
    output_path: Optional[str]
    format: str
    workers: int

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _json_default(obj):
    if isinstance(obj, Fraction):
        return {"numerator": obj.numerator, "denominator": obj.denominator}
    raise TypeError(f"not JSON serializable: {type(obj)}")


def _emit(report: dict, config: RunConfig) -> None:
    report = {"config": config.as_dict(), **report}
    text = json.dumps(report, indent=2, default=_json_default)
    if config.output_path:
        Path(config.output_path).write_text(text + "\n")
    else:
        print(text)


def _emit_table(rows, config: RunConfig) -> None:
    if config.format == "json":
        _emit({"rows": [dataclasses.asdict(r) for r in rows]}, config)
        return
    lines = [f"{'name':32} {'value':>24} {'rate':>12}  formula"]
    for r in rows:
        val = float(r.value) if isinstance(r.value, Fraction) else r.value
        val_s = f"{val:.6g}" if isinstance(val, float) else str(val)
        rate_s = f"{r.rate:.6f}" if r.rate is not None else "-"
        lines.append(f"{r.name:32} {val_s:>24} {rate_s:>12}  {r.formula}")
    text = "\n".join(lines)
    if config.output_path:
        Path(config.output_path).write_text(text + "\n")
    else:
        print(text)


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    config = RunConfig(
        subcommand="verify",
        params={"kind": args.kind, "r": args.r},
        seed=None,
        input_path=args.input,
        output_path=args.out,
        format=args.format,
        workers=args.workers,
    )
    try:
        family = load_family(args.input)
    except (FamilyParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.kind == "ns":
            if not isinstance(family, Family):
                print("error: near-sunflower checks need a binary family", file=sys.stderr)
                return EXIT_PARSE
            witness = detect.find_near_sunflower(
                family, args.r, node_cap=args.cap, workers=args.workers
            )
        else:
            witness = detect.find_focal(
                family, args.r, node_cap=args.cap, workers=args.workers
            )
    except detect.CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if witness is None:
        _emit({"violation": None, "members": len(family)}, config)
        return EXIT_OK
    _emit({"violation": json.loads(witness.to_json()), "members": len(family)}, config)
    return EXIT_VIOLATION


def cmd_construct(args) -> int:
    config = RunConfig(
        subcommand="construct",
        params={
            "kind": args.kind,
            "n": args.n,
            "r": args.r,
            "q": args.q,
            "p": args.p,
        },
        seed=args.seed,
        input_path=None,
        output_path=args.out,
        format=args.format,
        workers=args.workers,
    )
    try:
        if args.kind == "rs":
            field = Field.of_order(args.q)
            family = construct_mod.reed_solomon_family(field, args.n, args.r)
            check = detect.find_focal(family, args.r, node_cap=args.cap)
            if check is not None:
                raise AssertionError("evaluation family failed its focal re-check")
            trace = {
                "kind": "rs",
                "q": args.q,
                "n": args.n,
                "r": args.r,
                "members": len(family),
                "verified": True,
            }
        else:
            family, alt = construct_mod.random_with_alterations(
                args.n, args.r, args.kind, seed=args.seed, p=args.p
            )
            trace = dataclasses.asdict(alt)
            trace["final_size"] = alt.final_size
    except detect.CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = dump_family(family)
    if args.out:
        Path(args.out).write_text(text)
        trace_path = args.trace or (args.out + ".trace.json")
        Path(trace_path).write_text(
            json.dumps({"config": config.as_dict(), "trace": trace}, indent=2) + "\n"
        )
    else:
        print(text, end="")
        print(json.dumps({"config": config.as_dict(), "trace": trace}, indent=2))
    return EXIT_OK


def cmd_bounds(args) -> int:
    config = RunConfig(
        subcommand="bounds",
        params={"n": args.n, "r": args.r, "q": args.q, "k": args.k},
        seed=None,
        input_path=None,
        output_path=args.out,
        format=args.format,
        workers=args.workers,
    )
    try:
        rows = bounds_mod.report_grid(
            ns=args.n or (), rs=args.r or (), qs=args.q or (), ks=args.k or ()
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit_table(rows, config)
    return EXIT_OK


def cmd_search(args) -> int:
    config = RunConfig(
        subcommand="search",
        params={"n": args.n, "r": args.r, "kind": args.kind},
        seed=None,
        input_path=None,
        output_path=args.out,
        format=args.format,
        workers=args.workers,
    )
    try:
        if args.no_cache:
            result = search.exact_extremal(args.n, args.r, args.kind)
        else:
            result = search.exact_extremal_cached(args.n, args.r, args.kind)
    except detect.CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(
        {
            "value": result.value,
            "witness": [str(v) for v in result.witness],
            "nodes_explored": result.nodes_explored,
        },
        config,
    )
    return EXIT_OK


def cmd_count(args) -> int:
    config = RunConfig(
        subcommand="count",
        params={"n": args.n, "r": args.r, "kind": args.kind, "mode": args.mode},
        seed=None,
        input_path=None,
        output_path=args.out,
        format=args.format,
        workers=args.workers,
    )
    report: dict = {}
    try:
        if args.mode in ("enumerate", "both"):
            report["matrices_enumerated"] = construct_mod.count_matrices(
                args.n, args.r, args.kind, mode="enumerate"
            )
        if args.mode in ("closed", "both"):
            report["matrices_closed_form"] = construct_mod.count_matrices(
                args.n, args.r, args.kind, mode="closed"
            )
        if args.brute:
            report["cube_tuples"] = search.brute_force_count(args.n, args.r, args.kind)
            report["cube_tuple_bound"] = bounds_mod.count_bound(
                args.n, args.r, args.kind
            )
    except detect.CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(report, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunforge",
        description="near-sunflower and focal-family toolkit",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="json")
        p.add_argument("--out", default=None, help="write the report here")
        p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="scan a family file for violations")
    p.add_argument("--in", dest="input", required=True, help="family file")
    p.add_argument("--kind", choices=("ns", "ff"), required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--cap", type=int, default=detect.DEFAULT_NODE_CAP)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit a generated family")
    p.add_argument("--kind", choices=("rs", "ns", "ff"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--cap", type=int, default=detect.DEFAULT_NODE_CAP)
    p.add_argument("--trace", default=None, help="trace JSON path")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="bound table over a parameter grid")
    p.add_argument("--n", type=_int_list, default=None)
    p.add_argument("--r", type=_int_list, default=None)
    p.add_argument("--q", type=_int_list, default=None)
    p.add_argument("--k", type=_int_list, default=None)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exact extremal value for a tiny cube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=search.KINDS, required=True)
    p.add_argument("--no-cache", action="store_true")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("count", help="column-condition matrix counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=("ns", "ff"), required=True)
    p.add_argument("--mode", choices=("enumerate", "closed", "both"), default="both")
    p.add_argument("--brute", action="store_true", help="also count cube tuples")
    common(p)
    p.set_defaults(func=cmd_count)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
