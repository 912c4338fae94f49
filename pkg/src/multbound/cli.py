"""Command line interface.

Exit codes: 0 all requested checks passed (or were inapplicable), 1 any
check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import CHECK_NAMES, check_dual_identities, evaluate_ideal
from .betti import betti_oracle
from .campaign import FAMILIES, CampaignConfig, CampaignError, run_campaign
from .koszul import reduction_report
from .monomials import BoundVector, ideal_from_json
from .simplicial import complex_from_json, complex_to_json


def _load_json(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _parse_checks(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    for name in names:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)}")
    if not names:
        raise ValueError("empty check list")
    return names


def _cmd_check(args: argparse.Namespace) -> int:
    ideal = ideal_from_json(_load_json(args.ideal))
    checks = _parse_checks(args.checks)
    report = evaluate_ideal(ideal, checks, cap=args.cap)
    print(f"ideal {report.ideal_id}: n={report.n}, generators={report.num_gens}, "
          f"max degree={report.max_gen_degree}")
    if report.multiplicity is not None:
        print(f"e={report.multiplicity} codim={report.codim} pdim={report.pdim} "
              f"reg={report.reg} M=({','.join(map(str, report.max_shifts))}) "
              f"cm={report.cohen_macaulay}")
    if report.upper_bound is not None:
        print(f"upper bound={report.upper_bound} tightness={report.tightness} "
              f"weak bound={report.weak_bound}")
    for name in CHECK_NAMES:
        result = report.results.get(name)
        if result is not None:
            print(f"{name}: {result.verdict}  [{result.detail}]")
    if args.betti_grid:
        print(betti_oracle(ideal, args.cap).format_grid())
    return 1 if report.any_fail else 0


def _cmd_dual(args: argparse.Namespace) -> int:
    complex_ = complex_from_json(_load_json(args.complex))
    dual = complex_.alexander_dual()
    print(json.dumps(complex_to_json(dual)))
    result = check_dual_identities(complex_, cap=args.cap)
    print(f"dual: {result.verdict}  [{result.detail}]")
    return 1 if result.verdict == "fail" else 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    ideal = ideal_from_json(_load_json(args.ideal))
    report = reduction_report(ideal, cap=args.cap)
    print(json.dumps(report.to_json(), indent=2))
    if report.applicable and not report.all_hold:
        return 1
    return 0


def _cmd_campaign(args: argparse.Namespace) -> int:
    bounds = BoundVector.from_text(args.a) if args.a else None
    cfg = CampaignConfig(
        family=args.family,
        n=args.n,
        max_degree=args.max_deg,
        count=args.count,
        master_seed=args.seed,
        checks=_parse_checks(args.checks),
        bounds=bounds,
        max_gens=args.max_gens,
        jobs=args.jobs,
    )
    code = run_campaign(cfg, args.out)
    print(f"wrote {args.count} rows to {args.out}"
          + ("" if code == 0 else "; A CHECK FAILED — inspect the verdict column"))
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multbound",
        description="Exact Betti tables, Hilbert series, and multiplicity bound checks "
        "for monomial ideals and Stanley-Reisner rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run bound checks against one ideal")
    check.add_argument("ideal", help="path to an ideal JSON file")
    check.add_argument("--checks", default="c2,c1,hm,weak", metavar="LIST",
                       help=f"comma list from {{{','.join(CHECK_NAMES)}}}")
    check.add_argument("--cap", type=int, default=18, help="generator cap for the Betti oracle")
    check.add_argument("--betti-grid", action="store_true", help="print the Betti table grid")
    check.set_defaults(func=_cmd_check)

    dual = sub.add_parser("dual", help="Alexander dual and duality identities of a complex")
    dual.add_argument("complex", help="path to a complex JSON file")
    dual.add_argument("--cap", type=int, default=18)
    dual.set_defaults(func=_cmd_dual)

    reduce_ = sub.add_parser("reduce", help="codimension-2 Artinian reduction report")
    reduce_.add_argument("ideal", help="path to an ideal JSON file")
    reduce_.add_argument("--cap", type=int, default=18)
    reduce_.set_defaults(func=_cmd_reduce)

    campaign = sub.add_parser("campaign", help="run a seeded instance campaign")
    campaign.add_argument("--family", required=True, choices=FAMILIES)
    campaign.add_argument("--n", type=int, required=True)
    campaign.add_argument("--max-deg", type=int, required=True)
    campaign.add_argument("--count", type=int, required=True)
    campaign.add_argument("--seed", type=int, required=True)
    campaign.add_argument("--out", required=True, help="CSV output path")
    campaign.add_argument("--checks", default="c2,weak", metavar="LIST")
    campaign.add_argument("--a", default=None, metavar="BOUNDS",
                          help='bound vector for the a-stable family, e.g. "2,3,inf"')
    campaign.add_argument("--max-gens", type=int, default=18)
    campaign.add_argument("--jobs", type=int, default=1)
    campaign.set_defaults(func=_cmd_campaign)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, CampaignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
