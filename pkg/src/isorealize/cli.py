"""Command-line interface.

Exit codes: 0 realized / success, 1 verification failed, 2 invalid input,
3 isometry-search budget exhausted.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .exceptions import ExtensionNotIsometric, IsorealizeError, Lemma1Failed, SizeGuardExceeded
from .groups import group_from_spec
from .io import (
    dumps,
    group_spec_from_json,
    isogroup_to_json,
    load_json,
    provenance_from_json,
    provenance_to_json,
    space_from_json,
    space_to_json,
    write_json,
)
from .iso_search import DEFAULT_NODE_BUDGET, enumerate_isometries, naive_enumerate
from .realize import COVER_STRATEGIES, OFFSET_SCHEDULES, PIPELINES, parse_metric_choice, realize, verify_realization

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
BUDGET_ENV = "ISOGROUP_NODE_BUDGET"


def _node_budget(args) -> int:
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise IsorealizeError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return args.node_budget


def _metric(text: str):
    if text.startswith("file:"):
        return space_from_json(load_json(text[len("file:"):]))
    return parse_metric_choice(text)


def _emit(obj, path) -> None:
    if path is None:
        sys.stdout.write(dumps(obj))
    else:
        write_json(path, obj)


def _summary(report) -> str:
    verdict = "realized" if report.realized else "NOT realized"
    return (f"{verdict}: |G| = {report.group_order}, |Iso(K)| = {report.iso_order_of_K}, "
            f"{len(report.point_provenance)} points, cover of {report.cover_size}")


def run_realize(args) -> int:
    group = group_from_spec(group_spec_from_json(load_json(args.group)))
    result = realize(
        group,
        metric=_metric(args.metric),
        pipeline=args.pipeline,
        cover_strategy=args.cover,
        offsets=args.offsets,
        include_y_layer=args.include_y_layer,
        node_budget=_node_budget(args),
    )
    _emit(space_to_json(result.space), args.out)
    prov_path = args.provenance
    if prov_path is None and args.out is not None:
        out = Path(args.out)
        prov_path = out.with_name(out.stem + ".provenance.json")
    if prov_path is not None:
        write_json(prov_path, provenance_to_json(result.provenance))
    if args.report is not None:
        write_json(args.report, result.report.to_json())
    print(_summary(result.report), file=sys.stderr)
    return EXIT_OK if result.report.realized else EXIT_FAILED


def run_iso(args) -> int:
    space = space_from_json(load_json(args.space))
    if args.naive:
        group = naive_enumerate(space)
    else:
        group = enumerate_isometries(space, _node_budget(args))
    _emit(isogroup_to_json(group), args.out)
    return EXIT_OK


def run_verify(args) -> int:
    space = space_from_json(load_json(args.space))
    group = group_from_spec(group_spec_from_json(load_json(args.group)))
    records = provenance_from_json(load_json(args.provenance))
    kinds = {rec.kind for rec in records}
    pipeline = args.pipeline or ("polish" if "tag" in kinds else "compact")
    report = verify_realization(space, group, records, pipeline=pipeline, node_budget=_node_budget(args))
    if args.report is not None:
        write_json(args.report, report.to_json())
    print(_summary(report), file=sys.stderr)
    return EXIT_OK if report.realized else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isorealize", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def budget(p):
        p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                       help=f"isometry search node limit (env {BUDGET_ENV} overrides)")

    p = sub.add_parser("realize", help="build K with Iso(K) isomorphic to the given group")
    p.add_argument("--group", required=True, help="group JSON (cayley table or generators)")
    p.add_argument("--metric", default="discrete", help="discrete | word:<i,j,...> | file:<space.json>")
    p.add_argument("--pipeline", choices=PIPELINES, default="compact")
    p.add_argument("--cover", choices=COVER_STRATEGIES, default="greedy")
    p.add_argument("--offsets", choices=OFFSET_SCHEDULES, default="harmonic")
    p.add_argument("--include-y-layer", action="store_true")
    p.add_argument("--out", help="where to write K (default: stdout)")
    p.add_argument("--provenance", help="where to write provenance (default: next to --out)")
    p.add_argument("--report", help="where to write the realization report")
    budget(p)
    p.set_defaults(func=run_realize)

    p = sub.add_parser("iso", help="compute the isometry group of a space")
    p.add_argument("--space", required=True)
    p.add_argument("--out")
    p.add_argument("--naive", action="store_true", help="use the brute-force oracle (n <= 8)")
    budget(p)
    p.set_defaults(func=run_iso)

    p = sub.add_parser("verify", help="re-verify stored realization artifacts")
    p.add_argument("--space", required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--provenance", required=True)
    p.add_argument("--pipeline", choices=PIPELINES)
    p.add_argument("--report")
    budget(p)
    p.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Lemma1Failed, ExtensionNotIsometric) as exc:
        print(f"construction error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except IsorealizeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
