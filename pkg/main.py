"""
Command-line entry point.

Commands:

* ``count PATH`` – exact model count (``--brute`` for the reference count,
  ``--decomposition FILE`` to count with a stored decomposition).
* ``decompose PATH`` – disjoint branches decomposition as JSON.
* ``check PATH DECOMPOSITION`` – validate a stored decomposition.
* ``classify PATH...`` – acyclicity flags, optionally exported as a table.
* ``gen`` – random decomposable instance plus its witness decomposition.
* ``brute-count PATH`` – count by enumerating all assignments.

Exit codes: 0 on success, 1 for input and validation errors, 2 when an
instance has no disjoint branches decomposition.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from src.analyzer.classify import classify
from src.analyzer.report import classification_frame, export_report
from src.config import settings
from src.counter.models import brute_force_count, count_models, count_with_decomposition
from src.counter.transform import cspneg_to_cnf, to_disjunctive
from src.decomposer.compute_db import compute_db, find_decomposition
from src.exceptions import (
    HypergraphError,
    InvalidDecomposition,
    NotDecomposable,
    ParseError,
    Rejection,
    SchemaError,
    SizeGuardExceeded,
)
from src.hypergraph.components import connected_components
from src.hypergraph.decomposition import join_forest
from src.hypergraph.validators import is_valid_decomposition
from src.parsers.cspneg_parser import write_cspneg
from src.parsers.decomposition_io import read_decomposition, write_decomposition
from src.parsers.dimacs_parser import write_dimacs
from src.parsers.loader import load_instance
from src.testkit.generators import GeneratorConfig, gen_db_instance

logger = logging.getLogger("main")


def _flag(value: Optional[bool]) -> str:
    return "n/a" if value is None else str(value).lower()


def cmd_count(args: argparse.Namespace) -> int:
    inst = load_instance(args.path)
    if args.brute:
        print(brute_force_count(inst))
        return 0
    if args.decomposition:
        psi = to_disjunctive(inst)
        if psi.relations:
            d = read_decomposition(Path(args.decomposition).read_text(encoding="utf-8"), psi.hypergraph)
            print(count_with_decomposition(inst, d))
            return 0
    print(count_models(inst))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    inst = load_instance(args.path)
    h = to_disjunctive(inst).hypergraph
    if h.num_edges == 0:
        raise HypergraphError("instance has no constraints to decompose")
    if args.root is not None:
        h.edge(args.root)

    trees = []
    for component in connected_components(h):
        g = h.restrict(component.edge_ids)
        if args.root in component.edge_ids:
            trees.insert(0, compute_db(g, args.root))
        else:
            try:
                trees.append(find_decomposition(g)[0])
            except NotDecomposable:
                raise NotDecomposable(component.index) from None
    d = join_forest(trees)
    if not is_valid_decomposition(h, d):
        raise InvalidDecomposition("computed decomposition failed validation")
    print(write_decomposition(d, h))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    inst = load_instance(args.path)
    h = to_disjunctive(inst).hypergraph
    try:
        read_decomposition(Path(args.decomposition).read_text(encoding="utf-8"), h)
    except (SchemaError, InvalidDecomposition, HypergraphError) as exc:
        print(f"FAIL {exc}")
        return 1
    print("OK")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    reports = {}
    for path in args.paths:
        h = to_disjunctive(load_instance(path)).hypergraph
        report = classify(h, beta=False if args.no_beta else None)
        reports[path] = report
        print(
            f"{path}: alpha={_flag(report.alpha)} beta={_flag(report.beta)} gamma={_flag(report.gamma)} "
            f"disjoint_branches={_flag(report.disjoint_branches)} join_path={_flag(report.join_path)}"
        )
    if args.output:
        export_report(classification_frame(reports), args.output)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(
        seed=settings.DEFAULT_SEED if args.seed is None else args.seed,
        edges=args.edges,
        max_edge_size=args.max_edge_size,
        branching=args.branching,
        min_tuples=args.min_tuples,
        max_tuples=args.max_tuples,
        min_fresh=args.min_fresh,
        max_fresh=args.max_fresh,
        max_vars=args.max_vars,
    )
    inst, witness = gen_db_instance(cfg)
    comment = f"generated with seed {cfg.seed}"
    if args.format == "cnf":
        text = write_dimacs(cspneg_to_cnf(inst), inst.num_vars, comment)
    else:
        text = write_cspneg(inst, comment)

    instance_path = Path(f"{args.out}.{args.format}")
    witness_path = Path(f"{args.out}.json")
    instance_path.write_text(text, encoding="utf-8")
    witness_path.write_text(write_decomposition(witness, to_disjunctive(inst).hypergraph), encoding="utf-8")
    print(instance_path)
    print(witness_path)
    return 0


def cmd_brute_count(args: argparse.Namespace) -> int:
    print(brute_force_count(load_instance(args.path)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact model counting over disjoint branches decompositions.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count the models of a CNF or cspneg instance")
    count.add_argument("path")
    count.add_argument("--brute", action="store_true", help="enumerate all assignments instead")
    count.add_argument("--decomposition", help="JSON decomposition to count with")
    count.set_defaults(handler=cmd_count)

    decompose = sub.add_parser("decompose", help="print a disjoint branches decomposition as JSON")
    decompose.add_argument("path")
    decompose.add_argument("--root", type=int, help="edge id to root its component at")
    decompose.set_defaults(handler=cmd_decompose)

    check = sub.add_parser("check", help="validate a decomposition against an instance")
    check.add_argument("path")
    check.add_argument("decomposition")
    check.set_defaults(handler=cmd_check)

    classify_cmd = sub.add_parser("classify", help="report acyclicity flags of instance hypergraphs")
    classify_cmd.add_argument("paths", nargs="+")
    classify_cmd.add_argument("--output", help="write the table to a .csv or .xlsx file")
    classify_cmd.add_argument("--no-beta", action="store_true", help="skip the exhaustive beta test")
    classify_cmd.set_defaults(handler=cmd_classify)

    gen = sub.add_parser("gen", help="generate a decomposable instance and its witness")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--edges", type=int, default=8)
    gen.add_argument("--max-edge-size", type=int, default=3)
    gen.add_argument("--branching", type=int, default=2)
    gen.add_argument("--min-tuples", type=int, default=0)
    gen.add_argument("--max-tuples", type=int, default=3)
    gen.add_argument("--min-fresh", type=int, default=0)
    gen.add_argument("--max-fresh", type=int, default=2)
    gen.add_argument("--max-vars", type=int)
    gen.add_argument("--format", choices=["cnf", "cspneg"], default="cnf")
    gen.add_argument("--out", required=True, help="output prefix for PREFIX.<format> and PREFIX.json")
    gen.set_defaults(handler=cmd_gen)

    brute = sub.add_parser("brute-count", help="count by exhaustive enumeration")
    brute.add_argument("path")
    brute.set_defaults(handler=cmd_brute_count)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    # 1. Logging goes to stderr; stdout carries results only
    level = settings.LOG_LEVEL
    if args.verbose == 1:
        level = "INFO"
    elif args.verbose > 1:
        level = "DEBUG"
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    logger.debug(f"running {args.command}")

    # 2. Dispatch and map failures onto exit codes
    try:
        return args.handler(args)
    except NotDecomposable as exc:
        print(f"NOT_DECOMPOSABLE component={exc.component}")
        return 2
    except Rejection as exc:
        print(f"REJECT reason={exc.reason.value}: {exc}", file=sys.stderr)
        return 2
    except (ParseError, InvalidDecomposition, SizeGuardExceeded, HypergraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
