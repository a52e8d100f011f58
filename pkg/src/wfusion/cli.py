"""Command-line interface.

Subcommands:

    verify-singular   check every vector in a file against (h, k)
    singular-space    dimension and basis of singular vectors at a degree
    solve-params      solve for all (h, k) making an expression singular
    zhu-bound         Zhu-algebra upper bound for one fusion triple
    group-bound       group-theoretic lower bounds for a stable-set triple
    fusion-table      full table of lower/upper bounds and verdicts
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .exprparse import load_records, parse_terms, parse_vector
from .pbw import ModeAlgebra, ModuleParams
from .registry import ModuleRegistry, data_path
from .scalars import parse_scalar, render_scalar
from .singular import check_singular, singular_space, solve_params
from .table import build_table, load_twisted_candidates, render_products, render_records
from .orbifold import intertwiner_module, lower_bound


def _load_params_file(path: str) -> ModuleParams:
    values = {}
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return ModuleParams(parse_scalar(values["h"]), parse_scalar(values["k"]))


def _registry(args) -> ModuleRegistry:
    return ModuleRegistry.load(getattr(args, "config", None))


def cmd_verify_singular(args) -> int:
    if args.module:
        registry = _registry(args)
        algebra = registry.algebra(args.module)
        vectors = registry.corpus_vectors(args.module)
    else:
        algebra = ModeAlgebra(_load_params_file(args.params))
        vectors = [parse_vector(rec, algebra) for rec in load_records(args.vectors)]
    failures = 0
    for i, vec in enumerate(vectors):
        report = check_singular(algebra, vec)
        status = "singular" if report.is_singular else (
            "NOT singular (fails: "
            + ", ".join(str(m) for m in report.failing_modes())
            + ")"
        )
        print(f"vector {i + 1}: degree {vec.degree()}: {status}")
        failures += not report.is_singular
    return 1 if failures else 0


def cmd_singular_space(args) -> int:
    if args.module:
        algebra = _registry(args).algebra(args.module)
    else:
        algebra = ModeAlgebra(
            ModuleParams(parse_scalar(args.h), parse_scalar(args.k))
        )
    basis = singular_space(algebra, args.degree)
    print(f"degree {args.degree}: dimension {len(basis)}")
    for vec in basis:
        print(f"  {vec}")
    return 0


def cmd_solve_params(args) -> int:
    status = 0
    for i, rec in enumerate(load_records(args.vectors)):
        result = solve_params(parse_terms(rec))
        sols = ", ".join(
            f"(h={render_scalar(h)}, k={render_scalar(k)})"
            for h, k in result.solutions
        )
        print(f"vector {i + 1}: solutions: {sols or 'none'}")
        for warning in result.warnings:
            print(f"  warning: {warning}")
    return status


def cmd_zhu_bound(args) -> int:
    registry = _registry(args)
    left = registry.modules[args.left].weights
    right = registry.modules[args.right].weights
    spec = registry.modules[args.module]
    if spec.truncation is None:
        bound = 1 if args.right == args.left else 0
        print(f"bound {bound} (whole-algebra factor: simplicity)")
        return 0
    bounder = registry.bounder(args.module)
    bound = bounder.bound(right, left)
    print(f"module {args.module}, right {args.right}, left {args.left}")
    print(f"generator truncation {bounder.truncation}, "
          f"working truncation {bounder.working_truncation}")
    if args.verbose:
        assignment = {
            "h2": right[0], "k2": right[1], "h3": left[0], "k3": left[1]
        }
        from .linalg import rank as matrix_rank
        from .poly import Poly

        evaluated = [
            [c.evaluate(assignment) if isinstance(c, Poly) else c for c in row]
            for row in bounder.residual_rows
        ]
        print("relation matrix over the generators:")
        for row in evaluated:
            print("  [" + ", ".join(render_scalar(v) for v in row) + "]")
        print(f"rank {matrix_rank(evaluated)}")
    print(f"bound {bound}")
    return 0


def cmd_group_bound(args) -> int:
    registry = ModuleRegistry.load(args.config)
    for simple1 in registry.simples[args.s1]:
        for simple2 in registry.simples[args.s2]:
            module = intertwiner_module(
                simple1,
                simple2,
                registry.algebras[args.s3],
                registry.fusion_triples,
                registry.iso_scalars,
            )
            for target in registry.simples[args.s3]:
                value = lower_bound(module, target)
                if value or args.targets == "all":
                    print(
                        f"({_simple_name(simple1, registry)}, "
                        f"{_simple_name(simple2, registry)}) -> "
                        f"{_simple_name(target, registry)}: {value}"
                    )
    return 0


def _simple_name(simple, registry) -> str:
    gen = registry.generator
    if gen in simple.character:
        return f"{simple.orbit_rep}[{render_scalar(simple.character[gen])}]"
    return f"{simple.orbit_rep}[dim {simple.dimension}]"


def cmd_fusion_table(args) -> int:
    registry = _registry(args)
    twisted = None
    if args.include_twisted:
        twisted = load_twisted_candidates(args.include_twisted)
    table = build_table(registry, twisted)
    if args.format == "records":
        print(render_records(table))
    else:
        print(render_products(table, registry))
    return 0 if table.ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfusion",
        description="Exact fusion-rule computations for the charge-6/5 "
        "W(2,3) orbifold algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-singular", help="check vectors for singularity")
    p.add_argument("--params", help="key-value file with h and k")
    p.add_argument("--vectors", help="expression file of vectors")
    p.add_argument("--module", help="registry module name instead of files")
    p.add_argument("--config", help="registry file", default=None)
    p.set_defaults(func=cmd_verify_singular)

    p = sub.add_parser("singular-space", help="singular vectors at a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--h", help="L(0) eigenvalue")
    p.add_argument("--k", help="J(0) eigenvalue")
    p.add_argument("--module", help="registry module name instead of --h/--k")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_singular_space)

    p = sub.add_parser("solve-params", help="solve (h, k) from vectors")
    p.add_argument("--vectors", required=True)
    p.set_defaults(func=cmd_solve_params)

    p = sub.add_parser("zhu-bound", help="upper bound for one fusion triple")
    p.add_argument("--module", required=True, help="first tensor factor L1")
    p.add_argument("--left", required=True, help="target module L3")
    p.add_argument("--right", required=True, help="second tensor factor L2")
    p.add_argument("--config", default=None)
    p.add_argument("--verbose", action="store_true", help="print the relation matrix")
    p.set_defaults(func=cmd_zhu_bound)

    p = sub.add_parser("group-bound", help="lower bounds for stable-set triple")
    p.add_argument("--config", default=None)
    p.add_argument("--s1", required=True)
    p.add_argument("--s2", required=True)
    p.add_argument("--s3", required=True)
    p.add_argument("--targets", default="all", choices=["all", "nonzero"])
    p.set_defaults(func=cmd_group_bound)

    p = sub.add_parser("fusion-table", help="full lower/upper bound table")
    p.add_argument("--config", default=None)
    p.add_argument("--format", default="text", choices=["text", "records"])
    p.add_argument("--include-twisted", default=None,
                   help="JSON file of twisted-sector candidate lowest weights")
    p.set_defaults(func=cmd_fusion_table)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
