#!/usr/bin/env python3
"""Build the full fusion table (lower and upper bounds on all triples)
and print the determined products plus the symmetry report."""

import argparse

from wfusion import ModuleRegistry, build_table
from wfusion.table import load_twisted_candidates, render_products, render_records


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("text", "records"), default="text")
    parser.add_argument(
        "--include-twisted",
        metavar="FILE",
        help="JSON list of {name, h, k} lowest weights to test for exclusion",
    )
    args = parser.parse_args()

    registry = ModuleRegistry.load()
    twisted = (
        load_twisted_candidates(args.include_twisted)
        if args.include_twisted
        else None
    )
    table = build_table(registry, twisted)
    render = render_products if args.format == "text" else render_records
    print(render(table, registry) if args.format == "text" else render(table))
    raise SystemExit(0 if table.ok else 1)


if __name__ == "__main__":
    main()
