#!/usr/bin/env python3
"""Verify every shipped singular vector and re-derive the module weights.

For each module with a vector file: check that the residuals of L(1),
L(2), J(1) vanish exactly at the configured (h, k), then solve for the
weights from the lowest-degree vector and compare.
"""

from wfusion import ModuleRegistry
from wfusion.pbw import Mode
from wfusion.scalars import render_scalar
from wfusion.singular import check_singular, solve_params


def main():
    registry = ModuleRegistry.load()
    for name in registry.names():
        vectors = registry.corpus_vectors(name)
        if not vectors:
            print(f"{name}: no vector file (handled by simplicity)")
            continue
        algebra = registry.algebra(name)
        for v in vectors:
            report = check_singular(algebra, v)
            status = "ok" if report.is_singular else "FAILED"
            print(f"{name}: degree {v.degree()} vector singular: {status}")
        lead = min(vectors, key=lambda v: v.degree())
        terms = [(c, mon.modes()) for mon, c in lead.terms.items()]
        solved = solve_params(terms)
        h, k = registry.modules[name].weights
        hit = (h, k) in solved.solutions
        print(
            f"{name}: solve_params recovers "
            f"(h, k) = ({render_scalar(h)}, {render_scalar(k)}): "
            f"{'ok' if hit else 'FAILED'}"
        )


if __name__ == "__main__":
    main()
