#!/usr/bin/env python3
"""Derive the weight-constraint polynomial from the degree-(1, 2) pair of
singular vectors and evaluate it on all pairs of shipped modules.

A fusion product L1 x L2 containing L3 forces the polynomial to vanish
at (h2, k2) = lowest weights of L2 and (h3, k3) = lowest weights of L3.
"""

from wfusion import ModuleRegistry
from wfusion.scalars import render_scalar
from wfusion.zhu import pair_constraint_polynomial


def main():
    registry = ModuleRegistry.load()
    deg1, deg2 = registry.corpus_vectors("W0_1")
    psi = pair_constraint_polynomial(registry.modules["W0_1"].params, deg1, deg2)
    print(f"constraint polynomial: {psi}")
    print()
    for right in registry.names():
        h2, k2 = registry.modules[right].weights
        for left in registry.names():
            h3, k3 = registry.modules[left].weights
            value = psi.evaluate({"h2": h2, "k2": k2, "h3": h3, "k3": k3})
            marker = "root" if not value else render_scalar(value)
            print(f"psi(L2={right}, L3={left}) = {marker}")


if __name__ == "__main__":
    main()
