"""Assembly of the fusion table from lower and upper bounds.

For every ordered pair (L1, L2) of the eight untwisted modules and
every candidate target L3, the upper bound comes from the Zhu-algebra
rank computation and the lower bound from the group-theoretic
intertwiner multiplicity.  An entry is *determined* when the two agree;
*gap* when lower < upper; *violated* when lower > upper (which would
indicate an inconsistency in the inputs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .registry import ModuleRegistry
from .scalars import QuadScalar, parse_scalar, render_scalar


@dataclass(frozen=True)
class FusionBoundReport:
    triple: Tuple[str, str, str]  # (L1, L2, L3): multiplicity of L3 in L1 x L2
    lower: int
    upper: int

    @property
    def verdict(self) -> str:
        if self.lower == self.upper:
            return "determined"
        if self.lower < self.upper:
            return "gap"
        return "violated"


@dataclass(frozen=True)
class TwistedCandidateReport:
    """Upper bound for a twisted-sector candidate target."""

    pair: Tuple[str, str]
    candidate: str
    upper: int


@dataclass
class FusionTable:
    reports: List[FusionBoundReport]
    twisted: Optional[List[TwistedCandidateReport]]
    symmetry_violations: List[str]

    def entry(self, l1: str, l2: str, l3: str) -> FusionBoundReport:
        return self._index[(l1, l2, l3)]

    def __post_init__(self):
        self._index = {r.triple: r for r in self.reports}

    @property
    def ok(self) -> bool:
        return not self.symmetry_violations and all(
            r.verdict != "violated" for r in self.reports
        )


def build_table(
    registry: ModuleRegistry,
    twisted_candidates: Optional[List[Tuple[str, QuadScalar, QuadScalar]]] = None,
) -> FusionTable:
    names = registry.names()
    reports = []
    for l1 in names:
        for l2 in names:
            for l3 in names:
                upper = registry.upper_bound(l1, l2, registry.modules[l3].weights)
                lower = registry.lower_bound(l1, l2, l3)
                reports.append(FusionBoundReport((l1, l2, l3), lower, upper))
    twisted = None
    if twisted_candidates is not None:
        twisted = []
        for l1 in names:
            for l2 in names:
                for cname, h, k in twisted_candidates:
                    upper = registry.upper_bound(l1, l2, (h, k))
                    twisted.append(TwistedCandidateReport((l1, l2), cname, upper))
    table = FusionTable(reports, twisted, [])
    table.symmetry_violations = check_symmetries(registry, table)
    return table


def check_symmetries(registry: ModuleRegistry, table: FusionTable) -> List[str]:
    """Fusion-rule symmetries: factor swap and contragredient exchange.

    N(L3; L1, L2) = N(L3; L2, L1) = N(L2'; L1, L3') where ' is the
    contragredient.
    """
    violations = []
    names = registry.names()
    for l1 in names:
        for l2 in names:
            for l3 in names:
                n = table.entry(l1, l2, l3)
                swapped = table.entry(l2, l1, l3)
                if n.upper != swapped.upper or n.lower != swapped.lower:
                    violations.append(
                        f"swap symmetry fails at ({l1}, {l2}, {l3}): "
                        f"{(n.lower, n.upper)} vs {(swapped.lower, swapped.upper)}"
                    )
                dual = table.entry(
                    l1,
                    registry.modules[l3].contragredient,
                    registry.modules[l2].contragredient,
                )
                if n.upper != dual.upper or n.lower != dual.lower:
                    violations.append(
                        f"contragredient symmetry fails at ({l1}, {l2}, {l3}): "
                        f"{(n.lower, n.upper)} vs {(dual.lower, dual.upper)}"
                    )
    return violations


def load_twisted_candidates(path: Path) -> List[Tuple[str, QuadScalar, QuadScalar]]:
    """External file of twisted-sector lowest weights: list of records
    with fields name, h, k (scalars in the usual text format)."""
    entries = json.loads(Path(path).read_text())
    return [
        (e["name"], parse_scalar(e["h"]), parse_scalar(e["k"])) for e in entries
    ]


def render_products(table: FusionTable, registry: ModuleRegistry) -> str:
    """Human-readable fusion products, one line per (L1, L2) pair."""
    lines = []
    names = registry.names()
    for l1 in names:
        for l2 in names:
            parts = []
            for l3 in names:
                r = table.entry(l1, l2, l3)
                if r.upper == 0 and r.lower == 0:
                    continue
                mult = "" if r.lower == r.upper == 1 else f"{r.lower}"
                star = "" if r.verdict == "determined" else f" [{r.verdict}: {r.lower}..{r.upper}]"
                parts.append(f"{mult}{'*' if mult else ''}{l3}{star}")
            rhs = " + ".join(parts) if parts else "0"
            lines.append(f"{l1} x {l2} = {rhs}")
    if table.twisted is None:
        lines.append("twisted-sector candidates: not checked "
                     "(no external lowest weights supplied)")
    else:
        excluded = sum(1 for t in table.twisted if t.upper == 0)
        lines.append(
            f"twisted-sector candidates: {excluded}/{len(table.twisted)} "
            "pair-candidate combinations excluded (upper bound 0)"
        )
        for t in table.twisted:
            if t.upper != 0:
                lines.append(
                    f"  not excluded: {t.candidate} in {t.pair[0]} x {t.pair[1]} "
                    f"(upper bound {t.upper})"
                )
    if table.symmetry_violations:
        lines.append("symmetry violations:")
        lines.extend(f"  {v}" for v in table.symmetry_violations)
    else:
        lines.append("symmetry checks: all passed")
    return "\n".join(lines)


def render_records(table: FusionTable) -> str:
    """Machine-readable: one line per triple with nonzero bound."""
    lines = []
    for r in table.reports:
        if r.lower == 0 and r.upper == 0:
            continue
        l1, l2, l3 = r.triple
        lines.append(f"{l1}\t{l2}\t{l3}\t{r.lower}\t{r.upper}\t{r.verdict}")
    if table.twisted is not None:
        for t in table.twisted:
            if t.upper != 0:
                lines.append(
                    f"{t.pair[0]}\t{t.pair[1]}\t{t.candidate}\t-\t{t.upper}\ttwisted"
                )
    return "\n".join(lines)
