"""Reduction in the bimodule controlling fusion-rule multiplicities.

For a lowest-weight module N with parameters (h1, k1), the quotient
A(N) relevant to intertwining operators of type (L3, N x L2) is spanned
by the images of the generators g_i = [J(-1)^i w], i >= 0.  Every
canonical monomial applied to w reduces to a combination of generators
using two rewriting rules (valid for n <= -1, u homogeneous in N):

    [L(n) u] = (-1)^(n-1) ( [omega]*[u] + n [u]*[omega] )
               + (-1)^n wt(u) [u]
    [J(n) u] = (-1)^n ( n [J(-1)u] + (n+1) [J(0)u]
                        - (n+1) [J]*[u] - n(n+1)/2 [u]*[J] )

where wt(u) = h1 + degree(u).  Left multiplication by [omega], [J]
evaluates to the lowest weights (h3, k3) of L3 and right multiplication
to (h2, k2) of L2; these may be concrete scalars or polynomial
indeterminates, so the same reduction yields symbolic relation rows
that are later evaluated at many module pairs.

A fusion multiplicity bound for a pair (L2, L3) is the dimension of the
span of generators left after imposing the relation rows coming from
the singular vectors of N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from . import linalg
from .pbw import Mode, ModeAlgebra, ModuleParams, PbwMonomial, PbwVector
from .poly import Poly, PolyRing
from .scalars import ONE, ZERO, QuadScalar


class TruncationError(ValueError):
    """A reduction produced a generator outside the working range."""


@dataclass(frozen=True)
class EvalContext:
    """Lowest weights of the outer modules in a fusion triple.

    ``left`` refers to the target module (acting from the left in the
    bimodule) and ``right`` to the second tensor factor.  Entries are
    QuadScalar for a concrete evaluation or Poly for a symbolic one.
    """

    left_h: object
    left_k: object
    right_h: object
    right_k: object


def symbolic_context() -> Tuple[EvalContext, PolyRing]:
    ring = PolyRing(("h2", "k2", "h3", "k3"))
    ctx = EvalContext(
        left_h=ring.gen("h3"),
        left_k=ring.gen("k3"),
        right_h=ring.gen("h2"),
        right_k=ring.gen("k2"),
    )
    return ctx, ring


def _parity_sign(n: int) -> int:
    return -1 if n % 2 else 1


class ZhuReducer:
    """Rewrites monomials of one module into generator coordinates."""

    def __init__(self, params: ModuleParams, ctx: EvalContext):
        self.params = params
        self.ctx = ctx
        self.algebra = ModeAlgebra(params)
        self._cache: Dict[PbwMonomial, Dict[int, object]] = {}

    # -- reduction to generator coordinates --------------------------------

    def reduce_monomial(self, mon: PbwMonomial) -> Dict[int, object]:
        hit = self._cache.get(mon)
        if hit is not None:
            return hit
        if not mon.lparts and all(n == 1 for n in mon.jparts):
            out = {len(mon.jparts): ONE}
        elif mon.lparts:
            out = self._reduce_l(mon)
        else:
            out = self._reduce_j(mon)
        out = {i: c for i, c in out.items() if c}
        self._cache[mon] = out
        return out

    def _combine(self, coords: Dict[int, object], other: Dict[int, object], c):
        for i, x in other.items():
            s = coords.get(i, 0) + x * c
            if s:
                coords[i] = s
            else:
                coords.pop(i, None)

    def _reduce_vector_terms(self, terms: Dict[PbwMonomial, object]) -> Dict[int, object]:
        coords: Dict[int, object] = {}
        for mon, c in terms.items():
            self._combine(coords, self.reduce_monomial(mon), c)
        return coords

    def _reduce_l(self, mon: PbwMonomial) -> Dict[int, object]:
        n = -mon.lparts[0]
        rest = mon.rest()
        wt = self.params.h + rest.degree()
        sign = _parity_sign(n - 1)
        # (-1)^(n-1) (h3 + n h2) + (-1)^n wt, all times reduce(rest)
        factor = (self.ctx.left_h + self.ctx.right_h * n) * sign + wt * (-sign)
        coords: Dict[int, object] = {}
        self._combine(coords, self.reduce_monomial(rest), factor)
        return coords

    def _reduce_j(self, mon: PbwMonomial) -> Dict[int, object]:
        n = -mon.jparts[0]
        rest = mon.rest()
        sign = _parity_sign(n)
        coords: Dict[int, object] = {}
        # n [J(-1) u]
        jm1 = self.algebra.apply_mode(Mode("J", -1), PbwVector.monomial(rest))
        self._combine(coords, self._reduce_vector_terms(jm1.terms), n * sign)
        # (n+1) [J(0) u]
        j0 = self.algebra.apply_mode(Mode("J", 0), PbwVector.monomial(rest))
        self._combine(coords, self._reduce_vector_terms(j0.terms), (n + 1) * sign)
        # -(n+1) k3 [u]  -  n(n+1)/2 k2 [u]
        factor = (
            self.ctx.left_k * (-(n + 1)) + self.ctx.right_k * Fraction(-n * (n + 1), 2)
        ) * sign
        self._combine(coords, self.reduce_monomial(rest), factor)
        return coords

    def reduce(self, v: PbwVector, truncation: int) -> List[object]:
        """Coordinates of v over [w], [J(-1)w], ..., [J(-1)^(d-1) w].

        Raises TruncationError when the reduction is supported on a
        generator of index >= ``truncation``.
        """
        coords = self._reduce_vector_terms(v.terms)
        top = max(coords, default=-1)
        if top >= truncation:
            raise TruncationError(
                f"reduction needs generator index {top}, "
                f"outside truncation {truncation}"
            )
        return [coords.get(i, ZERO) for i in range(truncation)]

    # -- relation rows from singular vectors -------------------------------

    def relation_rows(
        self, singular_vectors: Sequence[PbwVector], truncation: int
    ) -> List[List[object]]:
        """Rows spanning the relations J(-1)^j S imposes on the generators.

        Each singular vector S of degree g contributes rows for
        J(-1)^j S, j = 0 .. truncation-1-g, so that the relation span is
        stable under the generator shift within the working range.
        """
        rows: List[List[object]] = []
        for vec in singular_vectors:
            current = vec
            for _ in range(max(0, truncation - vec.degree())):
                rows.append(self.reduce(current, truncation))
                current = self.algebra.apply_mode(Mode("J", -1), current)
        return rows


def pair_constraint_polynomial(
    params: ModuleParams, deg1_vector: PbwVector, deg2_vector: PbwVector
) -> Poly:
    """Polynomial in (h2, k2, h3, k3) whose vanishing admits a fusion triple.

    For a module with a singular vector at degree 1 and another at
    degree 2, the relations eliminate every generator beyond [w]; the
    single surviving relation on [w] is a polynomial constraint on the
    lowest weights of the outer pair.  The fusion multiplicity can be
    nonzero only at its roots.  The result is normalized so the
    coefficient of k3 equals 5.
    """
    if deg1_vector.degree() != 1 or deg2_vector.degree() != 2:
        raise ValueError("expected singular vectors of degrees 1 and 2")
    ctx, ring = symbolic_context()
    reducer = ZhuReducer(params, ctx)
    rows = reducer.relation_rows([deg1_vector], 3)
    target = reducer.reduce(deg2_vector, 3)
    for pivot_col, row in ((2, rows[1]), (1, rows[0])):
        coeff = target[pivot_col]
        if not coeff:
            continue
        pivot = row[pivot_col]
        if isinstance(pivot, Poly):
            if not pivot.is_constant():
                raise ValueError("elimination pivot is not constant")
            pivot = pivot.constant_value()
        factor = coeff * pivot.inverse()
        target = [t - r * factor for t, r in zip(target, row)]
    if any(target[1:]) or not isinstance(target[0], Poly):
        raise ValueError("elimination did not close onto the first generator")
    constraint = target[0]
    k3_coeff = constraint.coefficient(
        tuple(1 if name == "k3" else 0 for name in constraint.ring.variables)
    )
    if not k3_coeff:
        raise ValueError("constraint has no k3 term; cannot normalize")
    return constraint * (QuadScalar(5) * k3_coeff.inverse())


def _constant_of(entry) -> QuadScalar | None:
    """The value of a constant entry, or None when it is a genuine polynomial."""
    if isinstance(entry, Poly):
        if not entry.is_constant():
            return None
        return entry.constant_value()
    return entry if isinstance(entry, QuadScalar) else QuadScalar(Fraction(entry))


class FusionBounder:
    """Fusion upper bounds from the singular vectors of one module.

    The singular vectors are reduced once with symbolic outer weights at
    a working truncation wide enough to cover them.  Every generator at
    or beyond the configured truncation has a relation row with a
    constant (weight-independent) pivot -- the pure J(-1)-power term of
    a singular vector -- so those generators are eliminated symbolically
    up front.  What remains is a small matrix of polynomial rows over
    the first ``truncation`` generators; for each concrete pair of outer
    modules the bound is ``truncation - rank`` of its evaluation, as in
    the rank-of-A argument.
    """

    def __init__(
        self,
        params: ModuleParams,
        singular_vectors: Sequence[PbwVector],
        truncation: int,
    ):
        if not singular_vectors:
            raise ValueError("at least one singular vector is required")
        self.truncation = truncation
        max_deg = max(v.degree() for v in singular_vectors)
        self.working_truncation = max(truncation, max_deg + 2)
        ctx, self.ring = symbolic_context()
        reducer = ZhuReducer(params, ctx)
        rows = reducer.relation_rows(singular_vectors, self.working_truncation)
        self.residual_rows = self._eliminate_high_generators(rows)

    def _eliminate_high_generators(self, rows: List[List[object]]) -> List[List[object]]:
        for col in range(self.working_truncation - 1, self.truncation - 1, -1):
            pivot_row = None
            pivot_value = None
            for row in rows:
                if any(row[j] for j in range(col + 1, self.working_truncation)):
                    continue
                value = _constant_of(row[col])
                if value:
                    pivot_row, pivot_value = row, value
                    break
            if pivot_row is None:
                raise TruncationError(
                    f"no constant-pivot relation eliminates generator {col}; "
                    f"the configured truncation {self.truncation} is too small"
                )
            inv = pivot_value.inverse()
            rows = [
                row
                if row is pivot_row or not row[col]
                else [a - b * (row[col] * inv) for a, b in zip(row, pivot_row)]
                for row in rows
                if row is not pivot_row
            ]
        keep = [row[: self.truncation] for row in rows if any(row)]
        return keep

    def bound(
        self,
        right: Tuple[QuadScalar, QuadScalar],
        left: Tuple[QuadScalar, QuadScalar],
    ) -> int:
        """Upper bound for the multiplicity of ``left`` in N x ``right``.

        ``right`` and ``left`` are the lowest-weight pairs (h, k) of the
        second tensor factor and of the candidate target module.
        """
        assignment = {
            "h2": right[0],
            "k2": right[1],
            "h3": left[0],
            "k3": left[1],
        }
        rows = [
            [c.evaluate(assignment) if isinstance(c, Poly) else c for c in row]
            for row in self.residual_rows
        ]
        return self.truncation - linalg.rank(rows)
