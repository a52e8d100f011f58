"""Singular (lowest-weight) vectors in the universal graded module.

A homogeneous vector v of positive degree is singular when every
positive mode annihilates it.  Because L(1), L(2) generate all L(n)
with n >= 1 under commutation and J(n) = const * [L(n-1), J(1)] for
n >= 2, it suffices to check

    L(1) v == 0,   L(2) v == 0,   J(1) v == 0.

Everything here works over concrete parameters (QuadScalar h, k) or
symbolic ones (Poly), which is what drives ``solve_params``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import sympy

from . import linalg
from .pbw import Mode, ModeAlgebra, ModuleParams, PbwVector, graded_basis
from .poly import Poly, PolyRing
from .scalars import ZERO, QuadScalar

_CHECK_MODES = (Mode("L", 1), Mode("L", 2), Mode("J", 1))


@dataclass(frozen=True)
class SingularReport:
    """Outcome of a singularity check: residuals of L(1), L(2), J(1)."""

    residuals: Dict[Mode, PbwVector]

    @property
    def is_singular(self) -> bool:
        return all(r.is_zero() for r in self.residuals.values())

    def failing_modes(self) -> List[Mode]:
        return [m for m, r in self.residuals.items() if not r.is_zero()]


def check_singular(algebra: ModeAlgebra, v: PbwVector) -> SingularReport:
    return SingularReport({m: algebra.apply_mode(m, v) for m in _CHECK_MODES})


def is_singular(algebra: ModeAlgebra, v: PbwVector) -> bool:
    return check_singular(algebra, v).is_singular


def singular_space(algebra: ModeAlgebra, degree: int) -> List[PbwVector]:
    """Basis of the space of singular vectors at the given degree.

    Requires concrete (QuadScalar) module parameters.
    """
    basis = graded_basis(degree)
    index = {mon: i for i, mon in enumerate(basis)}
    rows: List[List[QuadScalar]] = []
    for mode in _CHECK_MODES:
        if degree - mode.index < 0:
            continue  # the image space is zero
        target = graded_basis(degree - mode.index)
        tindex = {mon: i for i, mon in enumerate(target)}
        # One row per target monomial; columns indexed by source monomials.
        block = [[ZERO] * len(basis) for _ in target]
        for j, mon in enumerate(basis):
            image = algebra.apply_mode(mode, PbwVector.monomial(mon))
            for m2, c in image.terms.items():
                block[tindex[m2]][j] = c
        rows.extend(block)
    kernel = linalg.nullspace(rows, ncols=len(basis))
    return [
        PbwVector({basis[i]: c for i, c in enumerate(vec) if c}) for vec in kernel
    ]


def _symbolic_algebra() -> Tuple[ModeAlgebra, PolyRing]:
    ring = PolyRing(("h", "k"))
    algebra = ModeAlgebra(ModuleParams(ring.gen("h"), ring.gen("k")))
    return algebra, ring


_SQRT3 = sympy.sqrt(3)


def _poly_to_sympy(p: Poly, syms: Dict[str, sympy.Symbol]) -> sympy.Expr:
    expr = sympy.Integer(0)
    for exps, coeff in p.terms.items():
        term = sympy.Rational(coeff.a.numerator, coeff.a.denominator) + sympy.Rational(
            coeff.b.numerator, coeff.b.denominator
        ) * sympy.I * _SQRT3
        for name, e in zip(p.ring.variables, exps):
            if e:
                term *= syms[name] ** e
        expr += term
    return sympy.expand(expr)


def _sympy_to_quad(value) -> QuadScalar | None:
    """Convert a sympy number to Q(sqrt(-3)), or None when outside the field."""
    value = sympy.nsimplify(sympy.expand(value), [sympy.sqrt(3)])
    re_part, im_part = value.as_real_imag()
    re_part = sympy.simplify(re_part)
    ratio = sympy.simplify(im_part / _SQRT3)
    if not (re_part.is_rational and ratio.is_rational):
        return None
    return QuadScalar(
        Fraction(int(sympy.fraction(re_part)[0]), int(sympy.fraction(re_part)[1])),
        Fraction(int(sympy.fraction(ratio)[0]), int(sympy.fraction(ratio)[1])),
    )


@dataclass(frozen=True)
class ParamSolutions:
    """Solutions (h, k) making a fixed expression singular."""

    solutions: Tuple[Tuple[QuadScalar, QuadScalar], ...]
    complete: bool  # False when some solutions lie outside Q(sqrt(-3))
    warnings: Tuple[str, ...] = ()


def solve_params(expression_terms) -> ParamSolutions:
    """Find all (h, k) for which the given expression is singular.

    ``expression_terms`` is a list of (QuadScalar, mode word) pairs as
    produced by the expression parser.  The residuals of L(1), L(2),
    J(1) are polynomials in symbolic (h, k); their common roots are
    computed exactly and filtered to the field Q(sqrt(-3)).
    """
    algebra, ring = _symbolic_algebra()
    vec = PbwVector()
    for coeff, word in expression_terms:
        vec = vec + algebra.monomial_vector(word).scale(ring.const(coeff))
    equations: List[Poly] = []
    for mode in _CHECK_MODES:
        residual = algebra.apply_mode(mode, vec)
        for coeff in residual.terms.values():
            if isinstance(coeff, Poly):
                equations.append(coeff)
            elif coeff:
                return ParamSolutions((), True, ("inconsistent residual",))
    if not equations:
        return ParamSolutions((), False, ("expression is singular for all (h, k)",))
    h_sym, k_sym = sympy.symbols("h k")
    syms = {"h": h_sym, "k": k_sym}
    system = [_poly_to_sympy(p, syms) for p in equations]
    roots = sympy.solve(system, [h_sym, k_sym], dict=True)
    solutions: List[Tuple[QuadScalar, QuadScalar]] = []
    warnings: List[str] = []
    complete = True
    for root in roots:
        if set(root) != {h_sym, k_sym}:
            complete = False
            warnings.append(f"non-isolated solution branch: {root}")
            continue
        h_val = _sympy_to_quad(root[h_sym])
        k_val = _sympy_to_quad(root[k_sym])
        if h_val is None or k_val is None:
            complete = False
            warnings.append(
                f"solution outside Q(sqrt(-3)) discarded: h={root[h_sym]}, k={root[k_sym]}"
            )
            continue
        solutions.append((h_val, k_val))
    solutions.sort(key=lambda hk: (hk[0].a, hk[0].b, hk[1].a, hk[1].b))
    if not complete:
        warnings.append("solutions may exist outside the field")
    return ParamSolutions(tuple(solutions), complete, tuple(warnings))
