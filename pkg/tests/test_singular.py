"""Singular-vector checks, graded singular spaces, and parameter solving."""

from fractions import Fraction

from wfusion.exprparse import parse_terms, parse_vector
from wfusion.pbw import Mode, ModeAlgebra, ModuleParams
from wfusion.scalars import SQRT_M3, ZERO, QuadScalar
from wfusion.singular import check_singular, is_singular, singular_space, solve_params

L = lambda n: Mode("L", n)
J = lambda n: Mode("J", n)


def algebra_of(h, k):
    return ModeAlgebra(ModuleParams(QuadScalar.coerce(h), QuadScalar.coerce(k)))


def test_report_zero_residuals_on_known_singular_vector():
    # degree-1 vector of the (h, k) = (3/5, -2 sqrt(-3)) module
    algebra = algebra_of(Fraction(3, 5), -2 * SQRT_M3)
    v = parse_vector("5*s3*L(-1) + J(-1)", algebra)
    report = check_singular(algebra, v)
    assert report.is_singular
    assert not report.failing_modes()
    for residual in report.residuals.values():
        assert residual.is_zero()


def test_nonsingular_vector_reports_failing_modes():
    algebra = algebra_of(1, 0)
    v = algebra.monomial_vector([L(-1)])
    report = check_singular(algebra, v)
    assert not report.is_singular
    assert L(1) in report.failing_modes()


def test_l_minus1_of_vacuum_weight_zero_is_singular():
    # L(1)L(-1)w = 2hw vanishes only at h = 0, and the other residuals
    # vanish there too
    assert is_singular(algebra_of(0, 0), algebra_of(0, 0).monomial_vector([L(-1)]))
    assert not is_singular(algebra_of(1, 0), algebra_of(1, 0).monomial_vector([L(-1)]))


def test_singular_space_dimensions_at_special_params():
    algebra = algebra_of(2, 12 * SQRT_M3)
    space = singular_space(algebra, 1)
    assert len(space) == 1
    assert is_singular(algebra, space[0])


def test_singular_space_empty_at_generic_params():
    algebra = algebra_of(Fraction(7, 13), QuadScalar(1, 1))
    assert singular_space(algebra, 1) == []
    assert singular_space(algebra, 2) == []


def test_singular_space_members_are_singular():
    algebra = algebra_of(Fraction(8, 5), 0)
    space = singular_space(algebra, 2)
    assert len(space) == 2
    for v in space:
        assert is_singular(algebra, v)


def test_solve_params_degree_one():
    # 5 sqrt(-3) L(-1)w + J(-1)w: the J(1)/L(1) residuals pin (h, k)
    solutions = solve_params(parse_terms("5*s3*L(-1) + J(-1)"))
    assert (QuadScalar(Fraction(3, 5)), -2 * SQRT_M3) in solutions.solutions
    for h, k in solutions.solutions:
        algebra = ModeAlgebra(ModuleParams(h, k))
        assert is_singular(algebra, parse_vector("5*s3*L(-1) + J(-1)", algebra))


def test_solve_params_flags_universal_singularity():
    # the zero conditions are vacuous for the trivial expression 0 * L(-1)
    result = solve_params([(ZERO, [L(-1)])])
    assert not result.complete or result.warnings
