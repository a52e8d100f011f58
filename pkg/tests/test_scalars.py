"""Field arithmetic in Q(sqrt(-3)) and the scalar text format."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wfusion.scalars import (
    OMEGA,
    ONE,
    ROOTS_OF_UNITY,
    SQRT_M3,
    ZERO,
    QuadScalar,
    parse_scalar,
    render_scalar,
)

rationals = st.fractions(
    min_value=-(10**6), max_value=10**6, max_denominator=10**4
)
scalars = st.builds(QuadScalar, rationals, rationals)


def random_scalar(rng, span=10**6):
    return QuadScalar(
        Fraction(rng.randint(-span, span), rng.randint(1, 1000)),
        Fraction(rng.randint(-span, span), rng.randint(1, 1000)),
    )


def test_basic_arithmetic():
    x = QuadScalar(Fraction(1, 2), Fraction(-3, 4))
    y = QuadScalar(2, Fraction(1, 3))
    assert x + y == QuadScalar(Fraction(5, 2), Fraction(-5, 12))
    assert x - y == QuadScalar(Fraction(-3, 2), Fraction(-13, 12))
    # (a + b*s) * (c + d*s) = (ac - 3bd) + (ad + bc)*s  with s^2 = -3
    assert x * y == QuadScalar(
        Fraction(1, 2) * 2 + 3 * Fraction(3, 4) * Fraction(1, 3),
        Fraction(1, 2) * Fraction(1, 3) - Fraction(3, 4) * 2,
    )
    assert SQRT_M3 * SQRT_M3 == QuadScalar(-3)


def test_inverse_example():
    # (1 + sqrt(-3))^-1 = 1/4 - (1/4) sqrt(-3)
    x = QuadScalar(1, 1)
    assert x.inverse() == QuadScalar(Fraction(1, 4), Fraction(-1, 4))
    assert x * x.inverse() == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_omega_is_primitive_cube_root():
    assert OMEGA**3 == ONE
    assert OMEGA != ONE
    assert OMEGA * OMEGA + OMEGA + ONE == ZERO


def test_sixth_roots_of_unity():
    assert len(set(ROOTS_OF_UNITY)) == 6
    for z in ROOTS_OF_UNITY:
        assert z**6 == ONE
        assert z.norm() == 1


def test_integer_and_fraction_coercion():
    x = QuadScalar(Fraction(1, 3), 1)
    assert 1 + x == QuadScalar(Fraction(4, 3), 1)
    assert x * 3 == QuadScalar(1, 3)
    assert Fraction(1, 2) * x == QuadScalar(Fraction(1, 6), Fraction(1, 2))
    assert x - Fraction(1, 3) == QuadScalar(0, 1)
    assert (2 / QuadScalar(2)) == ONE


def test_conjugate_and_norm():
    x = QuadScalar(Fraction(2, 5), Fraction(-1, 7))
    assert x * x.conjugate() == QuadScalar(x.norm())
    assert x.norm() == Fraction(2, 5) ** 2 + 3 * Fraction(1, 7) ** 2


def test_power():
    x = QuadScalar(1, 1)
    assert x**0 == ONE
    assert x**3 == x * x * x
    assert x**-2 == (x * x).inverse()


def test_field_axioms_random_sample():
    """10^4 random scalars: commutativity, associativity, distributivity,
    inverses.  Seeded so the run is reproducible."""
    rng = random.Random(20260826)
    pool = [random_scalar(rng) for _ in range(10**4)]
    for i in range(0, len(pool) - 2, 3):
        x, y, z = pool[i], pool[i + 1], pool[i + 2]
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + ZERO == x and x * ONE == x
        assert x + (-x) == ZERO
        if x:
            assert x * x.inverse() == ONE


@given(scalars)
def test_render_parse_roundtrip(x):
    assert parse_scalar(render_scalar(x)) == x


def test_parse_examples():
    assert parse_scalar("0") == ZERO
    assert parse_scalar("-7/5") == QuadScalar(Fraction(-7, 5))
    assert parse_scalar("(3/2)*s3") == QuadScalar(0, Fraction(3, 2))
    assert parse_scalar("1/2 + (-1/2)*s3") == QuadScalar(
        Fraction(1, 2), Fraction(-1, 2)
    )


@given(scalars, scalars)
def test_division_roundtrip(x, y):
    if y:
        assert (x / y) * y == x
