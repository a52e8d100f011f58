"""Multivariate polynomials over Q(sqrt(-3))."""

from fractions import Fraction

from wfusion.poly import PolyRing
from wfusion.scalars import ONE, SQRT_M3, ZERO, QuadScalar


def test_ring_basics():
    ring = PolyRing(("h", "k"))
    h, k = ring.gen("h"), ring.gen("k")
    p = h * h + QuadScalar(2) * k - 3
    assert p.total_degree() == 2
    assert not p.is_constant()
    assert p.coefficient((2, 0)) == ONE
    assert p.coefficient((0, 1)) == QuadScalar(2)
    assert p.coefficient((1, 1)) == ZERO


def test_arithmetic_identities():
    ring = PolyRing(("x", "y"))
    x, y = ring.gen("x"), ring.gen("y")
    assert (x + y) * (x - y) == x * x - y * y
    assert (x + y) * (x + y) == x * x + 2 * x * y + y * y
    assert x - x == ring.const(ZERO)
    assert (x * 0).is_constant()


def test_scalar_coercion_both_sides():
    ring = PolyRing(("x",))
    x = ring.gen("x")
    assert 1 + x == x + 1
    assert 2 * x == x * 2
    assert SQRT_M3 * x == x * SQRT_M3
    assert (3 - x) + (x - 3) == ring.const(ZERO)


def test_evaluate():
    ring = PolyRing(("h", "k"))
    h, k = ring.gen("h"), ring.gen("k")
    p = h * h * QuadScalar(Fraction(1, 2)) + k * SQRT_M3 + 1
    value = p.evaluate({"h": QuadScalar(2), "k": SQRT_M3})
    # 1/2 * 4 + s3 * s3 + 1 = 2 - 3 + 1 = 0
    assert value == ZERO


def test_constant_value():
    ring = PolyRing(("x",))
    p = ring.const(QuadScalar(5, -1))
    assert p.is_constant()
    assert p.constant_value() == QuadScalar(5, -1)
