"""Exact row reduction, rank, and nullspace over Q(sqrt(-3))."""

import random
from fractions import Fraction

from wfusion.linalg import nullspace, rank, rref
from wfusion.scalars import ONE, SQRT_M3, ZERO, QuadScalar


def q(x):
    return QuadScalar.coerce(x)


def test_rref_identity_pivots():
    rows = [[q(2), q(1)], [q(1), q(1)]]
    reduced, pivots = rref(rows)
    assert pivots == [0, 1]
    assert reduced == [[ONE, ZERO], [ZERO, ONE]]


def test_rank():
    rows = [
        [q(1), q(2), q(3)],
        [q(2), q(4), q(6)],
        [q(0), q(1), q(1)],
    ]
    assert rank(rows) == 2
    assert rank([]) == 0
    assert rank([[ZERO, ZERO]]) == 0


def test_rank_uses_field_arithmetic():
    # the second row is sqrt(-3) times the first
    rows = [[ONE, SQRT_M3], [SQRT_M3, q(-3)]]
    assert rank(rows) == 1


def test_nullspace_kernel_property():
    rng = random.Random(7)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        rows = [
            [
                QuadScalar(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-2, 2)))
                for _ in range(n)
            ]
            for _ in range(m)
        ]
        kernel = nullspace(rows, n)
        assert len(kernel) == n - rank(rows)
        for vec in kernel:
            for row in rows:
                total = ZERO
                for a, x in zip(row, vec):
                    total = total + a * x
                assert total == ZERO


def test_nullspace_of_zero_map_is_full():
    assert len(nullspace([], 3)) == 3
