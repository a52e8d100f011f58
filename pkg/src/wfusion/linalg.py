"""Exact Gaussian elimination over the field Q(sqrt(-3)).

Matrices are lists of lists of QuadScalar (or anything supporting exact
field arithmetic and truthiness).  Elimination uses exact division, so
ranks, null spaces and reduced echelon forms are deterministic and free
of rounding.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .scalars import ONE, ZERO, QuadScalar

Matrix = List[List[QuadScalar]]


def rref(rows: Sequence[Sequence[QuadScalar]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, len(mat)):
            if mat[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[row], mat[pivot_row] = mat[pivot_row], mat[row]
        inv = mat[row][col].inverse()
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[row])]
        pivots.append(col)
        row += 1
        if row == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Sequence[QuadScalar]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[QuadScalar]], ncols: int | None = None) -> Matrix:
    """Basis of the right null space, one vector per free column."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    if not rows:
        reduced, pivots = [], []
    else:
        reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: Matrix = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][free]
        basis.append(vec)
    return basis
