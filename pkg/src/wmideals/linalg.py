"""Small exact matrix helpers.

Matrices are lists of rows.  A matrix with zero rows still needs a column
count, so shapes travel alongside the data where that matters.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int, cols: int) -> Matrix:
    """``A @ B`` where A is ``len(A) x inner`` and B is ``inner x cols``."""
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def is_zero(A: Sequence[Sequence]) -> bool:
    return all(x == 0 for row in A for x in row)


def transpose(A: Sequence[Sequence], cols: int) -> Matrix:
    return [[A[i][j] for i in range(len(A))] for j in range(cols)]


def rank_rational(A: Sequence[Sequence]) -> int:
    """Rank over Q by Gauss-Jordan elimination on Fractions."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return r


def rank_integer(A: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Rational entries are first cleared of denominators row by row, which does
    not change the rank.
    """
    M = []
    for row in A:
        row = [Fraction(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        M.append([int(x * scale) for x in row])
    if not M or not M[0]:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                # Exact by Sylvester's identity.
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        r += 1
        if r == rows:
            break
    return r
