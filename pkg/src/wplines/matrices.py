"""Dense exact integer matrices as lists of row lists."""
from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


class NotUnimodularError(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def add(a, b) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def neg(a) -> Matrix:
    return [[-x for x in row] for row in a]


def is_unit_upper_triangular(a) -> bool:
    n = len(a)
    return all(a[i][i] == 1 for i in range(n)) and all(a[i][j] == 0 for i in range(n) for j in range(i))


def inverse_unit_upper(a) -> Matrix:
    """Exact inverse of a unit upper triangular integer matrix by back-substitution."""
    n = len(a)
    if not is_unit_upper_triangular(a):
        raise NotUnimodularError("matrix is not unit upper triangular")
    inv = identity(n)
    # solve a @ inv = I column by column, bottom row first
    for col in range(n):
        for i in range(n - 1, -1, -1):
            inv[i][col] = int(i == col) - sum(a[i][k] * inv[k][col] for k in range(i + 1, n))
    return inv


def determinant(a) -> int:
    """Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def leading_minors(a) -> list[int]:
    return [determinant([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def is_positive_definite(a) -> bool:
    """Sylvester's criterion; ``a`` must be symmetric."""
    return all(d > 0 for d in leading_minors(a))


def matrix_order(m, bound: int = 10_000) -> int | None:
    """Least ``k >= 1`` with ``m^k = I``, or None if it exceeds ``bound``."""
    n = len(m)
    ident = identity(n)
    power = [list(r) for r in m]
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = matmul(power, m)
    return None
