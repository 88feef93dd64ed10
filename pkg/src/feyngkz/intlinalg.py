"""Exact integer linear algebra: Hermite reduction and lattice kernels."""

from __future__ import annotations

from typing import List, Tuple

IntMatrix = List[List[int]]


def row_hermite(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """Row-reduce an integer matrix by unimodular row operations.

    Returns (H, U) with U @ matrix == H, U unimodular and H in row echelon
    form (a Hermite-style staircase; zero rows at the bottom).
    """
    rows = [list(r) for r in matrix]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    unimod = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        unimod[i], unimod[j] = unimod[j], unimod[i]

    def submul(i, j, q):
        # row_i -= q * row_j
        rows[i] = [x - q * y for x, y in zip(rows[i], rows[j])]
        unimod[i] = [x - q * y for x, y in zip(unimod[i], unimod[j])]

    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        while True:
            live = [i for i in range(pivot_row, nrows) if rows[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(rows[i][col]))
            if best != pivot_row:
                swap(pivot_row, best)
            done = True
            for i in range(pivot_row + 1, nrows):
                if rows[i][col] != 0:
                    submul(i, pivot_row, rows[i][col] // rows[pivot_row][col])
                    if rows[i][col] != 0:
                        done = False
            if done:
                break
        if rows[pivot_row][col] != 0:
            if rows[pivot_row][col] < 0:
                rows[pivot_row] = [-x for x in rows[pivot_row]]
                unimod[pivot_row] = [-x for x in unimod[pivot_row]]
            pivot_row += 1
    return rows, unimod


def kernel_basis(matrix: IntMatrix) -> List[Tuple[int, ...]]:
    """Z-basis of {u : matrix @ u = 0} for an integer matrix."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    transpose = [[matrix[i][j] for i in range(nrows)] for j in range(ncols)]
    hermite, unimod = row_hermite(transpose)
    return [tuple(unimod[i]) for i in range(ncols)
            if all(x == 0 for x in hermite[i])]


def integer_rank(matrix: IntMatrix) -> int:
    hermite, _ = row_hermite([list(r) for r in matrix])
    return sum(1 for row in hermite if any(x != 0 for x in row))
