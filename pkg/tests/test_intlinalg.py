"""Exact integer linear algebra."""

import random

from feyngkz.intlinalg import integer_rank, kernel_basis, row_hermite


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def _det(matrix):
    m = [list(r) for r in matrix]
    n = len(m)
    sign = 1
    det = 1
    # fraction-free would be overkill: the unimodular matrices here stay small
    from fractions import Fraction
    m = [[Fraction(x) for x in row] for row in m]
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, n):
            factor = m[i][col] / m[col][col]
            m[i] = [x - factor * y for x, y in zip(m[i], m[col])]
        det *= m[col][col]
    return sign * det


def test_hermite_invariants_random():
    rng = random.Random(2024)
    for _ in range(50):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(1, 6)
        matrix = [[rng.randrange(-6, 7) for _ in range(ncols)]
                  for _ in range(nrows)]
        hermite, unimod = row_hermite(matrix)
        assert _matmul(unimod, matrix) == hermite
        assert abs(_det(unimod)) == 1
        # staircase shape: pivots strictly increase, zero rows at the bottom
        pivots = [next((j for j, x in enumerate(row) if x != 0), None)
                  for row in hermite]
        nonzero = [p for p in pivots if p is not None]
        assert nonzero == sorted(set(nonzero))
        assert pivots == nonzero + [None] * (len(pivots) - len(nonzero))


def test_kernel_basis_random():
    rng = random.Random(99)
    for _ in range(50):
        nrows = rng.randrange(1, 4)
        ncols = rng.randrange(1, 6)
        matrix = [[rng.randrange(-5, 6) for _ in range(ncols)]
                  for _ in range(nrows)]
        kernel = kernel_basis(matrix)
        assert len(kernel) == ncols - integer_rank(matrix)
        for vec in kernel:
            assert all(sum(m * v for m, v in zip(row, vec)) == 0
                       for row in matrix)
        # the kernel vectors are independent over Q
        if kernel:
            assert integer_rank([list(v) for v in kernel]) == len(kernel)


def test_kernel_of_gauss_matrix():
    # the 2F1 configuration: one-dimensional kernel (1, -1, -1, 1)
    matrix = [[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1]]
    kernel = kernel_basis(matrix)
    assert len(kernel) == 1
    vec = kernel[0]
    if vec[0] < 0:
        vec = tuple(-x for x in vec)
    assert vec == (1, -1, -1, 1)


def test_rank_edge_cases():
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[2, 4], [1, 2]]) == 1
    assert integer_rank([[1, 0], [0, 1]]) == 2
