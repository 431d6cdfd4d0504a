import math

from lcft.snf import invariant_factors, smith_normal_form


def test_known_diagonalizations():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[3, 0], [0, 3]]) == [3, 3]
    assert invariant_factors([[2, 1], [0, 2]]) == [4]
    assert invariant_factors([[1, 0], [0, 4]]) == [4]
    assert invariant_factors([[0, 3], [3, 1], [0, 3]]) == [9]
    assert invariant_factors([[4, 0], [0, 1]]) == [4]
    assert invariant_factors([[1, 0], [0, 1]]) == []


def test_zero_rows_leave_free_rank():
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[2, 0], [0, 0]]) == [2, 0]


def test_divisibility_chain_and_determinant(rng):
    for _ in range(200):
        n = rng.choice((2, 3))
        m = [[rng.randrange(-6, 7) for _ in range(n)] for _ in range(n)]
        det = _det(m)
        diag = smith_normal_form(m)
        nonzero = [d for d in diag if d]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        if det != 0:
            assert math.prod(nonzero) == abs(det)
            assert len(nonzero) == n


def _det(m):
    n = len(m)
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total
