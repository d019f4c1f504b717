import itertools
import random
from fractions import Fraction

import pytest

from offdiag.pfaffian import (
    SkewMatrix,
    bordered_skew,
    determinant,
    integer_kernel_vector,
    pfaffian,
    pfaffian_cofactor,
    pfaffian_eliminate,
    principal_submatrix,
    rational_rank,
)


def _matchings(idx):
    if not idx:
        yield ()
        return
    first = idx[0]
    for pos in range(1, len(idx)):
        rest = idx[1:pos] + idx[pos + 1:]
        for sub in _matchings(rest):
            yield ((first, idx[pos]),) + sub


def _matching_sign(edges):
    crossings = 0
    for (a, b), (c, d) in itertools.combinations(edges, 2):
        if a < c < b < d or c < a < d < b:
            crossings += 1
    return -1 if crossings % 2 else 1


def naive_pfaffian(rows):
    """Signed sum over perfect matchings; the defining expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n % 2:
        return 0
    total = 0
    for edges in _matchings(tuple(range(n))):
        prod = 1
        for a, b in edges:
            prod *= rows[a][b]
        total += _matching_sign(edges) * prod
    return total


def naive_determinant(rows):
    n = len(rows)
    m = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def random_skew(rng, order, lo=-50, hi=50):
    rows = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(i + 1, order):
            e = rng.randint(lo, hi)
            rows[i][j] = e
            rows[j][i] = -e
    return SkewMatrix(rows)


def test_trivial_orders():
    empty = SkewMatrix(())
    assert pfaffian(empty) == 1
    assert pfaffian_cofactor(empty) == 1
    assert pfaffian_eliminate(empty) == 1
    assert pfaffian(SkewMatrix(((0,),))) == 0
    assert pfaffian(SkewMatrix(((0, 7), (-7, 0)))) == 7


def test_routes_agree_with_matching_expansion():
    rng = random.Random(101)
    for _ in range(120):
        order = rng.randint(0, 8)
        m = random_skew(rng, order, -9, 9)
        want = naive_pfaffian(m.rows)
        assert pfaffian_cofactor(m) == want
        assert pfaffian_eliminate(m) == want
        assert pfaffian(m) == want


def test_routes_agree_at_larger_orders():
    rng = random.Random(103)
    for _ in range(60):
        order = rng.randint(9, 14)
        m = random_skew(rng, order)
        assert pfaffian_eliminate(m) == pfaffian_cofactor(m) == pfaffian(m)


def test_elimination_handles_zero_pivots():
    rng = random.Random(107)
    for _ in range(200):
        order = rng.randint(2, 10)
        m = random_skew(rng, order, -1, 1)
        assert pfaffian_eliminate(m) == pfaffian_cofactor(m)


def test_square_is_determinant():
    rng = random.Random(109)
    for _ in range(80):
        order = rng.randint(0, 9)
        m = random_skew(rng, order)
        pf = pfaffian(m)
        assert pf * pf == determinant(m.rows) == naive_determinant(m.rows)


def test_determinant_matches_naive_on_general_matrices():
    rng = random.Random(113)
    for _ in range(80):
        order = rng.randint(0, 7)
        rows = [[rng.randint(-9, 9) for _ in range(order)]
                for _ in range(order)]
        assert determinant(rows) == naive_determinant(rows)


def test_skew_matrix_validation():
    with pytest.raises(ValueError):
        SkewMatrix(((0, 1),))
    with pytest.raises(ValueError):
        SkewMatrix(((1,),))
    with pytest.raises(ValueError):
        SkewMatrix(((0, 1), (1, 0)))


def test_principal_submatrix():
    m = SkewMatrix(((0, 1, 2), (-1, 0, 3), (-2, -3, 0)))
    sub = principal_submatrix(m, (1, 3))
    assert sub.rows == ((0, 2), (-2, 0))
    assert principal_submatrix(m, (3, 1)).rows == sub.rows
    assert principal_submatrix(m, ()).order == 0
    with pytest.raises(ValueError):
        principal_submatrix(m, (0, 1))
    with pytest.raises(ValueError):
        principal_submatrix(m, (4,))


def test_bordered_skew_layout_and_sign():
    m = SkewMatrix(((0, 5, -2), (-5, 0, 7), (2, -7, 0)))
    col = [3, -4, 6]
    bordered, sign = bordered_skew(m, [col])
    assert sign == 1
    assert bordered.order == 4
    for i in range(3):
        assert bordered.rows[i][3] == col[i]
        assert bordered.rows[3][i] == -col[i]
    # expansion along the border column
    want = sum(
        (-1) ** (k - 1) * col[k - 1]
        * pfaffian(principal_submatrix(m, [i for i in (1, 2, 3) if i != k]))
        for k in (1, 2, 3)
    )
    assert sign * pfaffian(bordered) == want
    # two borders flip the sign, three keep it, four flip it back
    assert bordered_skew(m, [col, col])[1] == -1
    assert bordered_skew(m, [col, col, col])[1] == -1
    four = SkewMatrix(((0, 1), (-1, 0)))
    assert bordered_skew(four, [[1, 1]] * 4)[1] == 1


def test_kernel_vector_properties():
    rng = random.Random(127)
    found = 0
    for _ in range(200):
        order = rng.randint(1, 9)
        m = random_skew(rng, order, -6, 6)
        kernel = integer_kernel_vector(m.rows)
        if kernel is None:
            continue
        found += 1
        assert len(kernel) == order
        for row in m.rows:
            assert sum(r * k for r, k in zip(row, kernel)) == 0
        g = 0
        for v in kernel:
            g = abs(v) if g == 0 else _gcd(g, abs(v))
        assert g == 1
        first = next(v for v in kernel if v)
        assert first > 0
    assert found > 50  # odd orders are singular, so plenty of hits


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_kernel_vector_none_cases():
    assert integer_kernel_vector(((0, 1), (-1, 0))) is None  # nonsingular
    assert integer_kernel_vector(((0, 0), (0, 0))) is None   # nullity 2
    assert integer_kernel_vector(((0,),)) == (1,)


def test_rational_rank():
    assert rational_rank(()) == 0
    assert rational_rank(((1, 2), (2, 4))) == 1
    assert rational_rank(((1, 0), (0, 1))) == 2
    assert rational_rank(((Fraction(1, 2), Fraction(1, 3)),)) == 1
    assert rational_rank(((0, 0, 0),)) == 0


def test_rank_agrees_with_determinant_test():
    rng = random.Random(131)
    for _ in range(60):
        order = rng.randint(1, 5)
        rows = [[rng.randint(-4, 4) for _ in range(order)]
                for _ in range(order)]
        full = rational_rank(rows) == order
        assert full == (naive_determinant(rows) != 0)
