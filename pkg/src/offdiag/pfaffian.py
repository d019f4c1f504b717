"""Exact Pfaffians of integer skew-symmetric matrices.

Two independent algorithms are kept public on purpose: a memoized cofactor
expansion (clear, good for small orders) and a fraction-free condensation
(fast, good for large orders).  They cross-check each other in the tests and
`pfaffian` dispatches between them by order.

Also here: exact determinants (Bareiss), exact rank and kernel over the
rationals, and the bordered-matrix constructor used by the counting layer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SkewMatrix:
    """An integer skew-symmetric matrix, validated on construction."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            if rows[i][i] != 0:
                raise ValueError(f"nonzero diagonal entry at {i}")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"not skew-symmetric at ({i},{j})")
        self.rows = rows

    @property
    def order(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return isinstance(other, SkewMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SkewMatrix({list(map(list, self.rows))})"


def principal_submatrix(m: SkewMatrix, keep) -> SkewMatrix:
    """Principal submatrix on the 1-based labels in `keep` (any order).

    An empty `keep` gives the empty matrix, whose Pfaffian is 1."""
    idx = sorted(set(keep))
    if idx and (idx[0] < 1 or idx[-1] > m.order):
        raise ValueError(f"labels must be within 1..{m.order}")
    idx0 = [k - 1 for k in idx]
    return SkewMatrix(tuple(tuple(m.rows[i][j] for j in idx0) for i in idx0))


def pfaffian_cofactor(m: SkewMatrix) -> int:
    """Pfaffian by expansion along the last row/column, memoized on the
    surviving index set."""
    if m.order % 2:
        return 0
    rows = m.rows
    cache: dict[tuple[int, ...], int] = {}

    def pf(idx: tuple[int, ...]) -> int:
        if not idx:
            return 1
        got = cache.get(idx)
        if got is not None:
            return got
        last = idx[-1]
        rest = idx[:-1]
        total = 0
        for pos, k in enumerate(rest):
            entry = rows[k][last]
            if entry:
                term = entry * pf(rest[:pos] + rest[pos + 1:])
                total += term if pos % 2 == 0 else -term
        cache[idx] = total
        return total

    return pf(tuple(range(m.order)))


def pfaffian_eliminate(m: SkewMatrix) -> int:
    """Pfaffian by fraction-free condensation.

    Each step condenses the two leading rows/columns into the rest via
    new_ij = (p * cur_ij + cur_1i * cur_0j - cur_0i * cur_1j) / p_prev,
    where p is the current (0,1) pivot and p_prev the previous one.  The
    working entries are Pfaffian minors of the input, so every division is
    exact; a zero pivot is cured by a symmetric swap, which flips the sign.
    """
    n = m.order
    if n % 2:
        return 0
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    while len(a) > 2:
        if a[0][1] == 0:
            j = next((k for k in range(2, len(a)) if a[0][k] != 0), None)
            if j is None:
                return 0
            a[1], a[j] = a[j], a[1]
            for row in a:
                row[1], row[j] = row[j], row[1]
            sign = -sign
        p = a[0][1]
        top, second = a[0], a[1]
        nxt = []
        for i in range(2, len(a)):
            row_i = a[i]
            ui, vi = top[i], second[i]
            new_row = []
            for j in range(2, len(a)):
                if j <= i:
                    new_row.append(-nxt[j - 2][i - 2] if j < i else 0)
                    continue
                num = p * row_i[j] + vi * top[j] - ui * second[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact division; input not skew?")
                new_row.append(q)
            nxt.append(new_row)
        a = nxt
        prev = p
    return sign * a[0][1]


def pfaffian(m: SkewMatrix) -> int:
    """Exact Pfaffian; cofactor expansion up to order 8, condensation above."""
    return pfaffian_cofactor(m) if m.order <= 8 else pfaffian_eliminate(m)


def bordered_skew(q: SkewMatrix, columns) -> tuple[SkewMatrix, int]:
    """Append border columns to a skew matrix, keeping skew-symmetry.

    Returns the order n+m matrix [[Q, H], [-H^T, 0]] for the n x m border H,
    together with the sign (-1)^(m(m-1)/2) that relates its Pfaffian to the
    signed enumeration it represents.
    """
    n = q.order
    columns = [tuple(int(e) for e in col) for col in columns]
    m = len(columns)
    for col in columns:
        if len(col) != n:
            raise ValueError("border column length must match matrix order")
    rows = []
    for i in range(n):
        rows.append(tuple(q.rows[i]) + tuple(col[i] for col in columns))
    for j in range(m):
        rows.append(tuple(-columns[j][i] for i in range(n)) + (0,) * m)
    return SkewMatrix(rows), (-1) ** (m * (m - 1) // 2)


def determinant(rows) -> int:
    """Exact determinant of an integer matrix (Bareiss condensation)."""
    a = [list(map(int, row)) for row in rows]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact Bareiss division")
                a[i][j] = q
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def _echelon(rows):
    """Fraction Gauss echelon. Returns (reduced rows, pivot columns)."""
    a = [[Fraction(e) for e in row] for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            if a[i][col]:
                f = a[i][col] / a[r][col]
                for j in range(col, ncols):
                    a[i][j] -= f * a[r][j]
        pivots.append((r, col))
        r += 1
    return a, pivots


def rational_rank(rows) -> int:
    """Exact rank over the rationals."""
    if not rows:
        return 0
    return len(_echelon(rows)[1])


def integer_kernel_vector(rows):
    """Primitive integer kernel vector of an integer matrix.

    Returns None unless the kernel is exactly one-dimensional.  The result
    has coprime entries and its first nonzero entry is positive.
    """
    if not rows:
        return None
    a, pivots = _echelon(rows)
    ncols = len(rows[0])
    pivot_cols = {col for _, col in pivots}
    free = [c for c in range(ncols) if c not in pivot_cols]
    if len(free) != 1:
        return None
    x = [Fraction(0)] * ncols
    x[free[0]] = Fraction(1)
    for r, col in reversed(pivots):
        acc = Fraction(0)
        for j in range(col + 1, ncols):
            if a[r][j]:
                acc += a[r][j] * x[j]
        x[col] = -acc / a[r][col]
    scale = 1
    for v in x:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    ints = [int(v * scale) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)
