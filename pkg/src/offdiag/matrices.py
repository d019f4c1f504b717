"""Builders for the structured integer matrices behind the tiling counts.

Everything is exact and small enough to keep as tuples of ints.  The
skew-symmetric recurrence matrix drives the off-diagonal counts via its
Pfaffian; its bordered companion counts the nearly off-diagonal tilings; the
Delannoy-weighted rectangular matrices turn count vectors into per-cell
defect counts; the involutive triangular matrix and the recurrence array are
two independent routes to the same numbers and get cross-checked in verify.
"""

from __future__ import annotations

from .pfaffian import SkewMatrix, bordered_skew
from .paths import FULL, PathGraph, delannoy, q_doublet
from . import series


def matrix_a(n: int) -> SkewMatrix:
    """Skew matrix of the three-term recurrence with alternating correction.

    Upper triangle (1-based): first row is all 2s; below that,
    a[i][j] = a[i-1][j] + a[i][j-1] + a[i-1][j-1] away from the diagonal and
    a[i][i+1] = a[i-1][i+1] + a[i-1][i] + 2*(-1)^(i-1) next to it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if i == 1:
                a[i][j] = 2
            elif j == i + 1:
                a[i][j] = a[i - 1][j] + a[i - 1][j - 1] + 2 * (-1) ** (i - 1)
            else:
                a[i][j] = a[i - 1][j] + a[i][j - 1] + a[i - 1][j - 1]
    rows = tuple(
        tuple(a[i][j] if i < j else -a[j][i] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )
    return SkewMatrix(rows)


def pell_vector(n: int) -> tuple[int, ...]:
    """Doubled Pell numbers 2, 4, 10, 24, 58, ... (each = 2*prev + prev2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = [2, 4]
    while len(f) < n:
        f.append(2 * f[-1] + f[-2])
    return tuple(f[:n])


def matrix_b(order: int) -> SkewMatrix:
    """The recurrence matrix of one smaller order, bordered by the doubled
    Pell column; its Pfaffian counts the nearly off-diagonal tilings."""
    if order < 2 or order % 2:
        raise ValueError("order must be even and >= 2")
    bordered, _sign = bordered_skew(matrix_a(order - 1), [pell_vector(order - 1)])
    return bordered


def matrix_m(variant: str, n: int) -> tuple[tuple[int, ...], ...]:
    """Delannoy-weighted matrix mapping the deletion-count vector to defect
    counts per diagonal cell.

    variant "pm" weighs cell k by 2*delannoy(l-k, k-1), "minus" by
    2*delannoy(l-1-k, k-1); "plus" is their difference.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if variant not in ("pm", "minus", "plus"):
        raise ValueError(f"unknown variant {variant!r}")
    rows = []
    for k in range(1, n + 1):
        row = []
        for l in range(1, n + 1):
            sign = (-1) ** (l - 1)
            if variant == "pm":
                val = 2 * delannoy(l - k, k - 1)
            elif variant == "minus":
                val = 2 * delannoy(l - 1 - k, k - 1)
            else:
                val = 2 * (delannoy(l - k, k - 1) - delannoy(l - 1 - k, k - 1))
            row.append(sign * val)
        rows.append(tuple(row))
    return tuple(rows)


def r_value(n: int, i: int, j: int) -> int:
    """Unsigned entry r_{i,j}: the doublet kernel paired between the j-th
    bottom source and the i-th wall point of the full staircase graph."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("indices must lie in 1..n")
    g = _full_graph(n)
    return q_doublet(g, g.u[j], g.w[i])


_GRAPH_CACHE: dict[int, PathGraph] = {}


def _full_graph(n: int) -> PathGraph:
    g = _GRAPH_CACHE.get(n)
    if g is None:
        g = _GRAPH_CACHE[n] = PathGraph(n, FULL)
    return g


def matrix_r(n: int) -> tuple[tuple[int, ...], ...]:
    """The signed count-reversal matrix: entry (i,j) is (-1)^(n+j) r_{i,j}.

    It is upper triangular with unit diagonal (up to sign) and squares to the
    identity; applied to an odd-order deletion-count vector it reverses it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    g = _full_graph(n)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            val = q_doublet(g, g.u[j], g.w[i])
            row.append(val if (n + j) % 2 == 0 else -val)
        rows.append(tuple(row))
    return tuple(rows)


def g_sequence(count: int) -> tuple[int, ...]:
    """Integer expansion of (1 - y - 3y^2 - y^3) / (1 + y - 3y^2 + y^3)."""
    return series.integer_coeffs(
        series.expand_rational((1, -1, -3, -1), (1, 1, -3, 1), count)
    )


def t_array(nrows: int, ncols: int) -> tuple[tuple[int, ...], ...]:
    """Recurrence array seeded by g_sequence across the top and 1s down the
    left edge: t[i][j] = t[i-1][j-1] + t[i-1][j] + t[i][j-1]."""
    if nrows < 1 or ncols < 1:
        raise ValueError("array dimensions must be >= 1")
    g = g_sequence(ncols)
    rows = [list(g)]
    for _ in range(1, nrows):
        prev = rows[-1]
        row = [1]
        for j in range(1, ncols):
            row.append(prev[j - 1] + prev[j] + row[j - 1])
        rows.append(row)
    return tuple(tuple(r) for r in rows)
