"""Exact tiling counts, all via Pfaffians of the structured matrices.

Counts come in three families: off-diagonally symmetric tilings of the
boundary-defected odd-order regions (count_off_diag / o_vector), nearly
off-diagonally symmetric tilings of the full odd-order region (count_nearly
and the per-cell d_vector), and off-diagonally symmetric tilings of the full
even-order region (even_order_full).
"""

from __future__ import annotations

from .matrices import matrix_a, matrix_b, matrix_m
from .paths import delannoy
from .pfaffian import (
    bordered_skew,
    integer_kernel_vector,
    pfaffian,
    principal_submatrix,
)


def count_off_diag(n: int, kept=None) -> int:
    """Off-diagonally symmetric tilings of the order-n region that keeps only
    the given boundary labels (all of them by default)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kept is None:
        labels = tuple(range(1, n + 1))
    else:
        labels = tuple(sorted(set(kept)))
        if labels and (labels[0] < 1 or labels[-1] > n):
            raise ValueError(f"labels must be within 1..{n}")
    if not labels:
        return 1
    return pfaffian(principal_submatrix(matrix_a(n), labels))


def _o_vector_direct(n: int) -> tuple[int, ...]:
    a = matrix_a(n)
    return tuple(
        pfaffian(principal_submatrix(a, [i for i in range(1, n + 1) if i != k]))
        for k in range(1, n + 1)
    )


def o_vector(n: int) -> tuple[int, ...]:
    """All single-deletion counts (|O(n; [n] minus k)| for k = 1..n), odd n.

    The direct route is n Pfaffians; since the odd-order skew matrix has
    corank 1 and its kernel is spanned by the alternating-sign vector of
    those very Pfaffians, one exact kernel solve plus one anchoring Pfaffian
    recovers the whole vector.  A second direct Pfaffian cross-checks the
    scale and any irregularity falls back to the direct route.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("deletion vector is defined for odd n >= 1")
    if n == 1:
        return (1,)
    a = matrix_a(n)
    kernel = integer_kernel_vector(a.rows)
    if kernel is None or kernel[0] == 0:
        return _o_vector_direct(n)
    anchor = pfaffian(principal_submatrix(a, range(2, n + 1)))
    out = []
    for k0 in range(n):
        num = anchor * kernel[k0] * (-1) ** k0
        if num % kernel[0]:
            return _o_vector_direct(n)
        out.append(num // kernel[0])
    check = pfaffian(principal_submatrix(a, range(1, n)))
    if out[-1] != check:
        return _o_vector_direct(n)
    return tuple(out)


def count_nearly(n: int) -> int:
    """Nearly off-diagonally symmetric tilings of the full odd-order region."""
    if n < 1 or n % 2 == 0:
        raise ValueError("nearly count is defined for odd n >= 1")
    return pfaffian(matrix_b(n + 1))


def d_vector(variant: str, n: int) -> tuple[int, ...]:
    """Per-cell defect counts for odd n: entry k counts the nearly
    off-diagonal tilings whose defect sits at diagonal cell k.

    variant "plus" counts doubled cells, "minus" empty cells, "pm" both.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("defect vector is defined for odd n >= 1")
    m = matrix_m(variant, n)
    o = o_vector(n)
    return tuple(sum(row[l] * o[l] for l in range(n)) for row in m)


def d_entry_bordered(variant: str, n: int, k: int) -> int:
    """Same defect count by the second route: a single bordered Pfaffian."""
    if n < 1 or n % 2 == 0:
        raise ValueError("defect count is defined for odd n >= 1")
    if not 1 <= k <= n:
        raise ValueError(f"cell index must be within 1..{n}")
    if variant not in ("pm", "minus", "plus"):
        raise ValueError(f"unknown variant {variant!r}")

    def column(kind):
        if kind == "pm":
            return [2 * delannoy(i - k, k - 1) for i in range(1, n + 1)]
        return [2 * delannoy(i - k - 1, k - 1) for i in range(1, n + 1)]

    if variant == "plus":
        col = [p - m for p, m in zip(column("pm"), column("minus"))]
    else:
        col = column(variant)
    bordered, sign = bordered_skew(matrix_a(n), [col])
    return sign * pfaffian(bordered)


def even_order_full(n: int) -> int:
    """Off-diagonally symmetric tilings of the full even-order region."""
    if n < 2 or n % 2:
        raise ValueError("full-region count is defined for even n >= 2")
    return pfaffian(matrix_a(n))
