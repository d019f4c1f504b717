"""Brute-force tiling oracle: enumerate, classify, and render domino tilings.

Squares are named by their integer lower-left corner (a, b).  The order-n
diamond region holds every square with span(a) + span(b) <= n + 1, where
span(c) is the distance from the square to the vertical mirror axis (the
axis runs between columns a = -1 and a = 0).  A square is black when
a + b == n - 1 (mod 2); the n black squares on the southwestern boundary are
labeled 1..n from the bottom, and removing boundary square i means removing
it together with its mirror image.

The diagonal cells are the n two-square-by-two-square blocks along the
mirror axis, numbered bottom to top.  A tiling's profile records, for each
cell, (number of dominoes lying fully inside the cell) - 1.  A mirror
symmetric tiling is off-diagonal when its profile is all zero and nearly
off-diagonal when exactly one cell is nonzero.

Everything here is exhaustive and meant as an independent ground truth for
the Pfaffian and path counts, so region sizes are deliberately capped.
"""

from __future__ import annotations

from dataclasses import dataclass

Square = tuple[int, int]
Domino = tuple[Square, Square]

OFF_DIAG = "off_diag"
NEARLY = "nearly"
OTHER = "other"

_MAX_SQUARES = 64


def span(c: int) -> int:
    return c + 1 if c >= 0 else -c


def mirror_square(sq: Square) -> Square:
    a, b = sq
    return (-1 - a, b)


def mirror_domino(d: Domino) -> Domino:
    s, t = d
    return tuple(sorted((mirror_square(s), mirror_square(t))))


def is_black(n: int, sq: Square) -> bool:
    a, b = sq
    return (a + b - n + 1) % 2 == 0


def boundary_square(n: int, i: int) -> Square:
    """The i-th labeled black square on the southwestern boundary."""
    if not 1 <= i <= n:
        raise ValueError(f"label must be within 1..{n}")
    return (-i, i - n - 1)


@dataclass(frozen=True)
class Region:
    n: int
    kept: frozenset
    squares: frozenset


def build_region(n: int, kept=None) -> Region:
    """The order-n diamond, minus the boundary squares (and their mirrors)
    whose labels are not kept."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kept is None:
        kept = range(1, n + 1)
    kept = frozenset(kept)
    for i in kept:
        if not 1 <= i <= n:
            raise ValueError(f"labels must be within 1..{n}")
    squares = {
        (a, b)
        for a in range(-n, n)
        for b in range(-n, n)
        if span(a) + span(b) <= n + 1
    }
    for i in range(1, n + 1):
        if i not in kept:
            sq = boundary_square(n, i)
            squares.discard(sq)
            squares.discard(mirror_square(sq))
    return Region(n=n, kept=kept, squares=frozenset(squares))


def enumerate_tilings(region: Region):
    """Yield every domino tiling of the region, in a fixed order.

    Backtracking always covers the first free square in lexicographic (a, b)
    order, trying its rightward partner before its upward one; that order is
    what the render CLI's --index refers to.
    """
    squares = sorted(region.squares)
    if len(squares) > _MAX_SQUARES:
        raise ValueError("region too large for exhaustive enumeration")
    if len(squares) % 2:
        return
    index = {sq: i for i, sq in enumerate(squares)}
    partners = []
    for a, b in squares:
        cand = []
        for other in ((a + 1, b), (a, b + 1)):
            j = index.get(other)
            if j is not None:
                cand.append(j)
        partners.append(tuple(cand))
    total = len(squares)
    full = (1 << total) - 1

    def rec(mask, acc):
        if mask == full:
            yield frozenset(acc)
            return
        low = (mask + 1) & ~mask
        i = low.bit_length() - 1
        for j in partners[i]:
            if not mask >> j & 1:
                acc.append((squares[i], squares[j]))
                yield from rec(mask | low | 1 << j, acc)
                acc.pop()

    yield from rec(0, [])


def count_all_tilings(region: Region) -> int:
    return sum(1 for _ in enumerate_tilings(region))


def is_mirror_symmetric(tiling) -> bool:
    return all(mirror_domino(d) in tiling for d in tiling)


def cell_block(n: int, k: int) -> tuple[Square, ...]:
    """The four squares of diagonal cell k (bottom to top, 1-based)."""
    if not 1 <= k <= n:
        raise ValueError(f"cell index must be within 1..{n}")
    r = 2 * k - n - 2
    return ((-1, r), (0, r), (-1, r + 1), (0, r + 1))


def diagonal_profile(region: Region, tiling) -> tuple[int, ...]:
    profile = []
    for k in range(1, region.n + 1):
        block = set(cell_block(region.n, k))
        inside = sum(1 for s, t in tiling if s in block and t in block)
        profile.append(inside - 1)
    return tuple(profile)


def classify(region: Region, tiling):
    """Classify one tiling: ("off_diag", None), ("nearly", (cell, value)),
    or ("other", None)."""
    if not is_mirror_symmetric(tiling):
        return (OTHER, None)
    profile = diagonal_profile(region, tiling)
    defects = [(k + 1, v) for k, v in enumerate(profile) if v]
    if not defects:
        return (OFF_DIAG, None)
    if len(defects) == 1:
        return (NEARLY, defects[0])
    return (OTHER, None)


@dataclass(frozen=True)
class RegionCensus:
    total: int
    off_diag: int
    nearly_plus: tuple[int, ...]
    nearly_minus: tuple[int, ...]
    other: int


def classify_region_tilings(region: Region) -> RegionCensus:
    """Exhaustively classify every tiling of the region."""
    n = region.n
    total = other = off_diag = 0
    plus = [0] * n
    minus = [0] * n
    for tiling in enumerate_tilings(region):
        total += 1
        kind, detail = classify(region, tiling)
        if kind == OFF_DIAG:
            off_diag += 1
        elif kind == NEARLY:
            k, value = detail
            if value > 0:
                plus[k - 1] += 1
            else:
                minus[k - 1] += 1
        else:
            other += 1
    return RegionCensus(total=total, off_diag=off_diag,
                        nearly_plus=tuple(plus), nearly_minus=tuple(minus),
                        other=other)


@dataclass(frozen=True)
class OracleCounts:
    n: int
    total: int
    off_diag_full: int
    o: tuple[int, ...]
    d_plus: tuple[int, ...]
    d_minus: tuple[int, ...]
    d_pm: tuple[int, ...]
    nearly_total: int


def oracle_counts(n: int) -> OracleCounts:
    """Ground-truth counts for odd n <= 5, by exhaustive enumeration.

    o[k-1] counts the off-diagonally symmetric tilings of the region with
    boundary square k removed; the d vectors count the nearly off-diagonal
    tilings of the full region by defect cell and defect sign.
    """
    if n < 1 or n % 2 == 0 or n > 5:
        raise ValueError("oracle is exhaustive; odd n <= 5 only")
    full = classify_region_tilings(build_region(n))
    o = []
    for k in range(1, n + 1):
        region = build_region(n, set(range(1, n + 1)) - {k})
        o.append(classify_region_tilings(region).off_diag)
    d_pm = tuple(p + m for p, m in zip(full.nearly_plus, full.nearly_minus))
    return OracleCounts(
        n=n,
        total=full.total,
        off_diag_full=full.off_diag,
        o=tuple(o),
        d_plus=full.nearly_plus,
        d_minus=full.nearly_minus,
        d_pm=d_pm,
        nearly_total=sum(d_pm),
    )


# --- correspondence with the lattice-path picture ---------------------------

def square_to_point(n: int, sq: Square) -> tuple[int, int]:
    """Rotated coordinates of a black square (the lattice the paths live on)."""
    a, b = sq
    if (a - b - n - 1) % 2:
        raise ValueError(f"{sq} is not a black square of order {n}")
    return ((a - b - n - 1) // 2, (a + b + n - 1) // 2)


def point_to_square(n: int, pt: tuple[int, int]) -> Square:
    x, y = pt
    return (1 + x + y, y - x - n)


def _covering(tiling):
    cover = {}
    for d in tiling:
        s, t = d
        cover[s] = d
        cover[t] = d
    return cover


def _step_target(domino: Domino, black: Square):
    """Where the chain continues after this black square, or None."""
    a, b = black
    s, t = domino
    partner = t if s == black else s
    if partner == (a + 1, b):
        return (a + 2, b)
    if partner == (a, b + 1):
        return (a + 1, b + 1)
    if partner == (a, b - 1):
        return (a + 1, b - 1)
    return None


def tiling_to_paths(region: Region, tiling) -> dict:
    """Decompose a tiling into its domino chains, one per kept boundary
    square, as paths in rotated coordinates (keyed by boundary label)."""
    n = region.n
    cover = _covering(tiling)
    paths = {}
    for i in sorted(region.kept):
        sq = boundary_square(n, i)
        chain = [sq]
        while True:
            current = chain[-1]
            target = _step_target(cover[current], current)
            if target is None or target[0] > 0 or target not in region.squares:
                break
            chain.append(target)
        paths[i] = tuple(square_to_point(n, sq) for sq in chain)
    return paths


def paths_to_tiling(region: Region, paths):
    """Rebuild the mirror-symmetric tiling from its path decomposition.

    Inverse of tiling_to_paths for valid families: step dominoes follow the
    paths, endpoints on the axis column become straddling dominoes, every
    remaining black square is paired with the white square on its left, and
    the right half is the mirror image.
    """
    n = region.n
    if isinstance(paths, dict):
        paths = paths.values()
    used_blacks = set()
    left = set()
    for path in paths:
        squares = [point_to_square(n, p) for p in path]
        for sq in squares:
            if sq in used_blacks:
                raise ValueError(f"paths intersect at {sq}")
            used_blacks.add(sq)
        for here, there in zip(squares, squares[1:]):
            a, b = here
            if there == (a + 2, b):
                left.add(((a, b), (a + 1, b)))
            elif there == (a + 1, b + 1):
                left.add(((a, b), (a, b + 1)))
            elif there == (a + 1, b - 1):
                left.add(((a, b - 1), (a, b)))
            else:
                raise ValueError(f"not a unit step: {here} -> {there}")
        a, b = squares[-1]
        if a == -1:
            left.add(((-1, b), (0, b)))
        elif a != 0:
            raise ValueError(f"path must end on the axis, got {squares[-1]}")
    for sq in sorted(region.squares):
        a, b = sq
        if a > 0 or not is_black(n, sq) or sq in used_blacks:
            continue
        filler = ((a - 1, b), (a, b))
        if filler[0] not in region.squares:
            raise ValueError(f"no room to finish square {sq}")
        left.add(filler)
    tiling = set(left)
    for d in left:
        tiling.add(mirror_domino(d))
    covered = [sq for d in tiling for sq in d]
    if len(covered) != len(set(covered)) or set(covered) != region.squares:
        raise ValueError("paths do not induce a tiling of the region")
    return frozenset(tuple(sorted(d)) for d in tiling)


# --- rendering ---------------------------------------------------------------

def render_text(region: Region, tiling) -> str:
    """ASCII picture: domino outlines, # marks at diagonal cell corners, the
    cell values across the axis, and a bottom-to-top value legend."""
    squares = region.squares
    amin = min(a for a, _ in squares)
    amax = max(a for a, _ in squares)
    bmin = min(b for _, b in squares)
    bmax = max(b for _, b in squares)
    width = 2 * (amax - amin + 1) + 1
    height = 2 * (bmax - bmin + 1) + 1
    canvas = [[" "] * width for _ in range(height)]

    def corner_rc(a, b):
        # char position of the lower-left corner of square (a, b)
        return 2 * (bmax - b) + 2, 2 * (a - amin)

    def draw_box(a0, b0, a1, b1):
        r1, c0 = corner_rc(a0, b0)
        r0, _ = corner_rc(a1, b1)
        r0 -= 2
        _, c1 = corner_rc(a1 + 1, b0)
        for c in range(c0, c1 + 1):
            canvas[r0][c] = canvas[r1][c] = "-"
        for r in range(r0, r1 + 1):
            canvas[r][c0] = canvas[r][c1] = "|"
        for r, c in ((r0, c0), (r0, c1), (r1, c0), (r1, c1)):
            canvas[r][c] = "+"

    for d in sorted(tiling):
        (a0, b0), (a1, b1) = d
        draw_box(a0, b0, a1, b1)

    def mark(r, c, ch):
        # deleted boundary squares can push cell corners off the canvas
        if 0 <= r < height and 0 <= c < width:
            canvas[r][c] = ch

    profile = diagonal_profile(region, tiling)
    for k in range(1, region.n + 1):
        (a0, b0), _, _, (a1, b1) = cell_block(region.n, k)
        r1, c0 = corner_rc(a0, b0)
        r0, _ = corner_rc(a1, b1)
        r0 -= 2
        _, c1 = corner_rc(a1 + 1, b0)
        for r, c in ((r0, c0), (r0, c1), (r1, c0), (r1, c1)):
            mark(r, c, "#")
        value = profile[k - 1]
        mark((r0 + r1) // 2, (c0 + c1) // 2,
             "0" if value == 0 else ("+" if value > 0 else "-"))
    lines = ["".join(row).rstrip() for row in canvas]
    legend = "cells bottom to top: " + ", ".join(f"{v:+d}" for v in profile)
    return "\n".join(line for line in lines) + "\n" + legend + "\n"


def render_svg(region: Region, tiling) -> str:
    """Self-contained SVG: region squares, domino outlines, dashed diagonal
    cells with their values."""
    unit = 24
    squares = region.squares
    amin = min(a for a, _ in squares)
    amax = max(a for a, _ in squares)
    bmin = min(b for _, b in squares)
    bmax = max(b for _, b in squares)

    def xy(a, b):
        return (a - amin) * unit, (bmax - b) * unit

    w = (amax - amin + 1) * unit
    h = (bmax - bmin + 1) * unit
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">'
    ]
    for a, b in sorted(squares):
        x, y = xy(a, b)
        fill = "#d8d8d8" if is_black(region.n, (a, b)) else "#f4f4f4"
        parts.append(
            f'<rect x="{x}" y="{y}" width="{unit}" height="{unit}" '
            f'fill="{fill}"/>'
        )
    for d in sorted(tiling):
        (a0, b0), (a1, b1) = d
        x, y = xy(a0, b1)
        dw = (a1 - a0 + 1) * unit
        dh = (b1 - b0 + 1) * unit
        parts.append(
            f'<rect x="{x + 1}" y="{y + 1}" width="{dw - 2}" height="{dh - 2}" '
            f'rx="4" fill="none" stroke="#222" stroke-width="2"/>'
        )
    profile = diagonal_profile(region, tiling)
    for k in range(1, region.n + 1):
        (a0, b0), _, _, (a1, b1) = cell_block(region.n, k)
        x, y = xy(a0, b1)
        parts.append(
            f'<rect x="{x}" y="{y}" width="{2 * unit}" height="{2 * unit}" '
            f'fill="none" stroke="#c22" stroke-width="1.5" '
            f'stroke-dasharray="4 3"/>'
        )
        value = profile[k - 1]
        parts.append(
            f'<text x="{x + unit}" y="{y + unit + 5}" font-size="14" '
            f'text-anchor="middle" fill="#c22">{value:+d}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
