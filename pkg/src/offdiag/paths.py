"""Non-intersecting lattice path machinery on a triangular staircase region.

The digraph lives on integer points (-a, b) for 1 <= a <= n, with unit steps
(0,1), (1,0), (1,1).  Distinguished points, all in rotated coordinates:

    x_i = (-i, 0)            row of inner sources
    u_j = (-j, -1)           bottom sources ("full" variant only); from the
                             bottom row only the (0,1) and (1,1) steps exist
    v_l: v_{2j} = (-j, j-1), v_{2j-1} = (-j, j-2)   staircase sinks, paired
                             into doublets (v_{2j-1}, v_{2j})
    w_i = (-n, i-1)          left wall

The "full" variant keeps the bottom row (and with it v_1 = u_1); "reduced"
drops it, so doublets start at index 2.  Path counts, the antisymmetric
doublet kernel Q, and explicit enumeration of vertex-disjoint path families
(with the permutation sign bookkeeping of the Pfaffian method) all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

FULL = "full"
REDUCED = "reduced"

Point = tuple[int, int]


@lru_cache(maxsize=None)
def delannoy(p: int, q: int) -> int:
    """Delannoy number: monotone (E, N, NE) paths from (0,0) to (p,q)."""
    if p < 0 or q < 0:
        return 0
    if p == 0 or q == 0:
        return 1
    return delannoy(p - 1, q) + delannoy(p, q - 1) + delannoy(p - 1, q - 1)


class PathGraph:
    """The staircase digraph of a given size, with its labeled points."""

    def __init__(self, n: int, variant: str = FULL):
        if n < 1:
            raise ValueError("n must be >= 1")
        if variant not in (FULL, REDUCED):
            raise ValueError(f"unknown variant {variant!r}")
        self.n = n
        self.variant = variant
        lo = -1 if variant == FULL else 0
        verts = set()
        for a in range(1, n + 1):
            for b in range(lo, a):
                verts.add((-a, b))
        self.vertices = frozenset(verts)
        out = {}
        for p in sorted(verts):
            px, py = p
            steps = ((0, 1), (1, 1)) if py == -1 else ((0, 1), (1, 0), (1, 1))
            out[p] = tuple(
                q for q in sorted((px + dx, py + dy) for dx, dy in steps)
                if q in verts
            )
        self.out = out
        self.x = {i: (-i, 0) for i in range(1, n + 1)}
        self.w = {i: (-n, i - 1) for i in range(1, n + 1)}
        self.u = {j: (-j, -1) for j in range(1, n + 1)} if variant == FULL else {}
        first = 1 if variant == FULL else 2
        self.v = {}
        for j in range(1, n + 1):
            if 2 * j - 1 >= 2 * first - 1:
                self.v[2 * j - 1] = (-j, j - 2)
            self.v[2 * j] = (-j, j - 1)
        self.doublet_indices = tuple(range(first, n + 1))
        self.doublets = tuple(
            ((-j, j - 2), (-j, j - 1)) for j in self.doublet_indices
        )
        self._counts: dict[Point, dict[Point, int]] = {}

    def path_counts(self, src: Point) -> dict[Point, int]:
        """All path counts out of src, by forward DP in topological order."""
        got = self._counts.get(src)
        if got is not None:
            return got
        counts = {src: 1} if src in self.vertices else {}
        for p in sorted(self.vertices, key=lambda p: (p[0] + p[1], p[0])):
            c = counts.get(p)
            if not c:
                continue
            for q in self.out[p]:
                counts[q] = counts.get(q, 0) + c
        self._counts[src] = counts
        return counts

    def count_paths(self, a: Point, b: Point) -> int:
        return self.path_counts(a).get(b, 0)


def q_doublet(g: PathGraph, a: Point, b: Point) -> int:
    """Antisymmetric kernel: sum over doublets of the 2x2 path-count minor."""
    ca, cb = g.path_counts(a), g.path_counts(b)
    total = 0
    for vm, vp in g.doublets:
        total += ca.get(vm, 0) * cb.get(vp, 0) - ca.get(vp, 0) * cb.get(vm, 0)
    return total


def q_free(g: PathGraph, a: Point, b: Point, ends=None) -> int:
    """Same kernel but summed over all ascending pairs of the given sinks
    (defaults to every staircase point, not just matched doublets)."""
    if ends is None:
        ends = [g.v[k] for k in sorted(g.v)]
    ca, cb = g.path_counts(a), g.path_counts(b)
    total = 0
    for i in range(len(ends)):
        for j in range(i + 1, len(ends)):
            e1, e2 = ends[i], ends[j]
            total += ca.get(e1, 0) * cb.get(e2, 0) - ca.get(e2, 0) * cb.get(e1, 0)
    return total


@dataclass(frozen=True)
class PathFamily:
    """One vertex-disjoint path family.

    paths[s] runs from starts[connection[s] - 1] to ends[s]; connection is
    the slot -> start assignment as 1-based indices and sign its permutation
    sign.
    """

    ends: tuple[Point, ...]
    paths: tuple[tuple[Point, ...], ...]
    connection: tuple[int, ...]
    sign: int


def _perm_sign(perm) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _paths_into(g: PathGraph, a: Point, b: Point, occupied):
    """Yield every path a -> b (as a vertex tuple) avoiding `occupied`."""
    if a not in g.vertices or b not in g.vertices or a in occupied:
        return
    if a[0] > b[0] or a[1] > b[1]:
        return

    def walk(p, acc):
        if p == b:
            yield acc
            return
        for q in g.out[p]:
            if q not in occupied and q[0] <= b[0] and q[1] <= b[1]:
                yield from walk(q, acc + (q,))

    yield from walk(a, (a,))


def enumerate_families(g: PathGraph, starts, fixed_ends=(), use_doublets=True):
    """All vertex-disjoint path families from `starts` onto admissible ends.

    End slots are the fixed ends (in the given order) followed by free ends
    in ascending staircase order; with use_doublets=True the free ends are
    whole doublets, otherwise any ascending tuple of staircase points.  Every
    assignment of starts to slots contributes one PathFamily per disjoint
    realization, carrying the permutation sign.  Exhaustive, hence refused
    for n > 8.
    """
    if g.n > 8:
        raise ValueError("family enumeration is exponential; n > 8 refused")
    starts = tuple(starts)
    fixed = tuple(fixed_ends)
    r, m = len(starts), len(fixed)
    if m > r:
        raise ValueError("more fixed ends than starts")
    free = r - m
    if use_doublets:
        if free % 2:
            end_choices = []
        else:
            end_choices = [
                fixed + tuple(p for d in chosen for p in d)
                for chosen in combinations(g.doublets, free // 2)
            ]
    else:
        pool = tuple(g.v[k] for k in sorted(g.v))
        end_choices = [fixed + chosen for chosen in combinations(pool, free)]

    families = []
    for ends in end_choices:
        if len(set(ends)) < len(ends):
            continue
        _assign(g, starts, ends, families)
    return tuple(families)


def _assign(g, starts, ends, out):
    r = len(starts)

    def rec(slot, used, occupied, paths, perm):
        if slot == r:
            out.append(PathFamily(ends=ends, paths=tuple(paths),
                                  connection=tuple(perm), sign=_perm_sign(perm)))
            return
        target = ends[slot]
        for s in range(r):
            if used >> s & 1:
                continue
            for path in _paths_into(g, starts[s], target, occupied):
                rec(slot + 1, used | 1 << s, occupied | set(path),
                    paths + [path], perm + [s + 1])

    rec(0, 0, frozenset(), [], [])


def signed_family_count(families) -> int:
    return sum(f.sign for f in families)
