"""Cross-verification battery and numeric conjecture scans.

Every check compares two independently computed exact quantities and reports
PASS or FAIL with a witness for the first disagreement.  Floats appear only
in the advisory columns of the asymptotic scan rows; no tolerance is ever
applied to a correctness decision.

Set OFFDIAG_THREADS=<k> to fan independent checks of a suite over k worker
threads; results keep their declared order either way.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import series
from .counts import (
    _o_vector_direct,
    count_nearly,
    count_off_diag,
    d_entry_bordered,
    d_vector,
    even_order_full,
    o_vector,
)
from .matrices import (
    g_sequence,
    matrix_a,
    matrix_m,
    matrix_r,
    pell_vector,
    r_value,
    t_array,
)
from .oracle import (
    build_region,
    count_all_tilings,
    diagonal_profile,
    enumerate_tilings,
    is_mirror_symmetric,
    oracle_counts,
    paths_to_tiling,
    tiling_to_paths,
)
from .paths import (
    FULL,
    REDUCED,
    PathGraph,
    delannoy,
    enumerate_families,
    q_doublet,
    signed_family_count,
)
from .pfaffian import (
    SkewMatrix,
    bordered_skew,
    determinant,
    pfaffian,
    pfaffian_cofactor,
    pfaffian_eliminate,
    principal_submatrix,
    rational_rank,
)

_SEED = 20260819
_JSON_INT_LIMIT = 1 << 53


@dataclass(frozen=True)
class CheckResult:
    check: str
    range: str
    status: str
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.status == "PASS"


@dataclass(frozen=True)
class CheckReport:
    suite: str
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if not r.ok)

    def to_jsonable(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {
                    "check": r.check,
                    "range": r.range,
                    "status": r.status,
                    "witness": jsonable(r.witness),
                }
                for r in self.results
            ],
        }


def jsonable(value):
    """JSON-safe copy: ints beyond exact float range become decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if abs(value) < _JSON_INT_LIMIT else str(value)
    if isinstance(value, float) or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def _check(check_id: str, range_str: str, failures) -> CheckResult:
    witness = None
    if failures:
        witness = {"failures": len(failures), "first": failures[0]}
    return CheckResult(check=check_id, range=range_str,
                       status="FAIL" if failures else "PASS", witness=witness)


def _run_suite(suite: str, builders) -> CheckReport:
    workers = int(os.environ.get("OFFDIAG_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda f: f(), builders))
    else:
        results = [f() for f in builders]
    return CheckReport(suite=suite, results=tuple(results))


# --- identity battery --------------------------------------------------------

def _random_skew(rng: random.Random, order: int) -> SkewMatrix:
    rows = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(i + 1, order):
            e = rng.randint(-50, 50)
            rows[i][j] = e
            rows[j][i] = -e
    return SkewMatrix(rows)


def _check_pfaffian_routes() -> CheckResult:
    rng = random.Random(_SEED)
    failures = []
    for trial in range(200):
        order = rng.randint(0, 10)
        m = _random_skew(rng, order)
        c = pfaffian_cofactor(m)
        e = pfaffian_eliminate(m)
        d = pfaffian(m)
        if not (c == e == d):
            failures.append({"trial": trial, "order": order,
                             "cofactor": c, "eliminate": e})
        if order % 2 and c != 0:
            failures.append({"trial": trial, "order": order, "odd": c})
    if pfaffian_cofactor(SkewMatrix(())) != 1 or pfaffian_eliminate(SkewMatrix(())) != 1:
        failures.append({"empty": "pfaffian of the empty matrix must be 1"})
    return _check("pfaffian-routes-agree",
                  "200 seeded random skew matrices, orders 0..10", failures)


def _check_pfaffian_square() -> CheckResult:
    rng = random.Random(_SEED + 1)
    failures = []
    for trial in range(120):
        order = rng.randint(0, 8)
        m = _random_skew(rng, order)
        pf = pfaffian(m)
        det = determinant(m.rows)
        if pf * pf != det:
            failures.append({"trial": trial, "order": order,
                             "pf": pf, "det": det})
    return _check("pfaffian-square-equals-determinant",
                  "120 seeded random skew matrices, orders 0..8", failures)


def _check_pfaffian_swap() -> CheckResult:
    rng = random.Random(_SEED + 2)
    failures = []
    for trial in range(120):
        order = 2 * rng.randint(1, 5)
        m = _random_skew(rng, order)
        i, j = rng.sample(range(order), 2)
        perm = list(range(order))
        perm[i], perm[j] = perm[j], perm[i]
        swapped = SkewMatrix(
            tuple(tuple(m.rows[perm[r]][perm[c]] for c in range(order))
                  for r in range(order))
        )
        if pfaffian(swapped) != -pfaffian(m):
            failures.append({"trial": trial, "order": order, "swap": (i, j)})
    return _check("pfaffian-swap-antisymmetry",
                  "120 seeded random swaps, orders 2..10", failures)


def _check_bordered_expansion() -> CheckResult:
    rng = random.Random(_SEED + 3)
    failures = []
    for trial in range(80):
        order = 2 * rng.randint(1, 4) + 1
        m = _random_skew(rng, order)
        col = [rng.randint(-50, 50) for _ in range(order)]
        bordered, sign = bordered_skew(m, [col])
        lhs = sign * pfaffian(bordered)
        rhs = sum(
            (-1) ** (k - 1) * col[k - 1]
            * pfaffian(principal_submatrix(m, [i for i in range(1, order + 1)
                                               if i != k]))
            for k in range(1, order + 1)
        )
        if lhs != rhs:
            failures.append({"trial": trial, "order": order,
                             "bordered": lhs, "expansion": rhs})
    return _check("bordered-pfaffian-expansion",
                  "80 seeded random odd skew matrices with random border",
                  failures)


def _check_series_expansion_roundtrip() -> CheckResult:
    rng = random.Random(_SEED + 4)
    order = 12
    failures = []
    for trial in range(120):
        num = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
        den = ([rng.choice((-2, -1, 1, 2))]
               + [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))])
        coeffs = series.expand_rational(num, den, order)
        back = series.multiply(coeffs, den, order)
        want = (tuple(Fraction(v) for v in num)
                + (Fraction(0),) * (order - len(num)))
        if back != want:
            failures.append({"trial": trial, "num": num, "den": den,
                             "product": back})
    return _check("series-expansion-roundtrip",
                  "120 seeded random rational functions, 12 terms", failures)


def _check_series_sqrt_roundtrip() -> CheckResult:
    rng = random.Random(_SEED + 5)
    failures = []
    for trial in range(120):
        root = ((Fraction(1),)
                + tuple(Fraction(rng.randint(-6, 6))
                        for _ in range(rng.randint(0, 8))))
        square = series.multiply(root, root)
        got = series.sqrt(square)
        if got != root or series.multiply(got, got) != square:
            failures.append({"trial": trial, "root": root, "got": got})
    return _check("series-sqrt-roundtrip",
                  "120 seeded random roots squared and recovered", failures)


def _check_schroeder_numbers() -> CheckResult:
    count = 30
    sch = series.schroeder_numbers(count)
    failures = []
    if sch[:5] != (1, 2, 6, 22, 90):
        failures.append({"first-five": sch[:5]})
    rec = [1, 2]
    for n in range(2, count):
        rec.append(3 * rec[n - 1]
                   + sum(rec[k] * rec[n - 1 - k] for k in range(1, n - 1)))
    if sch != tuple(rec):
        failures.append({"expansion": sch, "recurrence": tuple(rec)})
    return _check("schroeder-generating-function",
                  "series expansion vs convolution recurrence, 30 terms",
                  failures)


def _check_kernel_matches_recurrence(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(1, cap + 1):
        g = PathGraph(n, FULL)
        a = matrix_a(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                got = q_doublet(g, g.u[i], g.u[j])
                if got != a.rows[i - 1][j - 1]:
                    failures.append({"n": n, "i": i, "j": j, "kernel": got,
                                     "matrix": a.rows[i - 1][j - 1]})
    return _check("doublet-kernel-matches-recurrence",
                  f"full graphs n <= {cap}, all source pairs", failures)


def _check_path_count_closed_forms(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(1, cap + 1):
        g = PathGraph(n, FULL)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                even = g.count_paths(g.x[i], g.v[2 * j])
                if even != delannoy(i - j, j - 1):
                    failures.append({"n": n, "i": i, "j": j, "point": "even",
                                     "count": even})
                odd = g.count_paths(g.x[i], g.v[2 * j - 1])
                if odd != delannoy(i - j, j - 2):
                    failures.append({"n": n, "i": i, "j": j, "point": "odd",
                                     "count": odd})
                s = (g.count_paths(g.u[i], g.v[2 * j])
                     + g.count_paths(g.u[i], g.v[2 * j - 1]))
                d = (g.count_paths(g.u[i], g.v[2 * j])
                     - g.count_paths(g.u[i], g.v[2 * j - 1]))
                if s != 2 * delannoy(i - j, j - 1):
                    failures.append({"n": n, "i": i, "j": j, "sum": s})
                if d != 2 * delannoy(i - j - 1, j - 1):
                    failures.append({"n": n, "i": i, "j": j, "diff": d})
    return _check("path-counts-match-delannoy",
                  f"full graphs n <= {cap}, all labeled endpoints", failures)


def _check_translation_invariance(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(2, cap + 1):
        g = PathGraph(n, REDUCED)
        verts = sorted(g.vertices)
        for a in verts:
            for b in verts:
                a2 = (a[0] + 1, a[1] - 1)
                b2 = (b[0] + 1, b[1] - 1)
                if a2 in g.vertices and b2 in g.vertices:
                    if q_doublet(g, a, b) != q_doublet(g, a2, b2):
                        failures.append({"n": n, "a": a, "b": b})
    return _check("kernel-translation-invariance",
                  f"reduced graphs n <= {cap}, all vertex pairs", failures)


def _check_wall_shift(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(2, cap + 1):
        g = PathGraph(n, REDUCED)
        for i in range(1, n):
            for j in range(1, n):
                lhs = q_doublet(g, g.x[i], g.w[j])
                rhs = q_doublet(g, g.x[i + 1], g.w[j + 1])
                if j == 1:
                    rhs += (-1) ** i
                if lhs != rhs:
                    failures.append({"n": n, "i": i, "j": j,
                                     "lhs": lhs, "rhs": rhs})
    return _check("wall-shift-boundary-term",
                  f"reduced graphs n <= {cap}", failures)


def _check_three_term_window(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(4, cap + 1):
        g = PathGraph(n, REDUCED)
        h = PathGraph(n - 1, REDUCED)
        for i in range(3, n):
            lhs = q_doublet(g, g.x[i], g.w[2])
            rhs = (q_doublet(h, h.x[i], h.w[2])
                   + q_doublet(h, h.x[i - 1], h.w[2])
                   + q_doublet(g, g.x[i - 1], g.w[2]))
            if lhs != rhs:
                failures.append({"n": n, "i": i, "lhs": lhs, "rhs": rhs})
    return _check("window-three-term-recurrence",
                  f"reduced graphs 4 <= n <= {cap}", failures)


def _check_corner_kernel(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(2, cap + 1):
        g = PathGraph(n, FULL)
        lhs = q_doublet(g, g.u[n], g.w[1])
        pair = q_doublet(g, g.u[n - 1], g.u[n])
        rhs = pair // 2 + (-1) ** (n - 1)
        if pair % 2 or lhs != rhs:
            failures.append({"n": n, "lhs": lhs, "rhs": rhs})
    return _check("corner-kernel-halves-pair",
                  f"full graphs 2 <= n <= {cap}", failures)


def _check_wall_kernel_linear(n_max: int) -> CheckResult:
    cap = min(n_max, 8)
    failures = []
    for n in range(3, cap + 1):
        g = PathGraph(n, FULL)
        got = q_doublet(g, g.u[2], g.w[1])
        if got != 2 * n - 4:
            failures.append({"n": n, "got": got, "want": 2 * n - 4})
    return _check("wall-kernel-linear-value",
                  f"full graphs 3 <= n <= {cap}", failures)


def _check_r_structure(n_max: int) -> CheckResult:
    cap = min(n_max, 12)
    failures = []
    for n in range(1, cap + 1):
        rows = matrix_r(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                signed = rows[i - 1][j - 1]
                if j < i and signed != 0:
                    failures.append({"n": n, "i": i, "j": j, "below": signed})
                if j == i and signed != (-1) ** (n + i):
                    failures.append({"n": n, "i": i, "diag": signed})
                if j > i and r_value(n, i, j) != r_value(n, 1, j - i + 1):
                    failures.append({"n": n, "i": i, "j": j,
                                     "translation": r_value(n, i, j)})
    for n in range(3, cap + 1):
        for j in range(2, n):
            lhs = r_value(n, 1, j)
            rhs = (r_value(n, 1, j - 1) + r_value(n - 1, 1, j)
                   + r_value(n - 1, 1, j - 1))
            if lhs != rhs:
                failures.append({"n": n, "j": j, "recurrence": (lhs, rhs)})
    return _check("r-matrix-structure",
                  f"triangularity, shift invariance, first-row recurrence, "
                  f"n <= {cap}", failures)


def _check_r_involution(n_max: int) -> CheckResult:
    cap = min(n_max, 12)
    failures = []
    for n in range(1, cap + 1):
        rows = matrix_r(n)
        for i in range(n):
            for j in range(n):
                entry = sum(rows[i][k] * rows[k][j] for k in range(n))
                if entry != (1 if i == j else 0):
                    failures.append({"n": n, "i": i + 1, "j": j + 1,
                                     "entry": entry})
    return _check("r-matrix-involution", f"matrix squares, n <= {cap}",
                  failures)


def _check_r_reverses_counts(n_max: int) -> CheckResult:
    cap = min(n_max, 12)
    failures = []
    for n in range(1, cap + 1, 2):
        rows = matrix_r(n)
        o = o_vector(n)
        image = tuple(sum(rows[i][j] * o[j] for j in range(n))
                      for i in range(n))
        if image != tuple(reversed(o)):
            failures.append({"n": n, "image": image, "vector": o})
    return _check("r-matrix-reverses-deletion-vector",
                  f"odd orders <= {cap}", failures)


def _check_r_first_row_closed_forms(n_max: int) -> CheckResult:
    cap = min(n_max, 12)
    failures = []
    for n in range(2, cap + 1):
        if r_value(n, 1, 2) != 2 * (n - 2):
            failures.append({"n": n, "j": 2, "got": r_value(n, 1, 2)})
    for n in range(3, cap + 1):
        if r_value(n, 1, 3) != 2 * (n - 2) ** 2:
            failures.append({"n": n, "j": 3, "got": r_value(n, 1, 3)})
    for n in range(4, cap + 1):
        want = Fraction(2, 3) * (2 * n**3 - 12 * n**2 + 25 * n - 30)
        if r_value(n, 1, 4) != want:
            failures.append({"n": n, "j": 4, "got": r_value(n, 1, 4),
                             "want": want})
    return _check("r-matrix-first-row-closed-forms",
                  f"linear, square and cubic values, n <= {cap}", failures)


def _check_t_matches_r(n_max: int) -> CheckResult:
    cap = min(n_max, 12)
    arr = t_array(cap, cap)
    failures = []
    for n in range(1, cap + 1):
        for j in range(1, n + 1):
            if arr[n - 1][j - 1] != r_value(n, 1, j):
                failures.append({"n": n, "j": j, "array": arr[n - 1][j - 1],
                                 "kernel": r_value(n, 1, j)})
    return _check("t-array-matches-kernel-rows",
                  f"rows n <= {cap} against first-row kernel values",
                  failures)


def _check_t_row_generating_function() -> CheckResult:
    cols = 30
    arr = t_array(cols, cols)
    failures = []
    for n in range(1, cols + 1):
        num = series.poly_multiply(series.poly_power((1, 1), n - 1),
                                   (1, -1, -3, -1))
        den = series.poly_multiply(series.poly_power((1, -1), n - 1),
                                   (1, 1, -3, 1))
        row = series.integer_coeffs(series.expand_rational(num, den, cols))
        if row != arr[n - 1]:
            failures.append({"n": n, "series": row[:6],
                             "array": arr[n - 1][:6]})
    return _check("t-array-row-generating-function",
                  "rows n <= 30 against shifted rational expansion", failures)


def _check_t_alternating_convolution() -> CheckResult:
    size = 30
    arr = t_array(size, size)
    failures = []
    for n in range(1, size + 1):
        for j in range(1, size + 1):
            acc = sum((-1) ** (k + j) * arr[n - 1][k - 1] * arr[n - 1][j - k]
                      for k in range(1, j + 1))
            if acc != (1 if j == 1 else 0):
                failures.append({"n": n, "j": j, "sum": acc})
    return _check("t-array-alternating-convolution",
                  "rows and columns <= 30", failures)


def _check_t_series_inverse_pair() -> CheckResult:
    order = 24
    arr = t_array(20, order)
    one = (Fraction(1),) + (Fraction(0),) * (order - 1)
    failures = []
    for n in range(1, 21):
        row = arr[n - 1]
        neg = tuple(c if i % 2 == 0 else -c for i, c in enumerate(row))
        if series.multiply(row, neg) != one:
            failures.append({"n": n})
    return _check("t-row-series-inverse-pair",
                  "row series times sign-flipped row series, n <= 20",
                  failures)


def _check_diagonal_closed_form() -> CheckResult:
    size = 30
    arr = t_array(size, size)
    closed = series.integer_coeffs(series.expand_rational(
        series.subtract(series.expand_rational((3, -1), (1,), size),
                        series.sqrt(series.expand_rational((1, -6, 1), (1,),
                                                           size))),
        (2, 2), size))
    sch = series.schroeder_numbers(size)
    failures = []
    for n in range(1, size + 1):
        diag = arr[n - 1][n - 1]
        finite = (sum((-1) ** (l - 1) * sch[n - 1 - l] for l in range(1, n))
                  + (-1) ** (n - 1))
        if not (diag == closed[n - 1] == finite):
            failures.append({"n": n, "array": diag, "closed": closed[n - 1],
                             "finite-sum": finite})
    return _check("diagonal-closed-form",
                  "array diagonal vs algebraic series vs finite sum, n <= 30",
                  failures)


def _check_pell_delannoy_sums() -> CheckResult:
    pell = pell_vector(40)
    failures = []
    for i in range(1, 41):
        total = sum(2 * delannoy(i - j, j - 1) for j in range(1, i + 1))
        if total != pell[i - 1]:
            failures.append({"i": i, "sum": total, "pell": pell[i - 1]})
    return _check("pell-equals-doubled-delannoy-sums", "indices i <= 40",
                  failures)


def _odd_cap(n_max: int) -> int:
    return n_max if n_max % 2 else n_max - 1


def _check_deletion_palindrome(n_max: int) -> CheckResult:
    cap = _odd_cap(n_max)
    failures = []
    for n in range(1, cap + 1, 2):
        o = o_vector(n)
        if o != tuple(reversed(o)):
            failures.append({"n": n, "vector": o})
    return _check("deletion-vector-palindrome", f"odd orders <= {cap}",
                  failures)


def _check_deletion_ratios(n_max: int) -> CheckResult:
    cap = _odd_cap(n_max)
    failures = []
    for n in range(3, cap + 1, 2):
        o = o_vector(n)
        if o[1] != (n - 2) * o[0]:
            failures.append({"n": n, "first": o[0], "second": o[1]})
        d = d_vector("pm", n)
        if d[1] != (n - 1) * d[0]:
            failures.append({"n": n, "d-first": d[0], "d-second": d[1]})
    return _check("second-entry-ratios", f"odd orders 3..{cap}", failures)


def _check_deletion_alternating_sum(n_max: int) -> CheckResult:
    cap = _odd_cap(n_max)
    failures = []
    for n in range(1, cap + 1, 2):
        o = o_vector(n)
        acc = sum((-1) ** (k + 1) * o[k] for k in range(1, n))
        if acc != 0:
            failures.append({"n": n, "sum": acc})
    return _check("deletion-vector-alternating-sum",
                  f"odd orders <= {cap}, entries after the first", failures)


def _check_kernel_route(n_max: int) -> CheckResult:
    cap = min(_odd_cap(n_max), 13)
    failures = []
    for n in range(1, cap + 1, 2):
        fast = o_vector(n)
        direct = _o_vector_direct(n)
        if fast != direct:
            failures.append({"n": n, "fast": fast, "direct": direct})
    return _check("deletion-vector-kernel-route", f"odd orders <= {cap}",
                  failures)


def _check_nearly_total(n_max: int) -> CheckResult:
    cap = _odd_cap(n_max)
    failures = []
    for n in range(1, cap + 1, 2):
        total = count_nearly(n)
        pm = d_vector("pm", n)
        plus = d_vector("plus", n)
        minus = d_vector("minus", n)
        if total != sum(pm):
            failures.append({"n": n, "bordered": total, "by-cell": sum(pm)})
        if any(pm[k] != plus[k] + minus[k] for k in range(n)):
            failures.append({"n": n, "pm": pm, "plus": plus, "minus": minus})
    return _check("nearly-total-equals-cell-sums", f"odd orders <= {cap}",
                  failures)


def _check_defect_routes(n_max: int) -> CheckResult:
    cap = min(_odd_cap(n_max), 21)
    failures = []
    for n in range(1, cap + 1, 2):
        for variant in ("pm", "minus", "plus"):
            vec = d_vector(variant, n)
            for k in range(1, n + 1):
                direct = d_entry_bordered(variant, n, k)
                if direct != vec[k - 1]:
                    failures.append({"n": n, "variant": variant, "k": k,
                                     "bordered": direct,
                                     "matrix": vec[k - 1]})
    return _check("defect-entry-routes-agree",
                  f"odd orders <= {cap}, all cells and variants", failures)


def _check_family_enumeration(n_max: int) -> CheckResult:
    from itertools import combinations

    cap = min(n_max, 4)
    failures = []
    for n in range(1, cap + 1):
        g = PathGraph(n, FULL)
        a = matrix_a(n)
        for size in range(0, n + 1):
            for labels in combinations(range(1, n + 1), size):
                fams = enumerate_families(g, [g.u[i] for i in labels])
                signed = signed_family_count(fams)
                pf = (pfaffian(principal_submatrix(a, labels))
                      if labels else 1)
                if signed != pf:
                    failures.append({"n": n, "labels": labels,
                                     "families": signed, "pfaffian": pf})
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                fams = enumerate_families(g, (g.u[j], g.w[i]))
                signed = signed_family_count(fams)
                kernel = q_doublet(g, g.u[j], g.w[i])
                if signed != kernel:
                    failures.append({"n": n, "i": i, "j": j,
                                     "families": signed, "kernel": kernel})
    pair_cap = min(n_max, 5)
    for n in range(1, pair_cap + 1):
        g = PathGraph(n, FULL)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                fams = enumerate_families(g, (g.u[i], g.u[j]))
                kernel = q_doublet(g, g.u[i], g.u[j])
                if len(fams) != kernel or signed_family_count(fams) != kernel:
                    failures.append({"n": n, "i": i, "j": j,
                                     "families": len(fams),
                                     "kernel": kernel})
    return _check("family-enumeration-matches-pfaffians",
                  f"all start subsets n <= {cap}, pairs n <= {pair_cap}",
                  failures)


def _check_nearly_families(n_max: int) -> CheckResult:
    cap = min(_odd_cap(n_max), 5)
    failures = []
    for n in range(1, cap + 1, 2):
        g = PathGraph(n, FULL)
        starts = [g.u[i] for i in range(1, n + 1)]
        per_cell = []
        for k in range(1, n + 1):
            lo_fams = enumerate_families(g, starts,
                                         fixed_ends=(g.v[2 * k - 1],))
            hi_fams = enumerate_families(g, starts, fixed_ends=(g.v[2 * k],))
            odd_perms = sum(1 for f in lo_fams + hi_fams if f.sign != 1)
            if odd_perms:
                failures.append({"n": n, "k": k,
                                 "odd-permutation-families": odd_perms})
            per_cell.append((signed_family_count(lo_fams),
                             signed_family_count(hi_fams)))
        pm = d_vector("pm", n)
        plus = d_vector("plus", n)
        minus = d_vector("minus", n)
        for k in range(n):
            lo, hi = per_cell[k]
            if lo + hi != pm[k] or 2 * lo != plus[k] or hi - lo != minus[k]:
                failures.append({"n": n, "k": k + 1, "lower-end": lo,
                                 "upper-end": hi, "pm": pm[k],
                                 "plus": plus[k], "minus": minus[k]})
    return _check("nearly-families-split-by-endpoint",
                  f"full graphs, odd n <= {cap}", failures)


def _check_oracle_small(n_max: int) -> CheckResult:
    cap = min(_odd_cap(n_max), 5)
    failures = []
    for n in range(1, cap + 1, 2):
        oc = oracle_counts(n)
        if oc.o != o_vector(n):
            failures.append({"n": n, "oracle": oc.o, "matrix": o_vector(n)})
        if oc.d_pm != d_vector("pm", n):
            failures.append({"n": n, "oracle": oc.d_pm,
                             "matrix": d_vector("pm", n)})
        if oc.nearly_total != count_nearly(n):
            failures.append({"n": n, "oracle": oc.nearly_total,
                             "matrix": count_nearly(n)})
        if oc.off_diag_full != 0:
            failures.append({"n": n, "full-region": oc.off_diag_full})
    return _check("oracle-agrees-small", f"exhaustive regions, odd n <= {cap}",
                  failures)


def _check_tiling_census(n_max: int) -> CheckResult:
    cap = min(n_max, 5)
    failures = []
    for n in range(1, cap + 1):
        total = count_all_tilings(build_region(n))
        want = 2 ** (n * (n + 1) // 2)
        if total != want:
            failures.append({"n": n, "count": total, "power": want})
    return _check("tiling-count-power-of-two", f"full regions n <= {cap}",
                  failures)


def _check_tiling_round_trip(n_max: int) -> CheckResult:
    cap = min(n_max, 4)
    failures = []
    for n in range(1, cap + 1):
        region = build_region(n)
        for index, tiling in enumerate(enumerate_tilings(region)):
            if not is_mirror_symmetric(tiling):
                continue
            paths = tiling_to_paths(region, tiling)
            points = [p for path in paths.values() for p in path]
            if len(points) != len(set(points)):
                failures.append({"n": n, "index": index,
                                 "reason": "paths share a point"})
            elif paths_to_tiling(region, paths) != tiling:
                failures.append({"n": n, "index": index,
                                 "reason": "round trip differs"})
    return _check("tiling-path-round-trip",
                  f"symmetric tilings of full regions, n <= {cap}", failures)


def _check_diagonal_doublet_law(n_max: int) -> CheckResult:
    cap = min(n_max, 4)
    failures = []
    for n in range(1, cap + 1):
        region = build_region(n)
        g = PathGraph(n, FULL)
        for index, tiling in enumerate(enumerate_tilings(region)):
            if not is_mirror_symmetric(tiling):
                continue
            profile = diagonal_profile(region, tiling)
            ends = {path[-1]
                    for path in tiling_to_paths(region, tiling).values()}
            for k in range(1, n + 1):
                both_or_neither = ((g.v[2 * k - 1] in ends)
                                   == (g.v[2 * k] in ends))
                if (profile[k - 1] == 0) != both_or_neither:
                    failures.append({"n": n, "index": index, "k": k,
                                     "value": profile[k - 1]})
    return _check("diagonal-doublet-law",
                  f"symmetric tilings of full regions, n <= {cap}", failures)


def verify_identities(n_max: int = 12) -> CheckReport:
    """Run the full identity battery, capped by n_max where it matters."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    builders = [
        _check_pfaffian_routes,
        _check_pfaffian_square,
        _check_pfaffian_swap,
        _check_bordered_expansion,
        _check_series_expansion_roundtrip,
        _check_series_sqrt_roundtrip,
        _check_schroeder_numbers,
        lambda: _check_kernel_matches_recurrence(n_max),
        lambda: _check_path_count_closed_forms(n_max),
        lambda: _check_translation_invariance(n_max),
        lambda: _check_wall_shift(n_max),
        lambda: _check_three_term_window(n_max),
        lambda: _check_corner_kernel(n_max),
        lambda: _check_wall_kernel_linear(n_max),
        lambda: _check_r_structure(n_max),
        lambda: _check_r_involution(n_max),
        lambda: _check_r_reverses_counts(n_max),
        lambda: _check_r_first_row_closed_forms(n_max),
        lambda: _check_t_matches_r(n_max),
        _check_t_row_generating_function,
        _check_t_alternating_convolution,
        _check_t_series_inverse_pair,
        _check_diagonal_closed_form,
        _check_pell_delannoy_sums,
        lambda: _check_deletion_palindrome(n_max),
        lambda: _check_deletion_ratios(n_max),
        lambda: _check_deletion_alternating_sum(n_max),
        lambda: _check_kernel_route(n_max),
        lambda: _check_nearly_total(n_max),
        lambda: _check_defect_routes(n_max),
        lambda: _check_family_enumeration(n_max),
        lambda: _check_nearly_families(n_max),
        lambda: _check_oracle_small(n_max),
        lambda: _check_tiling_census(n_max),
        lambda: _check_tiling_round_trip(n_max),
        lambda: _check_diagonal_doublet_law(n_max),
    ]
    return _run_suite("identities", builders)


# --- rank claim --------------------------------------------------------------

def _reversal_difference(order: int) -> list[list[int]]:
    rows = matrix_r(order)
    return [
        [rows[i][order - 1 - j] - rows[i][j] for j in range(order)]
        for i in range(order)
    ]


def verify_rank_claim(n_max: int = 21) -> CheckReport:
    """Structure of the reversal-difference matrix at odd orders <= n_max:
    mirror antisymmetry, the staircase values, the exact rank drop of its
    left block, and that it annihilates the deletion-count vector."""
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    cap = _odd_cap(n_max)

    def antisymmetry() -> CheckResult:
        failures = []
        for order in range(3, cap + 1, 2):
            x = _reversal_difference(order)
            for i in range(order):
                for j in range(order):
                    if x[i][j] != -x[i][order - 1 - j]:
                        failures.append({"order": order, "i": i + 1,
                                         "j": j + 1})
            mid = (order - 1) // 2
            if any(x[i][mid] for i in range(order)):
                failures.append({"order": order, "middle-column": "nonzero"})
        return _check("reversal-difference-antisymmetry",
                      f"odd orders 3..{cap}", failures)

    def rank_drop() -> CheckResult:
        failures = []
        for order in range(3, cap + 1, 2):
            half = (order + 1) // 2
            x = _reversal_difference(order)
            block = [row[: half - 1] for row in x]
            for r in range(half - 1):
                block[r][r] -= 1
            for r in range(half - 1):
                block[half + r][half - 2 - r] += 1
            rank = rational_rank(block)
            if rank != half - 1:
                failures.append({"order": order, "rank": rank,
                                 "want": half - 1})
        return _check("reversal-difference-rank", f"odd orders 3..{cap}",
                      failures)

    def staircase() -> CheckResult:
        failures = []
        for order in range(3, cap + 1, 2):
            half = (order + 1) // 2
            x = _reversal_difference(order)
            block = [row[: half - 1] for row in x]
            for r in range(half - 1):
                block[r][r] -= 1
            for r in range(half - 1):
                block[half + r][half - 2 - r] += 1
            for j in range(1, half):
                want = 2 if j % 2 else 0
                got = block[order - j][j - 1]
                if got != want:
                    failures.append({"order": order, "j": j, "got": got,
                                     "want": want})
        return _check("reversal-difference-staircase",
                      f"odd orders 3..{cap}", failures)

    def annihilates() -> CheckResult:
        failures = []
        for order in range(3, cap + 1, 2):
            x = _reversal_difference(order)
            o = o_vector(order)
            image = [sum(x[i][j] * o[j] for j in range(order))
                     for i in range(order)]
            if any(image):
                failures.append({"order": order, "image": image})
        return _check("reversal-difference-annihilates-counts",
                      f"odd orders 3..{cap}", failures)

    return _run_suite("rank-claim", [antisymmetry, rank_drop, staircase,
                                     annihilates])


# --- conjecture scans ----------------------------------------------------------

def _is_unimodal(vec) -> bool:
    rising = True
    for a, b in zip(vec, vec[1:]):
        if rising and b < a:
            rising = False
        elif not rising and b > a:
            return False
    return True


def scan_log_concavity(n_max: int = 35):
    """Exact conjecture scan over odd orders 2m-1 for m <= n_max.

    Returns (report, rows); each row records whether the deletion-count
    vector is log-concave (conjectured, checked by cross-multiplication) and
    whether the per-cell defect vector is unimodal (reported only; it is
    expected not to be).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    lc_failures = []
    non_unimodal = []
    for m in range(1, n_max + 1):
        order = 2 * m - 1
        o = o_vector(order)
        log_concave = True
        for k in range(1, order - 1):
            if o[k] * o[k] < o[k - 1] * o[k + 1]:
                log_concave = False
                lc_failures.append({"order": order, "k": k + 1,
                                    "triple": (o[k - 1], o[k], o[k + 1])})
                break
        pm_unimodal = _is_unimodal(d_vector("pm", order))
        if not pm_unimodal:
            non_unimodal.append(order)
        rows.append({"order": order, "log_concave": log_concave,
                     "pm_unimodal": pm_unimodal})
    results = (
        _check("deletion-vector-log-concavity",
               f"odd orders <= {2 * n_max - 1}, exact cross-multiplication",
               lc_failures),
        CheckResult(check="defect-vector-unimodality-report",
                    range=f"odd orders <= {2 * n_max - 1}, informational",
                    status="PASS",
                    witness={"non_unimodal_orders": non_unimodal[:10],
                             "non_unimodal_count": len(non_unimodal)}),
    )
    return CheckReport(suite="log-concavity", results=results), rows


def scan_asymptotics(n_max: int = 35):
    """Numeric growth scan: the square of each count, rooted by the region
    area, against sqrt(2).

    Returns (report, rows).  Roots and gaps are advisory floats; the checks
    are the exact base case and, past the calibration point, that the gap has
    shrunk relative to m=5.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    root2 = math.sqrt(2)
    rows = []
    for m in range(1, n_max + 1):
        even_order = 2 * m
        odd_order = 2 * m - 1
        even_count = even_order_full(even_order)
        nearly_count = count_nearly(odd_order)
        even_root = math.exp(2 * math.log(even_count) / even_order**2)
        nearly_root = math.exp(2 * math.log(nearly_count) / odd_order**2)
        rows.append({
            "m": m,
            "even_order": even_order,
            "even_count": str(even_count),
            "even_root": even_root,
            "even_gap": abs(even_root - root2),
            "odd_order": odd_order,
            "nearly_count": str(nearly_count),
            "nearly_root": nearly_root,
            "nearly_gap": abs(nearly_root - root2),
        })
    results = [
        _check("base-case-exact",
               "smallest even order; its rooted square is exactly sqrt(2)",
               [] if int(rows[0]["even_count"]) == 2 else
               [{"count": rows[0]["even_count"]}]),
    ]
    if n_max > 5:
        ref = rows[4]
        last = rows[-1]
        failures = []
        if not last["even_gap"] < ref["even_gap"]:
            failures.append({"even_gap_last": last["even_gap"],
                             "even_gap_ref": ref["even_gap"]})
        if not last["nearly_gap"] < ref["nearly_gap"]:
            failures.append({"nearly_gap_last": last["nearly_gap"],
                             "nearly_gap_ref": ref["nearly_gap"]})
        results.append(_check("gap-shrinks-past-calibration",
                              f"m = {n_max} against m = 5", failures))
    return CheckReport(suite="asymptotics", results=tuple(results)), rows
