"""Acceptance suite: one test per stated criterion, each contributing a PASS
or FAIL line with its elapsed time to the terminal summary.  Criteria with a
stated runtime budget assert it."""

import time
from contextlib import contextmanager

import conftest

from offdiag import series
from offdiag.cli import main
from offdiag.counts import count_nearly, d_vector, even_order_full, o_vector
from offdiag.matrices import matrix_r, r_value, t_array
from offdiag.oracle import build_region, count_all_tilings, oracle_counts
from offdiag.verify import (
    _check_corner_kernel,
    _check_diagonal_closed_form,
    _check_family_enumeration,
    _check_kernel_matches_recurrence,
    _check_nearly_families,
    _check_path_count_closed_forms,
    _check_t_alternating_convolution,
    _check_t_matches_r,
    _check_three_term_window,
    _check_translation_invariance,
    _check_wall_kernel_linear,
    _check_wall_shift,
    scan_asymptotics,
    scan_log_concavity,
    verify_rank_claim,
)

FIRST_ROW_TABLE = (
    (1,),
    (1, 0),
    (1, 2, 2),
    (1, 4, 8, 4),
    (1, 6, 18, 30, 18),
    (1, 8, 32, 80, 128, 72),
    (1, 10, 50, 162, 370, 570, 322),
)

T_TABLE = (
    (1, -2, 2, -10, 18, -50, 114),
    (1, 0, 0, -8, 0, -32, 32),
    (1, 2, 2, -6, -14, -46, -46),
    (1, 4, 8, 4, -16, -76, -168),
    (1, 6, 18, 30, 18, -74, -318),
    (1, 8, 32, 80, 128, 72, -320),
    (1, 10, 50, 162, 370, 570, 322),
)


@contextmanager
def criterion(num, name, budget=None):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        if budget is not None:
            assert elapsed < budget, (
                f"criterion {num} took {elapsed:.1f}s, budget {budget:.0f}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        line = f"ACCEPTANCE {num:2d} {name}: {status} ({elapsed:.2f}s)"
        print(line)
        conftest.ACCEPTANCE_LINES.append(line)


def test_criterion_01_oracle_equivalence():
    with criterion(1, "oracle equivalence at small odd orders", budget=10.0):
        assert o_vector(3) == (2, 2, 2)
        assert o_vector(5) == (12, 36, 60, 36, 12)
        assert count_nearly(3) == 16
        assert count_nearly(5) == 312
        assert d_vector("pm", 5) == (24, 96, 72, 96, 24)
        for n in (1, 3, 5):
            oc = oracle_counts(n)
            assert oc.o == o_vector(n)
            assert oc.d_pm == d_vector("pm", n)
            assert oc.d_plus == d_vector("plus", n)
            assert oc.d_minus == d_vector("minus", n)
            assert oc.nearly_total == count_nearly(n)
            assert oc.off_diag_full == 0


def test_criterion_02_total_tiling_counts():
    with criterion(2, "exhaustive totals are 2^(n(n+1)/2)", budget=30.0):
        for n in range(1, 6):
            assert count_all_tilings(build_region(n)) == 2 ** (n * (n + 1) // 2)


def test_criterion_03_table_fixtures():
    with criterion(3, "first-row and array tables reproduced"):
        for n, row in enumerate(FIRST_ROW_TABLE, start=1):
            assert tuple(r_value(n, 1, j) for j in range(1, n + 1)) == row
            signed = matrix_r(n)[0]
            assert tuple(abs(v) for v in signed) == row
        assert t_array(7, 7) == T_TABLE


def test_criterion_04_deletion_vector_symmetry():
    with criterion(4, "deletion vectors palindromic through order 61",
                   budget=60.0):
        for n in range(1, 62, 2):
            vec = o_vector(n)
            assert vec == tuple(reversed(vec))


def test_criterion_05_r_matrix_properties():
    with criterion(5, "reversal matrix structure through n = 12"):
        for n in range(1, 13):
            rows = matrix_r(n)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if j < i:
                        assert rows[i - 1][j - 1] == 0
                    if j == i:
                        assert abs(rows[i - 1][j - 1]) == 1
                    if i < j < n:
                        assert r_value(n, i, j) == r_value(n, i + 1, j + 1)
            for i in range(n):
                for j in range(n):
                    entry = sum(rows[i][k] * rows[k][j] for k in range(n))
                    assert entry == (1 if i == j else 0)
        for n in range(3, 13):
            for j in range(2, n):
                assert r_value(n, 1, j) == (r_value(n, 1, j - 1)
                                            + r_value(n - 1, 1, j)
                                            + r_value(n - 1, 1, j - 1))
        for n in range(1, 13, 2):
            rows = matrix_r(n)
            o = o_vector(n)
            image = tuple(sum(rows[i][j] * o[j] for j in range(n))
                          for i in range(n))
            assert image == tuple(reversed(o))


def test_criterion_06_kernel_lemmas():
    with criterion(6, "kernel identities on graphs through n = 8"):
        for check in (
            _check_translation_invariance(8),
            _check_wall_shift(8),
            _check_three_term_window(8),
            _check_corner_kernel(8),
            _check_wall_kernel_linear(8),
        ):
            assert check.status == "PASS", check


def test_criterion_07_embedding_gate():
    with criterion(7, "path kernel embeds the count matrices, n = 8"):
        assert _check_kernel_matches_recurrence(8).status == "PASS"
        assert _check_path_count_closed_forms(8).status == "PASS"


def test_criterion_08_series_suite():
    with criterion(8, "generating function suite"):
        assert _check_t_matches_r(12).status == "PASS"
        assert _check_diagonal_closed_form().status == "PASS"
        assert _check_t_alternating_convolution().status == "PASS"
        arr = t_array(10, 20)
        one = (1,) + (0,) * 19
        for n in range(1, 11):
            row = arr[n - 1]
            neg = tuple(c if i % 2 == 0 else -c for i, c in enumerate(row))
            assert series.multiply(row, neg) == one
        assert series.schroeder_numbers(5) == (1, 2, 6, 22, 90)


def test_criterion_09_rank_claim():
    with criterion(9, "reversal-difference rank through order 21"):
        report = verify_rank_claim(21)
        assert report.passed, report.failures()


def test_criterion_10_ratio_and_alternating_identities():
    with criterion(10, "ratio and alternating-sum identities through 41"):
        for n in range(3, 42, 2):
            o = o_vector(n)
            assert o[1] == (n - 2) * o[0]
            d = d_vector("pm", n)
            assert d[1] == (n - 1) * d[0]
            assert sum((-1) ** (k + 1) * o[k] for k in range(1, n)) == 0


def test_criterion_11_conjecture_scans():
    with criterion(11, "conjecture scans through m = 35", budget=300.0):
        lc_report, lc_rows = scan_log_concavity(35)
        assert lc_report.passed, lc_report.failures()
        assert len(lc_rows) == 35
        assert all(row["log_concave"] for row in lc_rows)
        asym_report, asym_rows = scan_asymptotics(35)
        assert asym_report.passed, asym_report.failures()
        assert asym_rows[34]["even_gap"] < asym_rows[4]["even_gap"]
        assert asym_rows[34]["nearly_gap"] < asym_rows[4]["nearly_gap"]


def test_criterion_12_family_enumeration():
    with criterion(12, "path families match the signed matrix counts"):
        assert _check_family_enumeration(4).status == "PASS"
        assert _check_nearly_families(3).status == "PASS"


def test_cli_entry_points():
    # the documented command fixtures, end to end
    with criterion(0, "command line fixtures"):
        import contextlib
        import io

        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            assert main(["count", "o", "--n", "5", "--k", "3"]) == 0
            assert main(["count", "o", "--n", "3", "--all"]) == 0
        assert out.getvalue() == "60\n2,2,2\n"
        err = io.StringIO()
        with contextlib.redirect_stdout(io.StringIO()), \
                contextlib.redirect_stderr(err):
            assert main(["oracle", "--n", "7"]) == 2