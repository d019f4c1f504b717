import json

import pytest

from offdiag.matrices import matrix_r
from offdiag.pfaffian import rational_rank
from offdiag.verify import (
    CheckReport,
    CheckResult,
    jsonable,
    scan_asymptotics,
    scan_log_concavity,
    verify_identities,
    verify_rank_claim,
)


def test_identity_battery_passes():
    report = verify_identities(8)
    assert report.suite == "identities"
    assert report.passed
    assert report.failures() == ()
    assert len(report.results) == 36
    ids = [r.check for r in report.results]
    assert len(set(ids)) == len(ids)
    for r in report.results:
        assert r.status == "PASS"
        assert r.range


def test_identity_battery_is_thread_stable(monkeypatch):
    serial = verify_identities(6)
    monkeypatch.setenv("OFFDIAG_THREADS", "3")
    threaded = verify_identities(6)
    assert serial == threaded


def test_identity_battery_rejects_bad_bound():
    with pytest.raises(ValueError):
        verify_identities(0)


def test_rank_claim_passes():
    report = verify_rank_claim(13)
    assert report.suite == "rank-claim"
    assert report.passed
    with pytest.raises(ValueError):
        verify_rank_claim(2)


def test_reversal_difference_fixture():
    rows = matrix_r(5)
    x = [[rows[i][4 - j] - rows[i][j] for j in range(5)] for i in range(5)]
    assert x == [
        [17, -24, 0, 24, -17],
        [30, -17, 0, 17, -30],
        [18, -6, 0, 6, -18],
        [6, -1, 0, 1, -6],
        [1, 0, 0, 0, -1],
    ]
    block = [row[:2] for row in x]
    block[0][0] -= 1
    block[1][1] -= 1
    block[3][1] += 1
    block[4][0] += 1
    assert block == [[16, -24], [30, -18], [18, -6], [6, 0], [2, 0]]
    assert rational_rank(block) == 2


def test_log_concavity_scan():
    report, rows = scan_log_concavity(6)
    assert report.passed
    assert [row["order"] for row in rows] == [1, 3, 5, 7, 9, 11]
    assert all(row["log_concave"] for row in rows)
    assert rows[0]["pm_unimodal"] and rows[1]["pm_unimodal"]
    assert not any(row["pm_unimodal"] for row in rows[2:])
    gate, informational = report.results
    assert gate.check == "deletion-vector-log-concavity"
    assert informational.witness["non_unimodal_count"] == 4
    with pytest.raises(ValueError):
        scan_log_concavity(0)


def test_asymptotics_scan():
    report, rows = scan_asymptotics(7)
    assert report.passed
    assert len(report.results) == 2  # gap comparison kicks in past m=5
    assert len(rows) == 7
    first, ref, last = rows[0], rows[4], rows[-1]
    assert first["even_count"] == "2"
    assert first["even_gap"] < 1e-12  # exact base case, float noise only
    assert isinstance(last["nearly_count"], str)
    assert isinstance(last["even_root"], float)
    assert last["even_gap"] < ref["even_gap"]
    assert last["nearly_gap"] < ref["nearly_gap"]
    json.dumps(rows)  # floats and strings only, no big ints
    short_report, _ = scan_asymptotics(3)
    assert len(short_report.results) == 1
    with pytest.raises(ValueError):
        scan_asymptotics(0)


def test_report_serialization():
    report = verify_rank_claim(5)
    payload = report.to_jsonable()
    assert payload["suite"] == "rank-claim"
    assert payload["passed"] is True
    for item in payload["checks"]:
        assert set(item) == {"check", "range", "status", "witness"}
    json.dumps(payload)


def test_failure_reporting_shape():
    bad = CheckResult(check="demo", range="nowhere", status="FAIL",
                      witness={"first": {"n": 1}})
    report = CheckReport(suite="demo", results=(bad,))
    assert not report.passed
    assert report.failures() == (bad,)
    assert report.to_jsonable()["checks"][0]["status"] == "FAIL"


def test_corrupted_matrix_entry_yields_fail_with_witness(monkeypatch):
    # Self-test of the harness: plant one wrong entry in the recurrence
    # matrix and make sure the comparison against path-kernel values
    # reports it instead of passing silently.
    from types import SimpleNamespace

    from offdiag import verify as verify_mod
    from offdiag.matrices import matrix_a

    def corrupted(n):
        rows = [list(row) for row in matrix_a(n).rows]
        if n == 3:
            rows[0][1] += 1
        return SimpleNamespace(rows=tuple(tuple(row) for row in rows))

    monkeypatch.setattr(verify_mod, "matrix_a", corrupted)
    result = verify_mod._check_kernel_matches_recurrence(3)
    assert result.status == "FAIL"
    assert not result.ok
    assert result.witness["failures"] == 1
    first = result.witness["first"]
    assert (first["n"], first["i"], first["j"]) == (3, 1, 2)
    assert first["kernel"] != first["matrix"]
    report = CheckReport(suite="identities", results=(result,))
    assert not report.passed
    json.dumps(report.to_jsonable())


def test_jsonable_conversions():
    from fractions import Fraction

    big = 2 ** 70
    out = jsonable({"a": big, "b": 7, "c": [big, 1.5, "x"],
                    "d": Fraction(1, 3), "e": None, "f": True})
    assert out["a"] == str(big)
    assert out["b"] == 7
    assert out["c"] == [str(big), 1.5, "x"]
    assert out["d"] == "1/3"
    assert out["e"] is None
    assert out["f"] is True
    json.dumps(out)
