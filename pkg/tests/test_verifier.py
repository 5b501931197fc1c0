import json

import pytest

from qrank.errors import NonGenericError
from qrank.hecke_rogers import hr_lhs
from qrank.qseries import QSeries, atkin_U, series_equal
from qrank.rank_appell import DP_LIMIT
from qrank.results import CheckResult, Mismatch
from qrank.theta import jprod
from qrank.verifier import REGISTRY, Comparison, dyson_oracle, run_all, run_check
from qrank.verifier.checks import W7
from qrank.verifier.dyson import smallest_failing_case
from qrank.verifier.registry import ORDER_ENV, register
from qrank.verifier.report import (
    EXIT_ERROR, EXIT_FAIL, EXIT_OK, emit_report, exit_status, render_text, result_from_dict,
)


@pytest.fixture
def scratch_checks():
    """Register throwaway checks and remove them afterwards."""
    added = []

    def add(name, **kw):
        def deco(fn):
            register(name, f"scratch {name}", **kw)(fn)
            added.append(name)
            return fn

        return deco

    yield add
    for name in added:
        REGISTRY.pop(name, None)


def test_unregistered_name_is_an_error_not_an_exception():
    r = run_check("no_such_check")
    assert r.status == "ERROR" and r.reason.startswith("unregistered")


def test_bad_environment_order(monkeypatch):
    monkeypatch.setenv(ORDER_ENV, "sixty")
    r = run_check("jba")
    assert r.status == "ERROR" and r.reason.startswith("config")


def test_environment_order_is_used(monkeypatch):
    monkeypatch.setenv(ORDER_ENV, "12")
    assert run_check("jba").order_checked == 12


def test_order_beyond_engine_limit():
    r = run_check("dyson5", order=DP_LIMIT + 1)
    assert r.status == "ERROR" and r.reason.startswith("precision")


def test_fixed_order_clamps():
    assert run_check("detD_expansion", order=30).order_checked == 11


def test_failure_reports_first_mismatch(scratch_checks):
    @scratch_checks("scratch_fail", order=5)
    def body(n):
        return [Comparison("one vs one plus q^3", QSeries([1], trunc=n), QSeries([1, 0, 0, 1], trunc=n))]

    r = run_check("scratch_fail")
    assert r.status == "FAIL"
    assert r.first_mismatch.exponent == 3
    assert (r.first_mismatch.lhs, r.first_mismatch.rhs) == (0, 1)


def test_vacuous_comparison_is_degenerate(scratch_checks):
    @scratch_checks("scratch_zero", order=5)
    def body(n):
        return [Comparison("0 = 0", QSeries.zero(n), QSeries.zero(n), nonzero=True)]

    r = run_check("scratch_zero")
    assert r.status == "ERROR" and r.reason.startswith("degenerate")


def test_specialization_rotation(scratch_checks):
    @scratch_checks("scratch_rotate", order=4, specs=(0, 1, 2, 3), min_specs=3)
    def body(n, s):
        if s == 1:
            raise NonGenericError("theta zero")
        return [Comparison("trivial", QSeries([1], trunc=n), QSeries([1], trunc=n), nonzero=True)]

    r = run_check("scratch_rotate")
    assert r.status == "PASS"
    assert any("skipped (non-generic)" in d for d in r.details)


def test_too_few_generic_specializations(scratch_checks):
    @scratch_checks("scratch_nongeneric", order=4, specs=(0, 1, 2), min_specs=3)
    def body(n, s):
        if s:
            raise NonGenericError("pole")
        return [Comparison("trivial", QSeries([1], trunc=n), QSeries([1], trunc=n))]

    r = run_check("scratch_nongeneric")
    assert r.status == "ERROR" and r.reason.startswith("non-generic")


def test_internal_errors_are_captured(scratch_checks):
    @scratch_checks("scratch_boom", order=4)
    def body(n):
        raise RuntimeError("boom")

    r = run_check("scratch_boom")
    assert r.status == "ERROR" and "internal" in r.reason and "boom" in r.reason


def test_exit_status_priority():
    ok = CheckResult("a", "PASS")
    bad = CheckResult("b", "FAIL", 3, Mismatch(1, 0, 1))
    err = CheckResult("c", "ERROR", reason="x")
    assert exit_status([ok]) == EXIT_OK
    assert exit_status([ok, err]) == EXIT_ERROR
    assert exit_status([err, bad, ok]) == EXIT_FAIL


def test_reports_round_trip(tmp_path):
    results = [run_check("jba", order=10), CheckResult("x", "FAIL", 4, Mismatch(2, 1, -1), reason="")]
    path = tmp_path / "r.json"
    emit_report(results, "json", path)
    back = [result_from_dict(d) for d in json.loads(path.read_text())]
    assert [r.status for r in back] == ["PASS", "FAIL"]
    assert back[1].first_mismatch.exponent == 2
    text = render_text(results)
    assert "1/2 passed" in text and "first mismatch at q^2" in text


def test_parallel_matches_serial():
    names = ["jba", "nrid", "sift5_1"]
    a = run_all(order=15, names=names)
    b = run_all(order=15, names=names, parallel=True, jobs=2)
    assert [(r.name, r.status, r.order_checked) for r in a] == [(r.name, r.status, r.order_checked) for r in b]


# -- rank-class oracle -----------------------------------------------------------------


@pytest.mark.parametrize("t,max_case", [(5, 154), (7, 152)])
def test_dyson_equal_classes(t, max_case):
    r = dyson_oracle(t, max_case)
    assert r.status == "PASS"


def test_mod_11_fails_first_at_six():
    case, classes = smallest_failing_case(11, 154)
    assert case == 6
    assert classes == [1, 2, 1, 1, 0, 1, 1, 0, 1, 1, 2] and sum(classes) == 11
    r = dyson_oracle(11, 154)
    assert r.status == "PASS"
    assert any("smallest failing case 6" in d for d in r.details)


def test_dyson_bad_inputs():
    assert dyson_oracle(13, 50).status == "ERROR"
    assert dyson_oracle(5, DP_LIMIT + 1).status == "ERROR"


# -- negative controls: known-wrong variants must fail ------------------------------------


def test_mod7_third_statement_without_factor_q_fails():
    n = 20
    L = hr_lhs("rankid4", (7, 1), 7 * n + 6)
    lhs = atkin_U(L, 7, 3).truncate(n)
    without_q = jprod(n, eta=((14, 3), (7, -1))).scale(2 * W7**4)
    with_q = jprod(n, eta=((14, 3), (7, -1)), qshift=1).scale(2 * W7**4)
    assert series_equal(lhs, with_q, n).passed
    assert not series_equal(lhs, without_q, n).passed
