"""Rank-class equidistribution checks against the partition-rank oracle."""

from __future__ import annotations

import time

from qrank.errors import BoundError
from qrank.rank_appell import DP_LIMIT, ENUMERATE_LIMIT, rank_oracle
from qrank.results import CheckResult, Mismatch

# residue of the cases examined for each modulus
CASE_RESIDUE = {5: 4, 7: 5, 11: 6}
CROSS_CHECK_MAX = 40


def _cross_check(table, upto: int):
    """Compare the DP table with exhaustive enumeration for n <= upto."""
    small = rank_oracle(upto, "enumerate")
    for n in range(upto + 1):
        if table.row(n) != small.row(n):
            return n, table.row(n), small.row(n)
    return None


def dyson_oracle(t: int, max_case: int) -> CheckResult:
    """Equal rank classes mod t on the cases t*n + r <= max_case.

    For t = 5 and 7 every class must hold p(case)/t partitions.  For t = 11
    the same statement is expected to fail; the result passes when a failing
    case is found and names the smallest one.
    """
    t0 = time.perf_counter()
    name = f"dyson{t}"
    if t not in CASE_RESIDUE:
        return CheckResult(name, "ERROR", max_case, reason=f"config: modulus must be 5, 7 or 11, got {t}")
    if max_case > DP_LIMIT:
        return CheckResult(name, "ERROR", max_case,
                           reason=f"bound: case {max_case} exceeds the oracle limit {DP_LIMIT}")
    try:
        table = rank_oracle(max(max_case, 0), "dp")
        upto = min(max_case, CROSS_CHECK_MAX, ENUMERATE_LIMIT)
        bad = _cross_check(table, max(upto, 0))
    except BoundError as exc:
        return CheckResult(name, "ERROR", max_case, reason=f"bound: {exc}")
    details = [f"DP oracle cross-checked against enumeration for n <= {max(upto, 0)}"]
    if bad is not None:
        n, a, b = bad
        return CheckResult(name, "FAIL", max_case, Mismatch(n, a, b), details=details,
                           wall_ms=(time.perf_counter() - t0) * 1000)

    cases = list(range(CASE_RESIDUE[t], max_case + 1, t))
    first_bad = None
    for n in cases:
        classes = table.classes(t, n)
        p = table.p(n)
        if p % t or any(c != p // t for c in classes):
            first_bad = (n, classes, p)
            break

    ms = (time.perf_counter() - t0) * 1000
    if t == 11:
        if first_bad is None:
            return CheckResult(name, "FAIL", max_case, Mismatch(max_case, "all classes equal", "a failing case"),
                               details=details + [f"{len(cases)} cases, none unequal"], wall_ms=ms)
        n, classes, p = first_bad
        return CheckResult(name, "PASS", max_case, details=details + [
            f"expected failure confirmed: smallest failing case {n}",
            f"p({n}) = {p}, classes N(0..10, 11, {n}) = {classes}",
        ], wall_ms=ms)
    if first_bad is not None:
        n, classes, p = first_bad
        return CheckResult(name, "FAIL", max_case, Mismatch(n, classes, f"{p}/{t} in every class"),
                           details=details, wall_ms=ms)
    return CheckResult(name, "PASS", max_case, details=details + [
        f"{len(cases)} cases, each class = p(n)/{t}",
    ], wall_ms=ms)


def smallest_failing_case(t: int, max_case: int):
    """Smallest case of residue CASE_RESIDUE[t] with unequal classes, or None."""
    table = rank_oracle(max_case, "dp")
    for n in range(CASE_RESIDUE[t], max_case + 1, t):
        classes = table.classes(t, n)
        if len(set(classes)) > 1:
            return n, classes
    return None


__all__ = ["dyson_oracle", "smallest_failing_case", "CASE_RESIDUE"]
