"""Named checks: specification records, registration and execution."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from qrank.errors import BoundError, DivergentError, NonGenericError, PrecisionError, QRankError
from qrank.qseries import QSeries, series_equal
from qrank.results import CheckResult, Mismatch

UNIVARIATE = 60
BIVARIATE = 40
ORDER_ENV = "QRANK_DEFAULT_ORDER"


@dataclass(frozen=True)
class CheckSpec:
    """One registered verification.

    ``specializations`` lists parameter choices tried in order; a choice that
    hits a pole or a theta zero is skipped, and at least ``min_specs`` must be
    compared successfully.  ``max_order`` is the engine limit for this check.
    """

    name: str
    anchor: str
    body: Callable
    order: int = UNIVARIATE
    max_order: int = 400
    specializations: tuple = ()
    min_specs: int = 1
    dependencies: tuple = ()
    fixed_order: int | None = None


@dataclass
class Comparison:
    """Two series that must agree through the check order.

    With ``nonzero`` set, at least one coefficient through that order must be
    nonzero, so a comparison of two vanishing sides cannot pass vacuously.
    """

    label: str
    lhs: QSeries
    rhs: QSeries
    nonzero: bool = False


class DegenerateError(QRankError):
    """Both sides of a comparison marked nonzero vanish."""


REGISTRY: dict[str, CheckSpec] = {}


def register(name, anchor, *, order=UNIVARIATE, max_order=400, specs=(), min_specs=None,
             deps=(), fixed_order=None):
    def deco(fn):
        if name in REGISTRY:
            raise ValueError(f"check {name!r} registered twice")
        REGISTRY[name] = CheckSpec(
            name, anchor, fn, order, max_order, tuple(specs),
            min_specs if min_specs is not None else (3 if specs else 1), tuple(deps), fixed_order,
        )
        return fn

    return deco


def default_order(spec: CheckSpec) -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return spec.order
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{ORDER_ENV} must be nonnegative, got {n}")
    return n


def _nonzero_through(f: QSeries, n: int) -> bool:
    return any(f.coeff(e) != 0 for e in range(f.lower, min(n, f.trunc) + 1))


def _compare(items, n: int, label_prefix: str = ""):
    """Run comparisons; return (mismatch or None, list of detail lines)."""
    if isinstance(items, CheckResult):
        return items, []
    lines = []
    for c in items:
        r = series_equal(c.lhs, c.rhs, n, c.label)
        if c.nonzero and not (_nonzero_through(c.lhs, n) and _nonzero_through(c.rhs, n)):
            raise DegenerateError(f"{label_prefix}{c.label}: a side has no nonzero coefficient through q^{n}")
        if not r.passed:
            m = r.first_mismatch
            lines.append(f"{label_prefix}{c.label}: FAIL at q^{m.exponent}")
            return (m, f"{label_prefix}{c.label}"), lines
        lines.append(f"{label_prefix}{c.label}: PASS")
    return None, lines


def _error_kind(exc: Exception) -> str:
    if isinstance(exc, NonGenericError):
        return "non-generic"
    if isinstance(exc, PrecisionError):
        return "precision"
    if isinstance(exc, BoundError):
        return "bound"
    if isinstance(exc, DivergentError):
        return "divergent"
    if isinstance(exc, DegenerateError):
        return "degenerate"
    return "internal"


def _execute(spec: CheckSpec, n: int) -> CheckResult:
    if not spec.specializations:
        out = spec.body(n)
        if isinstance(out, CheckResult):
            return out
        miss, lines = _compare(out, n)
        if miss is not None:
            m, where = miss
            return CheckResult(spec.name, "FAIL", n, m, details=lines + [f"first failing comparison: {where}"])
        return CheckResult(spec.name, "PASS", n, details=lines)

    lines = []
    ok = 0
    for s in spec.specializations:
        tag = f"[{s}] "
        try:
            out = spec.body(n, s)
            miss, sub = _compare(out, n, tag)
        except (NonGenericError, PrecisionError) as exc:
            lines.append(f"{tag}skipped ({_error_kind(exc)}): {exc}")
            continue
        lines.extend(sub)
        if miss is not None:
            m, where = miss
            return CheckResult(spec.name, "FAIL", n, m, details=lines + [f"first failing comparison: {where}"])
        ok += 1
    if ok < spec.min_specs:
        return CheckResult(spec.name, "ERROR", n, reason=(
            f"non-generic: only {ok} of {len(spec.specializations)} specializations usable, "
            f"{spec.min_specs} required"), details=lines)
    return CheckResult(spec.name, "PASS", n, details=lines + [f"{ok} specializations compared"])


def run_check(name: str, order: int | None = None) -> CheckResult:
    """Run one registered check; every failure mode comes back as a result, never raised."""
    t0 = time.perf_counter()
    spec = REGISTRY.get(name)
    if spec is None:
        return CheckResult(name, "ERROR", order, reason="unregistered: no check with this name")
    try:
        n = default_order(spec) if order is None else order
    except ValueError as exc:
        return CheckResult(name, "ERROR", None, paper_anchor=spec.anchor, reason=f"config: {exc}")
    if spec.fixed_order is not None:
        n = min(n, spec.fixed_order)
    if n > spec.max_order:
        res = CheckResult(name, "ERROR", n, reason=f"precision: order {n} exceeds the engine limit {spec.max_order}")
    else:
        try:
            res = _execute(spec, n)
        except Exception as exc:  # reported, not raised
            res = CheckResult(name, "ERROR", n, reason=f"{_error_kind(exc)}: {type(exc).__name__}: {exc}")
    res.name = name
    res.paper_anchor = spec.anchor
    res.wall_ms = (time.perf_counter() - t0) * 1000.0
    return res


def _run_pair(args):
    name, order = args
    return run_check(name, order)


def run_all(order: int | None = None, parallel: bool = False, names=None, jobs: int | None = None) -> list:
    """Run every registered check (or ``names``); results sorted by name."""
    todo = sorted(REGISTRY) if names is None else sorted(names)
    if not todo:
        return []
    if parallel and len(todo) > 1:
        workers = jobs or os.cpu_count() or 1
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_pair, [(n, order) for n in todo]))
    else:
        results = [run_check(n, order) for n in todo]
    return sorted(results, key=lambda r: r.name)


def mismatch(exponent, lhs, rhs) -> Mismatch:
    return Mismatch(exponent, lhs, rhs)


__all__ = [
    "CheckSpec", "Comparison", "REGISTRY", "register", "run_check", "run_all", "default_order",
    "UNIVARIATE", "BIVARIATE", "ORDER_ENV", "DegenerateError", "mismatch",
]
