"""Text and JSON reports, and the exit-status rule."""

from __future__ import annotations

import json

from qrank.results import CheckResult

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_ERROR = 3


def exit_status(results) -> int:
    """0 all pass; 1 any FAIL; otherwise 3 if any ERROR.  FAIL outranks ERROR."""
    statuses = {r.status for r in results}
    if "FAIL" in statuses:
        return EXIT_FAIL
    if "ERROR" in statuses:
        return EXIT_ERROR
    return EXIT_OK


def _clip(s: str, width: int) -> str:
    return s if len(s) <= width else s[: width - 3] + "..."


def render_text(results, anchor_width: int = 60) -> str:
    rows = [("name", "anchor", "status", "order", "time")]
    for r in results:
        order = "" if r.order_checked is None else str(r.order_checked)
        rows.append((r.name, _clip(r.paper_anchor, anchor_width), r.status, order, f"{r.wall_ms / 1000:.2f}s"))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = []
    for k, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(widths[i]) if i < 4 else cell.rjust(widths[i])
                               for i, cell in enumerate(row)).rstrip())
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    for r in results:
        if r.status == "FAIL" and r.first_mismatch is not None:
            m = r.first_mismatch
            lines.append(f"FAIL {r.name}: first mismatch at q^{m.exponent}: lhs = {m.lhs}, rhs = {m.rhs}")
        elif r.status == "ERROR":
            lines.append(f"ERROR {r.name}: {r.reason}")
    n_pass = sum(r.status == "PASS" for r in results)
    lines.append(f"{n_pass}/{len(results)} passed")
    return "\n".join(lines) + "\n"


def render_json(results) -> str:
    return json.dumps([r.as_dict() for r in results], indent=2) + "\n"


def emit_report(results, fmt: str = "text", path=None) -> str:
    """Render ``results`` as text or JSON; write to ``path`` when given."""
    if fmt == "text":
        out = render_text(results)
    elif fmt == "json":
        out = render_json(results)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
    return out


def result_from_dict(d: dict) -> CheckResult:
    """Inverse of CheckResult.as_dict for the fields reports carry (mismatch stays rendered)."""
    from qrank.results import Mismatch

    m = d.get("first_mismatch")
    return CheckResult(
        d["name"], d["status"], d.get("order_checked"),
        Mismatch(m["exponent"], m["lhs"], m["rhs"]) if m else None,
        d.get("wall_ms", 0.0), d.get("paper_anchor", ""), d.get("reason", ""), list(d.get("details", [])),
    )


__all__ = ["emit_report", "render_text", "render_json", "exit_status", "result_from_dict",
           "EXIT_OK", "EXIT_FAIL", "EXIT_USAGE", "EXIT_ERROR"]
