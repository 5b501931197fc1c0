"""Run the registered checks and save text and JSON reports.

    python scripts/run_suite.py --order 80 --jobs 1 --out results/suite
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from qrank.verifier import run_all
from qrank.verifier.report import emit_report, exit_status


@dataclass
class SuiteConfig:
    order: int | None = None  # None keeps each check's default order
    names: list[str] = field(default_factory=list)  # empty means all
    jobs: int = 1
    out: Path = Path("results/suite")


def run(cfg: SuiteConfig) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    results = run_all(cfg.order, parallel=cfg.jobs > 1, names=cfg.names or None, jobs=cfg.jobs)
    text = emit_report(results, "text", cfg.out / "report.txt")
    emit_report(results, "json", cfg.out / "report.json")
    (cfg.out / "config.txt").write_text(repr(asdict(cfg)) + "\n")
    print(text, end="")
    return exit_status(results)


def parse(argv=None) -> SuiteConfig:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int)
    ap.add_argument("--check", dest="names", action="append", default=[])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path, default=SuiteConfig.out)
    return SuiteConfig(**vars(ap.parse_args(argv)))


if __name__ == "__main__":
    sys.exit(run(parse()))
