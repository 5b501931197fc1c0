"""Wall time of selected checks as the truncation order grows."""

from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from pathlib import Path

from qrank.verifier import run_check


@dataclass
class ScalingConfig:
    checks: list[str] = field(default_factory=lambda: ["rankid1", "rankid3", "ram_full", "zR7dis1_b", "fgjzmid"])
    orders: list[int] = field(default_factory=lambda: [20, 40, 60, 80])
    out: Path = Path("results/scaling.csv")


def run(cfg: ScalingConfig):
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    with cfg.out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["check", "order", "status", "wall_ms"])
        for name in cfg.checks:
            for n in cfg.orders:
                r = run_check(name, n)
                w.writerow([name, n, r.status, f"{r.wall_ms:.1f}"])
                print(f"{name:12s} order {n:4d}  {r.status:5s} {r.wall_ms / 1000:7.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", dest="checks", action="append")
    ap.add_argument("--order", dest="orders", action="append", type=int)
    ap.add_argument("--out", type=Path, default=ScalingConfig.out)
    a = ap.parse_args()
    cfg = ScalingConfig(out=a.out)
    cfg.checks = a.checks or cfg.checks
    cfg.orders = a.orders or cfg.orders
    run(cfg)
