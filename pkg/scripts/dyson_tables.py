"""Tabulate rank residue classes N(r, t, tn + c) for t = 5, 7, 11.

Writes one CSV row per case with p(case), the t class counts, and whether
they are all equal.  For t = 11 the first unequal row is case 6.
"""

from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass
from pathlib import Path

from qrank.rank_appell import rank_oracle
from qrank.verifier.dyson import CASE_RESIDUE


@dataclass
class TableConfig:
    max_case: int = 154
    moduli: tuple = (5, 7, 11)
    out: Path = Path("results/dyson")


def rows(t: int, max_case: int, table):
    for n in range(CASE_RESIDUE[t], max_case + 1, t):
        cl = table.classes(t, n)
        yield [n, table.p(n), *cl, len(set(cl)) == 1]


def run(cfg: TableConfig):
    cfg.out.mkdir(parents=True, exist_ok=True)
    table = rank_oracle(cfg.max_case)
    for t in cfg.moduli:
        path = cfg.out / f"classes_mod{t}.csv"
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["case", "p", *[f"N{r}" for r in range(t)], "equal"])
            body = list(rows(t, cfg.max_case, table))
            w.writerows(body)
        unequal = [r[0] for r in body if not r[-1]]
        print(f"mod {t}: {len(body)} cases, unequal: {unequal[:5]}{' ...' if len(unequal) > 5 else ''} -> {path}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-case", type=int, default=TableConfig.max_case)
    ap.add_argument("--out", type=Path, default=TableConfig.out)
    a = ap.parse_args()
    run(TableConfig(max_case=a.max_case, out=a.out))
