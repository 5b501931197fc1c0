"""Named building blocks printable with ``qrank series``."""

from __future__ import annotations

from qrank.hecke_rogers import hr_lhs, hr_rhs, rtwid
from qrank.rank_appell import phi, psi, rank_series_R
from qrank.theta import DETD_ETA_SPEC, E, Q, jprod, product_build, theta4, zq_product
from qrank.verifier.checks import detD, ram_products


def _ram(i):
    return lambda n: ram_products(n)[i]


SERIES = {
    "E": E,
    "E2": lambda n: E(n) ** 2,
    "theta4": theta4,
    "theta4E": lambda n: jprod(n, eta=((1, 3), (2, -1))),
    "detD": detD,
    "detD_eta": lambda n: product_build(DETD_ETA_SPEC, n),
    "R_symbolic": lambda n: rank_series_R("symbolic", 1, "eisenstein", n),
    "R_at_zeta5": lambda n: rank_series_R((5, 1), 1, "eisenstein", n),
    "R_at_zeta5_q2": lambda n: rank_series_R((5, 1), 2, "eisenstein", n),
    "R_at_zeta7": lambda n: rank_series_R((7, 1), 1, "eisenstein", n),
    "phi": phi,
    "psi": psi,
    "ramA": _ram(0),
    "ramB": _ram(1),
    "ramC": _ram(2),
    "ramD": _ram(3),
    "rtwid_q_q5": lambda n: rtwid(Q, 5, n),
    "rtwid_zeta5": lambda n: rtwid((5, 1), 1, n),
    "zq_product_zeta5": lambda n: zq_product(5, 1, n),
    "zq_product_zeta7": lambda n: zq_product(7, 1, n),
}
for _k in (1, 2, 3, 4):
    SERIES[f"rankid{_k}_lhs"] = (lambda k: lambda n: hr_lhs(f"rankid{k}", "symbolic", n))(_k)
    SERIES[f"rankid{_k}_rhs"] = (lambda k: lambda n: hr_rhs(f"rankid{k}", "symbolic", n))(_k)


def build_series(name: str, order: int):
    if name not in SERIES:
        raise KeyError(f"unknown series {name!r}; known: {', '.join(sorted(SERIES))}")
    return SERIES[name](order)


__all__ = ["SERIES", "build_series"]
