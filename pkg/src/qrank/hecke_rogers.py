"""Hecke-Rogers double sums and the product-times-R expressions they equal.

Each sum is described by an :class:`ExponentForm`: a generator of the terms
in lattice layer n together with a constant c such that every term in layer n
has raw exponent at least c n^2.  The enumeration bound B(N) comes from that
estimate and is then certified at run time: layers B+1 and B+2 must contain
no term of exponent <= N, otherwise :class:`~qrank.errors.BoundError` is
raised rather than silently truncating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from qrank.coeff_rings import ZZ, LaurentPoly, clean, join
from qrank.errors import BoundError
from qrank.qseries import QSeries
from qrank.rank_appell import as_base, as_spec, mul_spec, rank_series_R
from qrank.theta import INF, E, binomial_product, jprod

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# Term generators: yield (n, j, coefficient, z-exponent, raw q-exponent)


def _rankid1(n):
    for j in range(0, n // 2 + 1):
        s = HALF if (n + j) % 2 == 0 else -HALF
        v = (n * (n + 1) - j * (3 * j + 1)) // 2
        yield n, j, s, n - 3 * j, v
        yield n, j, s, 3 * j - n, v
    for j in range(1, n // 2 + 1):
        s = HALF if (n + j) % 2 == 0 else -HALF
        v = (n * (n + 1) - j * (3 * j - 1)) // 2
        yield n, j, s, n - 3 * j + 1, v
        yield n, j, s, 3 * j - n - 1, v


def _rankid2(n):
    base = n * (3 * n + 1) // 2
    for j in range(-n, n + 1):
        s = 1 if j % 2 == 0 else -1
        yield n, j, s, j, base - j * j
        yield n, j, -s, j, base - j * j + 2 * n + 1


def _rankid3(n):
    h = n // 2
    for j in range(-h, h + 1):
        s = 1 if (n + j) % 2 == 0 else -1
        v = (n * (n + 1) - j * (3 * j + 1)) // 2
        yield n, j, s, n + 1, v
        yield n, j, s, -n, v


def _rankid4(n):
    s = 1 if n % 2 == 0 else -1
    for j in range(0, 2 * n + 1):
        v = 3 * n * n + 2 * n - j * (j + 1) // 2
        yield n, j, s, j + 1, v
        yield n, j, s, -j, v
    if n >= 1:
        for j in range(0, 2 * n - 1):
            v = 3 * n * n - 2 * n - j * (j + 1) // 2
            yield n, j, -s, j + 1, v
            yield n, j, -s, -j, v


def _hre12(n):
    h = n // 2
    for j in range(-h, h + 1):
        s = 1 if (n + j) % 2 == 0 else -1
        yield n, j, s, 0, (n * (n + 1) - j * (3 * j + 1)) // 2


def _hre_eta2(n):
    # m runs from -floor(n/2) to floor(n/2); empty for negative n
    h = n // 2
    for m in range(-h, h + 1):
        s = 1 if (n + m) % 2 == 0 else -1
        yield n, m, s, 0, (n * (n + 1) - m * (3 * m - 1)) // 2


def _t4e(n):
    for n_, j, s, _, v in _rankid2(n):
        yield n_, j, s, 0, v


@dataclass(frozen=True)
class ExponentForm:
    """Shape of one double sum.

    ``terms(n)`` yields every term of lattice layer n; ``c`` is a constant
    with raw exponent >= c n^2 on the region, and every z-exponent in layer n
    is at most ``2n + 1`` in absolute value.  ``negative_layers`` marks sums
    whose n-range is bilateral.
    """

    name: str
    region: str
    c: Fraction
    terms: Callable
    negative_layers: bool = False


FORMS = {
    "rankid1": ExponentForm("rankid1", "n >= 0, 0 <= j <= n/2 (second sum j >= 1)", Fraction(1, 8), _rankid1),
    "rankid2": ExponentForm("rankid2", "n >= 0, |j| <= n", Fraction(1, 2), _rankid2),
    "rankid3": ExponentForm("rankid3", "n >= 0, |j| <= n/2", Fraction(1, 8), _rankid3),
    "rankid4": ExponentForm("rankid4", "n >= 0, 0 <= j <= 2n (second sum n >= 1, j <= 2n-2)", Fraction(1), _rankid4),
    "hre12": ExponentForm("hre12", "n >= 0, |j| <= n/2", Fraction(1, 8), _hre12),
    "hre_eta2": ExponentForm("hre_eta2", "n in Z, |m| <= n/2", Fraction(1, 8), _hre_eta2, True),
    "t4e": ExponentForm("t4e", "n >= 0, |j| <= n", Fraction(1, 2), _t4e),
}

HR_NAMES = tuple(FORMS)


def enumeration_bound(form: ExponentForm, trunc: int, k: int = 1, t: int = 0) -> int:
    """Layer bound B with every term of exponent <= trunc in layers |n| <= B.

    Total exponent is k*V + t*(z-exponent) >= k c n^2 - |t| (2n + 1).
    """
    a = k * form.c
    t = abs(t)
    n_root = (2 * t + math.sqrt(4 * t * t + 4 * float(a) * (max(trunc, 0) + t))) / (2 * float(a))
    return math.ceil(n_root) + 3


def _layers(form, B):
    lo = -B if form.negative_layers else 0
    return range(lo, B + 1)


def _raw_terms(name: str, z, base, trunc: int, keep=None):
    """{(raw exponent, z-exponent): coefficient} over the certified lattice region."""
    form = FORMS[name]
    z = as_spec(z)
    k = as_base(base).q
    t = z.q
    B = enumeration_bound(form, trunc, k, t)
    acc = {}
    for n in _layers(form, B):
        for n_, j, c, ze, v in form.terms(n):
            if k * v + t * ze > trunc:
                continue
            if keep is not None and not keep(n_, j, v, ze):
                continue
            key = (v, ze)
            acc[key] = acc.get(key, 0) + c
    for n in (B + 1, B + 2) + ((-B - 1, -B - 2) if form.negative_layers else ()):
        for _, j, c, ze, v in form.terms(n):
            if k * v + t * ze <= trunc:
                raise BoundError(f"{name}: layer n={n} has a term at q^{k * v + t * ze} <= q^{trunc}")
    return acc, z, k


def _assemble(acc, z, k, trunc, integral: bool):
    unit, zz, t = z.unit, z.z, z.q
    buckets = {}
    for (v, ze), c in acc.items():
        if not c:
            continue
        if integral:
            c = clean(Fraction(c))
            if not isinstance(c, int):
                raise ValueError(f"non-integral coefficient {c} at raw exponent {v}, z^{ze}")
        e = k * v + t * ze
        b = buckets.setdefault(e, {})
        key = zz * ze
        u = unit**ze if unit != 1 else 1
        b[key] = b[key] + c * u if key in b else c * u
    ring = join(ZZ, z.ring)
    terms = {}
    for e, b in buckets.items():
        if zz:
            lp = LaurentPoly({m: clean(x) if isinstance(x, Fraction) else x for m, x in b.items()})
            if lp:
                terms[e] = lp
        else:
            x = b.get(0, 0)
            if x:
                terms[e] = clean(x) if isinstance(x, Fraction) else x
    return QSeries.from_dict(terms, trunc, ring, lower=min(terms, default=0))


def hr_rhs(name: str, z="symbolic", trunc: int = 20, base=1) -> QSeries:
    """The Hecke-Rogers double sum ``name`` with z and base q^k substituted, through q^trunc.

    For rankid1 the terms carry a factor 1/2; the summed coefficients are
    asserted to be integers.
    """
    if name not in FORMS:
        raise KeyError(f"unknown Hecke-Rogers sum {name!r}")
    acc, zs, k = _raw_terms(name, z, base, trunc)
    return _assemble(acc, zs, k, trunc, integral=True)


def filtered_sum(name: str, keep, z="symbolic", trunc: int = 20, base=1) -> QSeries:
    """The sum ``name`` restricted to terms with keep(n, j, raw_exponent, z_exponent) true."""
    if name not in FORMS:
        raise KeyError(f"unknown Hecke-Rogers sum {name!r}")
    acc, zs, k = _raw_terms(name, z, base, trunc, keep)
    return _assemble(acc, zs, k, trunc, integral=False)


def residue_filtered_sum(name: str, p: int, residues=None, z="symbolic", trunc: int = 20, base=1,
                         exponent_class=None) -> QSeries:
    """The sum ``name`` restricted to (n mod p, j mod p) in ``residues``.

    ``exponent_class=r`` further keeps only terms whose raw exponent is r mod p.
    An empty residue set gives the zero series.
    """
    res = None if residues is None else {(a % p, b % p) for a, b in residues}

    def keep(n, j, v, ze):
        if res is not None and (n % p, j % p) not in res:
            return False
        return exponent_class is None or v % p == exponent_class % p

    return filtered_sum(name, keep, z, trunc, base)


# ---------------------------------------------------------------------------
# Left members


def theta_triple(z, base, trunc: int) -> QSeries:
    """(z b; b)_inf (z^-1 b; b)_inf (b; b)_inf with b = base."""
    b = as_base(base)
    z = as_spec(z)
    return binomial_product([(z * b, INF, b), (z.inverse() * b, INF, b), (b, INF, b)], trunc)


def rtwid(z, base, trunc: int) -> QSeries:
    """(1 + z)(z^2 b; b)_inf (z^-2 b; b)_inf (b; b)_inf R(z; b)."""
    b = as_base(base)
    z = as_spec(z)
    lead = min(z.q, 0)
    work = trunc - 3 * lead
    pre = theta_triple(z**2, b, work)
    pre = pre + mul_spec(pre, z)
    R = rank_series_R(z, b, "eisenstein", work)
    out = pre * R
    return out.truncate(trunc)


def hr_lhs(name: str, z="symbolic", trunc: int = 20, base=1) -> QSeries:
    """Left member of the identity ``name``, built from products and R(z; q)."""
    b = as_base(base)
    z = as_spec(z)
    if name == "rankid1":
        return (theta_triple(z, b, trunc) * rank_series_R(z, b, "eisenstein", trunc)).truncate(trunc)
    if name == "rankid2":
        return (theta_triple(z, b, trunc) * rank_series_R(z, b**2, "eisenstein", trunc)).truncate(trunc)
    if name == "rankid3":
        return rtwid(z, b, trunc)
    if name == "rankid4":
        pre = theta_triple(z**2, b**2, trunc)
        pre = pre + mul_spec(pre, z)
        return (pre * rank_series_R(z, b, "eisenstein", trunc)).truncate(trunc)
    if name in ("hre12", "hre_eta2"):
        return E(trunc) ** 2
    if name == "t4e":
        return jprod(trunc, eta=((1, 3), (2, -1)))
    raise KeyError(f"unknown Hecke-Rogers identity {name!r}")


__all__ = [
    "ExponentForm", "FORMS", "HR_NAMES", "enumeration_bound", "hr_rhs", "hr_lhs",
    "residue_filtered_sum", "filtered_sum", "theta_triple", "rtwid",
]
