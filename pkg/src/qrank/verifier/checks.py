"""Every registered check.

Each body builds the two sides of one identity through the engine modules
and returns :class:`Comparison` records; the registry compares them exactly.
Where an identity has two natural constructions (theta sum vs product,
Eisenstein vs Lambert form of R, direct dissection vs solved linear system)
the sides use different ones.
"""

from __future__ import annotations

import math
import random
from functools import lru_cache

from qrank.coeff_rings import ZZ, CycloNum, LaurentPoly, join
from qrank.errors import NonGenericError, PrecisionError
from qrank.hecke_rogers import filtered_sum, hr_lhs, hr_rhs, residue_filtered_sum, rtwid, theta_triple
from qrank.qseries import QSeries, a_op, atkin_U, dissect, reassemble, series_inv, u_star
from qrank.rank_appell import (
    appell_m, f_abc, f_abc_naive, g_abc, g_series, gdef_sum, mul_spec, partition_counts, phi, psi,
    rank_oracle, rank_series_R,
)
from qrank.results import CheckResult
from qrank.theta import (
    DETD_ETA_SPEC, E, INF, Q, Z, ParamSpec, binomial_product, dissection_lemma_lhs,
    dissection_lemma_rhs, jprod, jtheta, pentagonal_E, pochhammer, product_build, qpow, theta4_sum,
    zeta, zq_product,
)
from qrank.verifier.dyson import dyson_oracle
from qrank.verifier.registry import BIVARIATE, UNIVARIATE, Comparison, register

W5 = CycloNum.zeta(5)
W7 = CycloNum.zeta(7)
Z5 = zeta(5)
Z7 = zeta(7)


def zsum(p, *ks):
    """zeta_p^k1 + zeta_p^k2 + ... (k = 0 gives 1)."""
    out = CycloNum.from_scalar(p, 0)
    for k in ks:
        out = out + CycloNum.zeta(p, k)
    return out


def Jp(n, b, a=None, e=1):
    """J_{b,a}^e or J_b^e through q^n."""
    if a is None:
        return jprod(n, eta=((b, e),))
    return jprod(n, (b, a, e))


def zero_like(f: QSeries) -> QSeries:
    return QSeries.zero(f.trunc, f.ring)


def series_of(values, trunc=None) -> QSeries:
    vals = list(values)
    return QSeries(vals, 0, len(vals) - 1 if trunc is None else trunc)


def grow(build, n, extras=(6, 12, 24, 48, 96)):
    """Call build(work) with growing working order until every side reaches q^n."""
    last = None
    for extra in extras:
        try:
            out = build(n + extra)
        except PrecisionError as exc:
            last = exc
            continue
        if all(c.lhs.trunc >= n and c.rhs.trunc >= n for c in out):
            return out
    raise PrecisionError(f"sides did not reach q^{n}" + (f" ({last})" if last else ""))


def m(x, base, z, n):
    return appell_m(x, base, z, n)


def j(x, n, base=Q, form="product"):
    return jtheta(x, base, form, n)


def is_qpower(s: ParamSpec) -> bool:
    return s.unit == 1 and s.z == 0


# ---------------------------------------------------------------------------
# Shared building blocks (immutable once built)


@lru_cache(maxsize=16)
def R_at(p: int, base: int, n: int, form: str = "eisenstein") -> QSeries:
    return rank_series_R((p, 1), base, form, n)


@lru_cache(maxsize=16)
def parts_at(p: int, base: int, n: int):
    """The p-dissection components of R(zeta_p, q^base), each through q^n."""
    return dissect(R_at(p, base, p * n + p - 1), p)


# ---------------------------------------------------------------------------
# Partitions, ranks and Dyson's conjectures


@register("partition_numbers", "partition numbers p(n)", order=200)
def partition_numbers(n):
    p = series_of(partition_counts(n))
    return [
        Comparison("Euler recurrence = 1/(q;q)_inf", p, series_inv(E(n))),
        Comparison("rank oracle totals = Euler recurrence", series_of(rank_oracle(n).totals), p),
    ]


@register("rank_tables", "rank counts N(m,n) and residue counts N(m,t,n)", order=40)
def rank_tables(n):
    dp = rank_oracle(n, "dp")
    small = rank_oracle(min(n, 40), "enumerate")
    rows = series_of(LaurentPoly(dp.row(k)) for k in range(n + 1))
    mirrored = series_of(LaurentPoly({-r: c for r, c in dp.row(k).items()}) for k in range(n + 1))
    enum = series_of(LaurentPoly(small.row(k)) for k in range(small.max_n + 1))
    out = [
        Comparison("DP rows = exhaustive enumeration", rows.truncate(small.max_n), enum),
        Comparison("N(m,n) = N(-m,n)", rows, mirrored),
        Comparison("sum_m N(m,n) = p(n)", rows.evaluate_z(1), series_of(partition_counts(n))),
    ]
    for t in (5, 7):
        direct = series_of(LaurentPoly({r: dp.N_mod(r, t, k) for r in range(t) if dp.N_mod(r, t, k)})
                           for k in range(n + 1))
        binned = series_of(LaurentPoly({r: c for r, c in enumerate(dp.classes(t, k)) if c})
                           for k in range(n + 1))
        out.append(Comparison(f"N(m,{t},n) counted two ways", direct, binned))
    return out


@register("ram_congruences", "Ramanujan's congruences for p(n) mod 5, 7, 11", order=200)
def ram_congruences(n):
    p = partition_counts(n)
    out = []
    for t, r in ((5, 4), (7, 5), (11, 6)):
        # coefficient of q^k is p(k) mod t on the class k = r mod t, 0 elsewhere
        vals = series_of(p[k] % t if k % t == r else 0 for k in range(n + 1))
        out.append(Comparison(f"p({t}n+{r}) mod {t} = 0", vals, zero_like(vals)))
    return out


@register("dyson5", "Dyson's rank conjecture mod 5: five equal classes", order=154, max_order=400)
def dyson5(n):
    return dyson_oracle(5, n)


@register("dyson7", "Dyson's rank conjecture mod 7: seven equal classes", order=152, max_order=400)
def dyson7(n):
    return dyson_oracle(7, n)


@register("dyson11", "failure of the analogous statement mod 11", order=154, max_order=400)
def dyson11(n):
    return dyson_oracle(11, n)


# ---------------------------------------------------------------------------
# The rank generating function and theta functions


@register("nrid", "two-variable rank generating function R(z;q): counts, nested sum, Lambert form", order=50)
def nrid(n):
    dp = rank_oracle(n, "dp")
    counts = series_of(LaurentPoly(dp.row(k)) for k in range(n + 1))
    eis = rank_series_R("symbolic", 1, "eisenstein", n)
    lam = rank_series_R("symbolic", 1, "lambert", n)
    return [
        Comparison("sum N(m,n) z^m q^n = nested sum", counts, eis),
        Comparison("nested sum = Lambert form", eis, lam),
    ]


def random_param(rng: random.Random) -> ParamSpec:
    p = rng.choice((0, 5, 7))
    unit = 1 if p == 0 else CycloNum.zeta(p, rng.randrange(1, p))
    if rng.random() < 0.3:
        unit = -unit
    return ParamSpec(unit, rng.randint(-2, 2), rng.randint(-3, 3))


@register("jacobi_triple", "Jacobi triple product: j(z;q) as product equals its bilateral sum", order=50)
def jacobi_triple(n, count=50, seed=0):
    rng = random.Random(seed)
    out = [Comparison("symbolic z, base q", j(Z, n, form="sum"), j(Z, n))]
    for _ in range(count):
        a = random_param(rng)
        base = qpow(rng.randint(1, 3))
        out.append(Comparison(f"j({a}; {base})", j(a, n, base, "sum"), j(a, n, base)))
    return out


JBA_PAIRS = ((5, 1), (5, 2), (5, 3), (7, 1), (7, 2), (7, 3), (10, 1), (10, 2), (10, 3), (10, 4),
             (14, 2), (14, 4), (14, 6), (25, 5), (25, 10), (49, 7), (49, 14), (49, 21), (50, 5))


@register("jba", "theta-type products J_{b,a} = j(q^a;q^b) and J_b = (q^b;q^b)_inf")
def jba(n):
    out = []
    for b, a in JBA_PAIRS:
        out.append(Comparison(f"J_{{{b},{a}}}", Jp(n, b, a), j(qpow(a), n, qpow(b), "sum")))
    for b in (1, 2, 5, 7, 10, 14, 25):
        out.append(Comparison(f"J_{b}", Jp(n, b), pentagonal_E(n // b + 1).substitute_qpower(b).truncate(n)))
    return out


def legendre3(n: int) -> int:
    return (0, 1, -1)[n % 3]


def sign(n: int) -> int:
    return -1 if n % 2 else 1


def laurent_double_sum(gen, trunc):
    """Collect (q-exponent, z-exponent, coefficient) triples into a series."""
    d = {}
    for e, ze, c in gen:
        if e <= trunc and c:
            row = d.setdefault(e, {})
            row[ze] = row.get(ze, 0) + c
    terms = {e: LaurentPoly(r) for e, r in d.items() if LaurentPoly(r)}
    return QSeries.from_dict(terms, trunc, join(ZZ, Z.ring), lower=min(terms, default=0))


def jbt_symmetric(trunc):
    # sum_m sum_{n>=0} (-1)^(m+1) (n-1|3) q^((m^2+|m|)/2 + n|m| + n(n+1)/6) z^m
    M = math.isqrt(2 * trunc) + 3
    for mm in range(-M, M + 1):
        a = abs(mm)
        base = (mm * mm + a) // 2
        n = 0
        while True:
            e6 = 6 * (base + n * a) + n * (n + 1)
            if e6 > 6 * trunc:
                break
            c = legendre3(n - 1)
            if c:
                yield e6 // 6, mm, -sign(mm) * c
            n += 1


def jbt_shifted(trunc):
    # sum_m sum_{n >= 3|m|} (-1)^(m+1) (n-1|3) q^(n(n+1)/6 - m^2) z^m
    M = math.isqrt(trunc) + 3
    for mm in range(-M, M + 1):
        n = 3 * abs(mm)
        while True:
            e6 = n * (n + 1) - 6 * mm * mm
            if e6 > 6 * trunc:
                break
            c = legendre3(n - 1)
            if c:
                yield e6 // 6, mm, -sign(mm) * c
            n += 1


def jbt_rankid4_form(trunc):
    # sum_{n>=0} sum_{0<=m<=n/3} (-1)^n [(n+1|3) q^(n(n+2)/3 - m(2m+1)) (z^-2m + z^(2m+1))
    #                                   + (n|3) q^((n+1)(n+5)/3 - m(2m+3)) (z^(-2m-1) + z^(2m+2))]
    n = 0
    while 3 * n * n <= 27 * (trunc + 2):
        s = sign(n)
        for mm in range(n // 3 + 1):
            c = legendre3(n + 1)
            if c:
                e3 = n * (n + 2) - 3 * mm * (2 * mm + 1)
                yield e3 // 3, -2 * mm, s * c
                yield e3 // 3, 2 * mm + 1, s * c
            c = legendre3(n)
            if c:
                e3 = (n + 1) * (n + 5) - 3 * mm * (2 * mm + 3)
                yield e3 // 3, -2 * mm - 1, s * c
                yield e3 // 3, 2 * mm + 2, s * c
        n += 1


@register("jbt", "Bradley-Thrush theta-Lambert transformation (instances used for two rank identities)",
          order=BIVARIATE, deps=("rankid2", "rankid4"))
def jbt(n):
    out = []
    J2, J1 = Jp(n + 80, 2), Jp(n + 80, 1)
    for k in range(0, 13):
        c = sign(k + 1) * legendre3(k - 1)
        lhs = j(qpow(-2 * (k - 1)), n, qpow(6), "sum")
        rhs = J2.shift(-(k * (k + 1)) // 3).scale(c).truncate(n) if c else zero_like(lhs)
        out.append(Comparison(f"j(q^{-2 * (k - 1)}; q^6)", lhs, rhs))
        c = sign(k + 1) * legendre3(k)
        lhs = j(qpow(k), n, qpow(3), "sum")
        rhs = J1.shift(-((k - 1) * (k - 2)) // 6).scale(c).truncate(n) if c else zero_like(lhs)
        out.append(Comparison(f"j(q^{k}; q^3)", lhs, rhs))
    lhs2 = hr_lhs("rankid2", "symbolic", n)
    out.append(Comparison("symmetric double sum = (zq,z^-1q,q)_inf R(z;q^2)",
                          laurent_double_sum(jbt_symmetric(n), n), lhs2, nonzero=True))
    out.append(Comparison("n >= 3|m| form = (zq,z^-1q,q)_inf R(z;q^2)",
                          laurent_double_sum(jbt_shifted(n), n), lhs2))
    out.append(Comparison("Legendre-symbol double sum = rankid4 left side",
                          laurent_double_sum(jbt_rankid4_form(n), n), hr_lhs("rankid4", "symbolic", n),
                          nonzero=True))
    return out


# ---------------------------------------------------------------------------
# Hickerson-Mortenson functions


@register("fabc_def", "f_{a,b,c}(x,y,q) double sum over sg(r) = sg(s)", order=20)
def fabc_def(n):
    zi = Z.inverse()
    box = n + 4
    cases = (
        (1, 2, 1, zi * Q, zi**2 * Q),
        (1, 2, 1, Z * Q, Z**2 * Q),
        (1, 2, 1, Q, Q),
        (2, 3, 2, Z5 * Q, zeta(5, 2) * Q),
        (1, 1, 1, Z5 * Q, zeta(5, 3) * Q**2),
    )
    return [
        Comparison(f"f_{{{a},{b},{c}}}({x}, {y})", f_abc(a, b, c, x, y, n),
                   f_abc_naive(a, b, c, x, y, n, box), nonzero=True)
        for a, b, c, x, y in cases
    ]


def appell_oracle(x: ParamSpec, z: ParamSpec, n: int) -> QSeries:
    """m(x, q, z) from a box sum of geometric expansions over the product form of j(z;q).

    Shares no code with appell_m beyond ParamSpec arithmetic.
    """
    jz = j(z, n + 40)
    if jz.is_zero():
        raise NonGenericError(f"j({z}; q) vanishes")
    lead = jz.lower
    W = n + max(lead, 0) + 8

    def low(r):
        u = Q ** (r - 1) * x * z
        return r * (r - 1) // 2 + r * z.q + min(0, u.q)

    box = 0
    while low(box + 1) <= W or low(-box - 1) <= W or low(box + 2) <= W or low(-box - 2) <= W:
        box += 1
    ring = join(x.ring, z.ring)
    d = {}

    def add(e, c):
        if e <= W:
            d[e] = d[e] + c if e in d else c

    for r in range(-box, box + 1):
        t = z**r * Q ** (r * (r - 1) // 2)
        sgn = -1 if r % 2 else 1
        u = Q ** (r - 1) * x * z
        if u.q == 0:
            if is_qpower(u):
                raise NonGenericError(f"pole: q^{r - 1} x z = 1")
            add(t.q, sgn * t.coeff() * (1 - u.coeff()).inverse())
        elif u.q > 0:
            k, mono = 0, t
            while mono.q <= W:
                add(mono.q, sgn * mono.coeff())
                mono, k = mono * u, k + 1
        else:
            v = u.inverse()
            mono = t * v
            while mono.q <= W:
                add(mono.q, -sgn * mono.coeff())
                mono = mono * v
    s = QSeries.from_dict({e: c for e, c in d.items() if c != 0}, W, ring, lower=min(d, default=0))
    return (s * series_inv(jz)).truncate(n)


M_SPECS = ((zeta(5, 2), Z5 * Q), (Z7, zeta(7, 3) * Q**2), (Z5 * Q, zeta(5, 2)), (zeta(7, 2) * Q, Z7 * Q))


@register("m_def", "Appell-Lerch series m(x,q,z)", order=BIVARIATE, specs=M_SPECS)
def m_def(n, s):
    x, z = s
    return [Comparison("engine vs box-sum oracle", m(x, 1, z, n), appell_oracle(x, z, n), nonzero=True)]


MDEF_SPECS = (
    (zeta(5, 4) * Q, zeta(5, 3) * Q, zeta(5, 4), Z5),
    (Z7 * Q, zeta(7, 3) * Q, zeta(7, 2), zeta(7, 5)),
    (zeta(5, 2) * Q, Z5 * Q**2, zeta(5, 3) * Q, zeta(5, 2)),
    (zeta(7, 3) * Q, zeta(7, 5) * Q, Z7, zeta(7, 4) * Q),
)


@register("mdef", "g_{a,b,c}(x,y,q,z1,z0) as theta-weighted Appell-Lerch sums", order=BIVARIATE, specs=MDEF_SPECS)
def mdef(n, s):
    x, y, z1, z0 = s
    # at (a,b,c) = (1,2,1): g = j(x;q) m(q^2 y/x^2, q^3, z0) + j(y;q) m(q^2 x/y^2, q^3, z1)

    def build(W):
        hand = (j(x, W) * m(Q**2 * y / x**2, 3, z0, W) + j(y, W) * m(Q**2 * x / y**2, 3, z1, W))
        return [Comparison("general formula = hand specialization", g_abc(1, 2, 1, x, y, z1, z0, n), hand,
                           nonzero=True)]

    return grow(build, n)


def gdef_direct(x: ParamSpec, n: int) -> QSeries:
    """sum_n q^(n^2) / ((x)_(n+1) (q/x)_n), term by term from Pochhammer products."""
    W = n + 4
    ring = x.ring
    total = QSeries.zero(W, join(ZZ, ring))
    k = 0
    while k * k <= W:
        den = pochhammer(x, k + 1, Q, W) * pochhammer(x.inverse() * Q, k, Q, W)
        total = total + QSeries.monomial(1, k * k, W, ring) * series_inv(den)
        k += 1
    return total


G_SPECS = ((Z5,), (zeta(7, 3),), (zeta(5, 2) * Q,), (zeta(7, 2) * Q,))


@register("gdef", "universal mock theta function g(x,q)", order=BIVARIATE, specs=G_SPECS)
def gdef(n, s):
    (x,) = s

    def build(W):
        g = g_series(x, 1, n)
        direct = mul_spec(gdef_direct(x, W) - 1, x.inverse())
        R = rank_series_R(x, 1, "lambert", W + 4)
        via_R = mul_spec((R.div_binomial(x.coeff(), x.q)) - 1, x.inverse())
        return [Comparison("nested form = term-by-term sum", g, direct, nonzero=True),
                Comparison("g = x^-1 (-1 + R(x;q)/(1-x))", g, via_R)]

    return grow(build, n)


@register("rzq_g", "R(z;q) = (1-z)(1 + z g(z,q))", order=BIVARIATE, specs=G_SPECS)
def rzq_g(n, s):
    (z,) = s

    def build(W):
        R = rank_series_R(z, 1, "eisenstein", n)
        g = g_series(z, 1, W)
        rhs = (1 + mul_spec(g, z)).mul_binomial(z.coeff(), z.q)
        return [Comparison("R = (1-z)(1+z g)", R, rhs, nonzero=True)]

    return grow(build, n)


GM_SPECS = ((Z5 * Q,), (Z5 * Q**2,), (Z7 * Q,), (zeta(7, 3) * Q**2,))


@register("g_m", "g(z,q) in terms of m(x,q^3,z)", order=BIVARIATE, specs=GM_SPECS)
def g_m(n, s):
    (z,) = s

    def build(W):
        g = g_series(z, 1, n)
        rhs = (-mul_spec(m(z**-3 * Q, 3, z**2, W), z**-2) - mul_spec(m(z**-3 * Q**2, 3, z**2, W), z.inverse()))
        return [Comparison("g = -z^-2 m(z^-3q,q^3,z^2) - z^-1 m(z^-3q^2,q^3,z^2)", g, rhs, nonzero=True)]

    return grow(build, n)


MID_SPECS = ((zeta(5, 2), Z5 * Q), (zeta(7, 3), zeta(7, 2) * Q), (Z5 * Q, zeta(5, 3)), (Z7 * Q**2, zeta(7, 4) * Q))


@register("mid1a", "m(x,q,z) = m(x,q,qz)", order=BIVARIATE, specs=MID_SPECS)
def mid1a(n, s):
    x, z = s
    return grow(lambda W: [Comparison("m(x,q,z) = m(x,q,qz)", m(x, 1, z, W), m(x, 1, z * Q, W), nonzero=True)], n)


@register("mid1b", "m(x,q,z) = x^-1 m(x^-1,q,z^-1)", order=BIVARIATE, specs=MID_SPECS)
def mid1b(n, s):
    x, z = s
    return grow(lambda W: [Comparison("m(x,q,z) = x^-1 m(x^-1,q,z^-1)", m(x, 1, z, W),
                                      mul_spec(m(x.inverse(), 1, z.inverse(), W), x.inverse()), nonzero=True)], n)


@register("mid1c", "m(qx,q,z) = 1 - x m(x,q,z)", order=BIVARIATE, specs=MID_SPECS)
def mid1c(n, s):
    x, z = s
    return grow(lambda W: [Comparison("m(qx,q,z) = 1 - x m(x,q,z)", m(x * Q, 1, z, W),
                                      1 - mul_spec(m(x, 1, z, W), x), nonzero=True)], n)


MID1D_SPECS = (
    (zeta(5, 2), Z5 * Q, zeta(5, 4) * Q**2),
    (Z7, zeta(7, 2) * Q, zeta(7, 5)),
    (Z5 * Q, zeta(5, 3), zeta(5, 2) * Q),
    (zeta(7, 3) * Q, Z7 * Q**2, zeta(7, 6)),
)


@register("mid1d", "m(x,q,z1) - m(x,q,z0) as a theta quotient", order=BIVARIATE, specs=MID1D_SPECS)
def mid1d(n, s):
    x, z0, z1 = s

    def build(W):
        lhs = m(x, 1, z1, W) - m(x, 1, z0, W)
        num = mul_spec(Jp(W, 1, e=3) * j(z1 / z0, W) * j(x * z0 * z1, W), z0)
        den = j(z0, W) * j(z1, W) * j(x * z0, W) * j(x * z1, W)
        if den.is_zero():
            raise NonGenericError("a theta factor of the denominator vanishes")
        return [Comparison("difference = theta quotient", lhs, num / den, nonzero=True)]

    return grow(build, n)


def _weier_args(a, b, c, d):
    return (d, b / c, a * b * c, a * d, b, d / c, a * c * d, a * b, c, a * b * d, a * c, d / b)


def weier_specs(seed=5, count=5):
    """Generic quadruples: no theta argument of the identity is an integer power of q."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.choice((5, 7))
        quad = tuple(ParamSpec(CycloNum.zeta(p, rng.randrange(1, p)), 0, rng.randint(0, 2)) for _ in range(4))
        if not any(is_qpower(t) for t in _weier_args(*quad)):
            out.append(quad)
    return tuple(out)


@register("weier", "three-term theta-function identity", order=BIVARIATE, specs=weier_specs())
def weier(n, s):
    a, b, c, d = s

    def build(W):
        t1 = j(d, W) * j(b / c, W) * j(a * b * c, W) * j(a * d, W)
        t2 = j(b, W) * j(d / c, W) * j(a * c * d, W) * j(a * b, W)
        t3 = mul_spec(j(c, W) * j(a * b * d, W) * j(a * c, W) * j(d / b, W), b / c)
        return [Comparison("first term = second - third", t1, t2 - t3, nonzero=True)]

    return grow(build, n)


JZQM_SPECS = ((Z5 * Q,), (zeta(7, 1) * Q**2,), (Z5 * Q**2,), (Z7 * Q,))


@register("jzqm", "four-term Appell-Lerch identity reduced to a three-term theta identity",
          order=BIVARIATE, specs=JZQM_SPECS, deps=("weier", "mid1d"))
def jzqm(n, s):
    (z,) = s
    zi = z.inverse()

    def build(W):
        lhs = (mul_spec(j(zi * Q, W) * m(Q, 3, z, W), z) + mul_spec(j(z**-2 * Q, W) * m(z**3 * Q, 3, zi, W), z)
               + mul_spec(j(z * Q, W) * m(Q, 3, zi, W), z**2) + mul_spec(j(z**2 * Q, W) * m(z**-3 * Q, 3, z, W), z**2))
        rhs = -(j(z**2, W) * m(z**-3 * Q, 3, z**2, W)) + mul_spec(j(z**2, W) * m(z**3 * Q, 3, z**-2, W), z)
        b3 = qpow(3)
        t1 = mul_spec(j(z * Q**2, W, b3) * j(z**2 * Q**2, W, b3) * j(z, W, b3), z)
        t2 = j(z * Q**2, W, b3) * j(z * Q, W, b3) * j(z**2, W, b3)
        t3 = j(z, W, b3) * j(z * Q, W, b3) * j(z**2 * Q, W, b3)
        return [Comparison("four Appell-Lerch terms = two", lhs, rhs, nonzero=True),
                Comparison("reduced three-term theta identity", t1 + t3, t2, nonzero=True)]

    return grow(build, n)


HIMO_SPECS = ((zeta(5, 4) * Q, zeta(5, 3) * Q), (Z7 * Q, zeta(7, 3) * Q), (zeta(5, 2) * Q, Z5 * Q**2),
              (zeta(7, 2) * Q, zeta(7, 6) * Q))


@register("himo_f121", "f_{n,n+1,n} = g_{n,n+1,n} for n = 1 (z1 = y/x, z0 = x/y)", order=BIVARIATE,
          specs=HIMO_SPECS, deps=("fabc_def", "mdef"))
def himo_f121(n, s):
    x, y = s
    # z1 = y^n / x^n; the choice y^n / x^2 fails already at n = 1

    def build(W):
        return [Comparison("f_{1,2,1}(x,y) = g_{1,2,1}(x,y,q,y/x,x/y)", f_abc(1, 2, 1, x, y, W),
                           g_abc(1, 2, 1, x, y, y / x, x / y, W), nonzero=True)]

    return grow(build, n)


@register("fHRid", "f_{1,2,1} pair as the rankid3 double sum", order=BIVARIATE, deps=("rankid3",))
def fHRid(n):
    zi = Z.inverse()
    f1 = f_abc(1, 2, 1, zi * Q, zi**2 * Q, n)
    f2 = mul_spec(f_abc(1, 2, 1, Z * Q, Z**2 * Q, n + 1), Z).truncate(n)
    half = filtered_sum("rankid3", lambda k, jj, v, ze: (jj >= 0 and ze == -k) or (jj < 0 and ze == k + 1),
                        "symbolic", n)
    return [
        Comparison("f(z^-1q, z^-2q) = its half of the double sum", f1, half, nonzero=True),
        Comparison("f(z^-1q, z^-2q) + z f(zq, z^2q) = double sum", f1 + f2, hr_rhs("rankid3", "symbolic", n)),
    ]


FGJ_SPECS = ((Z5 * Q,), (Z7 * Q,), (zeta(5, 2),), (Z5 * Q**2,), (zeta(7, 3),))


@register("fgjzmid", "f_{1,2,1} pair = g_{1,2,1} pair = theta times Appell-Lerch", order=BIVARIATE,
          specs=FGJ_SPECS, deps=("himo_f121", "jzqm"))
def fgjzmid(n, s):
    (z,) = s
    zi = z.inverse()

    def build(W):
        fs = f_abc(1, 2, 1, zi * Q, zi**2 * Q, W) + mul_spec(f_abc(1, 2, 1, z * Q, z**2 * Q, W), z)
        gs = g_abc(1, 2, 1, zi * Q, zi**2 * Q, zi, z, W) + mul_spec(g_abc(1, 2, 1, z * Q, z**2 * Q, z, zi, W), z)
        ex = (j(zi * Q, W) * m(Q, 3, z, W) + j(zi**2 * Q, W) * m(z**3 * Q, 3, zi, W)
              + mul_spec(j(z * Q, W) * m(Q, 3, zi, W), z) + mul_spec(j(z**2 * Q, W) * m(z**-3 * Q, 3, z, W), z))
        fin = j(z**2, W, form="sum") * (m(z**3 * Q, 3, z**-2, W) - mul_spec(m(z**-3 * Q, 3, z**2, W), zi))
        return [Comparison("f pair = g pair", fs, gs, nonzero=True),
                Comparison("g pair = four theta-Appell terms", gs, ex),
                Comparison("four terms = j(z^2;q)(m - z^-1 m)", ex, fin)]

    return grow(build, n)


# ---------------------------------------------------------------------------
# Hecke-Rogers identities


def _rankid(name):
    def body(n):
        return [Comparison(f"{name}: product side = double sum (symbolic z)", hr_lhs(name, "symbolic", n),
                           hr_rhs(name, "symbolic", n), nonzero=True)]

    return body


register("rankid1", "z-analog identity 1: (zq,z^-1q,q)_inf R(z;q)", order=UNIVARIATE)(_rankid("rankid1"))
register("rankid2", "z-analog identity 2: (zq,z^-1q,q)_inf R(z;q^2)", order=UNIVARIATE)(_rankid("rankid2"))
register("rankid3", "z-analog identity 3: (1+z)(z^2q,z^-2q,q)_inf R(z;q)", order=UNIVARIATE)(_rankid("rankid3"))
register("rankid4", "z-analog identity 4: (1+z)(z^2q^2,z^-2q^2,q^2;q^2)_inf R(z;q)",
         order=UNIVARIATE)(_rankid("rankid4"))


@register("hre12", "E(q)^2 as a Hecke-Rogers double sum (z = 1 in rankid1 and rankid3)")
def hre12(n):
    e2 = pentagonal_E(n) ** 2
    return [
        Comparison("double sum = E(q)^2", hr_rhs("hre12", 1, n), e2, nonzero=True),
        Comparison("rankid1 sum at z = 1", hr_rhs("rankid1", 1, n), e2),
        Comparison("rankid3 sum at z = 1 is 2 E(q)^2", hr_rhs("rankid3", 1, n), e2.scale(2)),
    ]


@register("hre_eta2", "Rogers' bilateral double sum for E(q)^2")
def hre_eta2(n):
    return [
        Comparison("bilateral sum = E(q)^2", hr_rhs("hre_eta2", 1, n), E(n) ** 2, nonzero=True),
        Comparison("bilateral sum = rankid1 sum at z = 1", hr_rhs("hre_eta2", 1, n), hr_rhs("rankid1", 1, n)),
    ]


@register("t4e", "theta_4(q) E(q) = (q)^3_inf/(q^2;q^2)_inf as a double sum (z = 1 in rankid2)")
def t4e(n):
    sums = theta4_sum(n) * pentagonal_E(n)
    return [
        Comparison("double sum = theta_4 E", hr_rhs("t4e", 1, n), sums, nonzero=True),
        Comparison("theta_4 E = J_1^3/J_2", sums, jprod(n, eta=((1, 3), (2, -1)))),
        Comparison("rankid2 product side at z = 1", hr_lhs("rankid2", 1, n), sums),
    ]


# ---------------------------------------------------------------------------
# Dissections and Atkin operators


@register("dissect_roundtrip", "p-dissection of a series into p parts")
def dissect_roundtrip(n):
    out = []
    for label, f, p in (("E(q)", E(5 * n + 4), 5), ("R(zeta5,q)", R_at(5, 1, 5 * n + 4), 5),
                        ("R(z;q)", rank_series_R("symbolic", 1, "eisenstein", n), 7)):
        parts = dissect(f, p)
        out.append(Comparison(f"{label}: sum_r q^r F_r(q^{p}) = F", reassemble(parts), f))
    return out


@register("atkin_ops", "Atkin operators U_{p,r}, U*_{p,m} and A_{p,m}")
def atkin_ops(n):
    f = R_at(5, 1, 7 * n + 6)
    out = []
    for p in (5, 7):
        for r in range(p):
            direct = QSeries([f.coeff(p * k + r) for k in range(n + 1)], 0, n)
            out.append(Comparison(f"U_{{{p},{r}}} picks a(pn+r)", atkin_U(f, p, r).truncate(n), direct))
            out.append(Comparison(f"U_{{{p},{r}}} = A_{{{p},0}} o U*_{{{p},{r}}}",
                                  atkin_U(f, p, r).truncate(n), a_op(u_star(f, p, r), p, r).truncate(n)))
        whole = sum((u_star(f, p, r) for r in range(1, p)), u_star(f, p, 0))
        out.append(Comparison(f"sum_m U*_{{{p},m}} = identity", whole.truncate(p * n), f.truncate(p * n)))
    return out


def _lemma(name):
    def body(n):
        return [Comparison(name, dissection_lemma_lhs(name, n), dissection_lemma_rhs(name, n), nonzero=True)]

    return body


register("diss5_1", "5-dissection of (zeta q, zeta^-1 q, q)_inf, zeta = exp(2 pi i/5)")(_lemma("5diss1"))
register("diss5_2", "5-dissection of E(q)")(_lemma("5diss2"))
register("diss5_3", "5-dissection of theta_4(q)")(_lemma("5diss3"))
register("zth7dis", "7-dissection of (zeta q, zeta^-1 q, q)_inf, zeta = exp(2 pi i/7)")(_lemma("zth7dis"))


@register("jsimp", "J_{10,1}J_{10,4}/J_10^2 = J_{5,1}/J_5 and its companion")
def jsimp(n):
    return [Comparison(k, dissection_lemma_lhs(k, n), dissection_lemma_rhs(k, n), nonzero=True)
            for k in ("jsimp_a", "jsimp_b")]


@register("sift5_1", "U_{5,2}(E(q)^2) = -J_5^2")
def sift5_1(n):
    return [Comparison("U_{5,2}(E^2)", atkin_U(pentagonal_E(5 * n + 4) ** 2, 5, 2).truncate(n), -Jp(n, 5, e=2))]


@register("sift5_2", "U_{5,3}(theta_4 E) = 2 J_5 J_{5,1} J_{10,3}/J_{5,2}")
def sift5_2(n):
    t = theta4_sum(5 * n + 4) * pentagonal_E(5 * n + 4)
    rhs = jprod(n, (5, 1, 1), (10, 3, 1), (5, 2, -1), eta=((5, 1),), scalar=2)
    return [Comparison("U_{5,3}(theta_4 E)", atkin_U(t, 5, 3).truncate(n), rhs)]


@register("sift5_3", "U_{5,4}(theta_4 E) = 2 J_5 J_{5,2} J_{10,1}/J_{5,1}")
def sift5_3(n):
    t = theta4_sum(5 * n + 4) * pentagonal_E(5 * n + 4)
    rhs = jprod(n, (5, 2, 1), (10, 1, 1), (5, 1, -1), eta=((5, 1),), scalar=2)
    return [Comparison("U_{5,4}(theta_4 E)", atkin_U(t, 5, 4).truncate(n), rhs)]


@register("zR5dis", "U_{5,2}((zeta q,zeta^-1 q,q)_inf R(zeta,q)) = -J_5^2", deps=("rankid1", "sift5_1"))
def zR5dis(n):
    N5 = 5 * n + 4
    lhs = atkin_U(zq_product(5, 1, N5) * R_at(5, 1, N5), 5, 2)
    sifted = residue_filtered_sum("rankid1", 5, None, (5, 1), N5, exponent_class=2)
    return [
        Comparison("product side", lhs, -Jp(n, 5, e=2), nonzero=True),
        Comparison("double sum restricted to exponents 2 mod 5 = U*_{5,2}(E^2)", sifted,
                   u_star(pentagonal_E(N5) ** 2, 5, 2)),
    ]


@register("zR52dis_a", "U_{5,3}((zeta q,zeta^-1 q,q)_inf R(zeta,q^2)) = (zeta^2+zeta^3) J_5 J_{5,1} J_{10,3}/J_{5,2}",
          deps=("rankid2", "sift5_2"))
def zR52dis_a(n):
    N5 = 5 * n + 4
    lhs = atkin_U(zq_product(5, 1, N5) * R_at(5, 2, N5), 5, 3)
    c = zsum(5, 2, 3)
    rhs = jprod(n, (5, 1, 1), (10, 3, 1), (5, 2, -1), eta=((5, 1),)).scale(c)
    sifted = residue_filtered_sum("rankid2", 5, None, (5, 1), N5, exponent_class=3)
    half = u_star(theta4_sum(N5) * pentagonal_E(N5), 5, 3).scale(c * CycloNum.from_scalar(5, 1) / 2)
    return [Comparison("product side", lhs, rhs, nonzero=True),
            Comparison("restricted double sum = (zeta^2+zeta^3)/2 U*_{5,3}(theta_4 E)", sifted, half)]


@register("zR52dis_b", "U_{5,4}((zeta q,zeta^-1 q,q)_inf R(zeta,q^2)) = (zeta+zeta^4) J_5 J_{5,2} J_{10,1}/J_{5,1}",
          deps=("rankid2", "sift5_3"))
def zR52dis_b(n):
    N5 = 5 * n + 4
    lhs = atkin_U(zq_product(5, 1, N5) * R_at(5, 2, N5), 5, 4)
    rhs = jprod(n, (5, 2, 1), (10, 1, 1), (5, 1, -1), eta=((5, 1),)).scale(zsum(5, 1, 4))
    return [Comparison("product side", lhs, rhs, nonzero=True)]


@register("drc5a", "U_{5,4}(R(zeta,q)) = 0, equivalent to the mod 5 conjecture", deps=("dyson5",))
def drc5a(n):
    u = atkin_U(R_at(5, 1, 5 * n + 4, "lambert"), 5, 4)
    return [Comparison("U_{5,4}(R(zeta,q))", u, zero_like(u))]


@register("drc5b", "U_{5,3}(R(zeta,q^2)) = 0")
def drc5b(n):
    C = parts_at(5, 2, n)
    return [Comparison("R_3 of R(zeta,q^2)", C[3], zero_like(C[3]))]


def mod5_system(n):
    C = parts_at(5, 2, n)
    W = n + 5
    z23, z14 = zsum(5, 2, 3), zsum(5, 1, 4)
    J10_2, J10_4, J5_1, J5_2 = Jp(W, 10, 2), Jp(W, 10, 4), Jp(W, 5, 1), Jp(W, 5, 2)
    return C, W, z23, z14, J10_2, J10_4, J5_1, J5_2


@register("eq1", "linear equation 1 for R_2, R_4 (q replaced by q^2)", deps=("drc5b", "zR5dis", "diss5_1"))
def eq1(n):
    C, W, z23, z14, J10_2, J10_4, J5_1, J5_2 = mod5_system(n)
    lhs = C[2] * J10_2.scale(z23) + C[4] * J10_4
    return [Comparison("(z^2+z^3) J_{10,2} R_2 + J_{10,4} R_4 = -J_10^2", lhs, -Jp(W, 10, e=2), nonzero=True)]


@register("eq2", "linear equation 2 for R_2, R_3", deps=("drc5b", "zR52dis_a", "diss5_1"))
def eq2(n):
    C, W, z23, z14, J10_2, J10_4, J5_1, J5_2 = mod5_system(n)
    lhs = C[2] * J5_1.scale(z23) + C[3] * J5_2
    rhs = jprod(W, (5, 1, 1), (10, 3, 1), (5, 2, -1), eta=((5, 1),)).scale(z23)
    return [Comparison("(z^2+z^3) J_{5,1} R_2 + J_{5,2} R_3", lhs, rhs, nonzero=True)]


@register("eq3", "linear equation 3 for R_3, R_4", deps=("drc5b", "zR52dis_b", "diss5_1"))
def eq3(n):
    C, W, z23, z14, J10_2, J10_4, J5_1, J5_2 = mod5_system(n)
    lhs = C[3] * J5_1.scale(z23) + C[4] * J5_2
    rhs = jprod(W, (5, 2, 1), (10, 1, 1), (5, 1, -1), eta=((5, 1),)).scale(z14)
    return [Comparison("(z^2+z^3) J_{5,1} R_3 + J_{5,2} R_4", lhs, rhs, nonzero=True)]


def detD(n) -> QSeries:
    J51, J52, J102, J104 = Jp(n, 5, 1), Jp(n, 5, 2), Jp(n, 10, 2), Jp(n, 10, 4)
    return J51**4 * J104**2 + J51**2 * J52**2 * J102 * J104 - J52**4 * J102**2


def eqnsol3_numerator(n) -> QSeries:
    J5, J51, J52, J10 = Jp(n, 5), Jp(n, 5, 1), Jp(n, 5, 2), Jp(n, 10)
    J101, J102, J103, J104 = Jp(n, 10, 1), Jp(n, 10, 2), Jp(n, 10, 3), Jp(n, 10, 4)
    head = (J5 * J51**3 * J102 * J103 * J104 - 2 * J5 * J51**2 * J52 * J101 * J104**2
            + J5 * J52**3 * J101 * J102 * J104 + J10**2 * J51**3 * J52 * J104 - J10**2 * J51 * J52**3 * J102)
    tail = J52 * (J5 * J51**2 * J101 * J104**2 + J5 * J51 * J52 * J102**2 * J103
                  - J5 * J52**2 * J101 * J102 * J104 - J10**2 * J51**3 * J104)
    return head - tail.scale(zsum(5, 2, 3))


@register("r3_zero", "R_3 = 0 by direct dissection and by the solved linear system",
          deps=("eq1", "eq2", "eq3", "detD_expansion"))
def r3_zero(n):
    C = parts_at(5, 2, n)
    W = n + 5
    closed = (eqnsol3_numerator(W) / detD(W)).truncate(n)
    return [
        Comparison("direct: U_{5,3}(R(zeta,q^2))", C[3], zero_like(C[3])),
        Comparison("closed form: numerator / D", closed, zero_like(closed)),
        Comparison("the two routes agree", C[3].truncate(n), closed),
    ]


DETD_REFERENCE = (1, -6, 10, 4, -19, 0, -10, 64, -9, -66, 0, -40)


@register("detD_expansion", "determinant D(q) and its reference expansion through q^11", order=11, fixed_order=11)
def detD_expansion(n):
    ref = series_of(DETD_REFERENCE[: n + 1])
    return [Comparison("D(q) vs reference coefficients", detD(n), ref, nonzero=True)]


@register("detD_eta", "D(q) = J_10^3 J_1^6/(J_5^2 J_2)", order=100)
def detD_eta(n):
    return [Comparison("D(q) as an eta quotient", detD(n), product_build(DETD_ETA_SPEC, n), nonzero=True)]


@register("r2r4_products", "product forms of R_2 and R_4 for R(zeta,q^2)", deps=("r3_zero",))
def r2r4_products(n):
    C = parts_at(5, 2, n)
    return [
        Comparison("R_2 = J_10^2/J_{10,2}", C[2], jprod(n, (10, 2, -1), eta=((10, 2),)), nonzero=True),
        Comparison("R_4 = -(1+z^2+z^3) J_10^2/J_{10,4}", C[4],
                   jprod(n, (10, 4, -1), eta=((10, 2),)).scale(-zsum(5, 0, 2, 3)), nonzero=True),
    ]


# ---------------------------------------------------------------------------
# Ramanujan's mod 5 identity


def ram_products(n):
    """A, B, C, D from their Pochhammer definitions (base q^5)."""
    b = qpow(5)

    def prod(*es):
        return binomial_product([(qpow(e), INF, b) for e in es], n)

    inv = series_inv
    A = prod(2, 3, 5) * inv(prod(1, 4) ** 2)
    B = prod(5) * inv(prod(1, 4))
    C = prod(5) * inv(prod(2, 3))
    D = prod(1, 4, 5) * inv(prod(2, 3) ** 2)
    return A, B, C, D


def phipsi_direct(shift: int, n: int) -> QSeries:
    """-1 + sum q^(5k^2) / ((q^s;q^5)_(k+1) (q^(5-s);q^5)_k), term by term."""
    total = QSeries.zero(n)
    k = 0
    while 5 * k * k <= n:
        den = pochhammer(qpow(shift), k + 1, qpow(5), n) * pochhammer(qpow(5 - shift), k, qpow(5), n)
        total = total + QSeries.monomial(1, 5 * k * k, n) * series_inv(den)
        k += 1
    return total - 1


@register("ram_abcd", "products A, B, C, D and the series phi, psi")
def ram_abcd(n):
    A, B, C, D = ram_products(n)
    return [
        Comparison("A = J_5^2 J_{5,2}/J_{5,1}^2", A, jprod(n, (5, 2, 1), (5, 1, -2), eta=((5, 2),)), nonzero=True),
        Comparison("B = J_5^2/J_{5,1}", B, jprod(n, (5, 1, -1), eta=((5, 2),)), nonzero=True),
        Comparison("C = J_5^2/J_{5,2}", C, jprod(n, (5, 2, -1), eta=((5, 2),)), nonzero=True),
        Comparison("D = J_5^2 J_{5,1}/J_{5,2}^2", D, jprod(n, (5, 1, 1), (5, 2, -2), eta=((5, 2),)), nonzero=True),
        Comparison("phi nested = term-by-term", phi(n), phipsi_direct(1, n), nonzero=True),
        Comparison("psi nested = term-by-term", psi(n), phipsi_direct(2, n), nonzero=True),
    ]


@register("ram_full", "Ramanujan's mod 5 identity for R(zeta,q)", deps=("ram_abcd",))
def ram_full(n):
    M = n // 5 + 2
    A, B, C, D = (f.substitute_qpower(5) for f in ram_products(M))
    ph, ps = phi(M).substitute_qpower(5), psi(M + 1).substitute_qpower(5)
    z14, z23 = zsum(5, 1, 4), zsum(5, 2, 3)
    two = CycloNum.from_scalar(5, 2)
    rhs = (A + ph.scale(z14 - two) + B.shift(1) + C.shift(2).scale(z14)
           - (D - ps.shift(-5).scale(z23 - two)).shift(3).scale(z14))
    rhs = rhs.truncate(n).assert_integral()
    lhs = R_at(5, 1, n)
    return [Comparison("R(zeta,q) = A(q^5) + ... including q^-2 psi(q^5)", lhs, rhs, nonzero=True)]


@register("ram_r1r2r4", "R_1, R_2, R_4 of R(zeta,q)", deps=("drc5a", "r2r4_products"))
def ram_r1r2r4(n):
    C = parts_at(5, 1, n)
    return [
        Comparison("R_1 = J_5^2/J_{5,1}", C[1], jprod(n, (5, 1, -1), eta=((5, 2),)), nonzero=True),
        Comparison("R_2 = (z+z^4) J_5^2/J_{5,2}", C[2], jprod(n, (5, 2, -1), eta=((5, 2),)).scale(zsum(5, 1, 4))),
        Comparison("R_4 = 0", C[4], zero_like(C[4])),
    ]


@register("ram_r0", "R_0 of R(zeta,q) in terms of phi", deps=("u50_lemma", "u50_left"))
def ram_r0(n):
    C = parts_at(5, 1, n)
    rhs = jprod(n, (5, 2, 1), (5, 1, -2), eta=((5, 2),)) + phi(n).scale(zsum(5, 4, 1) - 2)
    return [Comparison("R_0 = J_5^2 J_{5,2}/J_{5,1}^2 + (z^4+z-2) phi", C[0], rhs, nonzero=True)]


@register("ram_r3", "R_3 of R(zeta,q) in terms of psi(q)/q", deps=("u54_lemma",))
def ram_r3(n):
    C = parts_at(5, 1, n)
    rhs = (-jprod(n, (5, 1, 1), (5, 2, -2), eta=((5, 2),)).scale(zsum(5, 4, 1))
           + psi(n + 1).shift(-1).scale(zsum(5, 3, 3, 2, 2, 0)))
    return [Comparison("R_3 = -(z^4+z) J_{5,1} J_5^2/J_{5,2}^2 + q^-1 (2z^3+2z^2+1) psi", C[3], rhs, nonzero=True)]


@register("rtwid_def", "R~(z,q) = (1+z)(z^2q,z^-2q,q)_inf R(z,q)")
def rtwid_def(n):
    out = []
    for p, k in ((5, 1), (5, 2), (7, 1), (7, 3)):
        w = CycloNum.zeta(p, k)
        via_j = (j(zeta(p, 2 * k), n, form="sum") * rank_series_R((p, k), 1, "lambert", n)).scale((1 - w).inverse())
        out.append(Comparison(f"zeta{p}^{k}: product form = j(z^2;q) R/(1-z)", rtwid((p, k), 1, n), via_j,
                              nonzero=True))
    return out


def u50_data(n):
    N5 = 5 * n + 4
    Rt = rtwid((5, 1), 1, N5)
    return Rt, N5


S1 = ((0, 0), (0, 3), (1, 4), (3, 4), (4, 0), (4, 3))
S2 = ((1, 4), (3, 4))


@register("u50_lemma", "U_{5,0}(R~(zeta,q)) via the residue table", deps=("rankid3", "a50", "bigsum50"))
def u50_lemma(n):
    Rt, N5 = u50_data(n)
    W = n + 5
    c = zsum(5, 0, 0, 1, 1, 3)
    Rq = rtwid(Q, 5, W)
    rhs = jprod(W, (5, 2, 2), (5, 1, -2), eta=((5, 2),)).scale(1 + W5) - (Rq - Jp(W, 5, 2)).scale(c)
    f1 = residue_filtered_sum("hre12", 5, S1, 1, N5)
    f2 = residue_filtered_sum("hre12", 5, S2, 1, N5)
    sums = f1.scale(1 + W5) - f2.scale(c)
    return [
        Comparison("U_{5,0}(R~) = products and R~(q,q^5)", atkin_U(Rt, 5, 0).truncate(n), rhs.truncate(n),
                   nonzero=True),
        Comparison("U*_{5,0}(R~) = residue-class sums", u_star(Rt, 5, 0).truncate(5 * n), sums.truncate(5 * n)),
    ]


@register("u54_lemma", "U_{5,4}(R~(zeta,q)) via the residue table", deps=("rankid3",))
def u54_lemma(n):
    Rt, N5 = u50_data(n)
    W = n + 5
    c = zsum(5, 0, 0, 1, 1, 3)
    Rq2 = rtwid(Q**2, 5, W)
    rhs = (jprod(W, (5, 1, 2), (5, 2, -2), eta=((5, 2),)).scale(zsum(5, 2, 4))
           - (Rq2 - Jp(W, 5, 1)).shift(-1).scale(c))
    return [Comparison("U_{5,4}(R~) = products and R~(q^2,q^5)", atkin_U(Rt, 5, 4).truncate(n), rhs.truncate(n),
                       nonzero=True)]


def V(n, jj):
    return ((n * n - 3 * jj * jj) + (n - jj)) // 2


def solved_range(n, r):
    """j-range from the solved inequalities for the class n -> 5n + r, j -> -5j - 1."""
    mm, odd = divmod(n, 2)
    if r == 1:
        return (-mm, mm - 1) if not odd else (-mm, mm)
    return (-mm, mm) if not odd else (-mm - 1, mm)


@register("v513_reindex", "reindexing V(5n+1,-5j-1) and V(5n+3,-5j-1) with the solved j-ranges",
          deps=("a50",))
def v513_reindex(n):
    # coefficient of q^a counts the failures at n = a and n = -a (|j| <= 40 on the V identities,
    # all relevant j on the inequalities); both series must vanish through the check order
    v_fail, ineq_fail = [], []
    for a in range(n + 1):
        bad = 0
        for k in {a, -a}:
            for b in range(-40, 41):
                bad += V(5 * k + 1, -5 * b - 1) != 5 * (5 * V(k, b) - k)
                bad += V(5 * k + 3, -5 * b - 1) != 5 * (5 * V(k, b) + k + 1)
        v_fail.append(bad)
        bad = 0
        for r in (1, 3):
            h = (5 * a + r) // 2
            lo, hi = solved_range(a, r)
            for jj in range(-a - 3, a + 4):
                bad += (-h <= -5 * jj - 1 <= h) != (lo <= jj <= hi)
        ineq_fail.append(bad)
    v_fail, ineq_fail = series_of(v_fail), series_of(ineq_fail)
    out = [
        Comparison("V(5n+1,-5j-1)/5 = 5V(n,j)-n and V(5n+3,-5j-1)/5 = 5V(n,j)+n+1", v_fail, zero_like(v_fail)),
        Comparison("solved j-ranges match the floor inequalities", ineq_fail, zero_like(ineq_fail)),
    ]
    N5 = 5 * n + 4
    for r, lin in ((1, lambda k: -k), (3, lambda k: k + 1)):
        cls = residue_filtered_sum("hre12", 5, ((r, 4),), 1, N5)
        gen = []
        k = 0
        # over the solved range V(k, j) >= k^2/8, so the exponent is >= 5k^2/8 - k
        while 5 * k * k <= 8 * (n + k + 10):
            lo, hi = solved_range(k, r)
            for jj in range(lo, hi + 1):
                gen.append((5 * V(k, jj) + lin(k), sign(k + jj)))
            k += 1
        d = {}
        for e, c in gen:
            if e <= n:
                d[e] = d.get(e, 0) + c
        direct = QSeries.from_dict({e: c for e, c in d.items() if c}, n, ZZ)
        out.append(Comparison(f"A_{{5,0}} of class ({r},4) = reindexed sum", a_op(cls, 5, 0).truncate(n), direct,
                              nonzero=True))
    return out


@register("a50", "A_{5,0} of the S_2 residue-class sum = R~(q,q^5) - J_{5,2}", deps=("rankid3",))
def a50(n):
    N5 = 5 * n + 4
    W = n + 5
    f2 = residue_filtered_sum("hre12", 5, S2, 1, N5)
    lhs = a_op(f2, 5, 0).truncate(n)
    lattice = hr_rhs("rankid3", Q, W, 5) - j(qpow(2), W, qpow(5), "sum")
    return [
        Comparison("A_{5,0}(S_2 sum) = lattice sum - pentagonal sum", lhs, lattice.truncate(n), nonzero=True),
        Comparison("= R~(q,q^5) - J_{5,2}", lhs, (rtwid(Q, 5, W) - Jp(W, 5, 2)).truncate(n)),
    ]


@register("bigsum50", "S_1 residue-class sum = U*_{5,0}(E^2) = J_25^2 J_{25,10}^2/J_{25,5}^2", deps=("hre12", "diss5_2"))
def bigsum50(n):
    N5 = 5 * n + 4
    f1 = residue_filtered_sum("hre12", 5, S1, 1, N5).truncate(5 * n)
    return [
        Comparison("S_1 sum = U*_{5,0}(E^2)", f1, u_star(pentagonal_E(N5) ** 2, 5, 0).truncate(5 * n), nonzero=True),
        Comparison("U*_{5,0}(E^2) = J_25^2 J_{25,10}^2/J_{25,5}^2", f1,
                   jprod(5 * n, (25, 10, 2), (25, 5, -2), eta=((25, 2),))),
    ]


@register("rtwid_phi", "R~(q,q^5) = J_{5,2}(1 + phi(q))", deps=("rtwid_def",))
def rtwid_phi(n):
    W = n + 5
    Rq = rtwid(Q, 5, W).truncate(n)
    b5 = qpow(5)
    prod = binomial_product([(qpow(2), INF, b5), (qpow(3), INF, b5), (b5, INF, b5)], W)
    via_R = (prod * rank_series_R(Q, 5, "lambert", W)).div_binomial(1, 1).truncate(n)
    return [
        Comparison("R~(q,q^5) = J_{5,2}(1+phi)", Rq, (Jp(W, 5, 2) * (1 + phi(W))).truncate(n), nonzero=True),
        Comparison("= (q^2,q^3,q^5;q^5)_inf R(q,q^5)/(1-q)", Rq, via_R),
    ]


@register("u50_left", "U_{5,0}(R~(zeta,q)) = (1+zeta) J_{5,2} R_0(q)", deps=("ram_r1r2r4",))
def u50_left(n):
    Rt, N5 = u50_data(n)
    C = parts_at(5, 1, n)
    lhs = atkin_U(Rt, 5, 0).truncate(n)
    out = [Comparison("U_{5,0}(R~) = (1+z) J_{5,2} R_0", lhs, (Jp(n, 5, 2) * C[0]).scale(1 + W5), nonzero=True)]
    # R~(zeta,q) = (1+z)(J_{25,10} + q(z+z^4) J_{25,5})(R_0(q^5) + q J_25^2/J_{25,5} + q^2 (z+z^4) J_25^2/J_{25,10} + q^3 R_3(q^5))
    M = N5
    z14 = zsum(5, 1, 4)
    theta = jprod(M, (25, 10, 1)) + jprod(M, (25, 5, 1), qshift=1).scale(z14)
    R5 = (C[0].substitute_qpower(5) + jprod(M, (25, 5, -1), eta=((25, 2),), qshift=1)
          + jprod(M, (25, 10, -1), eta=((25, 2),), qshift=2).scale(z14) + C[3].substitute_qpower(5).shift(3))
    out.append(Comparison("5-dissected form of R~(zeta,q)", Rt.truncate(5 * n),
                          (theta * R5).scale(1 + W5).truncate(5 * n)))
    return out


# ---------------------------------------------------------------------------
# Mod 7


def _u7(name_or_series, r, n):
    return atkin_U(name_or_series, 7, r).truncate(n)


@register("zR7dis1_a", "U_{7,4}((zeta q,zeta^-1 q,q)_inf R(zeta,q)) = J_7^2, zeta = exp(2 pi i/7)", deps=("rankid1",))
def zR7dis1_a(n):
    L = hr_lhs("rankid1", (7, 1), 7 * n + 6)
    return [Comparison("U_{7,4}", _u7(L, 4, n), Jp(n, 7, e=2), nonzero=True)]


@register("zR7dis1_b", "U_{7,4}(R~(zeta,q)) = 2 zeta^4 J_7^2", deps=("rankid3",))
def zR7dis1_b(n):
    L = hr_lhs("rankid3", (7, 1), 7 * n + 6)
    return [Comparison("U_{7,4}", _u7(L, 4, n), Jp(n, 7, e=2).scale(2 * W7**4), nonzero=True)]


@register("zR7dis1_c", "U_{7,3}((1+zeta)(zeta^2q^2,zeta^-2q^2,q^2;q^2)_inf R(zeta,q)) = 2 zeta^4 q J_14^3/J_7",
          deps=("rankid4",))
def zR7dis1_c(n):
    # the factor q is forced by the third mod 7 linear equation (eqn73)
    L = hr_lhs("rankid4", (7, 1), 7 * n + 6)
    rhs = jprod(n, eta=((14, 3), (7, -1)), qshift=1).scale(2 * W7**4)
    return [Comparison("U_{7,3}", _u7(L, 3, n), rhs, nonzero=True)]


def mod7_parts(n):
    C = parts_at(7, 1, n)
    W = n + 5
    return C, W


@register("eqn71", "mod 7 linear equation 1 for R_1, R_3, R_4", deps=("zR7dis1_a", "zth7dis"))
def eqn71(n):
    C, W = mod7_parts(n)
    lhs = C[1] * Jp(W, 7, 1).scale(-zsum(7, 4, 3)) + C[3] * Jp(W, 7, 2).scale(zsum(7, 5, 4, 3, 2)) + C[4] * Jp(W, 7, 3)
    return [Comparison("= J_7^2", lhs, Jp(W, 7, e=2), nonzero=True)]


@register("eqn72", "mod 7 linear equation 2 for R_1, R_3, R_4", deps=("zR7dis1_b", "zth7dis"))
def eqn72(n):
    C, W = mod7_parts(n)
    lhs = (C[1] * Jp(W, 7, 1).scale(zsum(7, 5, 4, 3)) + C[3] * Jp(W, 7, 2).scale(W7**4)
           + C[4] * Jp(W, 7, 3).scale(zsum(7, 1, 0)))
    return [Comparison("= 2 zeta^4 J_7^2", lhs, Jp(W, 7, e=2).scale(2 * W7**4), nonzero=True)]


@register("eqn73", "mod 7 linear equation 3 for R_1, R_3, R_4 (q replaced by q^2)", deps=("zR7dis1_c", "zth7dis"))
def eqn73(n):
    C, W = mod7_parts(n)
    lhs = (C[1] * Jp(W, 14, 4).scale(W7**4) + C[3] * Jp(W, 14, 6).scale(zsum(7, 1, 0))
           + (C[4] * Jp(W, 14, 2)).shift(1).scale(zsum(7, 5, 4, 3)))
    rhs = jprod(W, eta=((14, 3), (7, -1)), qshift=1).scale(2 * W7**4)
    return [Comparison("= 2 zeta^4 q J_14^3/J_7", lhs, rhs, nonzero=True)]


@register("mod7_products", "product forms of R_1, R_3, R_4 for R(zeta,q), zeta = exp(2 pi i/7)",
          deps=("eqn71", "eqn72", "eqn73"))
def mod7_products(n):
    C, W = mod7_parts(n)
    return [
        Comparison("R_1 = J_7^2/J_{7,1}", C[1], jprod(n, (7, 1, -1), eta=((7, 2),)), nonzero=True),
        Comparison("R_3 = (z^5+z^2+1) J_7^2/J_{7,2}", C[3],
                   jprod(n, (7, 2, -1), eta=((7, 2),)).scale(zsum(7, 5, 2, 0)), nonzero=True),
        Comparison("R_4 = -(z^5+z^2) J_7^2/J_{7,3}", C[4],
                   jprod(n, (7, 3, -1), eta=((7, 2),)).scale(-zsum(7, 5, 2)), nonzero=True),
    ]
