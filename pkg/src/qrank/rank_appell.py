"""Partition-rank oracles, the rank generating function R(z;q) and Appell-Lerch sums.

Arguments of the analytic functions are :class:`~qrank.theta.ParamSpec`
monomials, so the same code evaluates an identity with symbolic z (Laurent
coefficients) or at a specialization such as z = zeta_5 q.
"""

from __future__ import annotations

import math
from functools import reduce
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from qrank.coeff_rings import ZZ, CycloNum, LaurentPoly, clean, join, ring_of
from qrank.errors import BoundError, NonGenericError, PrecisionError
from qrank.qseries import QSeries, series_inv
from qrank.theta import INF, ONE, Q, Z, ParamSpec, jtheta, pochhammer, qpow, zeta

ENUMERATE_LIMIT = 45
DP_LIMIT = 400

# ---------------------------------------------------------------------------
# Rank tables


@dataclass
class RankTable:
    """Exact counts N(m, n) of partitions of n with rank m, for n <= max_n."""

    max_n: int
    counts: dict = field(default_factory=dict)  # (m, n) -> N(m, n), nonzero entries only
    totals: list = field(default_factory=list)  # totals[n] = p(n)
    method: str = ""

    def N(self, m: int, n: int) -> int:
        self._check(n)
        return self.counts.get((m, n), 0)

    def N_mod(self, m: int, t: int, n: int) -> int:
        """Number of partitions of n with rank congruent to m mod t."""
        self._check(n)
        return sum(c for (r, k), c in self.counts.items() if k == n and (r - m) % t == 0)

    def classes(self, t: int, n: int) -> list:
        """[N(0,t,n), ..., N(t-1,t,n)]."""
        self._check(n)
        out = [0] * t
        for (r, k), c in self.counts.items():
            if k == n:
                out[r % t] += c
        return out

    def p(self, n: int) -> int:
        self._check(n)
        return self.totals[n]

    def row(self, n: int) -> dict:
        self._check(n)
        return {r: c for (r, k), c in self.counts.items() if k == n}

    def _check(self, n):
        if not 0 <= n <= self.max_n:
            raise ValueError(f"n = {n} outside table range 0..{self.max_n}")

    def __eq__(self, other):
        if not isinstance(other, RankTable):
            return NotImplemented
        return self.max_n == other.max_n and self.counts == other.counts and self.totals == other.totals


def _partitions(n: int):
    """Partitions of n as ascending lists (Kelleher's accelerated ascending compositions)."""
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        ell = k + 1
        while x <= y:
            a[k] = x
            a[ell] = y
            yield a[: k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[: k + 1]


def _enumerate_table(max_n: int) -> RankTable:
    counts = {}
    totals = []
    for n in range(max_n + 1):
        tot = 0
        for part in _partitions(n):
            r = (part[-1] - len(part)) if part else 0
            counts[(r, n)] = counts.get((r, n), 0) + 1
            tot += 1
        totals.append(tot)
    return RankTable(max_n, counts, totals, "enumerate")


def _dp_table(max_n: int) -> RankTable:
    # Nested Durfee-square sum: S_k = 1 + q^(2k+1) S_{k+1} / ((1 - z q^(k+1))(1 - z^-1 q^(k+1))),
    # R = S_0.  Every intermediate is a nonnegative count bounded by p(max_n) < 2^63.
    W = 2 * max_n + 1
    c = max_n  # column of z^0
    kmax = math.isqrt(max_n)
    S = np.zeros((max_n + 1, W), dtype=np.int64)
    S[0, c] = 1
    for k in range(kmax - 1, -1, -1):
        e = k + 1
        for n in range(e, max_n + 1):
            S[n, 1:] += S[n - e, :-1]
        for n in range(e, max_n + 1):
            S[n, :-1] += S[n - e, 1:]
        s = 2 * k + 1
        T = np.zeros_like(S)
        T[s:] = S[: max_n + 1 - s]
        T[0, c] += 1
        S = T
    counts = {}
    totals = []
    for n in range(max_n + 1):
        row = S[n]
        for j in np.nonzero(row)[0]:
            counts[(int(j) - c, n)] = int(row[j])
        totals.append(int(row.sum()))
    return RankTable(max_n, counts, totals, "dp")


def rank_oracle(max_n: int, method: str = "dp") -> RankTable:
    """Rank table by walking every partition ("enumerate") or from the Durfee-square sum ("dp")."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if method == "enumerate":
        if max_n > ENUMERATE_LIMIT:
            raise BoundError(f"enumeration is limited to n <= {ENUMERATE_LIMIT}")
        return _enumerate_table(max_n)
    if method == "dp":
        if max_n > DP_LIMIT:
            raise BoundError(f"the rank DP is limited to n <= {DP_LIMIT}")
        return _dp_table(max_n)
    raise ValueError(f"unknown rank oracle method {method!r}")


def partition_counts(max_n: int) -> list:
    """p(0..max_n) from Euler's pentagonal recurrence (independent of the rank code)."""
    p = [1] + [0] * max_n
    for n in range(1, max_n + 1):
        s = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            s += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                s += sign * p[n - g2]
            k += 1
        p[n] = s
    return p


# ---------------------------------------------------------------------------
# Helpers on ParamSpec arguments


def as_spec(z) -> ParamSpec:
    """Coerce the z-modes accepted by the evaluators into a ParamSpec.

    ``"symbolic"`` is the formal variable z; an int 1 is z = 1; a pair
    ``(p, k)`` is zeta_p**k.
    """
    if isinstance(z, ParamSpec):
        return z
    if z == "symbolic":
        return Z
    if isinstance(z, tuple) and len(z) == 2:
        return zeta(*z)
    if z == 1:
        return ONE
    raise ValueError(f"cannot interpret {z!r} as a parameter")


def as_base(base) -> ParamSpec:
    if isinstance(base, int):
        return qpow(base)
    if base.z or base.unit != 1 or base.q < 1:
        raise ValueError(f"base must be a positive power of q, got {base}")
    return base


def spec_series(spec: ParamSpec, trunc: int) -> QSeries:
    """The monomial spec as a series known through q^trunc."""
    return QSeries.monomial(spec.coeff(), spec.q, trunc)


def mul_spec(f: QSeries, spec: ParamSpec) -> QSeries:
    """f times the monomial spec (exact; trunc moves with the q-shift)."""
    c = spec.coeff()
    out = f if c == 1 else f.scale(c)
    return out.shift(spec.q) if spec.q else out


def _one_minus(spec: ParamSpec, trunc: int) -> QSeries:
    return QSeries.one(trunc, spec.ring).mul_binomial(spec.coeff(), spec.q)


def _fit(f: QSeries, trunc: int) -> QSeries:
    if f.trunc < trunc:
        raise PrecisionError(f"evaluation reached q^{f.trunc}, q^{trunc} requested")
    return f.truncate(trunc)


# ---------------------------------------------------------------------------
# Nested sums  sum_n base^(n^2) / ((a base; base)_n (b base; base)_n)


def nested_sum(a: ParamSpec, b: ParamSpec, base: ParamSpec, trunc: int) -> QSeries:
    """H(a, b) = sum_{n>=0} base^(n^2) / ((a*base; base)_n (b*base; base)_n).

    Evaluated from the inside out: S_n = 1 + base^(2n+1) S_{n+1} /
    ((1 - a base^(n+1)) (1 - b base^(n+1))), H = S_0.  Every factor
    1/(1 - u) has q-order >= 0 after expansion, so term n has order
    >= k n^2 and depth isqrt(trunc/k) suffices.
    """
    base = as_base(base)
    k = base.q
    depth = math.isqrt(max(trunc, 0) // k) if trunc >= 0 else 0
    ring = join(a.ring, b.ring)
    S = QSeries.one(trunc - k * depth * depth, ring)
    for n in range(depth - 1, -1, -1):
        u = a * base ** (n + 1)
        v = b * base ** (n + 1)
        S = S.div_binomial(u.coeff(), u.q).div_binomial(v.coeff(), v.q)
        S = S.shift(k * (2 * n + 1))
        S = S + QSeries.one(S.trunc, ring)
    return S


# ---------------------------------------------------------------------------
# The rank generating function


def _bad_z(z: ParamSpec):
    if z.is_one():
        raise NonGenericError("z = 1: the factor 1 - z vanishes")


def rank_series_R(z="symbolic", base=1, form: str = "eisenstein", trunc: int = 20) -> QSeries:
    """R(z; base) = sum_n base^(n^2) / ((z base)_n (z^-1 base)_n).

    ``form="lambert"`` evaluates the same function as
    (1 - z)/(base)_inf * sum_n (-1)^n base^(n(3n+1)/2) / (1 - z base^n),
    with the n = 0 term cancelled to 1 before expansion.
    """
    z = as_spec(z)
    base = as_base(base)
    if form == "eisenstein":
        return _fit(nested_sum(z, z.inverse(), base, trunc), trunc)
    if form != "lambert":
        raise ValueError(f"unknown form {form!r}")
    _bad_z(z)
    k = base.q
    ring = z.ring

    def expo(n):
        return k * n * (3 * n + 1) // 2

    lo = hi = 0
    while expo(lo - 1) <= trunc:
        lo -= 1
    while expo(hi + 1) <= trunc:
        hi += 1
    for n in (lo - 1, lo - 2, hi + 1, hi + 2):
        if expo(n) <= trunc:
            raise BoundError("Lambert sum range does not cover the requested order")
    # the n = 0 term (1 - z)/(1 - z) is exactly 1
    total = QSeries.one(trunc, ring)
    for n in range(lo, hi + 1):
        if n == 0:
            continue
        t = QSeries.monomial(-1 if n % 2 else 1, expo(n), trunc, ring)
        t = t.mul_binomial(z.coeff(), z.q)
        u = z * base**n
        total = total + t.div_binomial(u.coeff(), u.q)
    out = total * series_inv(pochhammer(base, INF, base, trunc))
    return _fit(out, trunc)


# ---------------------------------------------------------------------------
# g(x, q) and Ramanujan's phi, psi


def gdef_sum(x: ParamSpec, base=1, trunc: int = 20) -> QSeries:
    """sum_{n>=0} base^(n^2) / ((x; base)_(n+1) (base/x; base)_n)."""
    base = as_base(base)
    ord_den = min(x.q, 0)
    work = trunc - ord_den
    h = nested_sum(x, x.inverse(), base, work)
    return _fit(h.div_binomial(x.coeff(), x.q), trunc)


def g_series(x: ParamSpec, base=1, trunc: int = 20) -> QSeries:
    """g(x, q) = x^-1 (-1 + sum_n q^(n^2) / ((x)_(n+1) (q/x)_n))."""
    work = trunc + x.q
    s = gdef_sum(x, base, work) - 1
    return _fit(mul_spec(s, x.inverse()), trunc)


def phi(trunc: int) -> QSeries:
    """phi(q) = -1 + sum q^(5n^2) / ((q; q^5)_(n+1) (q^4; q^5)_n)."""
    return gdef_sum(qpow(1), 5, trunc) - 1


def psi(trunc: int) -> QSeries:
    """psi(q) = -1 + sum q^(5n^2) / ((q^2; q^5)_(n+1) (q^3; q^5)_n)."""
    return gdef_sum(qpow(2), 5, trunc) - 1


# ---------------------------------------------------------------------------
# Appell-Lerch sums


@dataclass(frozen=True)
class AppellSpec:
    """Arguments of m(x, base, z)."""

    x: ParamSpec
    base: ParamSpec
    z: ParamSpec


def _term_order(r, x, base, z):
    k = base.q
    num = k * r * (r - 1) // 2 + r * z.q
    u = k * (r - 1) + x.q + z.q
    return num + max(0, -u)


def _appell_range(x, base, z, limit):
    """r-range whose terms can reach q^limit; asserted on two extra layers each side."""
    lo = hi = 0
    while _term_order(lo - 1, x, base, z) <= limit or _term_order(lo - 2, x, base, z) <= limit:
        lo -= 1
    while _term_order(hi + 1, x, base, z) <= limit or _term_order(hi + 2, x, base, z) <= limit:
        hi += 1
    for a, b in ((lo - 1, lo - 2), (hi + 1, hi + 2)):
        oa, ob = _term_order(a, x, base, z), _term_order(b, x, base, z)
        if not (oa > limit and ob >= oa):
            raise BoundError(f"Appell-Lerch range [{lo}, {hi}] is not closed at order {limit}")
    return lo, hi


def appell_sum(x: ParamSpec, base: ParamSpec, z: ParamSpec, trunc: int) -> QSeries:
    """sum_r (-1)^r base^C(r,2) z^r / (1 - base^(r-1) x z), through q^trunc."""
    base = as_base(base)
    lo, hi = _appell_range(x, base, z, trunc)
    ring = join(x.ring, z.ring)
    total = QSeries.zero(trunc, ring)
    for r in range(lo, hi + 1):
        num = z**r * base ** (r * (r - 1) // 2)
        if num.q > trunc:
            continue
        c = num.coeff()
        t = QSeries.monomial(-c if r % 2 else c, num.q, trunc, ring)
        u = base ** (r - 1) * x * z
        total = total + t.div_binomial(u.coeff(), u.q)
    return total


def appell_m(x, base=1, z=None, trunc: int = 20, spec: AppellSpec | None = None) -> QSeries:
    """m(x, q, z) = (1/j(z;q)) sum_r (-1)^r q^C(r,2) z^r / (1 - q^(r-1) x z).

    Raises NonGenericError at a pole of the sum or a zero of j(z;q).
    """
    if spec is not None:
        x, base, z = spec.x, spec.base, spec.z
    base = as_base(base)
    margin = 2
    for _ in range(8):
        jz = jtheta(z, base, "sum", trunc + margin)
        if jz.is_zero():
            raise NonGenericError(f"j({z}; {base}) vanishes")
        L = jz.lower
        s = appell_sum(x, base, z, trunc + margin + max(L, 0))
        out = s * series_inv(jz)
        if out.trunc >= trunc:
            return out.truncate(trunc)
        margin += trunc - out.trunc + 2
    raise PrecisionError("Appell-Lerch evaluation did not reach the requested order")


# ---------------------------------------------------------------------------
# f_{a,b,c} and g_{a,b,c}


def _sg(r: int) -> int:
    return 1 if r >= 0 else -1


def _f_exponent(a, b, c, x, y):
    def E(r, s):
        return a * r * (r - 1) // 2 + b * r * s + c * s * (s - 1) // 2 + r * x.q + s * y.q

    return E


def _quadrant_points(a, b, c, x, y, limit, sign):
    """Lattice points of one same-sign quadrant with exponent <= limit.

    On r, s >= 0 (or r, s < 0) with a, c > 0 and b >= 0 the cross term b r s
    is nonnegative, so E(r, s) >= A(r) + C(s) with convex A, C.  Rows are
    scanned while the lower bound can still reach ``limit``; two extra rows
    and columns are checked to exceed it.
    """
    E = _f_exponent(a, b, c, x, y)
    step = 1 if sign > 0 else -1
    start = 0 if sign > 0 else -1

    def A(r):
        return a * r * (r - 1) // 2 + r * x.q

    def C(s):
        return c * s * (s - 1) // 2 + s * y.q

    def seq_min(fn):
        # minimum of a convex function over start, start+step, ...
        v = start
        best = fn(v)
        while fn(v + step) <= best:
            v += step
            best = fn(v)
        return best

    cmin = seq_min(C)
    amin = seq_min(A)
    pts = []
    r = start
    while True:
        if A(r) + cmin > limit and A(r + step) + cmin > limit and A(r + step) >= A(r) and A(r) > amin:
            break
        s = start
        while True:
            if C(s) + A(r) > limit and C(s + step) >= C(s) and C(s) > cmin:
                break
            v = E(r, s)
            if v <= limit:
                pts.append((r, s, v))
            s += step
        # boundary: the next two columns exceed the limit for this row
        for s2 in (s, s + step):
            if E(r, s2) <= limit:
                raise BoundError(f"f-sum row {r} not closed at column {s2}")
        r += step
    for r2 in (r, r + step):
        s = start
        for _ in range(4 * (abs(r2) + 4)):
            if E(r2, s) <= limit:
                raise BoundError(f"f-sum boundary row {r2} reaches order {limit}")
            s += step
    return pts


def f_abc(a: int, b: int, c: int, x: ParamSpec, y: ParamSpec, trunc: int) -> QSeries:
    """f_{a,b,c}(x, y, q) = sum_{sg r = sg s} sg(r) (-1)^(r+s) x^r y^s q^(a C(r,2) + b r s + c C(s,2))."""
    if a <= 0 or c <= 0 or b < 0:
        raise BoundError(f"f_{{{a},{b},{c}}}: exponent not bounded below on the summation region")
    ring = join(x.ring, y.ring)
    terms = {}
    for sign in (1, -1):
        for r, s, v in _quadrant_points(a, b, c, x, y, trunc, sign):
            mono = x**r * y**s
            coef = mono.coeff()
            if (r + s) % 2:
                coef = -coef
            if sign < 0:
                coef = -coef
            terms[v] = terms[v] + coef if v in terms else coef
    return QSeries.from_dict(terms, trunc, ring)


def f_abc_naive(a, b, c, x: ParamSpec, y: ParamSpec, trunc: int, box: int = 12) -> QSeries:
    """The f_{a,b,c} double sum over the box |r|, |s| <= box, with no region reasoning."""
    ring = join(x.ring, y.ring)
    terms = {}
    for r in range(-box, box + 1):
        for s in range(-box, box + 1):
            if _sg(r) != _sg(s):
                continue
            v = a * r * (r - 1) // 2 + b * r * s + c * s * (s - 1) // 2 + r * x.q + s * y.q
            if v > trunc:
                continue
            coef = (x**r * y**s).coeff() * _sg(r) * (-1) ** ((r + s) % 2)
            terms[v] = terms.get(v, 0) + coef
    return QSeries.from_dict(terms, trunc, ring)


def g_abc(a: int, b: int, c: int, x: ParamSpec, y: ParamSpec, z1: ParamSpec, z0: ParamSpec,
          trunc: int, base=1) -> QSeries:
    """g_{a,b,c}(x, y, q, z1, z0): two t-sums of theta-weighted Appell-Lerch functions.

    Implemented for general (a, b, c) but only exercised at (1, 2, 1).
    """
    q = as_base(base)
    D = b * b - a * c
    neg_x, neg_y = -x, -y
    ring = reduce(join, (x.ring, y.ring, z1.ring, z0.ring))
    total = QSeries.zero(trunc, ring)
    for t in range(a):
        w = neg_y**t * q ** (c * t * (t - 1) // 2)
        th = jtheta(q ** (b * t) * x, q**a, "product", trunc - w.q + 4 * (abs(w.q) + 2))
        arg = -(q ** (a * b * (b + 1) // 2 - c * a * (a + 1) // 2 - t * D)) * neg_y**a / neg_x**b
        m = appell_m(arg, q ** (a * D), z0, trunc - w.q + 4 * (abs(w.q) + 2))
        total = total + mul_spec(th * m, w)
    for t in range(c):
        w = neg_x**t * q ** (a * t * (t - 1) // 2)
        th = jtheta(q ** (b * t) * y, q**c, "product", trunc - w.q + 4 * (abs(w.q) + 2))
        arg = -(q ** (c * b * (b + 1) // 2 - a * c * (c + 1) // 2 - t * D)) * neg_x**c / neg_y**b
        m = appell_m(arg, q ** (c * D), z1, trunc - w.q + 4 * (abs(w.q) + 2))
        total = total + mul_spec(th * m, w)
    return _fit(total, trunc)


__all__ = [
    "RankTable", "rank_oracle", "partition_counts", "rank_series_R", "nested_sum",
    "gdef_sum", "g_series", "phi", "psi", "AppellSpec", "appell_sum", "appell_m",
    "f_abc", "f_abc_naive", "g_abc", "as_spec", "as_base", "spec_series", "mul_spec",
]
