"""Pochhammer symbols, the theta function j(z;q) and J-product builders."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from qrank.coeff_rings import ZZ, CycloNum, LaurentPoly, cyclo, ring_of
from qrank.errors import BoundError, DivergentError
from qrank.qseries import QSeries, series_inv

INF = math.inf


@dataclass(frozen=True)
class ParamSpec:
    """The monomial unit * z**z * q**q.

    ``unit`` is +-1 or a CycloNum equal to +-zeta**k.  ParamSpecs multiply,
    divide and take integer powers, which is how arguments such as z^-3 q or
    zeta*q^2 are assembled.
    """

    unit: object = 1
    z: int = 0
    q: int = 0

    def __post_init__(self):
        u = self.unit
        if isinstance(u, CycloNum):
            m = u.monomial()
            if m is None or m[0] not in (1, -1):
                raise ValueError(f"ParamSpec unit must be +-zeta^k, got {u}")
            if u.is_scalar():
                object.__setattr__(self, "unit", m[0])
        elif u not in (1, -1):
            raise ValueError(f"ParamSpec unit must be +-1 or +-zeta^k, got {u!r}")

    def __mul__(self, other):
        if isinstance(other, ParamSpec):
            return ParamSpec(self.unit * other.unit, self.z + other.z, self.q + other.q)
        if isinstance(other, (int, CycloNum)):
            return ParamSpec(self.unit * other, self.z, self.q)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return ParamSpec(-self.unit, self.z, self.q)

    def inverse(self) -> "ParamSpec":
        u = self.unit.inverse() if isinstance(self.unit, CycloNum) else self.unit
        return ParamSpec(u, -self.z, -self.q)

    def __truediv__(self, other):
        if isinstance(other, ParamSpec):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        u = self.unit**n
        return ParamSpec(u, self.z * n, self.q * n)

    def coeff(self):
        """The ring element unit * z**z (q-power excluded)."""
        if self.z:
            return LaurentPoly({self.z: self.unit})
        return self.unit

    @property
    def ring(self):
        return ring_of(self.coeff())

    def is_one(self) -> bool:
        return self.unit == 1 and not self.z and not self.q

    def __repr__(self):
        parts = []
        if isinstance(self.unit, CycloNum):
            c, k = self.unit.monomial()
            w = f"zeta{self.unit.p}" + (f"^{k}" if k != 1 else "")
            parts.append(w if c == 1 else f"(-{w})")
        elif self.unit != 1:
            parts.append(str(self.unit))
        if self.z:
            parts.append("z" if self.z == 1 else f"z^{self.z}")
        if self.q:
            parts.append("q" if self.q == 1 else f"q^{self.q}")
        return "*".join(parts) or "1"


Q = ParamSpec(1, 0, 1)
Z = ParamSpec(1, 1, 0)
ONE = ParamSpec(1, 0, 0)


def qpow(e: int) -> ParamSpec:
    return ParamSpec(1, 0, e)


def zeta(p: int, k: int = 1) -> ParamSpec:
    return ParamSpec(CycloNum.zeta(p, k), 0, 0)


# ---------------------------------------------------------------------------
# Products of binomials (1 - c q^e)


def _factors(a: ParamSpec, n, base: ParamSpec, limit: int):
    """Yield (coeff, q-exponent) of the factors of (a; base)_n whose exponent may matter.

    For infinite n only exponents <= limit are produced.
    """
    if n == INF:
        if base.q < 1 or base.z:
            raise DivergentError(f"infinite product with base {base} has no formal q-expansion")
        k = 0
        while True:
            f = a * base**k
            if f.q > limit:
                return
            yield f.coeff(), f.q
            k += 1
    for k in range(int(n)):
        f = a * base**k
        yield f.coeff(), f.q


def binomial_product(specs, trunc: int) -> QSeries:
    """prod over specs (a, n, base) of (a; base)_n, known through q^trunc."""
    nonpos = []
    shift = 0
    ring = ZZ
    for a, n, base in specs:
        if n != INF and n < 0:
            raise ValueError("negative Pochhammer length is not supported")
        if n == INF and (base.q < 1 or base.z):
            raise DivergentError(f"infinite product with base {base} has no formal q-expansion")
        ring = _join(ring, a.ring, base.ring)
        for c, e in _factors(a, n, base, 0):
            if e <= 0:
                nonpos.append((c, e))
                shift += e
    work = trunc - shift
    out = QSeries.one(work, ring)
    for a, n, base in specs:
        for c, e in _factors(a, n, base, work):
            if 0 < e <= work:
                out = out.mul_binomial(c, e)
    for c, e in nonpos:
        out = out.mul_binomial(c, e)
    return out.truncate(trunc) if out.trunc > trunc else out


def _join(*rings):
    from qrank.coeff_rings import join

    r = rings[0]
    for s in rings[1:]:
        r = join(r, s)
    return r


def pochhammer(a: ParamSpec, n, base: ParamSpec = Q, trunc: int = 20) -> QSeries:
    """(a; base)_n as a series; n may be ``math.inf``."""
    return binomial_product([(a, n, base)], trunc)


def divide_pochhammer(f: QSeries, a: ParamSpec, n: int, base: ParamSpec = Q) -> QSeries:
    """f / (a; base)_n for finite n, each factor expanded by QSeries.div_binomial."""
    for k in range(n):
        g = a * base**k
        f = f.div_binomial(g.coeff(), g.q)
    return f


# ---------------------------------------------------------------------------
# Theta functions


def _sum_range(e: int, k: int, trunc: int):
    """n-range for sum (-1)^n z^n q^(k n(n-1)/2 + e n) with exponent <= trunc."""

    def h(n):
        return e * n + k * n * (n - 1) // 2

    # k n^2 + (2e - k) n - 2 trunc <= 0
    a, b, c = k, 2 * e - k, -2 * trunc
    disc = b * b - 4 * a * c
    if disc < 0:
        vert = round(-b / (2 * a))
        lo = hi = vert
    else:
        r = math.sqrt(disc)
        lo = math.floor((-b - r) / (2 * a))
        hi = math.ceil((-b + r) / (2 * a))
    lo -= 2
    hi += 2
    for n0, n1 in ((lo, lo + 1), (hi, hi - 1)):
        if not (h(n0) > trunc and h(n1) > trunc and h(n0) >= h(n1)):
            raise BoundError(f"theta sum range [{lo}, {hi}] does not bracket exponents <= {trunc}")
    return lo, hi, h


def jtheta(arg: ParamSpec, base: ParamSpec = Q, form: str = "product", trunc: int = 20) -> QSeries:
    """j(arg; base) = (arg)_inf (base/arg)_inf (base)_inf = sum (-1)^n arg^n base^(n(n-1)/2)."""
    if base.z or base.q < 1:
        raise DivergentError(f"theta base {base} must be a positive q-power")
    if form == "product":
        return binomial_product([(arg, INF, base), (arg.inverse() * base, INF, base), (base, INF, base)], trunc)
    if form != "sum":
        raise ValueError(f"unknown theta form {form!r}")
    lo, hi, h = _sum_range(arg.q, base.q, trunc)
    terms = {}
    for n in range(lo, hi + 1):
        ex = h(n)
        if ex > trunc:
            continue
        t = arg ** n * base ** (n * (n - 1) // 2)
        c = t.coeff()
        if n % 2:
            c = -c
        terms[ex] = terms.get(ex, 0) + c
    ring = _join(arg.ring, base.ring)
    return QSeries.from_dict(terms, trunc, ring)


# ---------------------------------------------------------------------------
# J-products


@lru_cache(maxsize=None)
def J(b: int, a: int | None = None, trunc: int = 20) -> QSeries:
    """J_{b,a} = j(q^a; q^b) or, with a omitted, J_b = (q^b; q^b)_inf."""
    if a is None:
        return pochhammer(qpow(b), INF, qpow(b), trunc)
    if not 0 < a < b:
        raise ValueError(f"J_{{{b},{a}}} needs 0 < a < b")
    return jtheta(qpow(a), qpow(b), "product", trunc)


@dataclass(frozen=True)
class ProductSpec:
    """scalar * q**qshift * prod J_{b,a}**e * prod J_b**e."""

    theta: tuple = ()  # ((b, a, e), ...)
    eta: tuple = ()  # ((b, e), ...)
    qshift: int = 0
    scalar: object = 1

    def __post_init__(self):
        for b, a, e in self.theta:
            if not 0 < a < b or not e:
                raise ValueError(f"bad theta factor J_{{{b},{a}}}^{e}")
        for b, e in self.eta:
            if b < 1 or not e:
                raise ValueError(f"bad eta factor J_{b}^{e}")


def product_build(spec: ProductSpec, trunc: int) -> QSeries:
    """Expand a J-product exactly through q^trunc; negative powers via series_inv."""
    work = trunc - spec.qshift
    num = QSeries.one(work)
    den = None
    for b, a, e in spec.theta:
        f = J(b, a, work)
        for _ in range(abs(e)):
            if e > 0:
                num = num * f
            else:
                den = f if den is None else den * f
    for b, e in spec.eta:
        f = J(b, None, work)
        for _ in range(abs(e)):
            if e > 0:
                num = num * f
            else:
                den = f if den is None else den * f
    out = num if den is None else num * series_inv(den)
    out = out.shift(spec.qshift)
    if spec.scalar != 1:
        out = out.scale(spec.scalar)
    return out


def jprod(trunc: int, *factors, eta=(), qshift: int = 0, scalar=1) -> QSeries:
    """Shorthand: jprod(N, (b, a, e), ..., eta=((b, e), ...))."""
    return product_build(ProductSpec(tuple(factors), tuple(eta), qshift, scalar), trunc)


E_SPEC = ProductSpec(eta=((1, 1),))
THETA4_SPEC = ProductSpec(eta=((1, 2), (2, -1)))
DETD_ETA_SPEC = ProductSpec(eta=((10, 3), (1, 6), (5, -2), (2, -1)))


def E(trunc: int) -> QSeries:
    """(q; q)_inf."""
    return product_build(E_SPEC, trunc)


def theta4(trunc: int) -> QSeries:
    """sum (-1)^n q^(n^2) as the product J_1^2 / J_2."""
    return product_build(THETA4_SPEC, trunc)


def theta4_sum(trunc: int) -> QSeries:
    """The bilateral sum form of theta_4, built term by term."""
    d = {0: 1}
    n = 1
    while n * n <= trunc:
        d[n * n] = 2 * (-1) ** n
        n += 1
    return QSeries.from_dict(d, trunc, ZZ)


def pentagonal_E(trunc: int) -> QSeries:
    """Euler's pentagonal expansion of (q; q)_inf, independent of the product code."""
    d = {}
    n = 0
    while True:
        hit = False
        for m in ((n,) if n == 0 else (n, -n)):
            e = m * (3 * m - 1) // 2
            if e <= trunc:
                d[e] = (-1) ** (m % 2)
                hit = True
        if not hit:
            break
        n += 1
    return QSeries.from_dict(d, trunc, ZZ)


# ---------------------------------------------------------------------------
# Named dissection identities


def _zeta_sum(p, *ks):
    out = CycloNum.from_scalar(p, 0)
    for k in ks:
        out = out + CycloNum.zeta(p, k)
    return out


def zq_product(p: int, k: int, trunc: int, form: str = "product") -> QSeries:
    """(zeta^k q)_inf (zeta^-k q)_inf (q)_inf with zeta = exp(2 pi i/p).

    The sum form uses j(zeta^k; q) / (1 - zeta^k), sharing no code with the
    product form.
    """
    u = zeta(p, k)
    if form == "product":
        return binomial_product([(u * Q, INF, Q), (u.inverse() * Q, INF, Q), (Q, INF, Q)], trunc)
    j = jtheta(u, Q, "sum", trunc)
    return j.scale((1 - CycloNum.zeta(p, k)).inverse())


def dissection_lemma_lhs(name: str, trunc: int) -> QSeries:
    if name == "5diss1":
        return zq_product(5, 1, trunc)
    if name == "5diss2":
        return pentagonal_E(trunc)
    if name == "5diss3":
        return theta4_sum(trunc)
    if name == "zth7dis":
        return zq_product(7, 1, trunc)
    if name == "jsimp_a":
        return jprod(trunc, (10, 1, 1), (10, 4, 1), eta=((10, -2),))
    if name == "jsimp_b":
        return jprod(trunc, (10, 2, 1), (10, 3, 1), eta=((10, -2),))
    raise KeyError(f"unknown dissection lemma {name!r}")


def dissection_lemma_rhs(name: str, trunc: int) -> QSeries:
    """Right-hand side of a named theta-product dissection, built from J-products."""
    if name == "5diss1":
        z = CycloNum.zeta(5)
        return jprod(trunc, (25, 10, 1)) + jprod(trunc, (25, 5, 1), qshift=1).scale(z**2 + z**3)
    if name == "5diss2":
        return (
            jprod(trunc, (25, 10, 1), (25, 5, -1), eta=((25, 1),))
            - jprod(trunc, eta=((25, 1),), qshift=1)
            - jprod(trunc, (25, 5, 1), (25, 10, -1), eta=((25, 1),), qshift=2)
        )
    if name == "5diss3":
        return (
            jprod(trunc, (50, 25, 1))
            - jprod(trunc, (50, 15, 1), qshift=1, scalar=2)
            + jprod(trunc, (50, 5, 1), qshift=4, scalar=2)
        )
    if name == "zth7dis":
        return (
            jprod(trunc, (49, 21, 1)).change_ring(cyclo(7))
            + jprod(trunc, (49, 14, 1), qshift=1).scale(_zeta_sum(7, 2, 3, 4, 5))
            - jprod(trunc, (49, 7, 1), qshift=3).scale(_zeta_sum(7, 3, 4))
        )
    if name == "jsimp_a":
        return jprod(trunc, (5, 1, 1), eta=((5, -1),))
    if name == "jsimp_b":
        return jprod(trunc, (5, 3, 1), eta=((5, -1),))
    raise KeyError(f"unknown dissection lemma {name!r}")


DISSECTION_LEMMAS = ("5diss1", "5diss2", "5diss3", "zth7dis", "jsimp_a", "jsimp_b")
