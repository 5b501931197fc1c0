"""Exact coefficient rings: integers, rationals, Q(zeta_p) and Laurent polynomials in z.

Elements are plain Python objects that interoperate through operator
overloading.  ``int`` and ``Fraction`` embed into :class:`CycloNum`, and all of
them embed into :class:`LaurentPoly`, so a series over Q(zeta_5) may freely hold
``int`` coefficients.  :class:`Ring` tags record which ring a series lives in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from qrank.errors import NotInvertibleError, RingMismatchError

Scalar = (int, Fraction)


def _clean(x):
    """Collapse integral Fractions to int so integer work stays on the fast path."""
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


# ---------------------------------------------------------------------------
# Polynomial helpers over Q (lists, lowest degree first)


def _ptrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a, b):
    a = [Fraction(x) for x in _ptrim(a)]
    b = _ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, bc in enumerate(b):
            a[i + shift] -= f * bc
        a = _ptrim(a)
    return _ptrim(q), a


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([x - y for x, y in zip(a, b)])


# ---------------------------------------------------------------------------


class CycloNum:
    """Element of Q(zeta_p), p an odd prime, stored as p-1 reduced coordinates.

    ``c[i]`` is the coefficient of ``zeta**i`` for ``0 <= i <= p-2``; the
    relation ``zeta**(p-1) = -(1 + zeta + ... + zeta**(p-2))`` keeps the
    representation unique, so equality is coordinate equality.
    """

    __slots__ = ("p", "c")

    def __init__(self, p: int, coeffs=()):
        if p < 3 or not _is_prime(p):
            raise ValueError(f"cyclotomic order must be an odd prime, got {p}")
        self.p = p
        coeffs = list(coeffs)
        if len(coeffs) > p - 1:
            # fold modulo x^p - 1, then eliminate the x^(p-1) coordinate
            v = [0] * p
            for i, x in enumerate(coeffs):
                v[i % p] += x
            top = v[p - 1]
            coeffs = [x - top for x in v[: p - 1]] if top else v[: p - 1]
        else:
            coeffs += [0] * (p - 1 - len(coeffs))
        self.c = tuple(_clean(x) for x in coeffs)

    @classmethod
    def _raw(cls, p, c):
        obj = object.__new__(cls)
        obj.p = p
        obj.c = c
        return obj

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> "CycloNum":
        """The root of unity zeta_p**k."""
        v = [0] * p
        v[k % p] = 1
        return cls(p, v)

    @classmethod
    def from_scalar(cls, p: int, s) -> "CycloNum":
        return cls(p, [s])

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return any(self.c)

    def is_scalar(self) -> bool:
        return not any(self.c[1:])

    def is_integral(self) -> bool:
        """True when all coordinates are integers, i.e. the element lies in Z[zeta]."""
        return all(type(x) is int for x in self.c)

    def monomial(self):
        """Return (coefficient, k) when self == coefficient * zeta**k, else None."""
        nz = [i for i, x in enumerate(self.c) if x]
        if len(nz) == 1:
            return self.c[nz[0]], nz[0]
        if len(nz) == self.p - 1 and len(set(self.c)) == 1:
            # -a*(1 + ... + zeta^(p-2)) = a*zeta^(p-1)
            return -self.c[0], self.p - 1
        return None

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if other.p != self.p:
            raise RingMismatchError(f"Q(zeta_{self.p}) vs Q(zeta_{other.p})")

    def __add__(self, other):
        if isinstance(other, CycloNum):
            self._check(other)
            return CycloNum._raw(self.p, tuple(_clean(a + b) for a, b in zip(self.c, other.c)))
        if isinstance(other, Scalar):
            return CycloNum._raw(self.p, (_clean(self.c[0] + other),) + self.c[1:])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.p, tuple(-a for a in self.c))

    def __sub__(self, other):
        if isinstance(other, (CycloNum, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Scalar):
            return (-self) + other
        return NotImplemented

    def rotate(self, k: int) -> "CycloNum":
        """Multiply by zeta**k."""
        p = self.p
        k %= p
        if not k:
            return self
        v = [0] * p
        for i, x in enumerate(self.c):
            v[(i + k) % p] = x
        top = v[p - 1]
        if top:
            return CycloNum._raw(p, tuple(_clean(x - top) for x in v[: p - 1]))
        return CycloNum._raw(p, tuple(v[: p - 1]))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if other == 1:
                return self
            return CycloNum._raw(self.p, tuple(_clean(a * other) for a in self.c))
        if not isinstance(other, CycloNum):
            return NotImplemented
        self._check(other)
        p = self.p
        for a, b in ((self, other), (other, self)):
            m = b.monomial()
            if m is not None:
                coef, k = m
                r = a.rotate(k)
                return r if coef == 1 else r * coef
        v = [0] * p
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    if y:
                        v[(i + j) % p] += x * y
        top = v[p - 1]
        return CycloNum._raw(p, tuple(_clean(x - top) for x in v[: p - 1]))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Inverse via the extended Euclidean algorithm against Phi_p over Q."""
        if not self:
            raise NotInvertibleError("inverse of zero in Q(zeta_%d)" % self.p)
        m = self.monomial()
        if m is not None:
            coef, k = m
            return CycloNum.zeta(self.p, -k) * (Fraction(1) / coef)
        phi = [1] * self.p
        r0, r1 = phi, _ptrim(self.c)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant; s1 * self == r1 (mod Phi_p)
        const = Fraction(r1[0])
        return CycloNum(self.p, [x / const for x in s1])

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            if other == 0:
                raise NotInvertibleError("division by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, CycloNum):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Scalar):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        m = self.monomial()
        if m is not None:
            coef, k = m
            return CycloNum.zeta(self.p, k * n) * (coef**n)
        out = CycloNum.from_scalar(self.p, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def galois(self, k: int) -> "CycloNum":
        """Image under the automorphism zeta -> zeta**k (gcd(k, p) = 1)."""
        if k % self.p == 0:
            raise ValueError("not an automorphism")
        v = [0] * self.p
        for i, x in enumerate(self.c):
            v[(i * k) % self.p] += x
        return CycloNum(self.p, v)

    def conj(self) -> "CycloNum":
        return self.galois(-1)

    def norm(self):
        """Field norm to Q: product of all Galois conjugates."""
        out = CycloNum.from_scalar(self.p, 1)
        for k in range(1, self.p):
            out = out * self.galois(k)
        assert out.is_scalar()
        return out.c[0]

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.p == other.p and self.c == other.c
        if isinstance(other, Scalar):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if self.is_scalar():
            return hash(self.c[0])
        return hash((self.p, self.c))

    def __repr__(self):
        return f"CycloNum({self.p}, {list(self.c)!r})"

    def __str__(self):
        terms = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            mon = "" if i == 0 else (f"zeta{self.p}" if i == 1 else f"zeta{self.p}^{i}")
            terms.append(_term(x, mon))
        return _join(terms)


def _term(coef, mon: str) -> str:
    if not mon:
        return str(coef)
    if coef == 1:
        return mon
    if coef == -1:
        return "-" + mon
    s = str(coef)
    if isinstance(coef, CycloNum) and len([x for x in coef.c if x]) > 1:
        s = f"({s})"
    return f"{s}*{mon}"


def _join(terms) -> str:
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite-support Laurent polynomial in a formal variable z.

    Coefficients are ``int``, ``Fraction`` or :class:`CycloNum`; zero
    coefficients are never stored, so equality is dict equality.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, x in dict(coeffs).items():
                x = _clean(x)
                if x:
                    c[int(e)] = x
        self.c = c

    @classmethod
    def _raw(cls, c):
        obj = object.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def z(cls, k: int = 1, coef=1) -> "LaurentPoly":
        return cls({k: coef})

    def __bool__(self):
        return bool(self.c)

    def min_exp(self):
        return min(self.c) if self.c else None

    def max_exp(self):
        return max(self.c) if self.c else None

    def constant(self):
        """The coefficient when self has no z-dependence, else None."""
        if not self.c:
            return 0
        if len(self.c) == 1 and 0 in self.c:
            return self.c[0]
        return None

    def monomial(self):
        """Return (coefficient, exponent) when self is a single term, else None."""
        if len(self.c) == 1:
            (e, x), = self.c.items()
            return x, e
        return None

    def is_integral(self) -> bool:
        return all(type(x) is int or (isinstance(x, CycloNum) and x.is_integral()) for x in self.c.values())

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            if len(other.c) > len(self.c):
                self, other = other, self
            c = dict(self.c)
            for e, x in other.c.items():
                y = c.get(e)
                if y is None:
                    c[e] = x
                else:
                    s = y + x
                    if s:
                        c[e] = _clean(s)
                    else:
                        del c[e]
            return LaurentPoly._raw(c)
        if isinstance(other, (int, Fraction, CycloNum)):
            if not other:
                return self
            c = dict(self.c)
            s = c.get(0, 0) + other
            if s:
                c[0] = _clean(s)
            else:
                c.pop(0, None)
            return LaurentPoly._raw(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -x for e, x in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, (LaurentPoly, int, Fraction, CycloNum)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return (-self) + other
        return NotImplemented

    def shift(self, k: int, coef=1) -> "LaurentPoly":
        """Multiply by coef * z**k."""
        if coef == 1:
            return LaurentPoly._raw({e + k: x for e, x in self.c.items()})
        c = {}
        for e, x in self.c.items():
            y = x * coef
            if y:
                c[e + k] = _clean(y)
        return LaurentPoly._raw(c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            if not other:
                return LaurentPoly._raw({})
            return self.shift(0, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self.c) < len(other.c):
            self, other = other, self
        if len(other.c) == 1:
            (e, x), = other.c.items()
            return self.shift(e, x)
        c = {}
        for e1, x1 in self.c.items():
            for e2, x2 in other.c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + x1 * x2
        return LaurentPoly({e: x for e, x in c.items()})

    __rmul__ = __mul__

    def inverse(self) -> "LaurentPoly":
        m = self.monomial()
        if m is None:
            raise NotInvertibleError(f"{self} is not a unit in the Laurent ring")
        x, e = m
        if isinstance(x, CycloNum):
            inv = x.inverse()
        else:
            inv = Fraction(1) / x
        return LaurentPoly({-e: inv})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        if isinstance(other, CycloNum):
            return self * other.inverse()
        if isinstance(other, LaurentPoly):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, value):
        """Substitute z = value, where value is a ring element invertible if needed."""
        out = 0
        for e, x in self.c.items():
            if e < 0 and isinstance(value, (int, Fraction)):
                # int ** negative int would produce a float
                if value == 0:
                    raise NotInvertibleError("z = 0 in a polynomial with negative powers")
                out = out + x * Fraction(1, 1) / Fraction(value) ** (-e)
            else:
                out = out + x * (value**e)
        return _clean(out) if isinstance(out, Scalar) else out

    def specialize(self, p: int, k: int = 1) -> CycloNum:
        """Evaluate at z = zeta_p**k, fully reduced in Q(zeta_p)."""
        v = [0] * p
        extra = []
        for e, x in self.c.items():
            if isinstance(x, CycloNum):
                extra.append(x.rotate(e * k))
            else:
                v[(e * k) % p] += x
        out = CycloNum(p, v)
        for y in extra:
            out = out + y
        return out

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly({e: fn(x) for e, x in self.c.items()})

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction, CycloNum)):
            if not other:
                return not self.c
            return len(self.c) == 1 and self.c.get(0) == other
        return NotImplemented

    def __hash__(self):
        k = self.constant()
        if k is not None:
            return hash(k)
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.c.items()))!r})"

    def __str__(self):
        terms = []
        for e in sorted(self.c):
            x = self.c[e]
            mon = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            terms.append(_term(x, mon))
        return _join(terms)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ring:
    """Tag for a coefficient ring: ZZ, QQ, cyclo(p) (= Q(zeta_p)) or laurent(base)."""

    kind: str
    p: int | None = None
    base: "Ring | None" = None

    def __str__(self):
        if self.kind == "cyclo":
            return f"Q(zeta_{self.p})"
        if self.kind == "laurent":
            return f"{self.base}[z, 1/z]"
        return self.kind

    def contains(self, other: "Ring") -> bool:
        return join(self, other) == self

    def is_unit(self, x) -> bool:
        if not x:
            return False
        if self.kind == "ZZ":
            return x in (1, -1)
        if self.kind in ("QQ", "cyclo"):
            return True
        if isinstance(x, LaurentPoly):
            m = x.monomial()
            return m is not None and self.base.is_unit(m[0])
        return self.base.is_unit(x)

    def inverse(self, x):
        if not self.is_unit(x):
            raise NotInvertibleError(f"{x} is not a unit in {self}")
        if isinstance(x, (CycloNum, LaurentPoly)):
            return x.inverse()
        return _clean(Fraction(1) / x)


ZZ = Ring("ZZ")
QQ = Ring("QQ")


def cyclo(p: int) -> Ring:
    if p < 3 or not _is_prime(p):
        raise ValueError(f"cyclotomic order must be an odd prime, got {p}")
    return Ring("cyclo", p)


def laurent(base: Ring = ZZ) -> Ring:
    if base.kind == "laurent":
        return base
    return Ring("laurent", base=base)


def join(a: Ring, b: Ring) -> Ring:
    """Smallest ring containing both, or RingMismatchError."""
    if a == b:
        return a
    if a.kind == "laurent" or b.kind == "laurent":
        ab = a.base if a.kind == "laurent" else a
        bb = b.base if b.kind == "laurent" else b
        return laurent(join(ab, bb))
    if a.kind == "cyclo" and b.kind == "cyclo":
        raise RingMismatchError(f"{a} vs {b}")
    if a.kind == "cyclo":
        return a
    if b.kind == "cyclo":
        return b
    return QQ  # {ZZ, QQ}


def ring_of(x) -> Ring:
    """Smallest tagged ring holding the element x."""
    if type(x) is int or isinstance(x, bool):
        return ZZ
    if isinstance(x, Fraction):
        return ZZ if x.denominator == 1 else QQ
    if isinstance(x, CycloNum):
        return cyclo(x.p)
    if isinstance(x, LaurentPoly):
        r = ZZ
        for y in x.c.values():
            r = join(r, ring_of(y))
        return laurent(r)
    if isinstance(x, int):
        return ZZ
    raise TypeError(f"not a ring element: {x!r}")


def is_integral(x) -> bool:
    """Membership in Z, Z[zeta] or Z[zeta][z, 1/z] as appropriate."""
    if isinstance(x, (CycloNum, LaurentPoly)):
        return x.is_integral()
    return type(_clean(x)) is int


def clean(x):
    return _clean(x)


# Spec-named operations ------------------------------------------------------


def cyc_mul(a: CycloNum, b: CycloNum) -> CycloNum:
    if not (isinstance(a, CycloNum) and isinstance(b, CycloNum)):
        raise RingMismatchError("cyc_mul expects two CycloNums")
    return a * b


def cyc_inv(a: CycloNum) -> CycloNum:
    return a.inverse()


def laurent_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    join(ring_of(f), ring_of(g))
    return f * g


def laurent_specialize(f: LaurentPoly, p: int, k: int = 1) -> CycloNum:
    return f.specialize(p, k)


__all__ = [
    "CycloNum", "LaurentPoly", "Ring", "ZZ", "QQ", "cyclo", "laurent", "join", "ring_of",
    "is_integral", "cyc_mul", "cyc_inv", "laurent_mul", "laurent_specialize",
]
