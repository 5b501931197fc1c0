"""Truncated Laurent series in q over the rings of :mod:`qrank.coeff_rings`.

A :class:`QSeries` knows its coefficients for exponents ``lower..trunc``; it is
exactly zero below ``lower`` and unknown above ``trunc``.  Every operation
propagates ``trunc`` conservatively so that a comparison can never look at a
coefficient that the inputs did not determine.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from qrank.coeff_rings import (
    QQ,
    ZZ,
    CycloNum,
    LaurentPoly,
    Ring,
    clean,
    is_integral,
    join,
    ring_of,
)
from qrank.errors import NonGenericError, NotInvertibleError, PrecisionError
from qrank.results import CheckResult, Mismatch

# ---------------------------------------------------------------------------
# Kronecker-substitution convolution of flattened integer arrays


def _kron_conv(a, shape_a, b, shape_b):
    """N-dimensional integer convolution via one big-integer product.

    ``a`` and ``b`` are flat row-major lists of ints.  Returns the flat result
    of shape ``tuple(x + y - 1)``.
    """
    shape = tuple(x + y - 1 for x, y in zip(shape_a, shape_b))
    strides = []
    s = 1
    for d in reversed(shape):
        strides.append(s)
        s *= d
    strides.reverse()
    size = s

    def place(flat, shp):
        # map source flat index -> result flat index
        out = {}
        idx = [0] * len(shp)
        for i, x in enumerate(flat):
            if x:
                rem = i
                pos = 0
                for d in range(len(shp) - 1, -1, -1):
                    idx[d] = rem % shp[d]
                    rem //= shp[d]
                for d in range(len(shp)):
                    pos += idx[d] * strides[d]
                out[pos] = x
        return out

    pa = place(a, shape_a)
    pb = place(b, shape_b)
    if not pa or not pb:
        return [0] * size
    ma = max(abs(x) for x in pa.values())
    mb = max(abs(x) for x in pb.values())
    bound = ma * mb * min(len(pa), len(pb))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * nbytes

    def pack(p):
        pos = bytearray(size * nbytes)
        neg = bytearray(size * nbytes)
        for i, x in p.items():
            if x > 0:
                pos[i * nbytes:(i + 1) * nbytes] = x.to_bytes(nbytes, "little")
            else:
                neg[i * nbytes:(i + 1) * nbytes] = (-x).to_bytes(nbytes, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    prod = pack(pa) * pack(pb)
    half = 1 << (bits - 1)
    bias = int.from_bytes(half.to_bytes(nbytes, "little") * size, "little")
    raw = (prod + bias).to_bytes(size * nbytes + 1, "little")
    frm = int.from_bytes
    return [frm(raw[i * nbytes:(i + 1) * nbytes], "little") - half for i in range(size)]


def _common_den(values):
    d = 1
    for x in values:
        if type(x) is Fraction:
            d = lcm(d, x.denominator)
    return d


def _scale(values, d):
    if d == 1:
        return [int(x) for x in values]
    return [int(x * d) for x in values]


def _to_cells(coeffs, ring: Ring, zlo: int, zw: int):
    """Flatten coefficients into integer cells plus a common denominator."""
    if ring.kind in ("ZZ", "QQ"):
        flat = list(coeffs)
        shape = (len(coeffs),)
    elif ring.kind == "cyclo":
        w = ring.p - 1
        flat = []
        for x in coeffs:
            if isinstance(x, CycloNum):
                flat.extend(x.c)
            else:
                flat.append(x)
                flat.extend([0] * (w - 1))
        shape = (len(coeffs), w)
    else:
        base = ring.base
        w = base.p - 1 if base.kind == "cyclo" else 1
        flat = [0] * (len(coeffs) * zw * w)
        for i, x in enumerate(coeffs):
            items = x.c.items() if isinstance(x, LaurentPoly) else ([(0, x)] if x else [])
            for e, y in items:
                off = (i * zw + (e - zlo)) * w
                if isinstance(y, CycloNum):
                    flat[off:off + w] = y.c
                else:
                    flat[off] = y
        shape = (len(coeffs), zw, w) if w > 1 else (len(coeffs), zw)
    d = _common_den(flat)
    return _scale(flat, d), shape, d


def _from_cells(flat, shape, d, ring: Ring, zlo: int):
    n = shape[0]

    def fix(x):
        return clean(Fraction(x, d)) if d != 1 else x

    if ring.kind in ("ZZ", "QQ"):
        return [fix(x) for x in flat]
    if ring.kind == "cyclo":
        w = shape[1]
        p = ring.p
        out = []
        for i in range(n):
            row = flat[i * w:(i + 1) * w]
            if any(row):
                out.append(CycloNum(p, [fix(x) for x in row]))
            else:
                out.append(0)
        return out
    zw = shape[1]
    w = shape[2] if len(shape) == 3 else 1
    p = ring.base.p if w > 1 else None
    out = []
    for i in range(n):
        c = {}
        for j in range(zw):
            off = (i * zw + j) * w
            if w == 1:
                x = flat[off]
                if x:
                    c[j + zlo] = fix(x)
            else:
                row = flat[off:off + w]
                if any(row):
                    y = CycloNum(p, [fix(x) for x in row])
                    if y:
                        c[j + zlo] = y
        out.append(LaurentPoly._raw(c) if c else 0)
    return out


def _zrange(coeffs):
    lo, hi = None, None
    for x in coeffs:
        if isinstance(x, LaurentPoly):
            if x.c:
                a, b = min(x.c), max(x.c)
                lo = a if lo is None else min(lo, a)
                hi = b if hi is None else max(hi, b)
        elif x:
            lo = 0 if lo is None else min(lo, 0)
            hi = 0 if hi is None else max(hi, 0)
    if lo is None:
        return 0, 1
    return lo, hi - lo + 1


def conv_fast(a, b, ring: Ring, length: int):
    """Truncated Cauchy product of coefficient lists, first ``length`` terms."""
    a = list(a[:length])
    b = list(b[:length])
    if not a or not b:
        return [0] * length
    if ring.kind == "laurent":
        alo, aw = _zrange(a)
        blo, bw = _zrange(b)
        fa, sa, da = _to_cells(a, ring, alo, aw)
        fb, sb, db = _to_cells(b, ring, blo, bw)
        zlo = alo + blo
    else:
        fa, sa, da = _to_cells(a, ring, 0, 1)
        fb, sb, db = _to_cells(b, ring, 0, 1)
        zlo = 0
    flat = _kron_conv(fa, sa, fb, sb)
    shape = tuple(x + y - 1 for x, y in zip(sa, sb))
    out = _from_cells(flat, shape, da * db, ring, zlo)
    out = out[:length]
    return out + [0] * (length - len(out))


def conv_generic(a, b, length: int):
    """Schoolbook truncated Cauchy product; the reference for :func:`conv_fast`."""
    out = [0] * length
    for i, x in enumerate(a[:length]):
        if not x:
            continue
        for j in range(min(len(b), length - i)):
            y = b[j]
            if y:
                out[i + j] = out[i + j] + x * y
    return [clean(x) if isinstance(x, (int, Fraction)) else x for x in out]


# ---------------------------------------------------------------------------


def _infer_ring(coeffs) -> Ring:
    r = ZZ
    seen = set()
    for x in coeffs:
        t = type(x)
        if t is int:
            continue
        if t is Fraction and x.denominator == 1:
            continue
        key = (t, getattr(x, "p", None))
        if key in seen and t is not LaurentPoly:
            continue
        seen.add(key)
        r = join(r, ring_of(x))
    return r


class QSeries:
    """Laurent series sum_{n=lower}^{trunc} c_n q^n + O(q^(trunc+1)).

    Values are immutable.  ``coeffs[i]`` is the coefficient of q^(lower+i);
    leading zeros are stripped on construction so ``lower`` is the true order
    whenever any known coefficient is nonzero.
    """

    __slots__ = ("ring", "lower", "trunc", "coeffs")

    def __init__(self, coeffs, lower: int = 0, trunc: int | None = None, ring: Ring | None = None):
        coeffs = list(coeffs)
        if trunc is None:
            trunc = lower + len(coeffs) - 1
        n = trunc - lower + 1
        if n <= 0:
            raise ValueError("series needs at least one known coefficient (lower <= trunc)")
        if len(coeffs) < n:
            coeffs += [0] * (n - len(coeffs))
        else:
            del coeffs[n:]
        coeffs = [clean(x) if isinstance(x, Fraction) else x for x in coeffs]
        if ring is None:
            ring = _infer_ring(coeffs)
        self._set(ring, lower, trunc, coeffs)

    def _set(self, ring, lower, trunc, coeffs):
        k = 0
        last = len(coeffs) - 1
        while k < last and not coeffs[k]:
            k += 1
        if k:
            coeffs = coeffs[k:]
            lower += k
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def _make(cls, ring, lower, trunc, coeffs):
        obj = object.__new__(cls)
        obj._set(ring, lower, trunc, list(coeffs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, trunc: int, ring: Ring = ZZ, lower: int = 0) -> "QSeries":
        return cls._make(ring, min(lower, trunc), trunc, [0] * (trunc - min(lower, trunc) + 1))

    @classmethod
    def one(cls, trunc: int, ring: Ring = ZZ) -> "QSeries":
        return cls.monomial(1, 0, trunc, ring)

    @classmethod
    def monomial(cls, coef, exp: int, trunc: int, ring: Ring | None = None) -> "QSeries":
        """coef * q**exp known through q**trunc (zero series if exp > trunc)."""
        if ring is None:
            ring = ring_of(coef)
        if exp > trunc:
            return cls.zero(trunc, ring)
        return cls._make(ring, exp, trunc, [coef] + [0] * (trunc - exp))

    @classmethod
    def from_dict(cls, d, trunc: int, ring: Ring | None = None, lower: int | None = None) -> "QSeries":
        """Build from {exponent: coefficient}; exponents above trunc are dropped."""
        keys = [e for e, x in d.items() if e <= trunc and x]
        lo = min(keys) if keys else trunc
        if lower is not None:
            lo = min(lo, lower)
        lo = min(lo, trunc)
        c = [0] * (trunc - lo + 1)
        for e in keys:
            c[e - lo] = d[e]
        if ring is None:
            ring = _infer_ring(c)
        return cls._make(ring, lo, trunc, c)

    # -- access -------------------------------------------------------------

    def __getitem__(self, n: int):
        return self.coeff(n)

    def coeff(self, n: int):
        if n > self.trunc:
            raise PrecisionError(f"coefficient of q^{n} requested but series known only to q^{self.trunc}")
        if n < self.lower:
            return 0
        return self.coeffs[n - self.lower]

    def items(self):
        """(exponent, coefficient) for every stored nonzero coefficient."""
        return [(self.lower + i, x) for i, x in enumerate(self.coeffs) if x]

    def coefficient_list(self, start: int, stop: int):
        """Coefficients of q^start..q^stop inclusive."""
        return [self.coeff(n) for n in range(start, stop + 1)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def order(self):
        """Exponent of the lowest nonzero coefficient, or None if all known ones vanish."""
        return None if self.is_zero() else self.lower

    def __len__(self):
        return len(self.coeffs)

    # -- ring bookkeeping ---------------------------------------------------

    def change_ring(self, ring: Ring) -> "QSeries":
        join(ring, self.ring)
        if not ring.contains(self.ring):
            raise ValueError(f"cannot move series over {self.ring} into {ring}")
        return QSeries._make(ring, self.lower, self.trunc, self.coeffs)

    def map_coeffs(self, fn, ring: Ring | None = None) -> "QSeries":
        c = [fn(x) if x else 0 for x in self.coeffs]
        c = [clean(x) if isinstance(x, Fraction) else x for x in c]
        return QSeries._make(ring or _infer_ring(c), self.lower, self.trunc, c)

    def specialize_z(self, p: int, k: int = 1) -> "QSeries":
        """Substitute z = zeta_p**k in every Laurent coefficient."""
        from qrank.coeff_rings import cyclo

        def f(x):
            if isinstance(x, LaurentPoly):
                return x.specialize(p, k)
            return x

        return self.map_coeffs(f, cyclo(p))

    def evaluate_z(self, value) -> "QSeries":
        """Substitute z = value (a ring element, e.g. 1) in every coefficient."""

        def f(x):
            if isinstance(x, LaurentPoly):
                return x.evaluate(value)
            return x

        return self.map_coeffs(f)

    def assert_integral(self) -> "QSeries":
        """Return self over the integral subring, raising if any denominator survives."""
        for e, x in self.items():
            if not is_integral(x):
                raise ValueError(f"non-integral coefficient {x} at q^{e}")
        return self

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        return QSeries.monomial(other, 0, self.trunc, ring_of(other)) if other else QSeries.zero(self.trunc, self.ring)

    def __add__(self, other):
        if not isinstance(other, (QSeries, int, Fraction, CycloNum, LaurentPoly)):
            return NotImplemented
        other = self._coerce(other)
        ring = join(self.ring, other.ring)
        lo = min(self.lower, other.lower)
        tr = min(self.trunc, other.trunc)
        if lo > tr:
            lo = tr
        c = [0] * (tr - lo + 1)
        for s in (self, other):
            off = s.lower - lo
            for i, x in enumerate(s.coeffs):
                j = off + i
                if j >= len(c):
                    break
                if x:
                    c[j] = c[j] + x if c[j] else x
        return QSeries._make(ring, lo, tr, _clean_list(c))

    __radd__ = __add__

    def __neg__(self):
        return QSeries._make(self.ring, self.lower, self.trunc, [-x if x else 0 for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (QSeries, int, Fraction, CycloNum, LaurentPoly)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        """Multiply every coefficient by the ring element c."""
        ring = join(self.ring, ring_of(c))
        if not c:
            return QSeries.zero(self.trunc, ring, self.lower)
        if c == 1:
            return self.change_ring(ring) if ring != self.ring else self
        out = []
        for x in self.coeffs:
            if x:
                y = x * c
                out.append(clean(y) if isinstance(y, Fraction) else y)
            else:
                out.append(0)
        return QSeries._make(ring, self.lower, self.trunc, out)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, CycloNum, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return series_mul(self, series_inv(other))
        if isinstance(other, (int, Fraction, CycloNum, LaurentPoly)):
            ring = join(self.ring, ring_of(other))
            if ring.kind in ("ZZ",) and other not in (1, -1):
                ring = QQ
            inv = ring.inverse(other) if ring.kind != "ZZ" else other
            return self.scale(inv)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return series_inv(self) ** (-n)
        if n == 0:
            return QSeries.one(self.trunc - self.lower, self.ring)
        out, base = None, self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def shift(self, k: int) -> "QSeries":
        """Multiply by q**k."""
        return QSeries._make(self.ring, self.lower + k, self.trunc + k, self.coeffs)

    def truncate(self, n: int) -> "QSeries":
        """Forget coefficients above q^n (n must not exceed the known order)."""
        if n > self.trunc:
            raise PrecisionError(f"cannot truncate to {n}: known only to {self.trunc}")
        if n < self.lower:
            return QSeries.zero(n, self.ring)
        return QSeries._make(self.ring, self.lower, n, self.coeffs[: n - self.lower + 1])

    def mul_binomial(self, c, e: int) -> "QSeries":
        """Multiply by the exact binomial (1 - c*q^e)."""
        if not c:
            return self
        ring = join(self.ring, ring_of(c))
        if e == 0:
            return self.scale(1 - c) if ring == self.ring else self.change_ring(ring).scale(1 - c)
        src = self.coeffs
        if e > 0:
            out = list(src)
            for m in range(e, len(out)):
                y = src[m - e]
                if y:
                    out[m] = out[m] - c * y
            return QSeries._make(ring, self.lower, self.trunc, _clean_list(out))
        # e < 0: lower drops by |e| and so does relative knowledge of the top
        k = -e
        out = [0] * len(src)
        for i, y in enumerate(src):
            if y:
                out[i] = -c * y
        for i in range(k, len(src)):
            y = src[i - k]
            if y:
                out[i] = out[i] + y
        return QSeries._make(ring, self.lower - k, self.trunc - k, _clean_list(out))

    def div_binomial(self, c, e: int) -> "QSeries":
        """Divide by (1 - c*q^e), expanding 1/(1-u) in the direction it converges.

        Raises NonGenericError when u = c q^e has order 0 and c = 1 (a true
        pole), or when order 0 would need 1/(1 - c) with z-dependent c.
        """
        ring = join(self.ring, ring_of(c))
        if not c:
            return self
        if e > 0:
            out = list(self.coeffs)
            for m in range(e, len(out)):
                y = out[m - e]
                if y:
                    out[m] = out[m] + c * y
            return QSeries._make(ring, self.lower, self.trunc, _clean_list(out))
        if e == 0:
            if isinstance(c, LaurentPoly):
                k = c.constant()
                if k is None:
                    raise NonGenericError(f"1/(1 - {c}) is not a Laurent polynomial in z")
                c = k
            if c == 1:
                raise NonGenericError("pole: denominator 1 - u with u = 1")
            d = 1 - c
            inv = d.inverse() if isinstance(d, CycloNum) else Fraction(1) / d
            return self.scale(clean(inv) if isinstance(inv, Fraction) else inv)
        # 1/(1 - u) = -u^{-1} / (1 - u^{-1}), u^{-1} of positive order
        try:
            ci = ring_of(c).inverse(c) if not isinstance(c, (int, Fraction)) else clean(Fraction(1) / c)
        except NotInvertibleError as exc:
            raise NonGenericError(f"cannot expand 1/(1 - {c} q^{e}): {exc}") from exc
        return self.shift(-e).scale(-ci).div_binomial(ci, -e)

    # -- q-power manipulation ----------------------------------------------

    def substitute_qpower(self, k: int) -> "QSeries":
        return substitute_qpower(self, k)

    def dissect(self, p: int):
        return dissect(self, p)

    def atkin_U(self, p: int, r: int) -> "QSeries":
        return atkin_U(self, p, r)

    # -- display / comparison ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.trunc == other.trunc
            and self.coefficient_list(min(self.lower, other.lower), self.trunc)
            == other.coefficient_list(min(self.lower, other.lower), other.trunc)
        )

    __hash__ = None

    def __repr__(self):
        return f"QSeries({list(self.coeffs)!r}, lower={self.lower}, trunc={self.trunc}, ring={self.ring})"

    def __str__(self):
        return self.render()

    def render(self, max_terms: int | None = None) -> str:
        parts = []
        for e, x in self.items():
            s = str(x)
            mon = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mon:
                parts.append(s if not isinstance(x, (CycloNum, LaurentPoly)) or len(_nz(x)) == 1 else f"({s})")
            elif x == 1:
                parts.append(mon)
            elif x == -1:
                parts.append("-" + mon)
            elif isinstance(x, (CycloNum, LaurentPoly)) and len(_nz(x)) > 1:
                parts.append(f"({s})*{mon}")
            else:
                parts.append(f"{s}*{mon}")
            if max_terms and len(parts) >= max_terms:
                break
        body = parts[0] if parts else "0"
        for t in parts[1:]:
            body += " - " + t[1:] if t.startswith("-") else " + " + t
        return f"{body} + O(q^{self.trunc + 1})"


def _nz(x):
    if isinstance(x, CycloNum):
        return [y for y in x.c if y]
    return list(x.c)


def _clean_list(c):
    return [clean(x) if type(x) is Fraction else x for x in c]


# ---------------------------------------------------------------------------
# Spec-named operations


def series_mul(f: QSeries, g: QSeries, fast: bool = True) -> QSeries:
    """Cauchy product; trunc = min(f.trunc + g.lower, g.trunc + f.lower)."""
    ring = join(f.ring, g.ring)
    lower = f.lower + g.lower
    trunc = min(f.trunc + g.lower, g.trunc + f.lower)
    n = trunc - lower + 1
    if fast:
        c = conv_fast(f.coeffs, g.coeffs, ring, n)
    else:
        c = conv_generic(f.coeffs, g.coeffs, n)
    return QSeries._make(ring, lower, trunc, c)


def series_inv(f: QSeries) -> QSeries:
    """Multiplicative inverse, preserving the relative precision of f.

    The lowest nonzero coefficient must be a unit of f's ring (so in ZZ it
    must be +-1).
    """
    if f.is_zero():
        raise NotInvertibleError("inverse of a series with no known nonzero coefficient")
    lead = f.coeffs[0]
    ring = f.ring
    if not ring.is_unit(lead):
        raise NotInvertibleError(f"leading coefficient {lead} is not a unit in {ring}")
    a_inv = ring.inverse(lead)
    n = f.trunc - f.lower + 1
    # u = f / (lead q^lower), constant term 1; Newton iteration g <- g(2 - u g)
    u = [clean(x * a_inv) if x else 0 for x in f.coeffs]
    g = [1]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        ug = conv_fast(u, g, ring, prec)
        corr = [(-x if x else 0) for x in ug]
        corr[0] = corr[0] + 2
        g = conv_fast(g, corr, ring, prec)
    g = [clean(x * a_inv) if x else 0 for x in g]
    return QSeries._make(ring, -f.lower, f.trunc - 2 * f.lower, g)


def substitute_qpower(f: QSeries, k: int) -> QSeries:
    """q -> q^k; intermediate exponents are known zeros, so trunc = k*trunc + k - 1."""
    if k < 1:
        raise ValueError("q-power substitution needs k >= 1")
    if k == 1:
        return f
    n = len(f.coeffs)
    c = [0] * ((n - 1) * k + 1 + (k - 1))
    for i, x in enumerate(f.coeffs):
        c[i * k] = x
    return QSeries._make(f.ring, f.lower * k, f.trunc * k + k - 1, c)


def _floordiv(a, b):
    return a // b


def dissect(f: QSeries, p: int):
    """[F_0, ..., F_{p-1}] with f(q) = sum_r q^r F_r(q^p)."""
    if p < 1:
        raise ValueError("dissection modulus must be positive")
    return [atkin_U(f, p, r) for r in range(p)]


def reassemble(parts) -> QSeries:
    """Inverse of :func:`dissect`."""
    p = len(parts)
    out = None
    for r, F in enumerate(parts):
        term = substitute_qpower(F, p).shift(r)
        out = term if out is None else out + term
    return out


def atkin_U(f: QSeries, p: int, r: int) -> QSeries:
    """U_{p,r}: sum_n a(pn + r) q^n."""
    if not 0 <= r < p:
        raise ValueError(f"residue {r} out of range for modulus {p}")
    lo = -((r - f.lower) // p)  # ceil((lower - r)/p)
    tr = _floordiv(f.trunc - r, p)
    if lo > tr:
        return QSeries.zero(tr, f.ring)
    c = [f.coeffs[p * n + r - f.lower] for n in range(lo, tr + 1)]
    return QSeries._make(f.ring, lo, tr, c)


def u_star(f: QSeries, p: int, m: int) -> QSeries:
    """U*_{p,m}: keep only exponents congruent to m mod p, in place."""
    m %= p
    c = [x if (f.lower + i - m) % p == 0 else 0 for i, x in enumerate(f.coeffs)]
    return QSeries._make(f.ring, f.lower, f.trunc, c)


def a_op(f: QSeries, p: int, m: int) -> QSeries:
    """A_{p,m}: sum a(n) q^((n - m)/p); every nonzero exponent must be = m mod p."""
    for e, _ in f.items():
        if (e - m) % p:
            raise ValueError(f"A_{{{p},{m}}} applied to a series with a term at q^{e}")
    lo = -((m - f.lower) // p)
    tr = _floordiv(f.trunc - m, p)
    if lo > tr:
        return QSeries.zero(tr, f.ring)
    c = [f.coeffs[p * n + m - f.lower] for n in range(lo, tr + 1)]
    return QSeries._make(f.ring, lo, tr, c)


def series_equal(f: QSeries, g: QSeries, up_to: int, name: str = "series_equal") -> CheckResult:
    """Exact comparison of all coefficients with exponent <= up_to."""
    if up_to > f.trunc or up_to > g.trunc:
        raise PrecisionError(
            f"comparison to q^{up_to} requested but sides are known to q^{f.trunc} and q^{g.trunc}"
        )
    start = min(f.lower, g.lower)
    for n in range(start, up_to + 1):
        a, b = f.coeff(n), g.coeff(n)
        if a != b:
            return CheckResult(name, "FAIL", up_to, Mismatch(n, a, b))
    return CheckResult(name, "PASS", up_to)


__all__ = [
    "QSeries", "series_mul", "series_inv", "substitute_qpower", "dissect", "reassemble",
    "atkin_U", "u_star", "a_op", "series_equal", "conv_fast", "conv_generic",
]
