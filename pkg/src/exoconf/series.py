"""
Truncated multivariate power series in t_1, ..., t_r.

A series is truncated to the box ``{k : k <= bound}`` (componentwise).  The
coefficient of ``t^k`` in a product only involves indices ``<= k``, so every
ring operation is exact inside the box.

Coefficients are Python ints or :class:`~exoconf.poly.BivarPoly`; the two mix
freely.  Storage is sparse: absent multi-indices have coefficient zero.
"""

import itertools

from .poly import BivarPoly


class SeriesError(ValueError):
    pass


def as_multi_index(k, r=None):
    if isinstance(k, int):
        k = (k,)
    k = tuple(int(x) for x in k)
    if not k:
        raise SeriesError("multi-index must have at least one entry")
    if any(x < 0 for x in k):
        raise SeriesError(f"multi-index {k} has a negative entry")
    if r is not None and len(k) != r:
        raise SeriesError(f"multi-index {k} does not have {r} entries")
    return k


def leq(a, b):
    """Componentwise partial order."""
    return all(x <= y for x, y in zip(a, b))


def graded_lex_key(k):
    return (sum(k), k)


def box(bound):
    """All multi-indices ``k <= bound`` in graded-lex order."""
    pts = itertools.product(*(range(b + 1) for b in bound))
    return sorted(pts, key=graded_lex_key)


class TruncatedSeries:
    """Immutable truncated power series.

    >>> f = TruncatedSeries({(1,): 1, (0,): 1}, bound=3)
    >>> (f * f)[2]
    1
    """

    __slots__ = ("r", "bound", "_coeffs")

    def __init__(self, coeffs, bound):
        bound = as_multi_index(bound)
        self.r = len(bound)
        self.bound = bound
        out = {}
        for k, c in dict(coeffs).items():
            k = as_multi_index(k, self.r)
            if not leq(k, bound):
                continue
            if c:
                out[k] = c
        self._coeffs = out

    @classmethod
    def _raw(cls, coeffs, bound):
        obj = cls.__new__(cls)
        obj.r = len(bound)
        obj.bound = bound
        obj._coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c, bound):
        bound = as_multi_index(bound)
        return cls._raw({(0,) * len(bound): c} if c else {}, bound)

    @classmethod
    def one(cls, bound):
        return cls.constant(1, bound)

    @classmethod
    def zero(cls, bound):
        return cls.constant(0, bound)

    def __getitem__(self, k):
        return self._coeffs.get(as_multi_index(k, self.r), 0)

    def items(self):
        """Nonzero ``(k, c)`` pairs in graded-lex order."""
        return sorted(self._coeffs.items(), key=lambda kc: graded_lex_key(kc[0]))

    def support(self):
        return set(self._coeffs)

    def constant_term(self):
        return self._coeffs.get((0,) * self.r, 0)

    def coefficients(self):
        """Dense list of all coefficients over the box, graded-lex order."""
        return [self._coeffs.get(k, 0) for k in box(self.bound)]

    def map_coeffs(self, fn):
        return TruncatedSeries(
            {k: fn(c) for k, c in self._coeffs.items()}, self.bound)

    def is_integral(self):
        return all(isinstance(c, int) and not isinstance(c, bool)
                   for c in self._coeffs.values())

    def to_poly_coeffs(self):
        return TruncatedSeries._raw(
            {k: BivarPoly.coerce(c) for k, c in self._coeffs.items()}, self.bound)

    def truncate(self, bound):
        bound = as_multi_index(bound, self.r)
        return TruncatedSeries(self._coeffs, bound)

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.r != self.r or other.bound != self.bound:
            raise SeriesError(
                f"series mismatch: bound {self.bound} vs {other.bound}")

    def __add__(self, other):
        if isinstance(other, int) or isinstance(other, BivarPoly):
            other = TruncatedSeries.constant(other, self.bound)
        self._check(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TruncatedSeries._raw(out, self.bound)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(
            {k: -c for k, c in self._coeffs.items()}, self.bound)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, BivarPoly)):
            if not other:
                return TruncatedSeries.zero(self.bound)
            return TruncatedSeries(
                {k: c * other for k, c in self._coeffs.items()}, self.bound)
        self._check(other)
        return TruncatedSeries._raw(_convolve(self._coeffs, other._coeffs, self.bound),
                                    self.bound)

    __rmul__ = __mul__

    def __pow__(self, n):
        return series_int_pow(self, n)

    def __eq__(self, other):
        if isinstance(other, (int, BivarPoly)):
            other = TruncatedSeries.constant(other, self.bound)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.bound == other.bound and self._coeffs == other._coeffs

    __hash__ = None

    def __repr__(self):
        return f"TruncatedSeries({format_series(self)}, bound={self.bound})"


def _convolve(fc, gc, bound):
    if len(fc) > len(gc):
        fc, gc = gc, fc
    out = {}
    if len(bound) == 1:
        (b,) = bound
        gl = sorted((k[0], c) for k, c in gc.items())
        for (a,), c1 in fc.items():
            lim = b - a
            for e, c2 in gl:
                if e > lim:
                    break
                key = (a + e,)
                out[key] = out.get(key, 0) + c1 * c2
    else:
        gl = sorted(gc.items())
        for k1, c1 in fc.items():
            room = tuple(b - a for a, b in zip(k1, bound))
            for k2, c2 in gl:
                if k2[0] > room[0]:
                    break
                if not leq(k2, room):
                    continue
                key = tuple(a + e for a, e in zip(k1, k2))
                out[key] = out.get(key, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def series_inverse(f):
    """Multiplicative inverse of a series with constant term 1.

    Graded recursion ``g_k = -sum_{0 < l <= k} f_l g_{k-l}``.
    """
    if f.constant_term() != 1:
        raise SeriesError("series_inverse needs constant term 1")
    zero = (0,) * f.r
    fterms = [(k, c) for k, c in f._coeffs.items() if k != zero]
    g = {zero: 1}
    if f.r == 1:
        (b,) = f.bound
        fl = sorted((k[0], c) for k, c in fterms)
        for n in range(1, b + 1):
            acc = 0
            for a, c in fl:
                if a > n:
                    break
                prev = g.get((n - a,))
                if prev:
                    acc = acc + c * prev
            if acc:
                g[(n,)] = -acc
        return TruncatedSeries._raw(g, f.bound)
    for k in box(f.bound)[1:]:
        acc = 0
        for l, c in fterms:
            if leq(l, k):
                prev = g.get(tuple(x - y for x, y in zip(k, l)))
                if prev:
                    acc = acc + c * prev
        if acc:
            g[k] = -acc
    return TruncatedSeries._raw(g, f.bound)


def series_int_pow(f, n):
    """``f**n`` for any integer ``n`` by repeated squaring (inverting first if n < 0)."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("series_int_pow needs an integer exponent")
    if n < 0:
        if f.constant_term() != 1:
            raise SeriesError("negative power needs constant term 1")
        f, n = series_inverse(f), -n
    result = TruncatedSeries.one(f.bound)
    base = f
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def binomial_factor(mono, m, n, bound):
    """Expand ``(1 - mono * t^m)^n`` in the box, ``n`` any integer.

    Uses the generalized binomial series, so negative ``n`` needs no inversion.
    """
    m = as_multi_index(m, len(bound))
    if not any(m):
        raise SeriesError("factor index must be nonzero")
    kmax = min(b // e for b, e in zip(bound, m) if e)
    if n >= 0:
        kmax = min(kmax, n)
    out = {}
    binom = 1
    power = 1
    for k in range(kmax + 1):
        if k:
            binom = binom * (n - k + 1) // k
            power = power * mono
        c = binom * power
        if k % 2:
            c = -c
        if c:
            out[tuple(k * e for e in m)] = c
    return TruncatedSeries._raw(out, as_multi_index(bound))


def format_series(f, var="t"):
    """Human-readable form, e.g. ``1 + 2*t1 + (1+u*v)*t1*t2``."""
    if not f._coeffs:
        return "0"
    parts = []
    for k, c in f.items():
        if f.r == 1:
            names = [(var, k[0])]
        else:
            names = [(f"{var}{i + 1}", e) for i, e in enumerate(k)]
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in names if e)
        cs = str(c)
        if isinstance(c, BivarPoly) and len(c.terms) > 1:
            cs = f"({cs})"
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs == "-1":
            parts.append("-" + mono)
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")
