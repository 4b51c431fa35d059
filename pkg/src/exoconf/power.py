"""
Power structure over Z and Z[u, v].

Every integer series with constant term 1 factors uniquely as

    f(t) = prod_{m != 0} (1 - t^m)^{s_m},     s_m in Z,

and raising ``f`` to a polynomial ``p(u, v) = sum p_ij u^i v^j`` replaces each
factor by ``prod_ij (1 - u^i v^j t^m)^{s_m p_ij}``.  With this sign ``f^1 = f``
and evaluating at u = v = 1 recovers the ordinary integer power.
"""

from dataclasses import dataclass, field
from math import factorial

from .poly import BivarPoly
from .series import (
    SeriesError,
    TruncatedSeries,
    as_multi_index,
    binomial_factor,
    box,
    graded_lex_key,
    leq,
)


@dataclass(frozen=True)
class Factorization:
    """Exponents ``m -> s_m`` of ``prod (1 - t^m)^{s_m}`` within a box."""

    bound: tuple
    exponents: dict = field(default_factory=dict)

    def __post_init__(self):
        bound = as_multi_index(self.bound)
        object.__setattr__(self, "bound", bound)
        clean = {}
        for m, s in self.exponents.items():
            m = as_multi_index(m, len(bound))
            if not any(m):
                raise SeriesError("factorization exponents must be at nonzero indices")
            if not leq(m, bound):
                raise SeriesError(f"index {m} lies outside the box {bound}")
            if int(s):
                clean[m] = int(s)
        object.__setattr__(self, "exponents", clean)

    @property
    def r(self):
        return len(self.bound)

    def items(self):
        return sorted(self.exponents.items(), key=lambda ms: graded_lex_key(ms[0]))


def factorize(f):
    """Exponents ``s_m`` with ``f = prod (1 - t^m)^{s_m}`` inside the box.

    Indices are processed in graded-lex order.  After index ``m`` has been
    handled, the residual ``f * prod (1 - t^m')^{-s_m'}`` has no terms at
    ``m`` or earlier (except the constant), so the next coefficient of the
    residual gives the next exponent directly.
    """
    if not isinstance(f, TruncatedSeries):
        raise TypeError("factorize expects a TruncatedSeries")
    if not f.is_integral():
        raise SeriesError("factorize needs integer coefficients")
    if f.constant_term() != 1:
        raise SeriesError("factorize needs constant term 1")
    residual = f
    exponents = {}
    for m in box(f.bound)[1:]:
        c = residual[m]
        if not c:
            continue
        s = -c
        exponents[m] = s
        residual = residual * binomial_factor(1, m, -s, f.bound)
    return Factorization(f.bound, exponents)


def unfactorize(fac):
    """Expand ``prod (1 - t^m)^{s_m}`` within the box."""
    result = TruncatedSeries.one(fac.bound)
    for m, s in fac.items():
        result = result * binomial_factor(1, m, s, fac.bound)
    return result


def pow_structure(f, p):
    """``f`` raised to the power ``p(u, v)``; ``f`` must have integer coefficients."""
    if not isinstance(f, TruncatedSeries):
        raise TypeError("pow_structure expects a TruncatedSeries base")
    if not f.is_integral():
        raise SeriesError(
            "pow_structure is only defined for bases with integer coefficients")
    p = BivarPoly.coerce(p)
    fac = factorize(f)
    result = TruncatedSeries.one(f.bound)
    for m, s in fac.items():
        for (i, j), pij in p.items():
            mono = BivarPoly.monomial(i, j)
            result = result * binomial_factor(mono, m, s * pij, f.bound)
    return result.to_poly_coeffs()


def _falling(n, k):
    out = 1
    for x in range(n, n - k, -1):
        out *= x
    return out


def stratum_count(N, a, k):
    """Size of degree-``k`` part of ``(1 + sum a_m t^m)^N`` for finite sets.

    Counts configurations of ``sum k_m`` distinct points among ``N``, where
    ``k_m`` of them carry a particle of charge ``m`` with one of ``a_m``
    internal states, summed over all families with ``sum m * k_m = k``.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    k = as_multi_index(k)
    support = []
    for m, am in a.items():
        m = as_multi_index(m, len(k))
        if not any(m):
            raise ValueError("charges must be nonzero multi-indices")
        if am and leq(m, k):
            support.append((m, am))
    support.sort(key=lambda ma: graded_lex_key(ma[0]))

    total = 0

    def walk(idx, rest, used, weight, denom):
        nonlocal total
        if not any(rest):
            if used <= N:
                total += _falling(N, used) // denom * weight
            return
        if idx == len(support) or used >= N:
            return
        m, am = support[idx]
        q = 0
        cur = rest
        while True:
            walk(idx + 1, cur, used + q, weight * am**q, denom * factorial(q))
            if not leq(m, cur):
                break
            cur = tuple(x - y for x, y in zip(cur, m))
            q += 1

    walk(0, k, 0, 1, 1)
    return total
