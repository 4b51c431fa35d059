"""
Exact bivariate polynomials in Z[u, v].

A polynomial is stored as a map ``{(i, j): c}`` meaning ``sum c * u^i * v^j``.
Zero coefficients are never stored, so two polynomials are equal exactly when
their term maps are equal.  Integers mix freely with polynomials in
arithmetic and comparisons (``BivarPoly(2) == 2``).

Text form::

    1+u*v
    -3*u^2*v + 2
"""

import re


class BivarPoly:
    """Immutable element of Z[u, v]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {(0, 0): terms}
        clean = {}
        for (i, j), c in terms.items():
            i, j, c = int(i), int(j), int(c)
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term u^{i}*v^{j}")
            if c:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, i, j, c=1):
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, BivarPoly):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls._raw({(0, 0): x} if x else {})
        raise TypeError(f"cannot coerce {type(x).__name__} to BivarPoly")

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms as ``((i, j), c)`` pairs sorted by ``(i, j)``."""
        return sorted(self._terms.items())

    def coefficient(self, i, j):
        return self._terms.get((i, j), 0)

    def is_constant(self):
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_term(self):
        return self._terms.get((0, 0), 0)

    def degree(self):
        """Largest ``i + j`` over the terms, or -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    # ring operations

    def __add__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = BivarPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return BivarPoly._raw({})
            return BivarPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("BivarPoly powers must be nonnegative integers")
        result = BivarPoly._raw({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def eval(self, u, v):
        return sum(c * u**i * v**j for (i, j), c in self._terms.items())

    def eval_11(self):
        return sum(self._terms.values())

    # comparisons / hashing

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __int__(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant polynomial")
        return self.constant_term()

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = BivarPoly()
ONE = BivarPoly(1)
U = BivarPoly.monomial(1, 0)
V = BivarPoly.monomial(0, 1)


def poly_add(a, b):
    return BivarPoly.coerce(a) + b


def poly_mul(a, b):
    return BivarPoly.coerce(a) * b


def poly_eval_11(p):
    """Value at u = v = 1, i.e. the Euler characteristic of an E-polynomial."""
    return BivarPoly.coerce(p).eval_11()


def _format_term(i, j, c):
    factors = []
    if i:
        factors.append("u" if i == 1 else f"u^{i}")
    if j:
        factors.append("v" if j == 1 else f"v^{j}")
    if not factors:
        return str(c)
    mono = "*".join(factors)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def format_poly(p):
    """Canonical text form, terms sorted by ``(i, j)``; ``"0"`` for zero."""
    p = BivarPoly.coerce(p)
    if not p:
        return "0"
    out = ""
    for (i, j), c in p.items():
        term = _format_term(i, j, c)
        if out and not term.startswith("-"):
            out += "+"
        out += term
    return out


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")
_FACTOR_RE = re.compile(r"^(?:(\d+)|([uv])(?:\^(\d+))?)$")


def parse_poly(text):
    """Parse the text form, e.g. ``"1 + u*v"``, ``"-3*u^2*v"``.

    Raises ValueError on malformed input.
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return BivarPoly(text)
    s = "".join(str(text).split())
    if not s:
        raise ValueError("empty polynomial text")
    terms = {}
    pos = 0
    for m in _TERM_RE.finditer(s):
        if m.start() != pos:
            break
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff, i, j = sign, 0, 0
        for factor in m.group(2).split("*"):
            f = _FACTOR_RE.match(factor)
            if f is None:
                raise ValueError(f"malformed polynomial factor {factor!r} in {text!r}")
            if f.group(1) is not None:
                coeff *= int(f.group(1))
            else:
                e = int(f.group(3)) if f.group(3) is not None else 1
                if f.group(2) == "u":
                    i += e
                else:
                    j += e
        terms[(i, j)] = terms.get((i, j), 0) + coeff
    if pos != len(s):
        raise ValueError(f"malformed polynomial text {text!r}")
    return BivarPoly(terms)
