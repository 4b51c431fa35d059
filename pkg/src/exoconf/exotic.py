"""
Color-count sets I in Z_{>=0}^r and their series C_I(t) = sum_{c in I} t^c.

Infinite sets are given by constraints, not by enumeration; only ``I`` cut
down to a box is ever needed.  Every set must contain the zero color count.
"""

from .series import SeriesError, TruncatedSeries, as_multi_index, box, graded_lex_key


class ValidationError(ValueError):
    """A well-formed description that violates a semantic requirement."""


class ColorCountSet:
    kind = None

    def __init__(self, r):
        if not isinstance(r, int) or r < 1:
            raise ValidationError(f"number of colors must be a positive integer, got {r!r}")
        self.r = r

    def _contains(self, c):
        raise NotImplementedError

    def contains(self, c):
        c = as_multi_index(c)
        if len(c) != self.r:
            raise SeriesError(f"color count {c} has {len(c)} entries, expected {self.r}")
        return self._contains(c)

    __contains__ = contains

    def points(self, bound):
        """Members of ``I`` inside the box, graded-lex order."""
        bound = as_multi_index(bound, self.r)
        return [c for c in box(bound) if self._contains(c)]

    def to_json(self):
        return {"kind": self.kind, "r": self.r}

    def _key(self):
        return (self.kind, self.r)

    def __eq__(self, other):
        return isinstance(other, ColorCountSet) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"{type(self).__name__}(r={self.r})"


class Explicit(ColorCountSet):
    kind = "explicit"

    def __init__(self, points, r=None):
        pts = [as_multi_index(p) for p in points]
        if r is None:
            if not pts:
                raise ValidationError("an explicit set needs r or at least one point")
            r = len(pts[0])
        super().__init__(r)
        for p in pts:
            if len(p) != r:
                raise ValidationError(f"point {p} does not have {r} entries")
        self.members = frozenset(pts)
        if (0,) * r not in self.members:
            raise ValidationError("color-count set must contain the zero vector")

    def _contains(self, c):
        return c in self.members

    def to_json(self):
        pts = sorted(self.members, key=graded_lex_key)
        return {"kind": self.kind, "r": self.r, "points": [list(p) for p in pts]}

    def _key(self):
        return (self.kind, self.r, self.members)

    def __repr__(self):
        return f"Explicit({sorted(self.members, key=graded_lex_key)})"


class MaxCounts(ColorCountSet):
    """``c_i < caps[i]`` for every color."""

    kind = "max"

    def __init__(self, caps):
        caps = tuple(int(m) for m in caps)
        super().__init__(len(caps))
        if any(m < 1 for m in caps):
            raise ValidationError("caps must be >= 1 so that zero is a member")
        self.caps = caps

    def _contains(self, c):
        return all(x < m for x, m in zip(c, self.caps))

    def to_json(self):
        return {"kind": self.kind, "r": self.r, "caps": list(self.caps)}

    def _key(self):
        return (self.kind, self.caps)

    def __repr__(self):
        return f"MaxCounts({list(self.caps)})"


class AxesOnly(ColorCountSet):
    """At most one nonzero coordinate: colors never share a point."""

    kind = "axes"

    def _contains(self, c):
        return sum(1 for x in c if x) <= 1


class Nested(ColorCountSet):
    """``c_1 <= c_2 <= ... <= c_r``."""

    kind = "nested"

    def _contains(self, c):
        return all(a <= b for a, b in zip(c, c[1:]))


class Full(ColorCountSet):
    kind = "full"

    def _contains(self, c):
        return True


def contains(I, c):
    return I.contains(c)


def c_series(I, bound):
    """``C_I(t)`` truncated to the box."""
    bound = as_multi_index(bound, I.r)
    return TruncatedSeries({c: 1 for c in I.points(bound)}, bound)


def named(name, param=None):
    """One of the standard sets.

    ``simple`` ({0, 1}), ``symmetric`` (all of Z_{>=0}),
    ``no_m_equal`` (param m: counts below m), ``apartheid`` (param r: axes),
    ``nested`` (param r: nondecreasing counts).
    """
    if name == "simple":
        return Explicit([(0,), (1,)])
    if name == "symmetric":
        return Full(1)
    if name == "no_m_equal":
        if not isinstance(param, int) or param < 2:
            raise ValidationError("no_m_equal needs an integer m >= 2")
        return MaxCounts([param])
    if name == "apartheid":
        return AxesOnly(1 if param is None else param)
    if name == "nested":
        return Nested(1 if param is None else param)
    raise ValidationError(f"unknown named color-count set {name!r}")


def standard_sets(max_r=2, ms=(2, 3, 4, 5)):
    """Named sets used by the verification grid, labelled for reports."""
    out = [("simple", named("simple")), ("symmetric", named("symmetric"))]
    out += [(f"no_m_equal({m})", named("no_m_equal", m)) for m in ms]
    for r in range(1, max_r + 1):
        out.append((f"apartheid({r})", named("apartheid", r)))
        out.append((f"nested({r})", named("nested", r)))
    return out


def from_json(doc):
    """Build a set from its JSON description (a dict)."""
    if not isinstance(doc, dict):
        raise ValidationError("color-count set description must be a JSON object")
    kind = doc.get("kind")
    r = doc.get("r")
    try:
        if kind == "explicit":
            if "points" not in doc:
                raise ValidationError("explicit set needs 'points'")
            I = Explicit(doc["points"], r=r)
        elif kind == "max":
            if "caps" not in doc:
                raise ValidationError("max set needs 'caps'")
            I = MaxCounts(doc["caps"])
        elif kind in ("axes", "nested", "full"):
            cls = {"axes": AxesOnly, "nested": Nested, "full": Full}[kind]
            I = cls(1 if r is None else r)
        else:
            raise ValidationError(f"unknown color-count set kind {kind!r}")
    except ValidationError:
        raise
    except (ValueError, TypeError) as exc:
        raise ValidationError(str(exc)) from exc
    if r is not None and I.r != r:
        raise ValidationError(f"declared r={r} but the set has {I.r} colors")
    return I


def to_json(I):
    return I.to_json()


def points_in_box(I, bound):
    return I.points(bound)
