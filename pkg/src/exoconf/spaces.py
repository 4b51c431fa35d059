"""
Spaces described by their additive invariants, and the generating series of
invariants of UConf_I(X, k).

The series of Euler characteristics is ``C_I(t) ** chi(X)`` and the series
of Hodge-Deligne polynomials is ``C_I(t) ** e_X(u, v)`` in the power
structure sense.  Nothing about X beyond chi or e_X enters.
"""

from dataclasses import dataclass

from .exotic import ValidationError, c_series
from .poly import BivarPoly, parse_poly
from .power import pow_structure
from .series import as_multi_index, series_int_pow


class SpaceDescriptor:
    kind = None

    def euler(self):
        raise NotImplementedError

    def hodge_deligne(self):
        raise ValidationError(
            f"a {self.kind!r} space has no Hodge-Deligne polynomial")


@dataclass(frozen=True)
class EulerOnly(SpaceDescriptor):
    chi: int
    kind = "euler"

    def euler(self):
        return self.chi

    def to_json(self):
        return {"kind": self.kind, "chi": str(self.chi)}


@dataclass(frozen=True)
class HodgeDeligne(SpaceDescriptor):
    e: BivarPoly
    kind = "hd"

    def __post_init__(self):
        object.__setattr__(self, "e", BivarPoly.coerce(self.e))

    def euler(self):
        return self.e.eval_11()

    def hodge_deligne(self):
        return self.e

    def to_json(self):
        return {"kind": self.kind, "e": str(self.e)}


@dataclass(frozen=True)
class CellComplex(SpaceDescriptor):
    """Locally closed union of open cells, recorded by their dimensions only."""

    dims: tuple
    kind = "cells"

    def __post_init__(self):
        dims = tuple(sorted(int(d) for d in self.dims))
        if any(d < 0 for d in dims):
            raise ValidationError("cell dimensions must be nonnegative")
        object.__setattr__(self, "dims", dims)

    def euler(self):
        return sum((-1) ** d for d in self.dims)

    def hodge_deligne(self):
        if any(self.dims):
            return super().hodge_deligne()
        return BivarPoly(len(self.dims))

    def to_json(self):
        return {"kind": self.kind, "dims": list(self.dims)}


@dataclass(frozen=True)
class FinitePoints(SpaceDescriptor):
    n: int
    kind = "points"

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError("number of points must be nonnegative")

    def euler(self):
        return self.n

    def hodge_deligne(self):
        return BivarPoly(self.n)

    def to_json(self):
        return {"kind": self.kind, "n": self.n}


def cell(d):
    return CellComplex((d,))


def euler(sd):
    if isinstance(sd, int):
        return sd
    return sd.euler()


def uconf_euler_series(I, sd, bound):
    """Euler characteristics of UConf_I(X, k) for all k in the box."""
    return series_int_pow(c_series(I, bound), euler(sd))


def uconf_hd_series(I, e, bound):
    """Hodge-Deligne polynomials of UConf_I(X, k) for all k in the box.

    ``e`` is the E-polynomial of X, or a descriptor that carries one.
    """
    if isinstance(e, SpaceDescriptor):
        e = e.hodge_deligne()
    return pow_structure(c_series(I, bound), BivarPoly.coerce(e))


def scissor_check(I, parts, whole, bound):
    """Does the series of ``whole`` factor as the product over ``parts``?"""
    bound = as_multi_index(bound, I.r)
    product = None
    for part in parts:
        s = uconf_euler_series(I, part, bound)
        product = s if product is None else product * s
    if product is None:
        product = c_series(I, bound) ** 0
    return product == uconf_euler_series(I, whole, bound)


def _as_int(x, what):
    if isinstance(x, bool):
        raise ValidationError(f"{what} must be an integer")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise ValidationError(f"{what} must be an integer, got {x!r}")


def from_json(doc):
    """Build a descriptor from JSON; accepts ``{"space": {...}}`` wrapping too."""
    if isinstance(doc, dict) and set(doc) == {"space"}:
        doc = doc["space"]
    if not isinstance(doc, dict):
        raise ValidationError("space description must be a JSON object")
    kind = doc.get("kind")
    if kind == "euler":
        return EulerOnly(_as_int(doc.get("chi"), "chi"))
    if kind == "hd":
        try:
            return HodgeDeligne(parse_poly(doc.get("e", "")))
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
    if kind == "cells":
        dims = doc.get("dims")
        if not isinstance(dims, list):
            raise ValidationError("cells space needs a 'dims' list")
        return CellComplex(tuple(_as_int(d, "cell dimension") for d in dims))
    if kind == "points":
        return FinitePoints(_as_int(doc.get("n"), "n"))
    raise ValidationError(f"unknown space kind {kind!r}")
