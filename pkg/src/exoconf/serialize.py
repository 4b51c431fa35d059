"""
JSON forms of series and factorizations.

Exact integers (coefficients, exponents) are written as decimal strings so
that JSON consumers with float numbers never lose precision.  Multi-indices
stay plain integer arrays.  Readers accept integers or strings.
"""

from .poly import BivarPoly, format_poly, parse_poly
from .power import Factorization
from .series import TruncatedSeries, as_multi_index


def _int_from_json(x):
    if isinstance(x, bool):
        raise ValueError("expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return int(x.strip())
    raise ValueError(f"expected an integer, got {x!r}")


def series_to_json(f):
    poly = not f.is_integral()
    coeffs = []
    for k, c in f.items():
        c = format_poly(c) if poly else str(c)
        coeffs.append({"k": list(k), "c": c})
    return {
        "vars": f.r,
        "bound": list(f.bound),
        "ring": "poly" if poly else "int",
        "coeffs": coeffs,
    }


def series_from_json(doc):
    bound = as_multi_index(doc["bound"])
    if "vars" in doc and int(doc["vars"]) != len(bound):
        raise ValueError("'vars' does not match the length of 'bound'")
    ring = doc.get("ring")
    coeffs = {}
    for entry in doc.get("coeffs", []):
        k = as_multi_index(entry["k"], len(bound))
        c = entry["c"]
        if ring == "poly":
            c = parse_poly(c)
        else:
            try:
                c = _int_from_json(c)
            except ValueError:
                if ring == "int":
                    raise
                c = parse_poly(c)
        coeffs[k] = c
    f = TruncatedSeries(coeffs, bound)
    if ring == "poly":
        f = f.to_poly_coeffs()
    return f


def factorization_to_json(fac):
    return {
        "vars": fac.r,
        "bound": list(fac.bound),
        "exponents": [{"m": list(m), "s": str(s)} for m, s in fac.items()],
    }


def factorization_from_json(doc):
    exps = {}
    for entry in doc.get("exponents", []):
        exps[tuple(entry["m"])] = _int_from_json(entry["s"])
    if "bound" in doc:
        bound = doc["bound"]
    elif exps:
        # without a declared box, use the smallest one holding every index
        bound = [max(col) for col in zip(*exps)]
    else:
        raise ValueError("factorization JSON needs 'bound' or at least one exponent")
    return Factorization(tuple(bound), exps)


def coefficient_text(c):
    if isinstance(c, BivarPoly):
        return format_poly(c)
    return str(c)
