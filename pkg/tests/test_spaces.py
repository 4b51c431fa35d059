import pytest
from hypothesis import given, strategies as st

from exoconf.exotic import ValidationError, c_series, named, standard_sets
from exoconf.poly import BivarPoly, parse_poly, poly_eval_11
from exoconf.series import TruncatedSeries, series_int_pow, series_inverse
from exoconf.spaces import (
    CellComplex,
    EulerOnly,
    FinitePoints,
    HodgeDeligne,
    cell,
    euler,
    from_json,
    scissor_check,
    uconf_euler_series,
    uconf_hd_series,
)

from conftest import polys


def S1(coeffs, bound):
    return TruncatedSeries({(i,): c for i, c in enumerate(coeffs)}, bound)


SETS = standard_sets(max_r=2, ms=(2, 3, 4))


def bound_for(I):
    return (5,) if I.r == 1 else (3, 3)


def test_euler_examples():
    assert euler(CellComplex((0, 2))) == 2
    for d in range(6):
        assert euler(cell(d)) == (-1) ** d
    assert euler(FinitePoints(7)) == 7
    assert euler(HodgeDeligne(parse_poly("1+u*v"))) == 2
    assert euler(EulerOnly(-4)) == -4


def test_uconf_euler_examples():
    simple = named("simple")
    assert uconf_euler_series(simple, EulerOnly(2), 4) == S1([1, 2, 1, 0, 0], 4)
    assert uconf_euler_series(simple, EulerOnly(-1), 3) == series_inverse(S1([1, 1], 3))
    assert uconf_euler_series(simple, EulerOnly(-1), 3) == S1([1, -1, 1, -1], 3)
    for _, I in SETS:
        assert uconf_euler_series(I, EulerOnly(0), bound_for(I)) == TruncatedSeries.one(bound_for(I))


def test_uconf_hd_examples():
    uv = parse_poly("u*v")
    got = uconf_hd_series(named("symmetric"), parse_poly("1+u*v"), 3)
    for n in range(4):
        assert got[n] == sum((uv**k for k in range(n + 1)), BivarPoly())
    got = uconf_hd_series(named("simple"), BivarPoly(2), 3)
    assert [got[n] for n in range(4)] == [BivarPoly(1), BivarPoly(2), BivarPoly(1), BivarPoly(0)]
    assert got == uconf_euler_series(named("simple"), EulerOnly(2), 3)
    for _, I in SETS:
        assert uconf_hd_series(I, BivarPoly(), bound_for(I)) == TruncatedSeries.one(bound_for(I))


def test_hd_series_projective_plane_configurations():
    # UConf(P^2, 2) is S^2 P^2 minus the diagonal
    e = parse_poly("1+u*v+u^2*v^2")
    sym = uconf_hd_series(named("symmetric"), e, 2)
    conf = uconf_hd_series(named("simple"), e, 2)
    assert conf[2] == sym[2] - e
    # e(S^2 X) = (e(X)^2 + e(X)(u^2, v^2)) / 2
    sq = e * e
    e_sq_args = parse_poly("1+u^2*v^2+u^4*v^4")
    half = {k: c // 2 for k, c in (sq + e_sq_args).terms.items()}
    assert sym[2] == BivarPoly(half)


def test_hd_series_from_descriptor():
    I = named("simple")
    assert uconf_hd_series(I, FinitePoints(3), 3) == uconf_hd_series(I, BivarPoly(3), 3)
    with pytest.raises(ValidationError):
        uconf_hd_series(I, EulerOnly(3), 3)
    with pytest.raises(ValidationError):
        uconf_hd_series(I, cell(1), 3)


def test_scissor_examples():
    for _, I in SETS:
        b = bound_for(I)
        assert scissor_check(I, [cell(2), cell(2), cell(1)], cell(2), b)
        assert scissor_check(I, [FinitePoints(1), FinitePoints(1)], FinitePoints(2), b)
        sphere = CellComplex((0, 2))
        assert scissor_check(I, [sphere], sphere, b)


def test_scissor_detects_wrong_decomposition():
    I = named("simple")
    assert not scissor_check(I, [cell(2), cell(1)], cell(2), 4)
    assert not scissor_check(I, [FinitePoints(1)], FinitePoints(2), 4)


@pytest.mark.parametrize("d", range(5))
def test_cell_identity(d):
    for _, I in SETS:
        b = bound_for(I)
        assert uconf_euler_series(I, cell(d), b) == series_int_pow(c_series(I, b), (-1) ** d)


@given(polys(max_deg=2, max_coeff=3))
def test_hd_reduces_to_euler(e):
    for _, I in SETS:
        b = bound_for(I)
        lhs = uconf_hd_series(I, e, b).map_coeffs(poly_eval_11)
        assert lhs == uconf_euler_series(I, EulerOnly(poly_eval_11(e)), b)


@given(st.integers(0, 5), st.integers(0, 5))
def test_disjoint_union(n, m):
    for _, I in SETS:
        b = bound_for(I)
        lhs = uconf_euler_series(I, FinitePoints(n + m), b)
        rhs = uconf_euler_series(I, FinitePoints(n), b) * uconf_euler_series(I, FinitePoints(m), b)
        assert lhs == rhs


def test_points_interchangeable_with_cells():
    I = named("apartheid", 2)
    b = (3, 3)
    pts = uconf_euler_series(I, FinitePoints(4), b)
    assert pts == uconf_euler_series(I, CellComplex((0, 0, 0, 0)), b)
    assert pts == uconf_euler_series(I, EulerOnly(4), b)


@pytest.mark.parametrize("doc,expected", [
    ({"space": {"kind": "euler", "chi": -2}}, EulerOnly(-2)),
    ({"kind": "euler", "chi": "-2"}, EulerOnly(-2)),
    ({"kind": "hd", "e": "1+u*v"}, HodgeDeligne(parse_poly("1+u*v"))),
    ({"kind": "cells", "dims": [0, 1, 2]}, CellComplex((0, 1, 2))),
    ({"kind": "points", "n": 4}, FinitePoints(4)),
])
def test_from_json(doc, expected):
    sd = from_json(doc)
    assert sd == expected
    assert from_json(sd.to_json()) == sd


@pytest.mark.parametrize("doc", [
    {"kind": "euler"},
    {"kind": "euler", "chi": 1.5},
    {"kind": "hd", "e": "1+x"},
    {"kind": "cells", "dims": [-1]},
    {"kind": "cells"},
    {"kind": "points", "n": -1},
    {"kind": "torus"},
    "sphere",
])
def test_from_json_rejects(doc):
    with pytest.raises(ValidationError):
        from_json(doc)
