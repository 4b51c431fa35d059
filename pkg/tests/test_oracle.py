import itertools

import pytest

from exoconf.exotic import Explicit, MaxCounts, c_series, named, standard_sets
from exoconf.oracle import (
    census_matches_series,
    convolve_counts,
    enumerate_collections,
    mismatches,
)
from exoconf.power import stratum_count
from exoconf.series import SeriesError, TruncatedSeries, box, series_int_pow


def S1(coeffs, bound):
    return TruncatedSeries({(i,): c for i, c in enumerate(coeffs)}, bound)


def literal_count(n, I, bound, k):
    """No pruning: every function from n points to I within the box."""
    values = I.points(bound)
    total = 0
    for phi in itertools.product(values, repeat=n):
        deg = tuple(sum(c[i] for c in phi) for i in range(I.r))
        total += deg == tuple(k)
    return total


def test_enumerate_examples():
    I = MaxCounts([3])
    assert enumerate_collections(3, I, 4)[(2,)] == 6 == literal_count(3, I, (4,), (2,))
    I2 = named("apartheid", 2)
    assert enumerate_collections(2, I2, (2, 2))[(1, 1)] == 2
    assert literal_count(2, I2, (2, 2), (1, 1)) == 2


@pytest.mark.parametrize("label,I", standard_sets(max_r=2, ms=(2, 3)))
def test_single_point(label, I):
    bound = (4,) * I.r
    census = enumerate_collections(1, I, bound)
    for k in box(bound):
        assert census[k] == (1 if k in I else 0)


def test_empty_census():
    for _, I in standard_sets():
        bound = (3,) * I.r
        census = enumerate_collections(0, I, bound)
        assert census.counts == {(0,) * I.r: 1}
        assert census_matches_series(census, TruncatedSeries.one(bound))


@pytest.mark.parametrize("label,I", standard_sets(max_r=2, ms=(2, 3)))
def test_pruned_enumeration_matches_literal(label, I):
    bound = (3,) * I.r
    for n in range(4):
        census = enumerate_collections(n, I, bound)
        for k in box(bound):
            assert census[k] == literal_count(n, I, bound, k)


def test_matches_examples():
    I = MaxCounts([3])
    assert census_matches_series(enumerate_collections(3, I, 5), series_int_pow(c_series(I, 5), 3))
    simple = named("simple")
    census = enumerate_collections(2, simple, 4)
    assert [census[k] for k in range(5)] == [1, 2, 1, 0, 0]
    assert census_matches_series(census, S1([1, 1], 4) * S1([1, 1], 4))


def test_mismatch_reporting():
    census = enumerate_collections(2, named("simple"), 3)
    assert mismatches(census, S1([1, 2, 2], 3)) == [(2,)]
    assert not census_matches_series(census, S1([1, 2, 2], 3))
    with pytest.raises(SeriesError):
        mismatches(census, S1([1], 4))


@pytest.mark.parametrize("label,I", standard_sets(max_r=2))
def test_main_oracle(label, I):
    bound = (6,) if I.r == 1 else (4, 4)
    base = c_series(I, bound)
    for n in range(6):
        census = enumerate_collections(n, I, bound)
        assert census_matches_series(census, series_int_pow(base, n))


def test_non_ideal_explicit_set():
    I = Explicit([(0,), (2,), (3,)])
    base = c_series(I, 8)
    a = {k: c for k, c in base.items() if any(k)}
    for n in range(5):
        census = enumerate_collections(n, I, 8)
        assert census_matches_series(census, series_int_pow(base, n))
        for k in range(9):
            assert census[k] == stratum_count(n, a, (k,))


def test_cross_oracle_explicit_lists():
    # 0/1 coefficient lists over degrees 1..3
    bound = 6
    for bits in itertools.product((0, 1), repeat=3):
        pts = [(0,)] + [(i + 1,) for i, b in enumerate(bits) if b]
        I = Explicit(pts)
        a = {p: 1 for p in pts if p[0]}
        for n in range(5):
            census = enumerate_collections(n, I, bound)
            for k in range(bound + 1):
                assert census[k] == stratum_count(n, a, (k,))


@pytest.mark.parametrize("label,I", standard_sets(max_r=2, ms=(3,)))
def test_census_multiplicativity(label, I):
    bound = (3,) * I.r
    for n, m in [(0, 2), (1, 1), (1, 2), (2, 2)]:
        joint = enumerate_collections(n + m, I, bound).counts
        a = enumerate_collections(n, I, bound).counts
        b = enumerate_collections(m, I, bound).counts
        assert joint == convolve_counts(a, b, bound)
