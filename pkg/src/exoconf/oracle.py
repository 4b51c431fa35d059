"""
Brute-force census of I-collections on a finite set of labelled points.

A collection on ``n`` points is a function ``phi`` from the points to ``I``;
points with ``phi(x) = 0`` are simply not in the collection.  Its degree is
the sum of the values.  Counting these by degree needs no series arithmetic,
which is what makes it a useful check on the algebra.
"""

from dataclasses import dataclass, field

from .series import SeriesError, as_multi_index, box


@dataclass
class CollectionCensus:
    n: int
    bound: tuple
    counts: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.counts.get(as_multi_index(k, len(self.bound)), 0)


def enumerate_collections(n, I, bound):
    """Count all ``phi: {1..n} -> I`` by total degree, for degrees in the box.

    Assignments are walked depth first, one point at a time; a branch stops as
    soon as the running degree leaves the box, since every completion of it
    does too.
    """
    bound = as_multi_index(bound, I.r)
    values = I.points(bound)
    nonzero = [c for c in values if any(c)]
    zero = (0,) * I.r
    counts = {}

    def walk(left, total):
        if left == 0:
            counts[total] = counts.get(total, 0) + 1
            return
        walk(left - 1, total)
        for c in nonzero:
            nxt = tuple(a + b for a, b in zip(total, c))
            if all(x <= b for x, b in zip(nxt, bound)):
                walk(left - 1, nxt)

    walk(n, zero)
    return CollectionCensus(n, bound, counts)


def mismatches(census, f):
    """Multi-indices where the census and the series coefficients differ."""
    if tuple(census.bound) != tuple(f.bound):
        raise SeriesError(f"census bound {census.bound} != series bound {f.bound}")
    return [k for k in box(census.bound) if census[k] != f[k]]


def census_matches_series(census, f):
    return not mismatches(census, f)


def convolve_counts(a, b, bound):
    """Census of a disjoint union from the censuses of its pieces."""
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            if all(x <= y for x, y in zip(k, bound)):
                out[k] = out.get(k, 0) + c1 * c2
    return out
