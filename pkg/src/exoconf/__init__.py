"""Exact generating series for exotic unordered configuration spaces."""

from .exotic import (
    AxesOnly,
    ColorCountSet,
    Explicit,
    Full,
    MaxCounts,
    Nested,
    ValidationError,
    c_series,
    contains,
    named,
)
from .oracle import CollectionCensus, census_matches_series, enumerate_collections
from .poly import BivarPoly, format_poly, parse_poly, poly_add, poly_eval_11, poly_mul
from .power import Factorization, factorize, pow_structure, stratum_count, unfactorize
from .series import (
    SeriesError,
    TruncatedSeries,
    series_add,
    series_int_pow,
    series_inverse,
    series_mul,
)
from .spaces import (
    CellComplex,
    EulerOnly,
    FinitePoints,
    HodgeDeligne,
    euler,
    scissor_check,
    uconf_euler_series,
    uconf_hd_series,
)

__version__ = "0.1.0"
