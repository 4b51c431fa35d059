"""
Checking the power structure by counting.

On a set of n points, an I-collection is just a function to I.  Counting
them by total degree must reproduce the coefficients of C_I(t)^n.
"""

from exoconf import c_series, enumerate_collections, named, series_int_pow
from exoconf.oracle import mismatches
from exoconf.power import stratum_count

I = named("apartheid", 2)
bound = (3, 3)
for n in range(5):
    census = enumerate_collections(n, I, bound)
    series = series_int_pow(c_series(I, bound), n)
    print(n, "points:", "agree" if not mismatches(census, series) else "DISAGREE")

# Same count from the particle picture: k_m particles of charge m on distinct points
a = {(1,): 2, (2,): 1}
print("stratum count", stratum_count(3, a, (2,)), "= C(6, 2) = 15")
