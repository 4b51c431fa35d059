"""
Euler characteristics of unordered configuration spaces.

For ordinary configurations (at most one point per location, I = {0, 1}) the
generating series of chi(UConf(X, k)) is (1 + t)^chi(X): binomial
coefficients, even when chi(X) is negative.
"""

from exoconf import EulerOnly, CellComplex, named, uconf_euler_series
from exoconf.series import format_series

simple = named("simple")

# A space with chi = 3, e.g. three points
print(format_series(uconf_euler_series(simple, EulerOnly(3), 6)))

# The circle: one 0-cell and one 1-cell, chi = 0, so every UConf(S^1, k) with k > 0 has chi 0
circle = CellComplex((0, 1))
print(format_series(uconf_euler_series(simple, circle, 6)))

# The open interval (a single 1-cell, chi = -1): alternating signs
print(format_series(uconf_euler_series(simple, CellComplex((1,)), 6)))

# The 2-sphere as point + open disc
sphere = CellComplex((0, 2))
f = uconf_euler_series(simple, sphere, 6)
print("chi(UConf(S^2, k)) for k = 0..6:", f.coefficients())
