"""
Hodge-Deligne polynomials of configuration spaces of projective spaces.

e(P^n) = 1 + uv + ... + (uv)^n.  The symmetric products of P^1 are P^k, and
removing diagonals gives the E-polynomials of the configuration spaces.
"""

from exoconf import named, parse_poly, poly_eval_11, uconf_hd_series
from exoconf.series import format_series

p1 = parse_poly("1+u*v")
p2 = parse_poly("1+u*v+u^2*v^2")

sym = uconf_hd_series(named("symmetric"), p1, 5)
for k in range(6):
    print(f"e(S^{k} P^1) =", sym[k])

conf = uconf_hd_series(named("simple"), p2, 4)
print("configurations of points in P^2:")
print(" ", format_series(conf))
print("  at u = v = 1:", [poly_eval_11(c) for c in conf.coefficients()])

# A curve of genus 2: e = 1 - 2u - 2v + uv
curve = parse_poly("1-2*u-2*v+u*v")
print(format_series(uconf_hd_series(named("no_m_equal", 3), curve, 3)))
