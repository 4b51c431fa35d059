"""
Cutting a space into cells.

The series for a disjoint union is the product of the series of the pieces,
so only the cells' dimensions matter.  A d-cell splits into two d-cells and a
(d-1)-cell, which forces its series to be C_I^{(-1)^d}.
"""

from exoconf import CellComplex, c_series, named, scissor_check, uconf_euler_series
from exoconf.spaces import cell
from exoconf.series import format_series

I = named("no_m_equal", 3)
bound = 6
for d in range(4):
    ok = scissor_check(I, [cell(d), cell(d), cell(d - 1)], cell(d), bound) if d else True
    print(f"d={d}:", format_series(uconf_euler_series(I, cell(d), bound)), "| bisection ok:", ok)

torus = CellComplex((0, 1, 1, 2))
print("torus:", format_series(uconf_euler_series(I, torus, bound)))

rp2 = CellComplex((0, 1, 2))
print("RP^2 vs a point:", uconf_euler_series(I, rp2, bound) == c_series(I, bound))
