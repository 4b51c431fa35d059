"""
The five standard color-count sets and their product expansions.

C_I(t) always factors as prod (1 - t^m)^{s_m}; the exponents are what the
power structure acts on.
"""

from exoconf import c_series, factorize, named
from exoconf.series import format_series

examples = [
    ("configurations", named("simple"), 8),
    ("symmetric products", named("symmetric"), 8),
    ("no-3-equal", named("no_m_equal", 3), 8),
    ("two colors that never collide", named("apartheid", 2), (4, 4)),
    ("nested pairs", named("nested", 2), (4, 4)),
]

for label, I, bound in examples:
    f = c_series(I, bound)
    fac = factorize(f)
    print(label)
    print("  C_I =", format_series(f))
    print("  exponents:", {m: s for m, s in fac.items()})

# Three colors: pairwise collisions are forbidden, so the expansion needs
# correction factors for every pair and the triple.
fac = factorize(c_series(named("apartheid", 3), (2, 2, 2)))
for m, s in fac.items():
    print(m, s)
