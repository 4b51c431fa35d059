import hypothesis.strategies as st
from hypothesis import settings

from exoconf.poly import BivarPoly
from exoconf.series import TruncatedSeries, box

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def polys(draw, max_deg=3, max_coeff=5):
    n = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n):
        i = draw(st.integers(0, max_deg))
        j = draw(st.integers(0, max_deg))
        terms[(i, j)] = draw(st.integers(-max_coeff, max_coeff))
    return BivarPoly(terms)


@st.composite
def bounds(draw, max_r=2, max_b=5):
    r = draw(st.integers(1, max_r))
    return tuple(draw(st.integers(0, max_b)) for _ in range(r))


@st.composite
def int_series(draw, bound, unit=False, lo=-3, hi=3):
    coeffs = {k: draw(st.integers(lo, hi)) for k in box(bound)}
    if unit:
        coeffs[(0,) * len(bound)] = 1
    return TruncatedSeries(coeffs, bound)


@st.composite
def series_with_bound(draw, unit=False, max_r=2, max_b=4):
    bound = draw(bounds(max_r, max_b))
    return draw(int_series(bound, unit=unit))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
