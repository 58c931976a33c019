from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from unitfield.funfield import RatFunc, SSet
from unitfield.poly import Poly

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], max_examples=100
)
settings.load_profile("default")

small_rat = st.fractions(min_value=-6, max_value=6, max_denominator=6)
nonzero_rat = small_rat.filter(bool)


@st.composite
def polys(draw, max_degree=5, nonzero=False):
    cs = draw(st.lists(small_rat, min_size=0, max_size=max_degree + 1))
    p = Poly(cs)
    if nonzero and p.is_zero():
        p = Poly((draw(nonzero_rat),))
    return p


@st.composite
def ratfuncs(draw, max_degree=4):
    num = draw(polys(max_degree, nonzero=True))
    den = draw(polys(max_degree, nonzero=True))
    return RatFunc(num, den)


@st.composite
def ssets(draw, min_finite=1, max_finite=4):
    pts = draw(st.lists(st.integers(-6, 6), min_size=min_finite, max_size=max_finite, unique=True))
    return SSet.from_points(pts)


@st.composite
def units(draw, S, emax=3):
    u = RatFunc.const(draw(nonzero_rat))
    for v in S.finite:
        e = draw(st.integers(-emax, emax))
        u = u * RatFunc.from_poly(v.min_poly) ** e
    return u


def F(x) -> Fraction:
    return Fraction(x)


# one PASS/FAIL line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
