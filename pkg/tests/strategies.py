"""Hypothesis strategies for field values and points in each backend."""
from fractions import Fraction as Q

from hypothesis import strategies as st

from euclidbench.errors import PrecisionExhausted
from euclidbench.fields import CONSTRUCTIBLE, NONARCH, RAT, Series, TowerReal, sign
from euclidbench.geometry import Point

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive = st.fractions(min_value=Q(1, 12), max_value=20, max_denominator=12)

_SQRT2 = TowerReal(2).sqrt()
_SQRT3 = TowerReal(3).sqrt()
_EPS = NONARCH.eps()


@st.composite
def rationals(draw):
    return draw(small)


@st.composite
def constructibles(draw):
    a, b, c = draw(small), draw(small), draw(st.sampled_from([0, 0, 1, Q(1, 2)]))
    return TowerReal(a) + b * _SQRT2 + c * _SQRT3


@st.composite
def nonarchs(draw, limited=False):
    a, b, c = draw(small), draw(small), draw(small)
    v = NONARCH(a) + b * _EPS + c * _EPS * _EPS
    if not limited and draw(st.booleans()):
        v = v + draw(small) / _EPS
    return v


BACKENDS = {
    "rational": (RAT, rationals),
    "constructible": (CONSTRUCTIBLE, constructibles),
    "nonarch": (NONARCH, nonarchs),
}


def values(name):
    return BACKENDS[name][1]()


@st.composite
def points(draw, name):
    return Point(draw(values(name)), draw(values(name)))


def positives(name):
    return values(name).filter(lambda v: v > 0)


def vanishes(x):
    """Exact zero test; a truncated series passes when every known term is zero."""
    try:
        return sign(x) == 0
    except PrecisionExhausted:
        assert isinstance(x, Series) and not x.exact
        return x.terms == ()
