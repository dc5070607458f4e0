import random
from fractions import Fraction as Q

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_sympy
from euclidbench.errors import UnsupportedId
from euclidbench.fields import CONSTRUCTIBLE, NONARCH, RAT, sign
from euclidbench.geometry import AnglePair, Line, PlaneModel, Point, line_with_slope
from euclidbench.props import (
    EXPECTED,
    PROPOSITIONS,
    PropositionReport,
    check_angle_sum,
    check_I7_uniqueness,
    check_I27,
    check_I29,
    parallels_through_point,
    postulate5_check,
    replay,
    run_proposition,
    run_suite,
    semi_config,
)

RATS, CONS = PlaneModel(RAT), PlaneModel(CONSTRUCTIBLE)
FULL, SUB = PlaneModel(NONARCH), PlaneModel(NONARCH, True)
MODELS = [RATS, CONS, FULL, SUB]
eps = NONARCH.eps()


def P(x, y, fld=RAT):
    return Point(fld(x), fld(y))


def horizontal(fld, c):
    return Line.from_coeffs(fld(0), fld(1), fld(-c))


def vertical(fld, c):
    return Line.from_coeffs(fld(1), fld(0), fld(-c))


# -- run_proposition ---------------------------------------------------------------

@pytest.mark.parametrize("seed", [0, 5, 12])
def test_i5_holds(seed):
    r = run_proposition("I.5", CONS, seed)
    assert r.verdict == "Holds"


def test_i1_impossible_over_rationals():
    assert run_proposition("I.1", RATS).label == "ConstructionImpossible(NoSqrtInField)"


def test_i32_nonarch_sum():
    r = run_proposition("I.32", FULL)
    assert r.verdict == "Holds"
    c, s = r.witnesses[0]["sum"]
    assert NONARCH.parse(s) == 0 and NONARCH.parse(c) < 0


def test_unknown_id():
    with pytest.raises(UnsupportedId):
        run_proposition("I.48", CONS)


@pytest.mark.parametrize("model", MODELS, ids=str)
@pytest.mark.parametrize("seed", [0, 2, 9])
def test_suite_meets_expectations(model, seed):
    reports, ok = run_suite(model, seed)
    assert ok, {k: r.label for k, r in reports.items() if r.label != EXPECTED[model.descriptor][k]}
    assert set(reports) == set(PROPOSITIONS)


@pytest.mark.parametrize("seed", range(6))
def test_constructible_and_nonarch_agree(seed):
    for pid in ("I.1", "I.2", "I.3", "I.5", "I.22", "I.23", "I.27", "I.32"):
        assert run_proposition(pid, CONS, seed).label == run_proposition(pid, FULL, seed).label


@pytest.mark.parametrize("pid", PROPOSITIONS)
def test_reports_replay(pid):
    r = run_proposition(pid, CONS, 4)
    again = replay(PropositionReport.from_dict(r.to_dict()))
    assert again.to_dict() == r.to_dict()


# -- I.7 ---------------------------------------------------------------------------

def test_i7_one_point_above():
    r = check_I7_uniqueness(P(0, 0, CONSTRUCTIBLE), P(4, 0, CONSTRUCTIBLE), CONSTRUCTIBLE(9), CONSTRUCTIBLE(9))
    assert r.verdict == "ImpossibleFigure"
    w = r.witnesses[0]
    assert w["same_side_count"] == 1
    above = [s for s in w["solutions"] if s["side"] > 0]
    x, y = (to_sympy(CONSTRUCTIBLE.parse(t)) for t in above[0]["point"])
    # oracle: (2, sqrt 5) lies on both circles
    assert (x, sympy.simplify(y - sympy.sqrt(5))) == (2, 0)
    assert sympy.simplify(x**2 + y**2 - 9) == 0 and sympy.simplify((x - 4) ** 2 + y**2 - 9) == 0


def test_i7_tangent_circles():
    r = check_I7_uniqueness(P(0, 0), P(2, 0), Q(1), Q(1))
    w = r.witnesses[0]
    assert r.verdict == "ImpossibleFigure" and w["same_side_count"] == 0
    assert [s["side"] for s in w["solutions"]] == [0]


def test_i7_disjoint_circles():
    r = check_I7_uniqueness(P(0, 0), P(10, 0), Q(1), Q(1))
    assert r.verdict == "NotApplicable"


def test_i7_rational_mirror_argument():
    r = check_I7_uniqueness(P(0, 0), P(1, 0), Q(1), Q(1))
    assert r.verdict == "ImpossibleFigure" and r.witnesses[0]["same_side_count"] == 1


@given(
    a=st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    b=st.tuples(st.integers(-5, 5), st.integers(-5, 5)),
    ra=st.integers(1, 40), rb=st.integers(1, 40),
)
@settings(max_examples=40)
def test_i7_never_two_on_one_side(a, b, ra, rb):
    if a == b:
        return
    for fld in (RAT, CONSTRUCTIBLE):
        r = check_I7_uniqueness(P(*a, fld), P(*b, fld), fld(ra), fld(rb))
        assert r.verdict in ("ImpossibleFigure", "NotApplicable")


# -- I.27 --------------------------------------------------------------------------

def test_i27_half_right_angles():
    r = check_I27(RATS, AnglePair(Q(1), Q(1)))
    w = r.witnesses[0]
    assert r.verdict == "ImpossibleFigure" and w["slopes_equal"] and w["meeting_point"] is None
    l1, l2 = (Line.from_coeffs(*(Q(t) for t in w[k])) for k in ("line_E", "line_F"))
    # both have slope 1: y = x and y = x + 1
    assert l1 == line_with_slope(P(0, 0), Q(1)) and l2 == line_with_slope(P(0, 1), Q(1))


def test_i27_right_angles_give_horizontals():
    w = check_I27(RATS, AnglePair(Q(0), Q(1))).witnesses[0]
    assert Line.from_coeffs(*(Q(t) for t in w["line_E"])) == horizontal(RAT, 0)
    assert Line.from_coeffs(*(Q(t) for t in w["line_F"])) == horizontal(RAT, 1)


def test_i27_infinitesimal_angle():
    r = check_I27(FULL, AnglePair(NONARCH(1), eps))
    assert r.verdict == "ImpossibleFigure"
    assert r.witnesses[0]["direction_cross"] == "0"


@pytest.mark.parametrize("model", [RATS, CONS, FULL], ids=str)
@given(seed=st.integers(1, 10**6))
@settings(max_examples=10)
def test_i27_seeded(model, seed):
    assert run_proposition("I.27", model, seed).verdict == "ImpossibleFigure"


# -- I.29, the fifth postulate and parallels -----------------------------------------

def test_i29_euclidean_holds():
    l1, l2 = horizontal(RAT, 0), horizontal(RAT, 1)
    t = line_with_slope(P(0, 0), Q(1))
    r = check_I29(RATS, (l1, l2, t))
    assert r.verdict == "Holds"
    for c, s in r.witnesses[0]["alternate_angles"]:
        assert Q(c) == Q(s) > 0


def test_i29_fails_in_subplane():
    r = check_I29(SUB, semi_config(SUB))
    assert r.verdict == "Fails"
    w = r.witnesses[0]
    assert w["alternate_equal"] is False
    assert [NONARCH.parse(t) for t in w["full_plane_meeting_point"]] == [1 / eps, NONARCH(1)]


def test_i29_not_applicable_in_full_plane():
    r = check_I29(FULL, semi_config(FULL))
    assert r.verdict == "NotApplicable"
    assert [NONARCH.parse(t) for t in r.witnesses[0]["meeting_point"]] == [1 / eps, NONARCH(1)]


def test_p5_meeting_lines():
    l2 = line_with_slope(P(0, -10), Q(1))
    r = postulate5_check(RATS, horizontal(RAT, 0), l2, vertical(RAT, 0))
    assert r.verdict == "Holds"
    assert r.witnesses[0]["meeting_point"] == ["10", "0"]
    assert sum(side["premise"] for side in r.witnesses[0]["sides"]) == 1


def test_p5_fails_in_subplane():
    r = postulate5_check(SUB, *semi_config(SUB))
    assert r.verdict == "Fails"
    assert r.witnesses[0]["meeting_point"] is None


def test_p5_vacuous_for_right_angles():
    r = postulate5_check(RATS, horizontal(RAT, 0), horizontal(RAT, 1), vertical(RAT, 0))
    assert r.verdict == "Holds"
    assert not any(side["premise"] for side in r.witnesses[0]["sides"])


@given(k=st.integers(1, 6), m=st.integers(-5, 5), c=st.integers(-5, 5).filter(bool))
@settings(max_examples=20)
def test_p5_fails_for_every_infinitesimal_tilt(k, m, c):
    l1 = horizontal(NONARCH, c)
    l2 = Line.from_coeffs(k * eps, NONARCH(-1), m * eps * eps)
    assert postulate5_check(SUB, l1, l2, vertical(NONARCH, 0)).verdict == "Fails"


@given(s=st.fractions(min_value=-6, max_value=6, max_denominator=5).filter(bool), c=st.integers(-9, 9).filter(bool))
@settings(max_examples=20)
def test_p5_holds_in_euclidean_planes(s, c):
    for fld, model in ((RAT, RATS), (CONSTRUCTIBLE, CONS)):
        l2 = line_with_slope(P(0, c, fld), fld(s))
        assert postulate5_check(model, horizontal(fld, 0), l2, vertical(fld, 0)).verdict == "Holds"


def test_parallels_through_origin():
    slopes = [NONARCH(0), eps, 2 * eps, eps * eps]
    o, l = Point(NONARCH(0), NONARCH(0)), horizontal(NONARCH, 1)
    sub = parallels_through_point(SUB, o, l, slopes)
    assert sub.verdict == "Fails" and sub.witnesses[0]["multiplicity"] == 4
    full = parallels_through_point(FULL, o, l, slopes)
    assert full.verdict == "Holds" and full.witnesses[0]["multiplicity"] == 1
    rat = parallels_through_point(RATS, P(0, 0), horizontal(RAT, 1), [Q(0), Q(1, 2)])
    assert rat.witnesses[0]["multiplicity"] == 1


def test_parallels_needs_point_off_line():
    with pytest.raises(ValueError):
        parallels_through_point(RATS, P(0, 1), horizontal(RAT, 1), [Q(0)])


# -- angle sums ------------------------------------------------------------------------

@pytest.mark.parametrize("model", MODELS, ids=str)
def test_hundred_triangles_make_two_right_angles(model):
    r = check_angle_sum(model, seed=3)
    assert r.verdict == "Holds" and r.witnesses[0]["triangles"] == 100
