from fractions import Fraction as Q
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclidbench.dsl import ConstructionFailed, execute, macro_expand, parse
from euclidbench.dsl.ast import BinOp, Decl, Dist, Eps, MacroCall, Neg, Num, PointCoords, Require, Sqrt
from euclidbench.dsl.interp import verify_bindings
from euclidbench.errors import (
    ArityError,
    DuplicateId,
    ScriptError,
    ScriptSyntaxError,
    UseBeforeDecl,
    WrongKind,
)
from euclidbench.fields import CONSTRUCTIBLE, NONARCH, RAT, sign
from euclidbench.geometry import PlaneModel, angle_at, angle_equal, dist_sq

CONS = PlaneModel(CONSTRUCTIBLE)
RATS = PlaneModel(RAT)
FULL = PlaneModel(NONARCH)
SUB = PlaneModel(NONARCH, True)
SCRIPTS = ["i1", "i2", "i3", "i5", "i6", "i22", "i23", "i32"]


def bundled(name):
    return resources.files("euclidbench.scripts").joinpath(name + ".euc").read_text(encoding="utf-8")


# -- parsing ------------------------------------------------------------------------

def test_i1_has_six_statements():
    script = parse(bundled("i1"))
    assert len(script) == 6 and script.name == "I.1"


def test_truncated_input_reports_column():
    with pytest.raises(ScriptSyntaxError) as err:
        parse("point A = (0,")
    assert (err.value.line, err.value.col) == (1, 12)


def test_undeclared_id():
    with pytest.raises(UseBeforeDecl):
        parse("point A = (0, 0)\nline l = line(A, Q)")


@pytest.mark.parametrize(
    "text, error",
    [
        ("point A = (0, 0)\npoint A = (1, 1)", DuplicateId),
        ("point A = (0, 0)\npoint B = (1, 0)\nline l = line(A, B)\ncircle c = circle(l, 1)", WrongKind),
        ("point A = (0, 0)\ncircle c = circle(A, 1)\ncircle d = circle(A, 2)\npoint P = intersect(c, d)", ScriptSyntaxError),
        ("point A = (0, 0)\nequilateral(A)", ArityError),
        ("point A = (0, 0)\nfrobnicate(A, A, B)", ScriptSyntaxError),
        ("point _A = (0, 0)", ScriptSyntaxError),
        ("point A = (0, 0) extra", ScriptSyntaxError),
        ("point A = (0, 0)\npoint B = (1, 0)\nassert less_seg(A, B)", ArityError),
        ("point A = (0, 0)\nassert bogus(A)", ScriptSyntaxError),
        ("point A = (0, 0)\npoint B = (0, 1)\npoint C = intersect(A, B)[upper]", WrongKind),
    ],
)
def test_rejected_scripts(text, error):
    with pytest.raises(error):
        parse(text)


def test_comments_and_blank_lines():
    script = parse("# nothing yet\n\npoint A = (1/2, -3)  # a point\n")
    assert len(script) == 1 and script.statements[0].line == 3


@pytest.mark.parametrize("name", SCRIPTS)
def test_bundled_scripts_round_trip(name):
    script = parse(bundled(name))
    assert parse(script.render()) == script
    assert script.render() == parse(script.render()).render()


# scalar expressions over the points P0, P1 declared first
_leaves = st.one_of(
    st.integers(0, 50).map(lambda v: Num(Q(v), str(v))),
    st.just(Eps()),
    st.sampled_from([Dist("P0", "P1"), Dist("P1", "P0")]),
)
scalars = st.recursive(
    _leaves,
    lambda inner: st.one_of(
        inner.map(Sqrt),
        inner.map(Neg),
        st.tuples(st.sampled_from("+-*/"), inner, inner).map(lambda t: BinOp(*t)),
    ),
    max_leaves=8,
)


@given(xs=st.lists(st.tuples(scalars, scalars), min_size=1, max_size=4))
def test_render_then_parse_is_identity(xs):
    lines = ["point P0 = (0, 0)", "point P1 = (1, 0)"]
    lines += [f"point X{i} = ({a.render()}, {b.render()})" for i, (a, b) in enumerate(xs)]
    script = parse("\n".join(lines))
    again = parse(script.render())
    assert again == script
    for stmt, (a, b) in zip(script.statements[2:], xs):
        assert stmt.expr == PointCoords(a, b)


# -- execution ------------------------------------------------------------------------

def test_i1_constructible():
    trace = execute(parse(bundled("i1")), CONS)
    assert trace.success
    a, b, c = trace["A"], trace["B"], trace["C"]
    assert dist_sq(a, c) == dist_sq(b, c) == dist_sq(a, b)


def test_i1_rational_fails_at_intersection():
    trace = execute(parse(bundled("i1")), RATS)
    assert trace.outcome == "FailedAt(4)"
    assert trace.failure.reason == "NoSqrtInField"
    assert trace.steps[-1].stmt.id == "C"


def test_i1_nonarch():
    assert execute(parse(bundled("i1")), FULL).success
    assert execute(parse(bundled("i1")), SUB).success


def test_i6_cut_off_equal_segments():
    for model in (RATS, CONS, FULL):
        trace = execute(parse(bundled("i6")), model)
        assert isinstance(trace.failure, ConstructionFailed)
        assert trace.failure.reason == "EqualNotLess"


def test_transport_seg_to_far_point():
    trace = execute(parse(bundled("i2")), CONS)
    assert trace.success
    assert dist_sq(trace["A"], trace["L"]) == 1


def test_transport_right_angle():
    text = "\n".join([
        "point C = (0, 0)", "point D = (2, 0)", "point E = (0, 3)",
        "point A = (5, 1)", "point B = (6, 3)",
        "transport_angle(D, C, E, A, B, F)",
        "assert equal_angle(D, C, E, B, A, F)",
    ])
    trace = execute(parse(text), CONS)
    assert trace.success
    got = angle_at(trace["A"], trace["B"], trace["F"])
    assert sign(got.c) == 0


def test_eps_needs_nonarch():
    script = parse("point A = (eps, 0)")
    with pytest.raises(ScriptError):
        execute(script, CONS)
    assert execute(script, FULL).success


def test_infinite_point_is_outside_the_subplane():
    script = parse("point A = (1/eps, 1)")
    assert execute(script, FULL).success
    trace = execute(script, SUB)
    assert trace.failure.reason == "NotInModel"


def test_failing_assert_stops_the_run():
    trace = execute(parse("point A = (0, 0)\npoint B = (1, 0)\npoint C = (2, 1)\nassert collinear(A, B, C)\npoint D = (3, 3)"), RATS)
    assert trace.outcome == "FailedAt(3)" and len(trace.steps) == 4


def test_macro_expansion_shapes():
    assert len(macro_expand("equilateral", ("A", "B", "C"))) == 3
    cut = macro_expand("cut_off", ("g", "l", "E"), {"g": ("A", "B"), "l": ("C", "D")})
    assert isinstance(cut[0], Require) and isinstance(cut[1], MacroCall)
    with pytest.raises(ArityError):
        macro_expand("equilateral", ("A", "B"))
    # hidden ids never collide with what a script may declare
    assert all(s.id.startswith("_") or s.id == "C" for s in macro_expand("equilateral", ("A", "B", "C")) if isinstance(s, Decl))


# -- properties -----------------------------------------------------------------------

@pytest.mark.parametrize("name", SCRIPTS)
@given(seed=st.integers(0, 10**6))
@settings(max_examples=5)
def test_execution_is_deterministic(name, seed):
    script = parse(bundled(name))
    a, b = execute(script, CONS, seed), execute(script, CONS, seed)
    assert a.to_dict() == b.to_dict()


@pytest.mark.parametrize("name", SCRIPTS)
@pytest.mark.parametrize("model", [CONS, FULL, SUB], ids=str)
def test_bindings_satisfy_their_constraints(name, model):
    script = parse(bundled(name))
    for seed in (0, 3):
        assert verify_bindings(execute(script, model, seed), script) == []


@pytest.mark.parametrize("name", SCRIPTS)
@given(seed=st.integers(0, 1000))
@settings(max_examples=4)
def test_subplane_success_carries_to_full_plane(name, seed):
    script = parse(bundled(name))
    sub = execute(script, SUB, seed)
    if sub.success:
        full = execute(script, FULL, seed)
        assert full.success
        assert full.to_dict()["steps"] == sub.to_dict()["steps"]


coords = st.integers(-6, 6)


def _distinct(pts):
    return len(set(pts)) == len(pts)


@given(a=st.tuples(coords, coords), b=st.tuples(coords, coords), c=st.tuples(coords, coords))
@settings(max_examples=15)
def test_transport_seg_preserves_length(a, b, c):
    if not _distinct([a, b, c]):
        return
    text = f"point A = {a}\npoint B = {b}\npoint C = {c}\nsegment s = seg(B, C)\ntransport_seg(A, s, L)"
    trace = execute(parse(text), CONS)
    assert trace.success
    assert sign(dist_sq(trace["A"], trace["L"]) - dist_sq(trace["B"], trace["C"])) == 0


@given(pts=st.lists(st.tuples(coords, coords), min_size=5, max_size=5, unique=True))
@settings(max_examples=15)
def test_transport_angle_preserves_angle(pts):
    c, d, e, a, b = pts
    if (d[0] - c[0]) * (e[1] - c[1]) == (d[1] - c[1]) * (e[0] - c[0]):
        return
    names = "CDEAB"
    text = "\n".join(f"point {n} = {p}" for n, p in zip(names, pts)) + "\ntransport_angle(D, C, E, A, B, F)"
    trace = execute(parse(text), CONS)
    assert trace.success
    env = trace.bindings
    assert angle_equal(
        angle_at(env["C"], env["D"], env["E"]).unsigned(),
        angle_at(env["A"], env["B"], env["F"]).unsigned(),
    )


@given(pts=st.lists(st.tuples(coords, coords), min_size=3, max_size=3, unique=True), seed=st.integers(0, 99))
@settings(max_examples=15)
def test_triangle_sss_matches_sides(pts, seed):
    p, q, r = pts
    if (q[0] - p[0]) * (r[1] - p[1]) == (q[1] - p[1]) * (r[0] - p[0]):
        return
    text = (
        f"point P = {p}\npoint Q = {q}\npoint R = {r}\n"
        "segment a = seg(Q, R)\nsegment b = seg(P, R)\nsegment c = seg(P, Q)\n"
        "triangle_sss(a, b, c, D, G, K)"
    )
    trace = execute(parse(text), CONS, seed)
    assert trace.success
    env = trace.bindings
    for (u, v), (x, y) in ((("D", "G"), ("P", "R")), (("D", "K"), ("Q", "R")), (("G", "K"), ("P", "Q"))):
        assert sign(dist_sq(env[u], env[v]) - dist_sq(env[x], env[y])) == 0
