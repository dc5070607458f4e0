"""Machine-checked verdicts for Book I propositions and the semi-Euclidean experiments.

Every check returns a :class:`PropositionReport`.  Construction failures are
verdicts (``ConstructionImpossible``), never crashes.  A report records its
id, model and seed, so :func:`replay` can recompute it from the report alone;
the witnesses carry the exact intermediate values as strings.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .dsl import ConstructionFailed, execute, parse
from .errors import CoincidentCenters, PrecisionExhausted, TransversalMisses, UnsupportedId
from .fields import FieldTag, Ordering, field_for, sign
from .geometry import (
    AnglePair,
    Line,
    Point,
    PlaneModel,
    Triangle,
    angle_add,
    angle_at,
    angle_between,
    angle_equal,
    angle_sum,
    collinear,
    cross,
    dist_sq,
    dot,
    interior_angles,
    intersect_circles,
    intersect_lines,
    line_through,
    line_with_slope,
    lines_relation,
    meets_in_model,
)
from .magnitudes import Magnitude, trichotomy_check

HOLDS = "Holds"
FAILS = "Fails"
IMPOSSIBLE = "ImpossibleFigure"
CONSTRUCTION_IMPOSSIBLE = "ConstructionImpossible"
NOT_APPLICABLE = "NotApplicable"
VERDICTS = (HOLDS, FAILS, IMPOSSIBLE, CONSTRUCTION_IMPOSSIBLE, NOT_APPLICABLE)


@dataclass
class PropositionReport:
    id: str
    model: str
    verdict: str
    reason: str | None = None
    witnesses: list = field(default_factory=list)
    trace: dict | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def label(self):
        """Verdict with its reason, e.g. ``ConstructionImpossible(NoSqrtInField)``."""
        return f"{self.verdict}({self.reason})" if self.verdict == CONSTRUCTION_IMPOSSIBLE else self.verdict

    def to_dict(self):
        return {
            "id": self.id,
            "model": self.model,
            "seed": self.seed,
            "verdict": self.verdict,
            "reason": self.reason,
            "witnesses": self.witnesses,
            "trace": self.trace,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            id=d["id"],
            model=d["model"],
            verdict=d["verdict"],
            reason=d.get("reason"),
            witnesses=list(d.get("witnesses", [])),
            trace=d.get("trace"),
            seed=d.get("seed"),
        )


def model_from_descriptor(descriptor, window=None):
    """Inverse of ``PlaneModel.descriptor``."""
    name, _, rest = descriptor.partition("+")
    if rest not in ("", "subplane"):
        raise ValueError(f"unknown model {descriptor!r}")
    fld = field_for(name) if window is None else field_for(name, window)
    return PlaneModel(fld, rest == "subplane")


def _pt(p):
    return [str(p.x), str(p.y)]


def _pair(a):
    return [str(a.c), str(a.s)]


def _line(ln):
    return [str(ln.a), str(ln.b), str(ln.c)]


def _has_eps(model):
    return model.field.tag is FieldTag.NONARCH


# -- bundled construction scripts --------------------------------------------------

SCRIPT_FILES = {
    "I.1": "i1.euc", "I.2": "i2.euc", "I.3": "i3.euc", "I.5": "i5.euc", "I.6": "i6.euc",
    "I.22": "i22.euc", "I.23": "i23.euc", "I.32": "i32.euc",
}


def bundled_script(pid):
    text = resources.files("euclidbench.scripts").joinpath(SCRIPT_FILES[pid]).read_text(encoding="utf-8")
    return parse(text)


def _run_script(pid, model, seed):
    trace = execute(bundled_script(pid), model, seed)
    return trace, trace.to_dict()


def _construction(pid, model, seed, post_checks):
    trace, tdict = _run_script(pid, model, seed)
    if not trace.success:
        failure = trace.failure
        if isinstance(failure, ConstructionFailed):
            return PropositionReport(
                pid, model.descriptor, CONSTRUCTION_IMPOSSIBLE, failure.reason,
                [{"step": trace.failed_at, "detail": failure.detail}], tdict, seed,
            )
        return PropositionReport(pid, model.descriptor, FAILS, None, [{"detail": failure.detail}], tdict, seed)
    witnesses = post_checks(trace)
    ok = all(w["holds"] for w in witnesses)
    return PropositionReport(pid, model.descriptor, HOLDS if ok else FAILS, None, witnesses, tdict, seed)


def _seg_check(what, trace, p, q, r, s):
    d1, d2 = dist_sq(trace[p], trace[q]), dist_sq(trace[r], trace[s])
    return {"check": what, "lhs": str(d1), "rhs": str(d2), "holds": sign(d1 - d2) == 0}


def _post_i1(t):
    return [
        _seg_check("AC = AB", t, "A", "C", "A", "B"),
        _seg_check("BC = AB", t, "B", "C", "A", "B"),
    ]


def _post_i2(t):
    return [_seg_check("AL = BC (transported segment congruent)", t, "A", "L", "B", "C")]


def _post_i3(t):
    ok = collinear(t["A"], t["B"], t["E"])
    return [
        _seg_check("AE = CD", t, "A", "E", "C", "D"),
        {"check": "E on AB", "holds": ok},
    ]


def _post_i22(t):
    return [
        _seg_check("DG = b", t, "D", "G", "P", "R"),
        _seg_check("DK = a", t, "D", "K", "P", "Q"),
        _seg_check("GK = c", t, "G", "K", "P", "S"),
    ]


def _post_i23(t):
    a1 = angle_at(t["C"], t["D"], t["E"]).unsigned()
    a2 = angle_at(t["A"], t["B"], t["F"]).unsigned()
    return [{"check": "angle BAF = angle DCE", "lhs": _pair(a1), "rhs": _pair(a2), "holds": angle_equal(a1, a2)}]


def check_I5(model, seed=0):
    trace, tdict = _run_script("I.5", model, seed)
    if not trace.success:
        return PropositionReport("I.5", model.descriptor, FAILS, None, [{"detail": trace.failure.detail}], tdict, seed)
    a, b, c = trace["A"], trace["B"], trace["C"]
    at_b = angle_at(b, a, c).unsigned()
    at_c = angle_at(c, b, a).unsigned()
    ok = angle_equal(at_b, at_c)
    w = [{"check": "angle ABC = angle ACB", "lhs": _pair(at_b), "rhs": _pair(at_c), "holds": ok}]
    return PropositionReport("I.5", model.descriptor, HOLDS if ok else FAILS, None, w, tdict, seed)


def check_I6(model, seed=0):
    """The reductio figure of I.6: cutting the lesser off the greater when they are equal."""
    trace, tdict = _run_script("I.6", model, seed)
    a, b, c = trace["A"], trace["B"], trace["C"]
    # the comparison the reductio rests on: a triangle inside ACB is the lesser
    d = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    part = Magnitude.triangle(Triangle(d, b, c))
    whole = Magnitude.triangle(Triangle(a, c, b))
    tri = trichotomy_check(part, whole)
    witnesses = [{
        "check": "area DBC against area ACB, D inside AB",
        "D": _pt(d),
        "relation": tri.witness["relation"],
        "holds": tri.holds and tri.witness["relation"] == "LT",
    }]
    failure = trace.failure
    if isinstance(failure, ConstructionFailed) and failure.reason == "EqualNotLess":
        witnesses.insert(0, {"step": trace.failed_at, "detail": failure.detail})
        return PropositionReport("I.6", model.descriptor, IMPOSSIBLE, "EqualNotLess", witnesses, tdict, seed)
    return PropositionReport("I.6", model.descriptor, FAILS, None, witnesses, tdict, seed)


# -- I.7 -------------------------------------------------------------------------------

def check_I7_uniqueness(A, B, a_sq, b_sq, model=None, seed=None):
    """Count intersection points of circles (A, a) and (B, b) on the positive side of AB.

    I.7 supposes a second point D on the same side; at most one exists, so the
    reductio figure is impossible.  Over the rationals the points may not be
    constructible, but they are mirror images across AB whenever they exist,
    which decides the count without them.
    """
    if model is None:
        from .fields import tag_of
        model = PlaneModel(field_for(tag_of(A.x)))
    base = {"A": _pt(A), "B": _pt(B), "a_sq": str(a_sq), "b_sq": str(b_sq)}
    try:
        meet = intersect_circles(_circle(A, a_sq), _circle(B, b_sq))
    except CoincidentCenters:
        return PropositionReport("I.7", model.descriptor, NOT_APPLICABLE, "CoincidentCenters", [base], None, seed)
    if meet.kind == "none":
        base["discriminant"] = str(meet.discriminant)
        return PropositionReport("I.7", model.descriptor, NOT_APPLICABLE, "NoIntersection", [base], None, seed)
    axis = B - A
    if meet.kind == "nosqrt":
        # two points mirrored across AB: one on each side
        sides = [1, -1]
        base["discriminant"] = str(meet.discriminant)
        base["solutions"] = "not in the field; mirror images across AB"
    else:
        sides = [sign(cross(axis, p - A)) for p in meet.points]
        base["solutions"] = [{"point": _pt(p), "side": s} for p, s in zip(meet.points, sides)]
    count = sum(1 for s in sides if s > 0)
    base["same_side_count"] = count
    verdict = IMPOSSIBLE if count <= 1 else FAILS
    return PropositionReport("I.7", model.descriptor, verdict, None, [base], None, seed)


def _circle(center, r_sq):
    from .geometry import Circle
    return Circle(center, r_sq)


def _seeded_i7(model, rng):
    F = model.field
    for _ in range(100):
        A = Point(F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        B = Point(F(rng.randint(-5, 5)), F(rng.randint(-5, 5)))
        if A == B:
            continue
        a_sq, b_sq = F(rng.randint(1, 40)), F(rng.randint(1, 40))
        meet = intersect_circles(_circle(A, a_sq), _circle(B, b_sq))
        if meet.kind != "none":
            return A, B, a_sq, b_sq
    raise RuntimeError("no intersecting configuration found")


# -- I.27 ------------------------------------------------------------------------------

def _rotate(v, a):
    """v turned counterclockwise by the angle class a (up to positive scale)."""
    return (a.c * v[0] - a.s * v[1], a.s * v[0] + a.c * v[1])


def check_I27(model, angle_spec, seed=None, E=None, F=None):
    """Equal alternate angles on a transversal EF; is there a meeting point G?

    The line through E turns clockwise from EF by the given angle, the line
    through F turns clockwise from FE by the same angle.  The alternate angles
    are equal by construction; the check shows the lines have one direction
    and never meet, so the triangle EFG of the reductio cannot be drawn.
    """
    fld = model.field
    E = E if E is not None else Point(fld(0), fld(0))
    F = F if F is not None else Point(fld(0), fld(1))
    cw = AnglePair(angle_spec.c, -angle_spec.s)
    d1 = _rotate(F - E, cw)
    d2 = _rotate(E - F, cw)
    l1 = line_through(E, E.shifted(d1))
    l2 = line_through(F, F.shifted(d2))
    alt1 = angle_between(F - E, d1).unsigned()
    alt2 = angle_between(E - F, d2).unsigned()
    slope_cross = cross(d1, d2)
    meet = intersect_lines(l1, l2)
    w = {
        "E": _pt(E), "F": _pt(F), "angle": _pair(angle_spec),
        "line_E": _line(l1), "line_F": _line(l2),
        "alternate_angles": [_pair(alt1), _pair(alt2)],
        "alternate_equal": angle_equal(alt1, alt2),
        "direction_cross": str(slope_cross),
        "slopes_equal": sign(slope_cross) == 0,
        "meeting_point": None if meet is None else _pt(meet),
    }
    ok = w["alternate_equal"] and w["slopes_equal"] and meet is None
    return PropositionReport("I.27", model.descriptor, IMPOSSIBLE if ok else FAILS, None, [w], None, seed)


def _seeded_angle(model, rng):
    F = model.field
    if _has_eps(model) and rng.random() < 0.5:
        return AnglePair(F(rng.randint(1, 4)), F(rng.randint(1, 3)) * F.eps())
    return AnglePair(F(rng.randint(-5, 5)), F(rng.randint(1, 5)))


def _seeded_transversal(model, rng):
    F = model.field
    while True:
        E = Point(F(rng.randint(-6, 6)), F(rng.randint(-6, 6)))
        G = Point(F(rng.randint(-6, 6)), F(rng.randint(-6, 6)))
        if not E == G:
            return E, G


# -- I.29 and the parallel postulate -------------------------------------------------

def _crossings(model, l1, l2, t):
    p1 = meets_in_model(t, l1, model)
    p2 = meets_in_model(t, l2, model)
    if p1 is None or p2 is None:
        raise TransversalMisses("the transversal misses a line in the model")
    if p1 == p2:
        raise TransversalMisses("the transversal crosses both lines at one point")
    return p1, p2


def _toward(line, w, side):
    """Direction of line pointing to the given side (+1 left, -1 right) of w."""
    d = line.direction()
    s = sign(cross(w, d))
    if s == 0:
        raise TransversalMisses("the transversal runs along a line")
    return d if s == side else (-d[0], -d[1])


def check_I29(model, config, seed=None):
    """Alternate angles made by a transversal ``t`` across lines ``l1``, ``l2``.

    ``config`` is ``(l1, l2, t)``.  Applies only when the lines are parallel
    in the model; the verdict is Holds when the alternate angles are equal.
    """
    l1, l2, t = config
    w = {"l1": _line(l1), "l2": _line(l2), "t": _line(t)}
    rel = lines_relation(l1, l2)
    meet = meets_in_model(l1, l2, model) if rel == "meet" else None
    if rel == "identical" or meet is not None:
        full = intersect_lines(l1, l2)
        w["meeting_point"] = None if full is None else _pt(full)
        return PropositionReport("I.29", model.descriptor, NOT_APPLICABLE, "NotParallel", [w], None, seed)
    if rel == "meet":
        w["full_plane_meeting_point"] = _pt(intersect_lines(l1, l2))
    p1, p2 = _crossings(model, l1, l2, t)
    v = p2 - p1
    d1 = _toward(l1, v, -1)
    d2 = _toward(l2, (-v[0], -v[1]), -1)
    alt1 = angle_between(v, d1).unsigned()
    alt2 = angle_between((-v[0], -v[1]), d2).unsigned()
    equal = angle_equal(alt1, alt2)
    w.update({
        "crossings": [_pt(p1), _pt(p2)],
        "alternate_angles": [_pair(alt1), _pair(alt2)],
        "alternate_equal": equal,
    })
    return PropositionReport("I.29", model.descriptor, HOLDS if equal else FAILS, None, [w], None, seed)


def postulate5_check(model, l1, l2, t, seed=None):
    """If the interior angles on one side sum to less than two right angles, the lines meet there."""
    p1, p2 = _crossings(model, l1, l2, t)
    v = p2 - p1
    w = {"l1": _line(l1), "l2": _line(l2), "t": _line(t), "crossings": [_pt(p1), _pt(p2)], "sides": []}
    meet = meets_in_model(l1, l2, model)
    full = intersect_lines(l1, l2)
    w["meeting_point"] = None if meet is None else _pt(meet)
    if full is not None and meet is None:
        w["full_plane_meeting_point"] = _pt(full)
    holds = True
    for side in (1, -1):
        d1 = _toward(l1, v, side)
        d2 = _toward(l2, v, side)
        a1 = angle_between(v, d1).unsigned()
        a2 = angle_between((-v[0], -v[1]), d2).unsigned()
        total = angle_add(a1, a2)
        premise = sign(total.s) > 0
        entry = {"side": side, "interior": [_pair(a1), _pair(a2)], "sum": _pair(total), "premise": premise}
        if premise:
            on_side = meet is not None and sign(cross(v, meet - p1)) == side
            entry["meets_on_side"] = on_side
            holds = holds and on_side
        w["sides"].append(entry)
    return PropositionReport("P5", model.descriptor, HOLDS if holds else FAILS, None, [w], None, seed)


def parallels_through_point(model, P, l, slopes, seed=None):
    """How many of the lines through P with the given slopes miss l in the model."""
    if l.contains(P):
        raise ValueError("P must not lie on l")
    rows, misses = [], 0
    for mu in slopes:
        m = line_with_slope(P, mu)
        rel = lines_relation(m, l)
        p = meets_in_model(m, l, model) if rel == "meet" else None
        miss = rel != "identical" and p is None
        misses += miss
        row = {"slope": str(mu), "line": _line(m), "meets": None if p is None else _pt(p)}
        if miss and rel == "meet":
            row["full_plane_meeting_point"] = _pt(intersect_lines(m, l))
        rows.append(row)
    w = {"P": _pt(P), "l": _line(l), "lines": rows, "multiplicity": misses}
    verdict = FAILS if misses >= 2 else HOLDS if misses == 1 else NOT_APPLICABLE
    return PropositionReport("parallels", model.descriptor, verdict, None, [w], None, seed)


# -- I.32 and the angle sum ---------------------------------------------------------------

def random_triangle(model, rng):
    """A seeded non-degenerate triangle with coordinates in the model.

    Nonarch coordinates get infinitesimal parts; in the full nonarch plane a
    coordinate is sometimes infinite.  Constructible coordinates sometimes
    carry a square root.
    """
    F = model.field

    def coord():
        x = F(rng.randint(-9, 9))
        if model.field.tag is FieldTag.NONARCH:
            e = F.eps()
            x = x + rng.randint(-3, 3) * e + rng.randint(-3, 3) * e * e
            if not model.limited and rng.random() < 0.2:
                x = x + rng.randint(1, 3) / e
        elif model.field.tag is FieldTag.CONSTRUCTIBLE and rng.random() < 0.3:
            x = x + F(rng.choice((2, 3, 5))).sqrt()
        return x

    while True:
        pts = [Point(coord(), coord()) for _ in range(3)]
        if not collinear(*pts):
            return Triangle(*pts)


def check_I32(model, seed=0):
    """Exterior angle equals the two remote interior angles; the three angles make two right angles."""
    trace, tdict = _run_script("I.32", model, seed)
    rng = random.Random(seed)
    t = Triangle(trace["A"], trace["B"], trace["C"]) if seed == 0 else random_triangle(model, rng)
    t = t.counterclockwise()
    a, b, c = t.vertices
    alpha, beta, gamma = interior_angles(t)
    d = c.shifted(c - b)
    exterior = angle_at(c, a, d).unsigned()
    remote = angle_add(alpha, beta)
    total = angle_add(remote, gamma)
    ext_ok = angle_equal(exterior, remote)
    sum_ok = total.is_straight()
    w = [{
        "triangle": [_pt(a), _pt(b), _pt(c)],
        "interior": [_pair(alpha), _pair(beta), _pair(gamma)],
        "exterior_at_C": _pair(exterior),
        "alpha_plus_beta": _pair(remote),
        "exterior_equals_remote": ext_ok,
        "sum": _pair(total),
        "sum_is_two_right": sum_ok,
    }]
    ok = trace.success and ext_ok and sum_ok
    return PropositionReport("I.32", model.descriptor, HOLDS if ok else FAILS, None, w, tdict, seed)


def check_angle_sum(model, seed=0, count=100):
    rng = random.Random(seed)
    failures, sample = [], []
    for i in range(count):
        t = random_triangle(model, rng)
        total = angle_sum(t)
        if i < 3:
            sample.append({"triangle": [_pt(p) for p in t.vertices], "sum": _pair(total)})
        if not total.is_straight():
            failures.append({"triangle": [_pt(p) for p in t.vertices], "sum": _pair(total)})
    w = [{"triangles": count, "all_two_right": not failures, "sample": sample, "failures": failures}]
    return PropositionReport("angle-sum", model.descriptor, FAILS if failures else HOLDS, None, w, None, seed)


# -- configurations for the parallel experiments ------------------------------------------

def semi_config(model, rng=None):
    """y = 1, y = k*eps*x + m*eps**2 and transversal x = 0 (k, m seeded; k=1, m=0 by default)."""
    F = model.field
    e = F.eps()
    k, m = (1, 0) if rng is None else (rng.randint(1, 4), rng.randint(-2, 2))
    zero, one = F(0), F(1)
    l1 = Line.from_coeffs(zero, one, -one)
    l2 = Line.from_coeffs(k * e, -one, m * e * e)
    t = Line.from_coeffs(one, zero, zero)
    return l1, l2, t


def euclid_i29_config(model, rng=None):
    """y = 0, y = 1 and a seeded transversal through (0, 0) with nonzero slope."""
    F = model.field
    zero, one = F(0), F(1)
    l1 = Line.from_coeffs(zero, one, zero)
    l2 = Line.from_coeffs(zero, one, -one)
    slope = F(1) if rng is None else F(Fraction(rng.choice((-1, 1)) * rng.randint(1, 6), rng.randint(1, 3)))
    t = line_with_slope(Point(zero, zero), slope)
    return l1, l2, t


def euclid_p5_config(model, rng=None):
    """y = 0, y = s*x + c and transversal x = 0 (s = 1, c = -10 by default)."""
    F = model.field
    zero, one = F(0), F(1)
    if rng is None:
        s, c = F(1), F(-10)
    else:
        s = F(Fraction(rng.choice((-1, 1)) * rng.randint(1, 6), rng.randint(1, 3)))
        c = F(rng.choice((-1, 1)) * rng.randint(1, 10))
    l1 = Line.from_coeffs(zero, one, zero)
    l2 = line_with_slope(Point(zero, c), s)
    t = Line.from_coeffs(one, zero, zero)
    return l1, l2, t


def _run_i29(model, seed):
    rng = random.Random(seed) if seed else None
    config = semi_config(model, rng) if _has_eps(model) else euclid_i29_config(model, rng)
    return check_I29(model, config, seed)


def _run_p5(model, seed):
    rng = random.Random(seed) if seed else None
    config = semi_config(model, rng) if _has_eps(model) else euclid_p5_config(model, rng)
    return postulate5_check(model, *config, seed=seed)


def _run_parallels(model, seed):
    F = model.field
    zero, one = F(0), F(1)
    P = Point(zero, zero)
    l = Line.from_coeffs(zero, one, -one)
    if _has_eps(model):
        e = F.eps()
        slopes = [zero, e, 2 * e, e * e]
    else:
        slopes = [zero, F(Fraction(1, 2))]
    return parallels_through_point(model, P, l, slopes, seed)


def _run_i7(model, seed):
    rng = random.Random(seed)
    A, B, a_sq, b_sq = _seeded_i7(model, rng)
    return check_I7_uniqueness(A, B, a_sq, b_sq, model, seed)


def _run_i27(model, seed):
    rng = random.Random(seed)
    if seed == 0:
        F = model.field
        return check_I27(model, AnglePair(F(1), F(1)), seed)
    E, G = _seeded_transversal(model, rng)
    return check_I27(model, _seeded_angle(model, rng), seed, E, G)


def _construction_runner(pid, post):
    return lambda model, seed: _construction(pid, model, seed, post)


RUNNERS = {
    "I.1": _construction_runner("I.1", _post_i1),
    "I.2": _construction_runner("I.2", _post_i2),
    "I.3": _construction_runner("I.3", _post_i3),
    "I.5": check_I5,
    "I.6": check_I6,
    "I.7": _run_i7,
    "I.22": _construction_runner("I.22", _post_i22),
    "I.23": _construction_runner("I.23", _post_i23),
    "I.27": _run_i27,
    "I.29": _run_i29,
    "I.32": check_I32,
    "P5": _run_p5,
    "parallels": _run_parallels,
    "angle-sum": check_angle_sum,
}
PROPOSITIONS = tuple(RUNNERS)


def run_proposition(pid, model, seed=0):
    if pid not in RUNNERS:
        raise UnsupportedId(pid)
    try:
        return RUNNERS[pid](model, seed)
    except PrecisionExhausted as err:
        return PropositionReport(pid, model.descriptor, CONSTRUCTION_IMPOSSIBLE, "PrecisionExhausted",
                                 [{"detail": str(err)}], None, seed)


def replay(report, window=None):
    """Recompute a report from its id, model and seed."""
    model = model_from_descriptor(report.model, window)
    return run_proposition(report.id, model, report.seed or 0)


# -- expected verdicts per model ------------------------------------------------------------

_CONSTRUCTIONS = ("I.1", "I.2", "I.3", "I.22", "I.23")
_COMMON = {
    "I.5": HOLDS, "I.6": IMPOSSIBLE, "I.7": IMPOSSIBLE, "I.27": IMPOSSIBLE,
    "I.32": HOLDS, "angle-sum": HOLDS,
}


def _table(constructions, i29, p5, parallels):
    out = {pid: constructions for pid in _CONSTRUCTIONS}
    out.update(_COMMON)
    out.update({"I.29": i29, "P5": p5, "parallels": parallels})
    return out


EXPECTED = {
    "rational": _table(f"{CONSTRUCTION_IMPOSSIBLE}(NoSqrtInField)", HOLDS, HOLDS, HOLDS),
    "constructible": _table(HOLDS, HOLDS, HOLDS, HOLDS),
    "nonarch": _table(HOLDS, NOT_APPLICABLE, HOLDS, HOLDS),
    "nonarch+subplane": _table(HOLDS, FAILS, FAILS, FAILS),
}


def run_suite(model, seed=0):
    """Every proposition for the model, with its expected verdict.

    Returns ``(reports, all_as_expected)``; reports are keyed by id.
    """
    expected = EXPECTED[model.descriptor]
    reports, ok = {}, True
    for pid in PROPOSITIONS:
        report = run_proposition(pid, model, seed)
        reports[pid] = report
        ok = ok and report.label == expected[pid]
    return reports, ok
