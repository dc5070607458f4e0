"""Execution of construction scripts over a plane model."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import (
    CoincidentCenters,
    Degenerate,
    DivisionByZero,
    NegativeRadicand,
    NoSqrtInField,
    PrecisionExhausted,
    ScriptError,
)
from ..fields import FieldTag, sign, sqrt
from ..geometry import (
    Circle,
    Point,
    Triangle,
    angle_at,
    angle_equal,
    angle_sum_is_two_right,
    collinear,
    cross,
    dist_sq,
    dot,
    intersect_circle_line,
    intersect_circles,
    intersect_lines,
    line_through,
    lines_relation,
    meets_in_model,
)
from .ast import (
    Assert,
    BinOp,
    CircleOf,
    Decl,
    Dist,
    Eps,
    FreePoint,
    Intersect,
    LineThrough,
    MacroCall,
    Neg,
    Num,
    PointCoords,
    PointOn,
    RayFrom,
    Require,
    SegmentOf,
    Sqrt,
)
from .macros import macro_expand

MAX_RETRIES = 100
REASONS = ("NoIntersection", "NoSqrtInField", "NotInModel", "EqualNotLess", "PrecisionExhausted")


# -- bound objects ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Span:
    """A line, ray or segment through two defining points p and q."""

    kind: str
    p: Point
    q: Point

    @property
    def line(self):
        return line_through(self.p, self.q)

    def param_sign(self, x):
        """Where x falls along p -> q: -1 before p, 0 between p and q, 1 past q."""
        d = self.q - self.p
        t = dot(x - self.p, d)
        if sign(t) < 0:
            return -1
        return 1 if sign(t - dot(d, d)) > 0 else 0

    def holds(self, x):
        """True if x (already known to be on the line) is on this span."""
        if self.kind == "line":
            return True
        where = self.param_sign(x)
        if self.kind == "ray":
            return where >= 0
        return where == 0

    def contains(self, x):
        return self.line.contains(x) and self.holds(x)


def Ray(p, q):
    return Span("ray", p, q)


def Segment(p, q):
    return Span("segment", p, q)


def serialize(obj):
    """JSON-ready form of a bound object, every scalar as an exact string."""
    if isinstance(obj, Point):
        return {"type": "point", "x": str(obj.x), "y": str(obj.y)}
    if isinstance(obj, Circle):
        return {"type": "circle", "center": serialize(obj.center), "radius_sq": str(obj.radius_sq)}
    if isinstance(obj, Span):
        ln = obj.line
        return {
            "type": obj.kind,
            "through": [serialize(obj.p), serialize(obj.q)],
            "coeffs": [str(ln.a), str(ln.b), str(ln.c)],
        }
    raise TypeError(f"cannot serialize {obj!r}")


# -- outcomes and traces ---------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    obj: object

    def to_dict(self):
        return {"kind": "Bound", "object": serialize(self.obj)}


@dataclass(frozen=True)
class AssertHeld:
    detail: str = ""

    def to_dict(self):
        return {"kind": "AssertHeld", "detail": self.detail}


@dataclass(frozen=True)
class AssertFailed:
    detail: str = ""

    def to_dict(self):
        return {"kind": "AssertFailed", "detail": self.detail}


@dataclass(frozen=True)
class ConstructionFailed:
    reason: str
    detail: str = ""

    def __post_init__(self):
        if self.reason not in REASONS:
            raise ValueError(f"unknown failure reason {self.reason!r}")

    def to_dict(self):
        return {"kind": "ConstructionFailed", "reason": self.reason, "detail": self.detail}


_FAILURES = (AssertFailed, ConstructionFailed)


@dataclass
class Step:
    index: int
    source: int
    stmt: object
    outcome: object

    def to_dict(self):
        return {
            "index": self.index,
            "source": self.source,
            "stmt": self.stmt.render(),
            "outcome": self.outcome.to_dict(),
        }


@dataclass
class Trace:
    script: str
    model: str
    seed: int
    steps: list = field(default_factory=list)
    bindings: dict = field(default_factory=dict)

    @property
    def failed_at(self):
        """Index of the failing step, or None on success."""
        if self.steps and isinstance(self.steps[-1].outcome, _FAILURES):
            return self.steps[-1].index
        return None

    @property
    def success(self):
        return self.failed_at is None

    @property
    def failure(self):
        return None if self.success else self.steps[-1].outcome

    @property
    def outcome(self):
        return "Success" if self.success else f"FailedAt({self.failed_at})"

    def __getitem__(self, name):
        return self.bindings[name]

    def to_dict(self):
        out = {
            "script": self.script,
            "model": self.model,
            "seed": self.seed,
            "outcome": "Success" if self.success else "FailedAt",
            "steps": [s.to_dict() for s in self.steps],
        }
        if not self.success:
            out["failed_at"] = self.failed_at
            out["failure"] = self.failure.to_dict()
        return out


class _Fail(Exception):
    def __init__(self, outcome):
        self.outcome = outcome


# -- the interpreter ----------------------------------------------------------------

class _Machine:
    def __init__(self, model, seed):
        self.model = model
        self.field = model.field
        self.rng = random.Random(seed)
        self.env = {}
        self.segments = {}

    # scalars
    def scalar(self, e):
        F = self.field
        if isinstance(e, Num):
            return F(e.value)
        if isinstance(e, Eps):
            return F.eps()
        if isinstance(e, Dist):
            return sqrt(dist_sq(self.env[e.p], self.env[e.q]))
        if isinstance(e, Sqrt):
            return sqrt(self.scalar(e.arg))
        if isinstance(e, Neg):
            return -self.scalar(e.arg)
        if isinstance(e, BinOp):
            a, b = self.scalar(e.left), self.scalar(e.right)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            if sign(b) == 0:
                raise Degenerate("division by zero in a scalar expression")
            return a / b
        raise TypeError(e)

    # random points
    def _points(self):
        return [v for v in self.env.values() if isinstance(v, Point)]

    def _fresh(self, make, avoid_collinear):
        existing = self._points()
        for _ in range(MAX_RETRIES):
            p = make()
            if any(p == q for q in existing):
                continue
            if avoid_collinear and any(
                collinear(p, existing[i], existing[j])
                for i in range(len(existing))
                for j in range(i + 1, len(existing))
            ):
                continue
            return p
        raise Degenerate(f"no non-degenerate random point after {MAX_RETRIES} tries")

    def free_point(self):
        F, rng = self.field, self.rng

        def make():
            return Point(F(rng.randint(-6, 6)), F(rng.randint(-6, 6)))

        return self._fresh(make, avoid_collinear=True)

    def point_on(self, obj):
        F, rng = self.field, self.rng
        if isinstance(obj, Span):
            d = obj.q - obj.p

            def make():
                if obj.kind == "segment":
                    m = rng.randint(2, 6)
                    t = Fraction(rng.randint(1, m - 1), m)
                elif obj.kind == "ray":
                    t = Fraction(rng.randint(1, 12), rng.randint(1, 4))
                else:
                    t = Fraction(rng.randint(-12, 12), rng.randint(1, 4))
                return obj.p.shifted(d, F(t))

            return self._fresh(make, avoid_collinear=False)
        r = sqrt(obj.radius_sq)

        def make():
            m = F(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
            den = 1 + m * m
            return Point(obj.center.x + r * (1 - m * m) / den, obj.center.y + r * 2 * m / den)

        return self._fresh(make, avoid_collinear=False)

    # intersections
    def _choose_on_span(self, pts, span, selector):
        a, b = pts
        d = span.q - span.p
        if selector in ("first", "second"):
            later = sign(dot(b - a, d)) > 0  # b comes after a along the span
            first, second = (a, b) if later else (b, a)
            return first if selector == "first" else second
        if selector in ("upper", "lower"):
            key = (sign(b.y - a.y), sign(b.x - a.x))
            b_greater = key > (0, 0)
            hi, lo = (b, a) if b_greater else (a, b)
            return hi if selector == "upper" else lo
        key = (sign(b.x - a.x), sign(a.y - b.y))
        b_right = key > (0, 0)
        right, left = (b, a) if b_right else (a, b)
        return left if selector == "left" else right

    def intersect(self, e):
        u, v = self.env[e.a], self.env[e.b]
        if isinstance(u, Span) and isinstance(v, Span):
            p = intersect_lines(u.line, v.line)
            if p is None:
                raise _Fail(ConstructionFailed("NoIntersection", "the lines do not meet"))
            spans = (u, v)
        else:
            if isinstance(u, Span):
                u, v = v, u
            if isinstance(v, Span):
                meet = intersect_circle_line(u, v.line)
                spans = (v,)
            else:
                try:
                    meet = intersect_circles(u, v)
                except CoincidentCenters:
                    raise _Fail(ConstructionFailed("NoIntersection", "concentric circles")) from None
                spans = ()
            if meet.kind == "none":
                raise _Fail(ConstructionFailed("NoIntersection", f"discriminant {meet.discriminant} < 0"))
            if meet.kind == "nosqrt":
                raise _Fail(ConstructionFailed(
                    "NoSqrtInField", f"discriminant {meet.discriminant} is not a square in the field"))
            if meet.kind == "one":
                p = meet.points[0]
            elif spans:
                p = self._choose_on_span(meet.points, spans[0], e.selector)
            else:
                p = self._choose_on_circles(meet.points, u, v, e.selector)
        for s in spans:
            if not s.holds(p):
                raise _Fail(ConstructionFailed("NoIntersection", f"the meeting point lies off the {s.kind}"))
        return p

    def _choose_on_circles(self, pts, c1, c2, selector):
        if selector in ("first", "second"):
            return pts[0] if selector == "first" else pts[1]
        axis = c2.center - c1.center
        a = pts[0]
        a_left = sign(cross(axis, a - c1.center)) > 0
        left, right = (pts[0], pts[1]) if a_left else (pts[1], pts[0])
        return left if selector in ("upper", "left") else right

    # declarations
    def decl(self, s):
        e = s.expr
        env = self.env
        if isinstance(e, PointCoords):
            obj = Point(self.scalar(e.x), self.scalar(e.y))
        elif isinstance(e, FreePoint):
            obj = self.free_point()
        elif isinstance(e, PointOn):
            obj = self.point_on(env[e.obj])
        elif isinstance(e, Intersect):
            obj = self.intersect(e)
        elif isinstance(e, (LineThrough, RayFrom, SegmentOf)):
            p, q = env[e.p], env[e.q]
            if p == q:
                raise Degenerate(f"{s.id}: both defining points are equal")
            kind = {LineThrough: "line", RayFrom: "ray", SegmentOf: "segment"}[type(e)]
            obj = Span(kind, p, q)
            if kind == "segment":
                self.segments[s.id] = (e.p, e.q)
        elif isinstance(e, CircleOf):
            center = env[e.center]
            if isinstance(e.radius, Dist):
                r2 = dist_sq(env[e.radius.p], env[e.radius.q])
            else:
                r = self.scalar(e.radius)
                if sign(r) <= 0:
                    raise Degenerate(f"{s.id}: the radius must be positive")
                r2 = r * r
            if sign(r2) == 0:
                raise Degenerate(f"{s.id}: the radius must be positive")
            obj = Circle(center, r2)
        else:
            raise TypeError(e)
        if isinstance(obj, Point) and not self.model.contains(obj):
            raise _Fail(ConstructionFailed("NotInModel", f"{obj} is outside {self.model}"))
        env[s.id] = obj
        return Bound(obj)

    # predicates
    def _seg_pairs(self, args):
        out, i = [], 0
        while i < len(args):
            if args[i] in self.segments:
                p, q = self.segments[args[i]]
                i += 1
            else:
                p, q = args[i], args[i + 1]
                i += 2
            out.append((self.env[p], self.env[q]))
        return out

    def predicate(self, pred, args):
        """(holds, detail) for a predicate on bound objects."""
        env = self.env
        if pred == "equal_seg":
            lens = [dist_sq(p, q) for p, q in self._seg_pairs(args)]
            holds = all(sign(x - lens[0]) == 0 for x in lens[1:])
            return holds, "squared lengths " + ", ".join(str(x) for x in lens)
        if pred == "less_seg":
            (a, b), (c, d) = self._seg_pairs(args)
            s = sign(dist_sq(a, b) - dist_sq(c, d))
            return s < 0, ("lesser", "equal", "greater")[s + 1]
        if pred == "equal_angle":
            a, v, b, c, w, d = (env[x] for x in args)
            x, y = angle_at(v, a, b).unsigned(), angle_at(w, c, d).unsigned()
            return angle_equal(x, y), f"angle pairs {x} and {y}"
        if pred in ("parallel", "meets"):
            l1, l2 = env[args[0]].line, env[args[1]].line
            rel = lines_relation(l1, l2)
            if rel == "identical":
                return pred == "meets", "the lines coincide"
            p = meets_in_model(l1, l2, self.model) if rel == "meet" else None
            detail = "no meeting point in the model" if p is None else f"meet at {p}"
            return (p is None) == (pred == "parallel"), detail
        if pred == "collinear":
            return collinear(*(env[x] for x in args)), ""
        if pred == "angle_sum_pi":
            pts = [env[x] for x in args]
            if collinear(*pts):
                return False, "the points are collinear"
            return angle_sum_is_two_right(Triangle(*pts)), ""
        raise ValueError(pred)

    def check(self, s):
        holds, detail = self.predicate(s.pred, s.args)
        if holds:
            return AssertHeld(detail)
        if isinstance(s, Require) and s.pred == "less_seg":
            raise _Fail(ConstructionFailed("EqualNotLess", f"the segments are not lesser and greater ({detail})"))
        raise _Fail(AssertFailed(f"{s.render()}: {detail}"))


def execute(script, model, seed=0):
    """Run the script in the model; stops at the first failing step."""
    if script.uses_eps() and model.field.tag is not FieldTag.NONARCH:
        raise ScriptError(f"script {script.name!r} uses eps, which needs the nonarch field")
    m = _Machine(model, seed)
    trace = Trace(script.name, model.descriptor, seed)
    queue = [(i, s) for i, s in enumerate(script.statements)]
    while queue:
        source, s = queue.pop(0)
        if isinstance(s, MacroCall):
            expanded = macro_expand(s.name, s.args, m.segments, s.selector)
            queue[:0] = [(source, x) for x in expanded]
            continue
        try:
            if isinstance(s, Decl):
                outcome = m.decl(s)
            elif isinstance(s, (Assert, Require)):
                outcome = m.check(s)
            else:
                raise TypeError(s)
        except _Fail as f:
            outcome = f.outcome
        except NoSqrtInField as err:
            outcome = ConstructionFailed("NoSqrtInField", str(err))
        except PrecisionExhausted as err:
            outcome = ConstructionFailed("PrecisionExhausted", str(err))
        except (NegativeRadicand, DivisionByZero) as err:
            raise Degenerate(str(err)) from err
        trace.steps.append(Step(len(trace.steps), source, s, outcome))
        if isinstance(outcome, _FAILURES):
            break
    trace.bindings = dict(m.env)
    return trace


def verify_bindings(trace, script):
    """Recheck every binding against its defining constraints; returns the violations."""
    env = trace.bindings
    bad = []
    for step in trace.steps:
        s = step.stmt
        if not isinstance(step.outcome, Bound) or not isinstance(s, Decl):
            continue
        obj, e = env[s.id], s.expr
        if isinstance(e, Intersect):
            for other in (env[e.a], env[e.b]):
                if not other.contains(obj):
                    bad.append(f"{s.id} is not on {e.a if other is env[e.a] else e.b}")
        elif isinstance(e, PointOn):
            if not env[e.obj].contains(obj):
                bad.append(f"{s.id} is not on {e.obj}")
        elif isinstance(e, (LineThrough, RayFrom, SegmentOf)):
            if not (obj.contains(env[e.p]) and obj.contains(env[e.q])):
                bad.append(f"{s.id} misses a defining point")
        elif isinstance(e, CircleOf) and isinstance(e.radius, Dist):
            if sign(obj.radius_sq - dist_sq(env[e.radius.p], env[e.radius.q])) != 0:
                bad.append(f"{s.id} has the wrong radius")
    return bad
