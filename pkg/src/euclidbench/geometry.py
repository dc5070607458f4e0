"""Exact analytic plane geometry over any of the field backends.

Angles are never measured.  An angle is an :class:`AnglePair` ``(c, s)``: the
dot and cross products of its two arms, defined up to a positive factor.
Equality, order and addition of angles are all decidable on such pairs with
ring operations alone, so every verdict here is exact in every backend.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import (
    CoincidentCenters,
    CoincidentPoints,
    DegenerateTriangle,
    KindMismatch,
    NoSqrtInField,
)
from .fields import Field, FieldTag, Ordering, is_limited, sign, sqrt


@dataclass(frozen=True, eq=False)
class Point:
    x: object
    y: object

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    __hash__ = None

    def __sub__(self, other):
        return (self.x - other.x, self.y - other.y)

    def shifted(self, v, t=1):
        return Point(self.x + t * v[0], self.y + t * v[1])

    def __str__(self):
        return f"({self.x}, {self.y})"


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dist_sq(p, q):
    d = p - q
    return dot(d, d)


def area2(p, q, r):
    """Doubled signed area; positive when p, q, r run counterclockwise."""
    return cross(q - p, r - p)


def collinear(p, q, r):
    return sign(area2(p, q, r)) == 0


@dataclass(frozen=True, eq=False)
class Line:
    """The line a*x + b*y + c = 0, scaled so the first nonzero of (a, b) is 1.

    Over the series field the scaling is skipped when dividing by the leading
    coefficient would truncate; the line is then kept with its coefficients
    as given.  Equality is proportionality of (a, b, c) either way.
    """

    a: object
    b: object
    c: object

    @classmethod
    def from_coeffs(cls, a, b, c):
        if sign(a) != 0:
            lead = a
        elif sign(b) != 0:
            lead = b
        else:
            raise ValueError("a line needs (a, b) != (0, 0)")
        scaled = (a / lead, b / lead, c / lead)
        if any(getattr(v, "exact", True) is False for v in scaled):
            return cls(a, b, c)
        return cls(*scaled)

    def value_at(self, p):
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p):
        return sign(self.value_at(p)) == 0

    def direction(self):
        return (self.b, -self.a)

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return (
            sign(self.a * other.b - other.a * self.b) == 0
            and sign(self.a * other.c - other.a * self.c) == 0
            and sign(self.b * other.c - other.b * self.c) == 0
        )

    __hash__ = None

    def __str__(self):
        return f"{self.a}*x + {self.b}*y + {self.c} = 0"


@dataclass(frozen=True, eq=False)
class Circle:
    center: Point
    radius_sq: object

    def __post_init__(self):
        if sign(self.radius_sq) <= 0:
            raise ValueError("circle radius must be positive")

    def contains(self, p):
        return sign(dist_sq(self.center, p) - self.radius_sq) == 0

    __hash__ = None


@dataclass(frozen=True)
class Meet:
    """Outcome of a circle intersection.

    ``kind`` is ``"two"``, ``"one"``, ``"none"`` or ``"nosqrt"``; the last
    happens only over the rationals, when the discriminant is positive but
    not a rational square.
    """

    kind: str
    points: tuple = ()
    discriminant: object = None

    def __bool__(self):
        return bool(self.points)


@dataclass(frozen=True, eq=False)
class AnglePair:
    """Angle class of the pair (dot, cross) up to positive scaling."""

    c: object
    s: object

    def __post_init__(self):
        if sign(self.c) == 0 and sign(self.s) == 0:
            raise ValueError("(0, 0) is not an angle")

    def unsigned(self):
        """The undirected angle in [0, pi]."""
        return AnglePair(self.c, -self.s) if sign(self.s) < 0 else self

    def conjugate(self):
        return AnglePair(self.c, -self.s)

    def is_straight(self):
        """True for the class of two right angles."""
        return sign(self.s) == 0 and sign(self.c) < 0

    def is_zero_angle(self):
        return sign(self.s) == 0 and sign(self.c) > 0

    def __str__(self):
        return f"({self.c}, {self.s})"


@dataclass(frozen=True, eq=False)
class Triangle:
    p: Point
    q: Point
    r: Point

    def __post_init__(self):
        if collinear(self.p, self.q, self.r):
            raise DegenerateTriangle("triangle vertices are collinear")

    @property
    def vertices(self):
        return (self.p, self.q, self.r)

    def area2(self):
        """Doubled absolute area."""
        a = area2(self.p, self.q, self.r)
        return -a if sign(a) < 0 else a

    def counterclockwise(self):
        if sign(area2(self.p, self.q, self.r)) > 0:
            return self
        return Triangle(self.p, self.r, self.q)


@dataclass(frozen=True)
class PlaneModel:
    """Where geometry is interpreted: a full plane F x F, or the limited subplane L x L."""

    field: Field
    limited: bool = False

    def __post_init__(self):
        if self.limited and self.field.tag is not FieldTag.NONARCH:
            raise ValueError("the limited subplane needs the nonarch field")

    @property
    def descriptor(self):
        name = self.field.tag.value
        return name + "+subplane" if self.limited else name

    def contains(self, p):
        if not self.limited:
            return True
        return is_limited(p.x) and is_limited(p.y)

    def __str__(self):
        return self.descriptor


def full_plane(field):
    return PlaneModel(field, False)


def limited_subplane(field):
    return PlaneModel(field, True)


# -- lines ----------------------------------------------------------------------

def line_through(p, q):
    if p == q:
        raise CoincidentPoints(f"no unique line through {p} twice")
    a = q.y - p.y
    b = p.x - q.x
    return Line.from_coeffs(a, b, -(a * p.x + b * p.y))


def line_with_slope(p, slope):
    """The line y - p.y = slope * (x - p.x)."""
    return Line.from_coeffs(slope, slope * 0 - 1, p.y - slope * p.x)


def lines_relation(l1, l2):
    """'meet', 'parallel' or 'identical'."""
    det = l1.a * l2.b - l2.a * l1.b
    if sign(det) != 0:
        return "meet"
    return "identical" if l1 == l2 else "parallel"


def intersect_lines(l1, l2):
    det = l1.a * l2.b - l2.a * l1.b
    if sign(det) == 0:
        return None
    x = (l1.b * l2.c - l2.b * l1.c) / det
    y = (l2.a * l1.c - l1.a * l2.c) / det
    return Point(x, y)


def meets_in_model(l1, l2, model):
    p = intersect_lines(l1, l2)
    if p is None or not model.contains(p):
        return None
    return p


# -- circles -------------------------------------------------------------------

def intersect_circle_line(circle, line):
    a, b = line.a, line.b
    norm = a * a + b * b
    k = line.value_at(circle.center)
    foot = Point(circle.center.x - a * k / norm, circle.center.y - b * k / norm)
    disc = circle.radius_sq / norm - (k * k) / (norm * norm)
    s = sign(disc)
    if s < 0:
        return Meet("none", (), disc)
    if s == 0:
        return Meet("one", (foot,), disc)
    try:
        t = sqrt(disc)
    except NoSqrtInField:
        return Meet("nosqrt", (), disc)
    d = line.direction()
    return Meet("two", (foot.shifted(d, t), foot.shifted(d, -t)), disc)


def radical_line(c1, c2):
    p, q = c1.center, c2.center
    if p == q:
        raise CoincidentCenters("concentric circles have no radical line")
    return Line.from_coeffs(
        2 * (q.x - p.x),
        2 * (q.y - p.y),
        dot((p.x, p.y), (p.x, p.y)) - c1.radius_sq - dot((q.x, q.y), (q.x, q.y)) + c2.radius_sq,
    )


def intersect_circles(c1, c2):
    return intersect_circle_line(c1, radical_line(c1, c2))


# -- angles -----------------------------------------------------------------------

def angle_at(v, p, q):
    """Angle at vertex v from arm vp to arm vq."""
    if p == v or q == v:
        raise CoincidentPoints("an angle arm has zero length")
    u, w = p - v, q - v
    return AnglePair(dot(u, w), cross(u, w))


def angle_between(u, w):
    """Angle from direction vector u to direction vector w."""
    return AnglePair(dot(u, w), cross(u, w))


def angle_equal(a1, a2):
    return (
        sign(a1.c * a2.s - a2.c * a1.s) == 0
        and sign(a1.c) == sign(a2.c)
        and sign(a1.s) == sign(a2.s)
    )


def angle_add(a1, a2):
    return AnglePair(a1.c * a2.c - a1.s * a2.s, a1.s * a2.c + a1.c * a2.s)


def _half(a):
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    s = sign(a.s)
    return 0 if s > 0 or (s == 0 and sign(a.c) > 0) else 1


def angle_compare(a1, a2):
    """Order of the angles read counterclockwise in [0, 2 pi)."""
    h1, h2 = _half(a1), _half(a2)
    if h1 != h2:
        return Ordering.LT if h1 < h2 else Ordering.GT
    return Ordering(-sign(a1.c * a2.s - a1.s * a2.c))


def interior_angles(t):
    t = t.counterclockwise()
    p, q, r = t.vertices
    return angle_at(p, q, r), angle_at(q, r, p), angle_at(r, p, q)


def angle_sum(t):
    a, b, c = interior_angles(t)
    return angle_add(angle_add(a, b), c)


def angle_sum_is_two_right(t):
    return angle_sum(t).is_straight()


# -- comparisons and congruence -----------------------------------------------------

def compare_figures(kind, f1, f2):
    """Total order of two same-kind figures.

    kind ``"segment"``: pairs of points, by length; ``"angle"``: AnglePairs;
    ``"triangle"``: Triangles, by doubled area.
    """
    if kind == "segment":
        return Ordering(sign(dist_sq(*f1) - dist_sq(*f2)))
    if kind == "angle":
        if not isinstance(f1, AnglePair) or not isinstance(f2, AnglePair):
            raise KindMismatch("angle comparison needs two AnglePairs")
        return angle_compare(f1, f2)
    if kind == "triangle":
        if not isinstance(f1, Triangle) or not isinstance(f2, Triangle):
            raise KindMismatch("triangle comparison needs two Triangles")
        return Ordering(sign(f1.area2() - f2.area2()))
    raise KindMismatch(f"unknown figure kind {kind!r}")


def _sides(p, q, r):
    return dist_sq(p, q), dist_sq(q, r), dist_sq(r, p)


def sss_correspondence(t1, t2):
    """A vertex order of t2 matching the sides of t1, or None."""
    s1 = _sides(*t1.vertices)
    for perm in permutations(t2.vertices):
        s2 = _sides(*perm)
        if all(sign(x - y) == 0 for x, y in zip(s1, s2)):
            return perm
    return None


def triangles_congruent_sss(t1, t2):
    perm = sss_correspondence(t1, t2)
    if perm is None:
        return False
    p, q, r = t1.vertices
    p2, q2, r2 = perm
    for (v, a, b), (v2, a2, b2) in (
        ((p, q, r), (p2, q2, r2)),
        ((q, r, p), (q2, r2, p2)),
        ((r, p, q), (r2, p2, q2)),
    ):
        assert angle_equal(angle_at(v, a, b).unsigned(), angle_at(v2, a2, b2).unsigned())
    return True
