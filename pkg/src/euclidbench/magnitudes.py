"""Magnitudes of one kind as an ordered additive semigroup, with checkable axioms.

Segments are represented by their length, triangles by doubled area and
angles by an :class:`~euclidbench.geometry.AnglePair`.  Each axiom check
returns an :class:`AxiomVerdict` whose witness holds the operands and the
intermediate values as exact strings, enough to replay the check.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import KindMismatch, NotGreater
from .fields import MagnitudeClass, Ordering, archimedean_witness, classify, compare, sign
from .geometry import AnglePair, angle_add, angle_compare, angle_equal, dist_sq


class Kind(enum.Enum):
    SEGMENT = "segment"
    ANGLE = "angle"
    TRIANGLE = "triangle"


AXIOMS = ("E1", "E2", "E3", "E4", "E5", "CN1", "CN2", "CN3", "CN5", "Trichotomy")

_ARITY = {
    "E1": 2, "E2": 2, "E3": 3, "E4": 1, "E5": 3,
    "CN1": 3, "CN2": 4, "CN3": 4, "CN5": 2, "Trichotomy": 2,
}


@dataclass(frozen=True, eq=False)
class Magnitude:
    kind: Kind
    value: object

    def __post_init__(self):
        if self.kind is Kind.ANGLE:
            if not isinstance(self.value, AnglePair) or self.value.is_zero_angle():
                raise ValueError("an angle magnitude must be a nonzero AnglePair")
        elif sign(self.value) <= 0:
            raise ValueError("magnitudes are positive")

    @classmethod
    def segment(cls, length):
        return cls(Kind.SEGMENT, length)

    @classmethod
    def segment_between(cls, p, q):
        from .fields import sqrt
        return cls(Kind.SEGMENT, sqrt(dist_sq(p, q)))

    @classmethod
    def angle(cls, pair):
        return cls(Kind.ANGLE, pair)

    @classmethod
    def triangle(cls, t):
        return cls(Kind.TRIANGLE, t.area2())

    def _check(self, other):
        if not isinstance(other, Magnitude) or other.kind is not self.kind:
            raise KindMismatch(f"cannot combine {self.kind.value} with {getattr(other, 'kind', other)}")

    def __add__(self, other):
        self._check(other)
        if self.kind is Kind.ANGLE:
            return Magnitude(self.kind, angle_add(self.value, other.value))
        return Magnitude(self.kind, self.value + other.value)

    def __sub__(self, other):
        """The lesser taken from the greater."""
        self._check(other)
        if self.compare(other) is not Ordering.GT:
            raise NotGreater("can only take the lesser from the greater")
        if self.kind is Kind.ANGLE:
            return Magnitude(self.kind, angle_add(self.value, other.value.conjugate()))
        return Magnitude(self.kind, self.value - other.value)

    def times(self, n):
        out = self
        for _ in range(n - 1):
            out = out + self
        return out

    def compare(self, other):
        self._check(other)
        if self.kind is Kind.ANGLE:
            return angle_compare(self.value, other.value)
        return compare(self.value, other.value)

    def equals(self, other):
        self._check(other)
        if self.kind is Kind.ANGLE:
            return angle_equal(self.value, other.value)
        return compare(self.value, other.value) is Ordering.EQ

    def text(self):
        if self.kind is Kind.ANGLE:
            return [str(self.value.c), str(self.value.s)]
        return str(self.value)


@dataclass
class AxiomVerdict:
    axiom: str
    holds: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self):
        return {"axiom": self.axiom, "holds": self.holds, "witness": self.witness}


def _same_kind(operands):
    kinds = {m.kind for m in operands}
    if len(kinds) != 1:
        raise KindMismatch("axioms relate magnitudes of one kind")
    return operands[0].kind


def _scalar_only(axiom, kind):
    if kind is Kind.ANGLE:
        raise KindMismatch(f"{axiom} is only checkable on segment and triangle magnitudes")


def check_axiom(axiom, operands, n=None):
    """Check one of E1-E5, CN1-CN3, CN5 or Trichotomy on concrete magnitudes."""
    if axiom not in _ARITY:
        raise ValueError(f"unknown axiom {axiom!r}")
    operands = tuple(operands)
    if len(operands) != _ARITY[axiom]:
        raise ValueError(f"{axiom} takes {_ARITY[axiom]} operands, got {len(operands)}")
    kind = _same_kind(operands)
    w = {"kind": kind.value, "operands": [m.text() for m in operands]}
    if n is not None:
        w["n"] = n
    holds = _CHECKS[axiom](operands, n, w)
    return AxiomVerdict(axiom, holds, w)


def _e1(ops, n, w):
    a, b = ops
    _scalar_only("E1", a.kind)
    ratio_class = classify(b.value / a.value)
    w["ratio_class"] = ratio_class.value
    found = archimedean_witness(a.value, b.value)
    if found is None:
        return False
    w["n"] = found
    return a.times(found).compare(b) is Ordering.GT


def _e2(ops, n, w):
    a, b = ops
    if a.compare(b) is not Ordering.GT:
        w["premise"] = False
        return True
    c = a - b
    w["c"] = c.text()
    return (b + c).equals(a)


def _e3(ops, n, w):
    a, b, c = ops
    if a.compare(b) is not Ordering.GT:
        w["premise"] = False
        return True
    w["a+c"], w["b+c"] = (a + c).text(), (b + c).text()
    return (a + c).compare(b + c) is Ordering.GT


def _e4(ops, n, w):
    (a,) = ops
    _scalar_only("E4", a.kind)
    if n is None or n < 1:
        raise ValueError("E4 needs a natural n")
    b = Magnitude(a.kind, a.value / n)
    w["b"] = b.text()
    return b.times(n).equals(a)


def _e5(ops, n, w):
    a, b, c = ops
    _scalar_only("E5", a.kind)
    # a : b :: c : d read as the cross-product equality a*d = b*c
    bc = b.value * c.value
    d = bc / a.value
    if getattr(d, "exact", True):
        w["d"] = str(d)
        w["a*d"], w["b*c"] = str(a.value * d), str(bc)
        return sign(a.value * d - bc) == 0
    # the quotient does not terminate as a series: keep d = num/den and clear the denominator
    num, den = bc, a.value
    w["d"] = {"num": str(num), "den": str(den), "approx": str(d)}
    w["a*num"], w["b*c*den"] = str(a.value * num), str(bc * den)
    return sign(a.value * num - bc * den) == 0


def _cn1(ops, n, w):
    a, b, c = ops
    if not (a.equals(b) and b.equals(c)):
        w["premise"] = False
        return True
    return a.equals(c)


def _cn2(ops, n, w):
    a, a2, b, b2 = ops
    if not (a.equals(a2) and b.equals(b2)):
        w["premise"] = False
        return True
    w["a+b"], w["a'+b'"] = (a + b).text(), (a2 + b2).text()
    return (a + b).equals(a2 + b2)


def _cn3(ops, n, w):
    a, a2, b, b2 = ops
    if a.compare(b) is not Ordering.GT or a2.compare(b2) is not Ordering.GT:
        raise NotGreater("CN3 subtracts the lesser from the greater")
    if not (a.equals(a2) and b.equals(b2)):
        w["premise"] = False
        return True
    w["a-b"], w["a'-b'"] = (a - b).text(), (a2 - b2).text()
    return (a - b).equals(a2 - b2)


def _cn5(ops, n, w):
    a, b = ops
    whole = a + b
    w["a+b"] = whole.text()
    return whole.compare(a) is Ordering.GT


def _trichotomy(ops, n, w):
    a, b = ops
    order = a.compare(b)
    lt = order is Ordering.LT
    eq = a.equals(b)
    gt = b.compare(a) is Ordering.LT
    w["relation"] = order.name
    return (lt + eq + gt) == 1


_CHECKS = {
    "E1": _e1, "E2": _e2, "E3": _e3, "E4": _e4, "E5": _e5,
    "CN1": _cn1, "CN2": _cn2, "CN3": _cn3, "CN5": _cn5, "Trichotomy": _trichotomy,
}


def cn_apply(cn, operands):
    if cn not in ("CN1", "CN2", "CN3", "CN5"):
        raise ValueError(f"unknown common notion {cn!r}")
    return check_axiom(cn, operands)


def trichotomy_check(a, b):
    return check_axiom("Trichotomy", (a, b))


def e1_fails_exactly_when_infinite(a, b):
    """Cross-check: E1 fails on (a, b) iff b/a is infinite."""
    verdict = check_axiom("E1", (a, b))
    infinite = classify(b.value / a.value) is MagnitudeClass.INFINITE
    return verdict.holds != infinite


def replay(verdict, fld):
    """Re-run a verdict from its witness alone and return the fresh verdict."""
    w = verdict.witness
    kind = Kind(w["kind"])
    ops = []
    for text in w["operands"]:
        if kind is Kind.ANGLE:
            ops.append(Magnitude(kind, AnglePair(fld.parse(text[0]), fld.parse(text[1]))))
        else:
            ops.append(Magnitude(kind, fld.parse(text)))
    n = w.get("n") if verdict.axiom == "E4" else None
    return check_axiom(verdict.axiom, ops, n)
