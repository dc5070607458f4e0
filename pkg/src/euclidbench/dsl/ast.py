"""Syntax tree of construction scripts and its canonical text form."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

SELECTORS = ("first", "second", "upper", "lower", "left", "right")
PREDICATES = ("equal_seg", "less_seg", "equal_angle", "parallel", "meets", "collinear", "angle_sum_pi")
MACROS = ("equilateral", "transport_seg", "cut_off", "triangle_sss", "transport_angle")


# -- scalar expressions ---------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction
    text: str

    def render(self):
        return self.text


@dataclass(frozen=True)
class Eps:
    def render(self):
        return "eps"


@dataclass(frozen=True)
class Dist:
    p: str
    q: str

    def render(self):
        return f"dist({self.p}, {self.q})"


@dataclass(frozen=True)
class Sqrt:
    arg: object

    def render(self):
        return f"sqrt({self.arg.render()})"


@dataclass(frozen=True)
class Neg:
    arg: object

    def render(self):
        inner = self.arg.render()
        return f"-({inner})" if isinstance(self.arg, (BinOp, Neg)) else f"-{inner}"


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object

    def render(self):
        p = _PREC[self.op]
        left = self.left.render()
        if isinstance(self.left, BinOp) and _PREC[self.left.op] < p:
            left = f"({left})"
        right = self.right.render()
        # left-associative: an equal-precedence right operand needs parentheses
        if isinstance(self.right, BinOp) and _PREC[self.right.op] <= p:
            right = f"({right})"
        elif isinstance(self.right, Neg):
            right = f"({right})"
        return f"{left} {self.op} {right}"


def scalar_uses_eps(e):
    if isinstance(e, Eps):
        return True
    if isinstance(e, (Sqrt, Neg)):
        return scalar_uses_eps(e.arg)
    if isinstance(e, BinOp):
        return scalar_uses_eps(e.left) or scalar_uses_eps(e.right)
    return False


# -- object expressions ---------------------------------------------------------

@dataclass(frozen=True)
class PointCoords:
    x: object
    y: object

    def render(self):
        return f"({self.x.render()}, {self.y.render()})"


@dataclass(frozen=True)
class FreePoint:
    def render(self):
        return "free"


@dataclass(frozen=True)
class PointOn:
    obj: str

    def render(self):
        return f"on {self.obj}"


@dataclass(frozen=True)
class Intersect:
    a: str
    b: str
    selector: str | None = None

    def render(self):
        sel = f"[{self.selector}]" if self.selector else ""
        return f"intersect({self.a}, {self.b}){sel}"


@dataclass(frozen=True)
class LineThrough:
    p: str
    q: str

    def render(self):
        return f"line({self.p}, {self.q})"


@dataclass(frozen=True)
class RayFrom:
    p: str
    q: str

    def render(self):
        return f"ray({self.p}, {self.q})"


@dataclass(frozen=True)
class CircleOf:
    center: str
    radius: object

    def render(self):
        return f"circle({self.center}, {self.radius.render()})"


@dataclass(frozen=True)
class SegmentOf:
    p: str
    q: str

    def render(self):
        return f"seg({self.p}, {self.q})"


# -- statements -------------------------------------------------------------------

KIND_OF_DECL = {
    PointCoords: "point", FreePoint: "point", PointOn: "point", Intersect: "point",
    LineThrough: "line", RayFrom: "line", CircleOf: "circle", SegmentOf: "segment",
}


@dataclass(frozen=True)
class Decl:
    id: str
    expr: object
    line: int = field(default=0, compare=False)

    @property
    def kind(self):
        return KIND_OF_DECL[type(self.expr)]

    def render(self):
        return f"{self.kind} {self.id} = {self.expr.render()}"


@dataclass(frozen=True)
class Assert:
    pred: str
    args: tuple
    line: int = field(default=0, compare=False)

    def render(self):
        return f"assert {self.pred}({', '.join(self.args)})"


@dataclass(frozen=True)
class Require:
    """A guard: like an assertion, but failure means the construction cannot proceed."""

    pred: str
    args: tuple
    line: int = field(default=0, compare=False)

    def render(self):
        return f"require {self.pred}({', '.join(self.args)})"


@dataclass(frozen=True)
class MacroCall:
    name: str
    args: tuple
    selector: str | None = None
    line: int = field(default=0, compare=False)

    def render(self):
        sel = f"[{self.selector}]" if self.selector else ""
        return f"{self.name}({', '.join(self.args)}){sel}"


@dataclass(frozen=True)
class Script:
    name: str
    statements: tuple

    def render(self):
        lines = [f"script {self.name}"] + [s.render() for s in self.statements]
        return "\n".join(lines) + "\n"

    def __len__(self):
        return len(self.statements)

    def uses_eps(self):
        for s in self.statements:
            if isinstance(s, Decl):
                e = s.expr
                if isinstance(e, PointCoords) and (scalar_uses_eps(e.x) or scalar_uses_eps(e.y)):
                    return True
                if isinstance(e, CircleOf) and scalar_uses_eps(e.radius):
                    return True
        return False
