"""Three ordered-field backends behind one small interface.

``Rat`` values are :class:`fractions.Fraction`, ``Constructible`` values are
:class:`TowerReal` and ``NonArch`` values are :class:`Series`.  The free
functions here (``field_arith``, ``compare``, ``sqrt``, ``classify``,
``archimedean_witness``) dispatch on the value type; a :class:`Field` object
carries the backend-specific pieces that need configuration, such as the
series truncation window and how literals are embedded.
"""
from __future__ import annotations

import enum
import operator
import re
from fractions import Fraction
from math import isqrt

from ..errors import DivisionByZero, NegativeRadicand, NoSqrtInField, TagMismatch
from .series import DEFAULT_WINDOW, MagnitudeClass, Series
from .tower import TowerReal


class FieldTag(enum.Enum):
    RAT = "rational"
    CONSTRUCTIBLE = "constructible"
    NONARCH = "nonarch"


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def tag_of(x):
    if isinstance(x, Series):
        return FieldTag.NONARCH
    if isinstance(x, TowerReal):
        return FieldTag.CONSTRUCTIBLE
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return FieldTag.RAT
    raise TagMismatch(f"{type(x).__name__} is not a field value")


def _same_tag(x, y):
    tx, ty = tag_of(x), tag_of(y)
    if tx is not ty:
        raise TagMismatch(f"{tx.value} value combined with {ty.value} value")
    return tx


_OPS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul, "div": operator.truediv}


def field_arith(op, x, y):
    """Strictly tagged arithmetic: both operands must come from the same backend."""
    _same_tag(x, y)
    if op == "div" and sign(y) == 0:
        raise DivisionByZero("division by zero")
    if op == "div" and isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return _OPS[op](x, y)


def sign(x):
    if isinstance(x, (Series, TowerReal)):
        return x.sign()
    return (x > 0) - (x < 0)


def compare(x, y):
    """Total order; raises PrecisionExhausted when a truncated difference is undecidable."""
    _same_tag(x, y)
    return Ordering(sign(x - y))


def rational_sqrt(q):
    """Exact square root of a rational, or None when q is not a rational square."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def sqrt(x):
    if isinstance(x, (Series, TowerReal)):
        return x.sqrt()
    if x < 0:
        raise NegativeRadicand(f"sqrt of negative {x}")
    r = rational_sqrt(x)
    if r is None:
        raise NoSqrtInField(Fraction(x))
    return r


def classify(x):
    if isinstance(x, Series):
        return x.classify()
    return MagnitudeClass.ZERO if sign(x) == 0 else MagnitudeClass.LIMITED_APPRECIABLE


def is_limited(x):
    return classify(x).limited


def _floor(x):
    if isinstance(x, TowerReal):
        return x.floor()
    x = Fraction(x)
    return x.numerator // x.denominator


def archimedean_witness(a, b):
    """Least natural n with n*a > b, or None when b/a is infinite (no such n exists)."""
    _same_tag(a, b)
    if sign(a) <= 0 or sign(b) <= 0:
        raise ValueError("archimedean_witness needs positive arguments")
    if isinstance(a, Series):
        ratio = b / a
        if ratio.classify() is MagnitudeClass.INFINITE:
            return None
        guess = _floor(ratio.standard_part())
    else:
        guess = _floor(b / a)
    # the guess is within one of the answer; settle it by exact comparisons
    n = max(1, guess)
    while n > 1 and (n - 1) * a > b:
        n -= 1
    while not n * a > b:
        n += 1
    return n


class Field:
    """Backend descriptor: embeds literals and names the tag."""

    tag: FieldTag

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def eps(self):
        raise TagMismatch(f"eps is only available in the nonarch field, not {self.tag.value}")

    def parse(self, text):
        """Read back a value written by ``str`` (see :func:`parse_value`)."""
        return parse_value(text, self)

    def __repr__(self):
        return f"{type(self).__name__}()"

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items()))))


class RationalField(Field):
    tag = FieldTag.RAT

    def __call__(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, TowerReal) and value.is_rational():
            return value.to_fraction()
        raise TagMismatch(f"{value!r} is not rational")


class ConstructibleField(Field):
    tag = FieldTag.CONSTRUCTIBLE

    def __call__(self, value):
        if isinstance(value, (int, Fraction, TowerReal)):
            return TowerReal(value)
        raise TagMismatch(f"{value!r} is not a constructible value")


class NonArchField(Field):
    tag = FieldTag.NONARCH

    def __init__(self, window=DEFAULT_WINDOW):
        if window < 1:
            raise ValueError("truncation window must be positive")
        self.window = window

    def __call__(self, value):
        if isinstance(value, Series):
            if value.window != self.window:
                return Series(value.terms, value.order, self.window)
            return value
        if isinstance(value, (int, Fraction, TowerReal)):
            return Series.const(value, self.window)
        raise TagMismatch(f"{value!r} is not a series value")

    def eps(self):
        return Series.eps(self.window)

    def __repr__(self):
        return f"NonArchField(window={self.window})"


RAT = RationalField()
CONSTRUCTIBLE = ConstructibleField()
NONARCH = NonArchField()


def field_for(tag, window=DEFAULT_WINDOW):
    tag = FieldTag(tag)
    if tag is FieldTag.RAT:
        return RAT
    if tag is FieldTag.CONSTRUCTIBLE:
        return CONSTRUCTIBLE
    return NonArchField(window)


# -- reading values back from text ---------------------------------------------
# Grammar of the text written by str() on every backend:
#   expr   := term (("+" | "-") term)*
#   term   := unary (("*" | "/") unary)*
#   unary  := "-" unary | power
#   power  := atom ("^" unary)?
#   atom   := INT | "eps" | "sqrt(" expr ")" | "O(" expr ")" | "(" expr ")"

_TOKEN = re.compile(r"\s*(?:(\d+)|(eps|sqrt|O)|(\^|\*|/|\+|-|\(|\)))")


class _BigO:
    def __init__(self, order):
        self.order = order


def _tokens(text):
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot read value {text!r} at offset {pos}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


def parse_value(text, field):
    """Parse the exact text form of a value into ``field``.

    ``str(x)`` for any backend value round-trips: ``parse_value(str(x), F) == x``.
    """
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"cannot read value {text!r}: expected {expected or 'more input'}")
        pos += 1
        return tok

    def expr():
        acc = term()
        order = None
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            if isinstance(rhs, _BigO):
                order = rhs.order
                continue
            acc = acc + rhs if op == "+" else acc - rhs
        if order is not None:
            acc = Series(acc.terms, order, acc.window)
        return acc

    def term():
        acc = unary()
        while peek() in ("*", "/"):
            op = take()
            rhs = unary()
            if op == "*":
                acc = acc * rhs
            elif isinstance(acc, Fraction) and isinstance(rhs, Fraction):
                acc = Fraction(acc, rhs)
            else:
                acc = acc / rhs
        return acc

    def unary():
        if peek() == "-":
            take()
            return -unary()
        return power()

    def power():
        base = atom()
        if peek() == "^":
            take()
            exponent = unary()
            if not isinstance(base, Series) or base.terms != ((1, 1),):
                raise ValueError("only eps may carry an exponent")
            return Series({Fraction(exponent): 1}, None, base.window)
        return base

    def atom():
        tok = take()
        if tok.isdigit():
            return Fraction(int(tok))
        if tok == "eps":
            return field.eps()
        if tok == "sqrt":
            take("(")
            inner = expr()
            take(")")
            root = TowerReal(inner).sqrt() if isinstance(inner, Fraction) else inner.sqrt()
            if field.tag is FieldTag.NONARCH and isinstance(root, TowerReal):
                root = field(root)
            return root
        if tok == "O":
            take("(")
            inner = expr()
            take(")")
            return _BigO(inner.leading()[0])
        if tok == "(":
            inner = expr()
            take(")")
            return inner
        raise ValueError(f"cannot read value {text!r}: unexpected {tok!r}")

    value = expr()
    if pos != len(toks):
        raise ValueError(f"cannot read value {text!r}: trailing {toks[pos]!r}")
    return field(value)
