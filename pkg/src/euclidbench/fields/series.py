"""Finite formal series in a positive infinitesimal ``eps``.

A value is a finite sum ``sum c_q * eps**q`` with rational exponents and
constructible coefficients, ordered by the sign of its leading (smallest
exponent) coefficient.  This is a computable non-Archimedean ordered field
in which positive elements have square roots up to truncation.

Values produced by ``+``, ``-`` and ``*`` of exact values are exact.  Division
and square roots expand geometric and binomial series and keep only the
terms below ``leading exponent + window``; such a value is marked truncated
with an ``order``: every term with exponent below the order is correct and
nothing is known above it.  Whenever a truncated result can be verified to
be exact (multiplying back reproduces the input) it is promoted to exact.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from math import isqrt

from ..errors import DivisionByZero, NegativeRadicand, PrecisionExhausted, TagMismatch
from .tower import TowerReal

DEFAULT_WINDOW = 16


class MagnitudeClass(enum.Enum):
    ZERO = "Zero"
    INFINITESIMAL = "Infinitesimal"
    LIMITED_APPRECIABLE = "LimitedAppreciable"
    INFINITE = "Infinite"

    @property
    def limited(self):
        return self is not MagnitudeClass.INFINITE


def _coeff(c):
    if isinstance(c, TowerReal):
        return c.to_fraction() if c.is_rational() else c
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TagMismatch(f"bad series coefficient {c!r}")


def _csign(c):
    if isinstance(c, TowerReal):
        return c.sign()
    return (c > 0) - (c < 0)


def _csqrt(c):
    if isinstance(c, Fraction):
        n, d = c.numerator, c.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return _coeff(TowerReal(c).sqrt())
    return _coeff(c.sqrt())


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Series:
    """An element of the series field; see the module docstring."""

    __slots__ = ("terms", "order", "window")

    def __init__(self, terms=(), order=None, window=DEFAULT_WINDOW):
        if isinstance(terms, dict):
            terms = terms.items()
        acc = {}
        for q, c in terms:
            q = Fraction(q)
            acc[q] = acc.get(q, 0) + c
        order = None if order is None else Fraction(order)
        kept = []
        for q in sorted(acc):
            if order is not None and q >= order:
                continue
            c = _coeff(acc[q])
            if _csign(c) != 0:
                kept.append((q, c))
        self.terms = tuple(kept)
        self.order = order
        self.window = window

    # constructors
    @classmethod
    def const(cls, c, window=DEFAULT_WINDOW):
        return cls({0: c}, window=window)

    @classmethod
    def eps(cls, window=DEFAULT_WINDOW):
        return cls({1: 1}, window=window)

    @classmethod
    def monomial(cls, c, q, window=DEFAULT_WINDOW):
        return cls({q: c}, window=window)

    @property
    def exact(self):
        return self.order is None

    def leading(self):
        """(exponent, coefficient) of the leading term; raises if unknown or zero."""
        if self.terms:
            return self.terms[0]
        if self.exact:
            raise DivisionByZero("zero has no leading term")
        raise PrecisionExhausted(f"no known terms below eps^{self.order}")

    def _valuation_bound(self):
        # exact leading exponent if a term is known, else the order as a lower bound
        return self.terms[0][0] if self.terms else self.order

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.const(other, self.window)
        if isinstance(other, TowerReal):
            raise TagMismatch("constructible value mixed with a series; use Series.const")
        return NotImplemented

    # ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = _min_order(self.order, other.order)
        return Series(self.terms + other.terms, order, max(self.window, other.window))

    __radd__ = __add__

    def __neg__(self):
        return Series(((q, -c) for q, c in self.terms), self.order, self.window)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        window = max(self.window, other.window)
        if (self.exact and not self.terms) or (other.exact and not other.terms):
            return Series((), None, window)
        order = None
        if self.order is not None:
            order = self.order + other._valuation_bound()
        if other.order is not None:
            order = _min_order(order, other.order + self._valuation_bound())
        prods = []
        for q1, c1 in self.terms:
            for q2, c2 in other.terms:
                q = q1 + q2
                if order is None or q < order:
                    prods.append((q, c1 * c2))
        return Series(prods, order, window)

    __rmul__ = __mul__

    def _scaled(self, c, q):
        """Multiply by the exact monomial c * eps**q."""
        order = None if self.order is None else self.order + q
        return Series(((e + q, a * c) for e, a in self.terms), order, self.window)

    def _unit_part(self):
        """Split as c * eps**v * (1 + u); returns (c, v, u, relative order of u)."""
        v, c = self.leading()
        u = Series(((q - v, a / c) for q, a in self.terms[1:]), None, self.window)
        rel = None if self.order is None else self.order - v
        return c, v, u, rel

    def inverse(self):
        if self.exact and not self.terms:
            raise DivisionByZero("division by zero")
        c, v, u, rel = self._unit_part()
        if not u.terms and rel is None:
            return Series({-v: 1 / c}, None, self.window)
        limit = Fraction(self.window) if rel is None else min(Fraction(self.window), rel)
        total = _truncated_power_sum(u, limit, lambda k: (-1) ** k)
        return total._scaled(1 / c, -v)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q = self * other.inverse()
        if not q.exact and self.exact and other.exact:
            candidate = Series(q.terms, None, q.window)
            if candidate * other == self:
                return candidate
        return q

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return Series.const(1, self.window) / (self ** -n)
        result = Series.const(1, self.window)
        for _ in range(n):
            result = result * self
        return result

    def sqrt(self):
        s = self.sign()
        if s < 0:
            raise NegativeRadicand(f"sqrt of negative {self}")
        if s == 0:
            return Series((), None, self.window)
        c, v, u, rel = self._unit_part()
        root_c = _csqrt(c)
        if not u.terms and rel is None:
            return Series({v / 2: root_c}, None, self.window)
        limit = Fraction(self.window) if rel is None else min(Fraction(self.window), rel)
        total = _truncated_power_sum(u, limit, _half_binomial)
        root = total._scaled(root_c, v / 2)
        if self.exact:
            candidate = Series(root.terms, None, root.window)
            if candidate * candidate == self:
                return candidate
        return root

    # order
    def sign(self):
        if self.terms:
            return _csign(self.terms[0][1])
        if self.exact:
            return 0
        raise PrecisionExhausted(f"sign unknown: no terms below eps^{self.order}")

    def is_zero(self):
        return self.sign() == 0

    def _cmp(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            raise TagMismatch(f"cannot compare a series with {type(other).__name__}")
        return (self - other).sign()

    def __eq__(self, other):
        if isinstance(other, (Series, int, Fraction)):
            return self._cmp(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return not self.is_zero()

    __hash__ = None

    def classify(self):
        if not self.terms:
            if self.exact:
                return MagnitudeClass.ZERO
            raise PrecisionExhausted(f"magnitude unknown: no terms below eps^{self.order}")
        q = self.terms[0][0]
        if q > 0:
            return MagnitudeClass.INFINITESIMAL
        if q == 0:
            return MagnitudeClass.LIMITED_APPRECIABLE
        return MagnitudeClass.INFINITE

    def standard_part(self):
        """Nearest constant to a limited value (0 for infinitesimals)."""
        cls = self.classify()
        if cls is MagnitudeClass.INFINITE:
            raise ValueError(f"{self} is infinite")
        if cls is MagnitudeClass.LIMITED_APPRECIABLE:
            return self.terms[0][1]
        return Fraction(0)

    def coefficient(self, q):
        q = Fraction(q)
        if self.order is not None and q >= self.order:
            raise PrecisionExhausted(f"coefficient of eps^{q} is beyond the known order")
        for e, c in self.terms:
            if e == q:
                return c
        return Fraction(0)

    def __repr__(self):
        return f"Series({self})"

    def __str__(self):
        parts = [_format_term(q, c) for q, c in self.terms]
        if self.order is not None:
            parts.append(f"O({_format_power(self.order)})")
        if not parts:
            return "0"
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def pretty(self):
        """Compact unicode rendering used for diagram labels, e.g. ``1/ε``."""
        if not self.terms:
            return "0"
        parts = [_pretty_term(q, c) for q, c in self.terms]
        out = parts[0]
        for t in parts[1:]:
            out += " − " + t[1:] if t.startswith("-") else " + " + t
        if self.order is not None:
            out += " + …"
        return out


def _half_binomial(k):
    """Binomial coefficient C(1/2, k)."""
    out = Fraction(1)
    for i in range(k):
        out = out * (Fraction(1, 2) - i) / (i + 1)
    return out


def _truncated_power_sum(u, limit, coeff):
    """sum_k coeff(k) * u**k keeping exponents < limit; u has positive exponents only."""
    window = u.window
    total = Series({0: 1}, limit, window)
    power = Series({0: 1}, None, window)
    k = 0
    while True:
        k += 1
        power = Series(
            ((q1 + q2, c1 * c2) for q1, c1 in power.terms for q2, c2 in u.terms if q1 + q2 < limit),
            None,
            window,
        )
        if not power.terms:
            break
        a = coeff(k)
        total = total + Series(((q, a * c) for q, c in power.terms), limit, window)
    return total


def _format_power(q):
    if q == 1:
        return "eps"
    if q.denominator == 1 and q > 0:
        return f"eps^{q}"
    return f"eps^({q})"


def _format_coeff(c):
    s = str(c)
    if isinstance(c, TowerReal) and (" " in s):
        return f"({s})"
    return s


def _format_term(q, c):
    if q == 0:
        return _format_coeff(c)
    power = _format_power(q)
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{_format_coeff(c)}*{power}"


_SUPERSCRIPT = str.maketrans("0123456789-/", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻ᐟ")


def _pretty_term(q, c):
    if q == 0:
        return _format_coeff(c)
    mag = -q if q < 0 else q
    power = "ε" if mag == 1 else "ε" + str(mag).translate(_SUPERSCRIPT)
    neg = _csign(c) < 0
    a = -c if neg else c
    sign = "-" if neg else ""
    coeff = "" if a == 1 else _format_coeff(a)
    if q < 0:
        if isinstance(a, Fraction) and a.denominator != 1:
            return f"{sign}{a.numerator}/({a.denominator}{power})"
        return f"{sign}{coeff or 1}/{power}"
    return f"{sign}{coeff}{power}"
