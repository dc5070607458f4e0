"""Exact real numbers in towers of quadratic extensions of the rationals.

A tower is a tuple of generators ``(d1, ..., dk)`` where each ``di`` is a
positive element of the tower ``(d1, ..., d(i-1))`` that is *not* a square
there.  An element of the tower is a coordinate vector over the ``2**k``
basis products of ``sqrt(di)``; bit ``i`` of a basis index selects
``sqrt(d(i+1))``.  Because every generator is a non-square, the basis is
linearly independent and the zero test is exact: all coordinates vanish.

Signs are decided by interval refinement with integer-scaled dyadic
endpoints, which terminates once the element is known to be nonzero.

Everything here is immutable.  Towers are plain tuples compared by value,
so values built independently can always be brought into a common tower.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..errors import DivisionByZero, NegativeRadicand, TagMismatch

_ZERO = Fraction(0)
_ONE = Fraction(1)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


# -- coordinate-vector kernels ------------------------------------------------
# ``x`` is a tuple of Fractions of length 2**len(gens).

def _zeros(n):
    return (_ZERO,) * n


def _is_zero(x):
    return not any(x)


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _neg(x):
    return tuple(-a for a in x)


def _scale(x, r):
    return tuple(a * r for a in x)


def _lift(x, n):
    """Pad ``x`` to length ``n``: embedding into a tower with more generators on top."""
    return x + _zeros(n - len(x))


def _mul(x, y, gens):
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, e = y[:h], y[h:]
    lower = gens[:-1]
    bz = _is_zero(b)
    ez = _is_zero(e)
    if bz and ez:
        return _mul(a, c, lower) + _zeros(h)
    if bz:
        return _mul(a, c, lower) + _mul(a, e, lower)
    if ez:
        return _mul(a, c, lower) + _mul(b, c, lower)
    d = gens[-1]
    ac = _mul(a, c, lower)
    be = _mul(b, e, lower)
    cross = _sub(_sub(_mul(_add(a, b), _add(c, e), lower), ac), be)
    return _add(ac, _mul(be, d, lower)) + cross


def _inv(x, gens):
    if len(x) == 1:
        if x[0] == 0:
            raise DivisionByZero("division by zero")
        return (1 / x[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    lower = gens[:-1]
    if _is_zero(b):
        return _inv(a, lower) + _zeros(h)
    # (a + b sqrt d)^-1 = (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero
    # because d is not a square one level down.
    norm = _sub(_mul(a, a, lower), _mul(_mul(b, b, lower), gens[-1], lower))
    ninv = _inv(norm, lower)
    return _mul(a, ninv, lower) + _neg(_mul(b, ninv, lower))


def _rational_sqrt(q):
    if q < 0:
        return None
    q = Fraction(q)
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sqrt_in(x, gens):
    """Return some root of ``x`` inside the tower, or None if ``x`` is not a square there."""
    if len(x) == 1:
        r = _rational_sqrt(x[0])
        return None if r is None else (r,)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    lower = gens[:-1]
    d = gens[-1]
    if _is_zero(b):
        r = _sqrt_in(a, lower)
        if r is not None:
            return r + _zeros(h)
        # a = r^2 d  gives  sqrt(a) = r sqrt(d)
        r = _sqrt_in(_mul(a, _inv(d, lower), lower), lower)
        if r is not None:
            return _zeros(h) + r
        return None
    # (p + q sqrt d)^2 = a + b sqrt d  forces  p^2 = (a +- n) / 2  with n^2 = a^2 - b^2 d
    n2 = _sub(_mul(a, a, lower), _mul(_mul(b, b, lower), d, lower))
    n = _sqrt_in(n2, lower)
    if n is None:
        return None
    for s in (n, _neg(n)):
        p = _sqrt_in(_scale(_add(a, s), Fraction(1, 2)), lower)
        if p is not None and not _is_zero(p):
            q = _mul(b, _inv(_scale(p, 2), lower), lower)
            return p + q
    return None


# -- interval refinement ------------------------------------------------------
# Bounds are integers (lo, hi) meaning lo / 2**p <= x <= hi / 2**p.

def _floor_div(n, p):
    return n >> p


def _ceil_div(n, p):
    return -((-n) >> p)


@lru_cache(maxsize=4096)
def _bounds(x, gens, p):
    if len(x) == 1:
        v = x[0]
        scaled = v.numerator << p
        return scaled // v.denominator, -((-scaled) // v.denominator)
    h = len(x) // 2
    lower = gens[:-1]
    alo, ahi = _bounds(x[:h], lower, p)
    b = x[h:]
    if _is_zero(b):
        return alo, ahi
    blo, bhi = _bounds(b, lower, p)
    dlo, dhi = _bounds(gens[-1], lower, p)
    slo = isqrt(max(dlo, 0) << p)
    shi = isqrt(max(dhi, 0) << p) + 1
    prods = (blo * slo, blo * shi, bhi * slo, bhi * shi)
    return alo + _floor_div(min(prods), p), ahi + _ceil_div(max(prods), p)


def _sign(x, gens):
    if _is_zero(x):
        return 0
    p = 32
    while True:
        lo, hi = _bounds(x, gens, p)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        p *= 2


# -- common towers --------------------------------------------------------------

def _basis_top(k):
    """sqrt of the top generator of a k-generator tower, as coordinates."""
    v = list(_zeros(1 << k))
    v[1 << (k - 1)] = _ONE
    return tuple(v)


def _embed(x, images, gens):
    """Map ``x`` (coordinates in some tower) into ``gens`` given images of its generator roots."""
    if len(x) == 1:
        return _lift(x, 1 << len(gens))
    h = len(x) // 2
    j = h.bit_length()  # level of the top generator of x, 1-based
    head = _embed(x[:h], images, gens)
    b = x[h:]
    if _is_zero(b):
        return head
    return _add(head, _mul(_embed(b, images, gens), images[j - 1], gens))


@lru_cache(maxsize=1024)
def _merge(g1, g2):
    """Smallest extension ``m`` of ``g1`` containing the roots of ``g2``.

    Returns ``(m, images)`` where ``images[j]`` is the coordinate vector of
    ``sqrt(g2[j])`` in ``m``.
    """
    m = g1
    images = []
    for j, d in enumerate(g2):
        dm = _embed(d, images, m)
        r = _sqrt_in(dm, m)
        if r is None:
            m = m + (dm,)
            n = 1 << len(m)
            images = [_lift(im, n) for im in images]
            r = _basis_top(len(m))
        elif _sign(r, m) < 0:
            r = _neg(r)
        images.append(r)
    return m, tuple(images)


def _common(x, y):
    """Bring two TowerReal values into one tower; returns (xc, yc, gens)."""
    gx, gy = x.gens, y.gens
    if gx == gy:
        return x.coords, y.coords, gx
    if gy[:len(gx)] == gx:
        return _lift(x.coords, len(y.coords)), y.coords, gy
    if gx[:len(gy)] == gy:
        return x.coords, _lift(y.coords, len(x.coords)), gx
    m, images = _merge(gx, gy)
    n = 1 << len(m)
    return _lift(x.coords, n), _embed(y.coords, images, m), m


def _squarefree_split(q):
    """Write positive rational q as s**2 * m with m a (mostly) squarefree integer."""
    q = Fraction(q)
    m = q.numerator * q.denominator
    s = Fraction(1, q.denominator)
    for p in _SMALL_PRIMES:
        pp = p * p
        while m % pp == 0:
            m //= pp
            s *= p
    return s, m


# -- public value type ------------------------------------------------------------

class TowerReal:
    """An exact constructible real number.

    Supports ``+ - * /``, comparisons and ``sqrt``.  Integers and Fractions
    are accepted as operands and embedded as rationals.
    """

    __slots__ = ("coords", "gens")

    def __init__(self, value=0):
        if isinstance(value, TowerReal):
            self.coords, self.gens = value.coords, value.gens
        elif isinstance(value, (int, Fraction)):
            self.coords, self.gens = (Fraction(value),), ()
        else:
            raise TagMismatch(f"cannot make a constructible real from {type(value).__name__}")

    @classmethod
    def _make(cls, coords, gens):
        # drop unused generators from the top so towers stay small
        while gens and _is_zero(coords[len(coords) // 2:]):
            coords = coords[:len(coords) // 2]
            gens = gens[:-1]
        obj = cls.__new__(cls)
        obj.coords = coords
        obj.gens = gens
        return obj

    @staticmethod
    def _coerce(other):
        if isinstance(other, TowerReal):
            return other
        if isinstance(other, (int, Fraction)):
            return TowerReal(other)
        if isinstance(other, float):
            raise TypeError("floats have no place in exact arithmetic")
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        x, y, g = _common(self, other)
        return TowerReal._make(_add(x, y), g)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        x, y, g = _common(self, other)
        return TowerReal._make(_sub(x, y), g)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerReal._make(_scale(self.coords, other), self.gens)
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        x, y, g = _common(self, other)
        return TowerReal._make(_mul(x, y, g), g)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return TowerReal._make(_scale(self.coords, 1 / Fraction(other)), self.gens)
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        return other * self.inverse()

    def __neg__(self):
        return TowerReal._make(_neg(self.coords), self.gens)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self ** -n).inverse()
        result, base = TowerReal(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        return TowerReal._make(_inv(self.coords, self.gens), self.gens)

    # order
    def sign(self):
        return _sign(self.coords, self.gens)

    def is_zero(self):
        return _is_zero(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def _cmp(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return _mismatch(self, other)
        return (self - other).sign()

    def __eq__(self, other):
        if isinstance(other, (TowerReal, int, Fraction)):
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

    __hash__ = None  # equal values may live in different towers

    # roots
    def sqrt(self):
        """Exact nonnegative square root, extending the tower when needed."""
        s = self.sign()
        if s < 0:
            raise NegativeRadicand(f"sqrt of negative {self}")
        if s == 0:
            return TowerReal(0)
        r = _sqrt_in(self.coords, self.gens)
        if r is not None:
            root = TowerReal._make(r, self.gens)
            return -root if root.sign() < 0 else root
        if self.is_rational():
            scale, m = _squarefree_split(self.coords[0])
            inner = TowerReal._make(_lift((Fraction(m),), len(self.coords)), self.gens)
            r = _sqrt_in(inner.coords, inner.gens) if inner.gens else None
            if r is not None:
                root = TowerReal._make(r, inner.gens)
                return scale * (-root if root.sign() < 0 else root)
            gens = self.gens + (_lift((Fraction(m),), len(self.coords)),)
            return scale * TowerReal._make(_basis_top(len(gens)), gens)
        gens = self.gens + (self.coords,)
        return TowerReal._make(_basis_top(len(gens)), gens)

    # conversions
    def is_rational(self):
        return not self.gens

    def to_fraction(self):
        if self.gens:
            raise ValueError(f"{self} is irrational")
        return self.coords[0]

    def bounds(self, bits=64):
        """Dyadic rational interval ``(lo, hi)`` containing the value."""
        lo, hi = _bounds(self.coords, self.gens, bits)
        return Fraction(lo, 1 << bits), Fraction(hi, 1 << bits)

    def __float__(self):
        lo, hi = self.bounds(64)
        return float((lo + hi) / 2)

    def floor(self):
        """Exact floor as an int."""
        lo, _ = self.bounds(16)
        k = lo.numerator // lo.denominator
        while self < k:
            k -= 1
        while self >= k + 1:
            k += 1
        return k

    def __repr__(self):
        return f"TowerReal({self})"

    def __str__(self):
        return _format(self.coords, self.gens)


def _mismatch(x, other):
    raise TagMismatch(f"cannot combine {type(x).__name__} with {type(other).__name__}")


# -- text form ----------------------------------------------------------------

def _format_gen(gens, i):
    return f"sqrt({_format(gens[i], gens[:i])})"


def _format(coords, gens):
    parts = []
    for mask, c in enumerate(coords):
        if c == 0:
            continue
        basis = "*".join(_format_gen(gens, i) for i in range(len(gens)) if mask >> i & 1)
        if not basis:
            term = str(c)
        elif c == 1:
            term = basis
        elif c == -1:
            term = "-" + basis
        else:
            term = f"{c}*{basis}"
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
