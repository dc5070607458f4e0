"""Exception hierarchy shared by every module of the package."""


class EuclidError(Exception):
    """Base class for all errors raised by euclidbench."""


# -- field kernel -----------------------------------------------------------

class FieldError(EuclidError):
    pass


class TagMismatch(FieldError, TypeError):
    """Arithmetic was attempted between values of different backends."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class PrecisionExhausted(FieldError):
    """A truncated series has no known terms left to decide the question."""


class NegativeRadicand(FieldError, ValueError):
    pass


class NoSqrtInField(FieldError, ValueError):
    """The radicand is positive but has no square root in the backend field."""

    def __init__(self, radicand):
        super().__init__(f"{radicand} has no square root in this field")
        self.radicand = radicand


# -- geometry ---------------------------------------------------------------

class GeometryError(EuclidError):
    pass


class CoincidentPoints(GeometryError, ValueError):
    pass


class CoincidentCenters(GeometryError, ValueError):
    pass


class DegenerateTriangle(GeometryError, ValueError):
    pass


class TransversalMisses(GeometryError):
    """The transversal of a parallel-lines configuration misses a line in the model."""


# -- magnitudes -------------------------------------------------------------

class KindMismatch(EuclidError, TypeError):
    pass


class NotGreater(EuclidError, ValueError):
    pass


# -- construction language --------------------------------------------------

class ScriptError(EuclidError):
    pass


class ScriptSyntaxError(ScriptError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"line {line}, col {col}: expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg)
        self.line = line
        self.col = col
        self.expected = expected
        self.found = found


class DuplicateId(ScriptError):
    pass


class UseBeforeDecl(ScriptError):
    pass


class ArityError(ScriptError):
    pass


class WrongKind(ScriptError, TypeError):
    """An identifier names an object of the wrong kind for its position."""


class Degenerate(ScriptError):
    """The random-point generator could not find a non-degenerate choice."""


# -- propositions -----------------------------------------------------------

class UnsupportedId(EuclidError, KeyError):
    pass


# -- rendering --------------------------------------------------------------

class UnrenderableScene(EuclidError, ValueError):
    """Nothing in the input has a finite standard-part picture."""
