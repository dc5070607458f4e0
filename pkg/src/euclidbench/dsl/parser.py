"""Reader for ``.euc`` construction scripts.

One statement per line, ``#`` starts a comment, an optional first line
``script NAME`` names the script::

    script I.1
    point A = (0, 0)
    point B = (1, 0)
    circle cA = circle(A, dist(A, B))
    circle cB = circle(B, dist(A, B))
    point C = intersect(cA, cB)[upper]
    assert equal_seg(A, B, B, C, C, A)

Besides the grammar, the reader checks declarations: every identifier is
declared once, before use, and names an object of the kind its position
needs.  Columns in error messages are 0-based; an error at the end of a line
points at the last token read.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from ..errors import ArityError, DuplicateId, ScriptSyntaxError, UseBeforeDecl, WrongKind
from .ast import (
    MACROS,
    PREDICATES,
    SELECTORS,
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
    Script,
    SegmentOf,
    Sqrt,
)

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_']*)|(\d+(?:\.\d+)?)|([()\[\],=+\-*/]))")
_ID = re.compile(r"[A-Za-z][A-Za-z0-9_']*$")
_NAME = re.compile(r"\S+$")

# argument kinds of macros; "new" declares a fresh point
MACRO_SIGNATURES = {
    "equilateral": ("point", "point", "new"),
    "transport_seg": ("point", "segment", "new"),
    "cut_off": ("segment", "segment", "new"),
    "triangle_sss": ("segment", "segment", "segment", "new", "new", "new"),
    "transport_angle": ("point", "point", "point", "point", "point", "new"),
}
_MACROS_WITH_SELECTOR = ("equilateral", "triangle_sss", "transport_angle")

_PRED_FIXED = {
    "equal_angle": ("point",) * 6,
    "parallel": ("line", "line"),
    "meets": ("line", "line"),
    "collinear": ("point",) * 3,
    "angle_sum_pi": ("point",) * 3,
}


class _Line:
    """Token cursor over one source line."""

    def __init__(self, text, lineno):
        self.lineno = lineno
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise ScriptSyntaxError(lineno, col, "a token", text[col])
            tok = m.group(1) or m.group(2) or m.group(3)
            kind = "id" if m.group(1) else "num" if m.group(2) else tok
            self.toks.append((kind, tok, m.start(m.lastindex)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def at(self, kind):
        tok = self.peek()
        return tok is not None and tok[0] == kind

    def at_word(self, word):
        tok = self.peek()
        return tok is not None and tok[0] == "id" and tok[1] == word

    def fail(self, expected):
        tok = self.peek()
        if tok is None:
            col = self.toks[-1][2] if self.toks else 0
            raise ScriptSyntaxError(self.lineno, col, expected, "end of line")
        raise ScriptSyntaxError(self.lineno, tok[2], expected, tok[1])

    def take(self, kind, expected=None):
        if not self.at(kind):
            self.fail(expected or repr(kind))
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def word(self, word):
        if not self.at_word(word):
            self.fail(repr(word))
        self.i += 1

    def ident(self):
        tok = self.peek()
        if tok is None or tok[0] != "id" or not _ID.match(tok[1]):
            self.fail("an identifier")
        self.i += 1
        return tok

    def end(self):
        if self.peek() is not None:
            self.fail("end of line")


class _Reader:
    def __init__(self):
        self.kinds = {}

    # -- declarations ----------------------------------------------------
    def use(self, tok, lineno, allowed):
        kind = self.kinds.get(tok[1])
        if kind is None:
            raise UseBeforeDecl(f"line {lineno}, col {tok[2]}: {tok[1]!r} used before declaration")
        if kind not in allowed:
            raise WrongKind(
                f"line {lineno}, col {tok[2]}: {tok[1]!r} is a {kind}, expected {' or '.join(allowed)}"
            )
        return tok[1]

    def declare(self, name, kind, lineno):
        if name in self.kinds:
            raise DuplicateId(f"line {lineno}: {name!r} is already declared")
        self.kinds[name] = kind

    # -- scalars -----------------------------------------------------------
    def sexpr(self, cur):
        left = self.sterm(cur)
        while cur.at("+") or cur.at("-"):
            op = cur.take(cur.peek()[0])[1]
            left = BinOp(op, left, self.sterm(cur))
        return left

    def sterm(self, cur):
        left = self.sunary(cur)
        while cur.at("*") or cur.at("/"):
            op = cur.take(cur.peek()[0])[1]
            left = BinOp(op, left, self.sunary(cur))
        return left

    def sunary(self, cur):
        if cur.at("-"):
            cur.take("-")
            return Neg(self.sunary(cur))
        return self.satom(cur)

    def satom(self, cur):
        if cur.at("num"):
            text = cur.take("num")[1]
            return Num(Fraction(text), text)
        if cur.at("("):
            cur.take("(")
            inner = self.sexpr(cur)
            cur.take(")", "')'")
            return inner
        if cur.at_word("eps"):
            cur.word("eps")
            return Eps()
        if cur.at_word("dist"):
            cur.word("dist")
            cur.take("(", "'('")
            p = self.use(cur.ident(), cur.lineno, ("point",))
            cur.take(",", "','")
            q = self.use(cur.ident(), cur.lineno, ("point",))
            cur.take(")", "')'")
            return Dist(p, q)
        if cur.at_word("sqrt"):
            cur.word("sqrt")
            cur.take("(", "'('")
            inner = self.sexpr(cur)
            cur.take(")", "')'")
            return Sqrt(inner)
        cur.fail("a number, eps, dist(...), sqrt(...) or '('")

    # -- objects -------------------------------------------------------------
    def pair(self, cur, kinds):
        cur.take("(", "'('")
        a = self.use(cur.ident(), cur.lineno, kinds[0])
        cur.take(",", "','")
        b = self.use(cur.ident(), cur.lineno, kinds[1])
        cur.take(")", "')'")
        return a, b

    def selector(self, cur, required):
        if not cur.at("["):
            if required:
                cur.fail("a selector '[' (" + "|".join(SELECTORS) + ") ']'")
            return None
        cur.take("[")
        tok = cur.peek()
        if tok is None or tok[0] != "id" or tok[1] not in SELECTORS:
            cur.fail("one of " + ", ".join(SELECTORS))
        cur.i += 1
        cur.take("]", "']'")
        return tok[1]

    def pexpr(self, cur):
        if cur.at("("):
            cur.take("(")
            x = self.sexpr(cur)
            cur.take(",", "','")
            y = self.sexpr(cur)
            cur.take(")", "')'")
            return PointCoords(x, y)
        if cur.at_word("free"):
            cur.word("free")
            return FreePoint()
        if cur.at_word("on"):
            cur.word("on")
            return PointOn(self.use(cur.ident(), cur.lineno, ("line", "circle", "segment")))
        if cur.at_word("intersect"):
            cur.word("intersect")
            curved = ("line", "circle", "segment")
            a, b = self.pair(cur, (curved, curved))
            needs = "circle" in (self.kinds[a], self.kinds[b])
            return Intersect(a, b, self.selector(cur, needs))
        cur.fail("'(', free, on or intersect")

    def args(self, cur):
        cur.take("(", "'('")
        out = []
        if not cur.at(")"):
            out.append(cur.ident())
            while cur.at(","):
                cur.take(",")
                out.append(cur.ident())
        cur.take(")", "')'")
        return out

    def check_pred(self, pred, toks, lineno):
        if pred in ("equal_seg", "less_seg"):
            count, i = 0, 0
            while i < len(toks):
                kind = self.kinds.get(toks[i][1])
                if kind == "segment":
                    i += 1
                else:
                    self.use(toks[i], lineno, ("point", "segment"))
                    if i + 1 >= len(toks):
                        raise ArityError(f"line {lineno}: {pred} has a point without a partner")
                    self.use(toks[i + 1], lineno, ("point",))
                    i += 2
                count += 1
            if (pred == "less_seg" and count != 2) or count < 2:
                raise ArityError(f"line {lineno}: {pred} compares {'two' if pred == 'less_seg' else 'at least two'} segments")
            return tuple(t[1] for t in toks)
        kinds = _PRED_FIXED[pred]
        if len(toks) != len(kinds):
            raise ArityError(f"line {lineno}: {pred} takes {len(kinds)} arguments, got {len(toks)}")
        line_like = ("line", "segment")
        return tuple(
            self.use(t, lineno, line_like if k == "line" else (k,)) for t, k in zip(toks, kinds)
        )

    # -- statements -----------------------------------------------------------
    def statement(self, cur):
        tok = cur.peek()
        if tok[0] != "id":
            cur.fail("a statement")
        word = tok[1]
        lineno = cur.lineno
        if word in ("point", "line", "circle", "segment"):
            cur.word(word)
            name = cur.ident()[1]
            cur.take("=", "'='")
            if word == "point":
                expr = self.pexpr(cur)
            elif word == "line":
                if cur.at_word("line"):
                    cur.word("line")
                    expr = LineThrough(*self.pair(cur, (("point",), ("point",))))
                elif cur.at_word("ray"):
                    cur.word("ray")
                    expr = RayFrom(*self.pair(cur, (("point",), ("point",))))
                else:
                    cur.fail("line(...) or ray(...)")
            elif word == "circle":
                cur.word("circle")
                cur.take("(", "'('")
                center = self.use(cur.ident(), lineno, ("point",))
                cur.take(",", "','")
                radius = self.sexpr(cur)
                cur.take(")", "')'")
                expr = CircleOf(center, radius)
            else:
                cur.word("seg")
                expr = SegmentOf(*self.pair(cur, (("point",), ("point",))))
            cur.end()
            self.declare(name, word, lineno)
            return Decl(name, expr, lineno)
        if word in ("assert", "require"):
            cur.word(word)
            ptok = cur.peek()
            if ptok is None or ptok[0] != "id" or ptok[1] not in PREDICATES:
                cur.fail("a predicate (" + ", ".join(PREDICATES) + ")")
            cur.i += 1
            args = self.check_pred(ptok[1], self.args(cur), lineno)
            cur.end()
            cls = Assert if word == "assert" else Require
            return cls(ptok[1], args, lineno)
        if word in MACROS:
            cur.word(word)
            toks = self.args(cur)
            signature = MACRO_SIGNATURES[word]
            if len(toks) != len(signature):
                raise ArityError(f"line {lineno}: {word} takes {len(signature)} arguments, got {len(toks)}")
            selector = self.selector(cur, False)
            if selector and word not in _MACROS_WITH_SELECTOR:
                raise ScriptSyntaxError(lineno, toks[-1][2], "end of line", "[")
            cur.end()
            for t, kind in zip(toks, signature):
                if kind != "new":
                    self.use(t, lineno, (kind,))
            fresh = [t[1] for t, kind in zip(toks, signature) if kind == "new"]
            if len(set(fresh)) != len(fresh):
                raise DuplicateId(f"line {lineno}: {word} names one output twice")
            for name in fresh:
                self.declare(name, "point", lineno)
            return MacroCall(word, tuple(t[1] for t in toks), selector, lineno)
        cur.fail("a statement (point, line, circle, segment, assert, require or a macro)")


def parse(text, name=None):
    """Parse script text into a :class:`Script`, checking declarations."""
    reader = _Reader()
    statements = []
    script_name = name
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped == "script" or stripped.startswith("script "):
            if not first:
                raise ScriptSyntaxError(lineno, line.index("script"), "a statement", "script")
            rest = stripped[len("script"):].strip()
            if not _NAME.match(rest):
                col = len(line.rstrip())
                raise ScriptSyntaxError(lineno, col, "a script name", "end of line")
            script_name = rest
            first = False
            continue
        first = False
        statements.append(reader.statement(_Line(line, lineno)))
    return Script(script_name or "script", tuple(statements))


def parse_file(path):
    path = Path(path)
    return parse(path.read_text(encoding="utf-8"), name=path.stem)
