"""Expansion of the construction macros into plain statements.

Each macro replays the steps of the corresponding construction: intermediate
objects get hidden identifiers ``_<output>_<name>``, which the reader never
accepts from source text, so they cannot clash with user identifiers.

    equilateral(A, B, C)          C apex of the equilateral triangle on AB
    transport_seg(A, s, L)        L with AL equal to segment s
    cut_off(s, t, E)              E on s = AB with AE equal to the lesser t
    triangle_sss(a, b, c, D, G, K)  triangle with DG = b, DK = a, GK = c
    transport_angle(D, C, E, A, B, F)  F with angle BAF equal to angle DCE
"""
from __future__ import annotations

from ..errors import ArityError
from .ast import CircleOf, Decl, Dist, FreePoint, Intersect, MacroCall, RayFrom, Require, SegmentOf
from .parser import MACRO_SIGNATURES


def _circle_through(name, center, far):
    return Decl(name, CircleOf(center, Dist(center, far)))


def macro_expand(name, args, segments=None, selector=None):
    """Statements the macro call stands for.

    ``segments`` maps segment identifiers to their endpoint identifiers; the
    result may itself contain macro calls (``transport_seg`` uses
    ``equilateral``), which the interpreter expands in turn.
    """
    if name not in MACRO_SIGNATURES:
        raise ArityError(f"unknown macro {name!r}")
    if len(args) != len(MACRO_SIGNATURES[name]):
        raise ArityError(f"{name} takes {len(MACRO_SIGNATURES[name])} arguments, got {len(args)}")
    segments = segments or {}
    return _EXPANSIONS[name](tuple(args), segments, selector)


def _equilateral(args, segments, selector):
    a, b, c = args
    h = f"_{c}_"
    return [
        _circle_through(h + "ca", a, b),
        _circle_through(h + "cb", b, a),
        Decl(c, Intersect(h + "ca", h + "cb", selector or "upper")),
    ]


def _transport_seg(args, segments, selector):
    a, s, out = args
    b, c = segments[s]
    h = f"_{out}_"
    if a == c:
        b, c = c, b
    if a == b:
        # the segment already starts at A: copy it along itself
        return [
            Decl(h + "r", RayFrom(b, c)),
            _circle_through(h + "k", b, c),
            Decl(out, Intersect(h + "k", h + "r", "second")),
        ]
    d, g = h + "D", h + "G"
    return [
        MacroCall("equilateral", (a, b, d)),
        Decl(h + "rb", RayFrom(d, b)),
        _circle_through(h + "kb", b, c),
        Decl(g, Intersect(h + "kb", h + "rb", "second")),
        Decl(h + "ra", RayFrom(d, a)),
        _circle_through(h + "kd", d, g),
        Decl(out, Intersect(h + "kd", h + "ra", "second")),
    ]


def _cut_off(args, segments, selector):
    greater, lesser, out = args
    a, b = segments[greater]
    c, d = segments[lesser]
    h = f"_{out}_"
    steps = [Require("less_seg", (c, d, a, b))]
    if a in (c, d):
        far = d if a == c else c
    else:
        far = h + "L"
        steps.append(MacroCall("transport_seg", (a, lesser, far)))
    steps += [
        _circle_through(h + "k", a, far),
        Decl(h + "r", RayFrom(a, b)),
        Decl(out, Intersect(h + "k", h + "r", "second")),
    ]
    return steps


def _triangle_sss(args, segments, selector):
    sa, sb, sc, d, g, k = args
    h = f"_{k}_"
    return [
        Decl(d, FreePoint()),
        Decl(h + "E", FreePoint()),
        MacroCall("transport_seg", (d, sb, h + "Lb")),
        _circle_through(h + "kb", d, h + "Lb"),
        Decl(h + "r", RayFrom(d, h + "E")),
        Decl(g, Intersect(h + "kb", h + "r", "second")),
        MacroCall("transport_seg", (d, sa, h + "La")),
        _circle_through(h + "ka", d, h + "La"),
        MacroCall("transport_seg", (g, sc, h + "Lc")),
        _circle_through(h + "kc", g, h + "Lc"),
        Decl(k, Intersect(h + "ka", h + "kc", selector or "upper")),
    ]


def _transport_angle(args, segments, selector):
    d, c, e, a, b, f = args
    h = f"_{f}_"
    sb, sa, sc = h + "b", h + "a", h + "c"
    g = h + "G"
    return [
        Decl(sb, SegmentOf(c, d)),
        Decl(sa, SegmentOf(c, e)),
        Decl(sc, SegmentOf(d, e)),
        MacroCall("transport_seg", (a, sb, h + "Lb")),
        _circle_through(h + "kb", a, h + "Lb"),
        Decl(h + "r", RayFrom(a, b)),
        Decl(g, Intersect(h + "kb", h + "r", "second")),
        MacroCall("transport_seg", (a, sa, h + "La")),
        _circle_through(h + "ka", a, h + "La"),
        MacroCall("transport_seg", (g, sc, h + "Lc")),
        _circle_through(h + "kc", g, h + "Lc"),
        Decl(f, Intersect(h + "ka", h + "kc", selector or "upper")),
    ]


_EXPANSIONS = {
    "equilateral": _equilateral,
    "transport_seg": _transport_seg,
    "cut_off": _cut_off,
    "triangle_sss": _triangle_sss,
    "transport_angle": _transport_angle,
}
