"""SVG diagrams of traces and reports.

Drawing goes through the standard part: a limited value is shown at its
nearest ordinary number, written as a 12-digit decimal.  Points with an
infinite coordinate become arrows at the border labelled with the coordinate
(``x = 1/ε``), and lines whose slope is lost in the picture (infinitesimal
or with infinitesimal parts) carry a slope annotation.  Nothing computed
here feeds back into any verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Context, Decimal, localcontext
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import UnrenderableScene
from .fields import MagnitudeClass, NonArchField, TowerReal

_READER = NonArchField()
WIDTH = HEIGHT = 480
MARGIN = 24


def _decimal(x):
    """12-significant-digit decimal text of a rational or tower value."""
    if isinstance(x, TowerReal):
        if x.is_rational():
            x = x.to_fraction()
        else:
            lo, hi = x.bounds(80)
            x = (lo + hi) / 2
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
    text = f"{d:f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def _value(text):
    return _READER.parse(text)


def _std(v):
    """Decimal standard part of a limited series, or None when infinite."""
    cls = v.classify()
    if cls is MagnitudeClass.INFINITE:
        return None
    return _decimal(v.standard_part())


@dataclass(frozen=True)
class Primitive:
    kind: str  # point | line | circle | arrow | label
    coords: tuple
    annotation: str = ""
    shadow: bool = False


@dataclass
class SvgScene:
    primitives: list = field(default_factory=list)

    def add(self, *args, **kw):
        self.primitives.append(Primitive(*args, **kw))

    def to_svg(self):
        return _draw(self)


# -- building a scene from serialized data ------------------------------------------

def _point(scene, xy, label="", shadow=False):
    x, y = (_value(t) for t in xy)
    sx, sy = _std(x), _std(y)
    if sx is not None and sy is not None:
        scene.add("point", (sx, sy), label, shadow)
        return
    parts = []
    if sx is None:
        parts.append(f"x = {x.pretty()}")
    if sy is None:
        parts.append(f"y = {y.pretty()}")
    note = ", ".join(parts)
    if label:
        note = f"{label}: {note}"
    # direction of the arrow: sign of each infinite coordinate, else its standard part
    dx = str(x.sign()) if sx is None else "0"
    dy = str(y.sign()) if sy is None else "0"
    scene.add("arrow", (dx, dy, sx or "0", sy or "0"), note, shadow)


def _line(scene, coeffs, label="", shadow=False):
    a, b, c = (_value(t) for t in coeffs)
    # rescale by the largest of a, b so the picture has a limited direction
    big = a if (b.sign() == 0 or (a.sign() != 0 and a.leading()[0] <= b.leading()[0])) else b
    a, b, c = a / big, b / big, c / big
    sa, sb, sc = _std(a), _std(b), _std(c)
    if sc is None:
        return False
    note = label
    if b.sign() != 0:
        slope = -a / b
        if slope.sign() != 0 and (len(slope.terms) > 1 or slope.terms[0][0] != 0 or not slope.exact):
            note = (note + " " if note else "") + f"slope {slope.pretty()}"
    scene.add("line", (sa, sb, sc), note, shadow)
    return True


def _circle(scene, obj, label="", shadow=False):
    cx, cy = (_value(t) for t in (obj["center"]["x"], obj["center"]["y"]))
    r2 = _value(obj["radius_sq"])
    sx, sy, sr = _std(cx), _std(cy), _std(r2)
    if None in (sx, sy, sr):
        return
    r = Decimal(sr).sqrt(Context(prec=12))
    scene.add("circle", (sx, sy, _decimal(Fraction(r))), label, shadow)


def _bound(scene, name, obj):
    shadow = name.startswith("_")
    label = "" if shadow else name
    kind = obj["type"]
    if kind == "point":
        _point(scene, (obj["x"], obj["y"]), label, shadow)
    elif kind == "circle":
        _circle(scene, obj, label, shadow)
    else:
        _line(scene, obj["coeffs"], label, shadow)


def scene_from_trace(trace):
    scene = SvgScene()
    for step in trace["steps"]:
        out = step["outcome"]
        if out["kind"] == "Bound":
            name = step["stmt"].split()[1]
            _bound(scene, name, out["object"])
    return scene


_LINE_KEYS = ("l1", "l2", "t", "l", "line", "line_E", "line_F")
_SHORT = {"meeting_point": "meet", "full_plane_meeting_point": "meet (full plane)", "point": ""}
_POINT_KEYS = ("P", "E", "F", "D", "A", "B", "meeting_point", "full_plane_meeting_point", "point")


def _walk(scene, obj, key=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _walk(scene, obj[k], k)
        return
    if not isinstance(obj, list):
        return
    if key in _LINE_KEYS and len(obj) == 3 and all(isinstance(t, str) for t in obj):
        _line(scene, obj, key)
    elif key in _POINT_KEYS and len(obj) == 2 and all(isinstance(t, str) for t in obj):
        _point(scene, obj, _SHORT.get(key, key))
    elif key in ("crossings", "triangle"):
        for xy in obj:
            _point(scene, xy)
    else:
        for item in obj:
            _walk(scene, item, key)


def scene_from_report(report):
    scene = scene_from_trace(report["trace"]) if report.get("trace") else SvgScene()
    _walk(scene, report.get("witnesses", []))
    return scene


def build_scene(data):
    if "steps" in data:
        return scene_from_trace(data)
    if "verdict" in data:
        return scene_from_report(data)
    raise UnrenderableScene("input is neither a trace nor a proposition report")


def render_svg(data):
    """SVG text for a serialized trace or report."""
    return build_scene(data).to_svg()


# -- drawing --------------------------------------------------------------------------

def _box(scene):
    xs, ys = [], []
    for p in scene.primitives:
        if p.kind == "point":
            xs.append(float(p.coords[0]))
            ys.append(float(p.coords[1]))
        elif p.kind == "circle":
            x, y, r = (float(v) for v in p.coords)
            xs += [x - r, x + r]
            ys += [y - r, y + r]
        elif p.kind == "arrow":
            for i, arr in ((2, xs), (3, ys)):
                if p.coords[i - 2] == "0":
                    arr.append(float(p.coords[i]))
    if not any(p.kind in ("point", "circle", "line") for p in scene.primitives):
        raise UnrenderableScene("every object lies at infinity")
    xs, ys = xs or [0.0], ys or [0.0]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    # square viewport so angles look right
    span = max(x1 - x0, y1 - y0, 2.0)
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    return cx - span / 2, cy - span / 2, span


def _clip(a, b, c, x0, y0, span):
    """Segment of a*x + b*y + c = 0 inside the square, or None."""
    x1, y1 = x0 + span, y0 + span
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = -(a * x + c) / b
            if y0 - 1e-12 <= y <= y1 + 1e-12:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = -(b * y + c) / a
            if x0 - 1e-12 <= x <= x1 + 1e-12:
                pts.append((x, y))
    if len(pts) < 2:
        return None
    pts.sort()
    return pts[0], pts[-1]


def _f(v):
    return f"{v:.3f}"


def _draw(scene):
    x0, y0, span = _box(scene)
    k = (WIDTH - 2 * MARGIN) / span

    def px(x, y):
        return MARGIN + (x - x0) * k, HEIGHT - MARGIN - (y - y0) * k

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        '<rect width="100%" height="100%" fill="white"/>',
        '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="6" refY="4" orient="auto">'
        '<path d="M0,0 L8,4 L0,8 z" fill="black"/></marker></defs>',
    ]
    labels = []
    for p in scene.primitives:
        stroke = "#bbbbbb" if p.shadow else "black"
        if p.kind == "line":
            a, b, c = (float(v) for v in p.coords)
            seg = _clip(a, b, c, x0, y0, span)
            if seg is None:
                continue
            (ax, ay), (bx, by) = px(*seg[0]), px(*seg[1])
            out.append(f'<line x1="{_f(ax)}" y1="{_f(ay)}" x2="{_f(bx)}" y2="{_f(by)}" stroke="{stroke}"/>')
            if p.annotation:
                labels.append((bx - 4, by - 4, p.annotation, "end"))
        elif p.kind == "circle":
            x, y, r = (float(v) for v in p.coords)
            cx, cy = px(x, y)
            out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r * k)}" fill="none" stroke="{stroke}"/>')
        elif p.kind == "point":
            x, y = (float(v) for v in p.coords)
            cx, cy = px(x, y)
            out.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="3" fill="{stroke}"/>')
            if p.annotation:
                labels.append((cx + 5, cy - 5, p.annotation, "start"))
        elif p.kind == "arrow":
            dx, dy = int(p.coords[0]), int(p.coords[1])
            x = float(p.coords[2]) if dx == 0 else (x0 + span if dx > 0 else x0)
            y = float(p.coords[3]) if dy == 0 else (y0 + span if dy > 0 else y0)
            x = min(max(x, x0), x0 + span)
            y = min(max(y, y0), y0 + span)
            tx, ty = px(x, y)
            sx, sy = tx - dx * 30, ty + dy * 30
            out.append(
                f'<line x1="{_f(sx)}" y1="{_f(sy)}" x2="{_f(tx)}" y2="{_f(ty)}" '
                f'stroke="{stroke}" marker-end="url(#arrow)"/>'
            )
            labels.append((sx, sy - 6, p.annotation, "end" if dx > 0 else "start"))
    used = set()
    for x, y, text, anchor in labels:
        while (round(x), round(y), anchor) in used:
            y += 14
        used.add((round(x), round(y), anchor))
        out.append(
            f'<text x="{_f(x)}" y="{_f(y)}" font-family="serif" font-size="12" '
            f'text-anchor="{anchor}">{escape(text)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
