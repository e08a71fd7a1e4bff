"""Deterministic SVG and JSON views of the two-dimensional complex.

The SVG is presentation only: coordinates are floats rendered with 15
significant digits, while every element carries the exact strings in
data- attributes.  The JSON sidecar is the lossless artifact; importing
it back reconstructs the face classification bit for bit.  Identical
inputs produce byte-identical output, so diagrams diff cleanly.
"""

from __future__ import annotations

import json
import math

from .exactnum import QNum, parse_qnum
from .pwl import PwlFunction, BreakpointRow
from .complex2d import centroid, ccw_hull_order, n_f
from .additivity import (ADDITIVE, LIMIT_ADDITIVE, AdditivityReport,
                         additive_face_report)

SCHEMA = "groupcut-diagram/1"

_SIZE = 560.0
_MARGIN = 44.0
_NF_FILL = {0: "#ffffff", 1: "#d7e3f4", 2: "#9dbbe3"}
_GREEN = "#1a9641"
_CONE_LEN = 13.0


def _fmt(v: float) -> str:
    return f"{v:.15g}"


def _px(x: float) -> float:
    return _MARGIN + x * _SIZE


def _py(y: float) -> float:
    return _MARGIN + (1.0 - y) * _SIZE


def _esc(s: str) -> str:
    return (s.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;").replace('"', "&quot;"))


def _polygon_points(vertices) -> str:
    pts = []
    for (u, v) in ccw_hull_order(vertices):
        pts.append(f"{_fmt(_px(float(u)))},{_fmt(_py(float(v)))}")
    return " ".join(pts)


def _cone_arrow(vertex, toward, exact_vertex: str) -> str:
    """Fixed-length arrow glyph entering `vertex` from the `toward` side."""
    vx, vy = float(vertex[0]), float(vertex[1])
    dx, dy = float(toward[0]) - vx, float(toward[1]) - vy
    norm = math.hypot(dx, dy)
    if norm == 0.0:
        return ""
    dx, dy = dx / norm, dy / norm
    x1, y1 = _px(vx), _py(vy)
    # pixel-space direction away from the vertex (y axis is flipped)
    ex, ey = dx, -dy
    x0, y0 = x1 + ex * _CONE_LEN, y1 + ey * _CONE_LEN
    # small arrowhead wings at the vertex end
    wing = 3.6
    wx, wy = -ey, ex
    h1 = (x1 + ex * wing + wx * wing * 0.7, y1 + ey * wing + wy * wing * 0.7)
    h2 = (x1 + ex * wing - wx * wing * 0.7, y1 + ey * wing - wy * wing * 0.7)
    return (
        f'<g class="cone" data-vertex="{_esc(exact_vertex)}">'
        f'<line x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" '
        f'y2="{_fmt(y1)}" stroke="{_GREEN}" stroke-width="1.6"/>'
        f'<polyline points="{_fmt(h1[0])},{_fmt(h1[1])} {_fmt(x1)},'
        f'{_fmt(y1)} {_fmt(h2[0])},{_fmt(h2[1])}" stroke="{_GREEN}" '
        f'stroke-width="1.6" fill="none"/></g>')


def _resolve(fn):
    """Accept a PwlFunction or a lifted object carrying a PWL base."""
    note = None
    base = fn
    if not isinstance(fn, PwlFunction):
        base = getattr(fn, "base", None)
        if not isinstance(base, PwlFunction):
            raise TypeError("diagram needs a piecewise linear function or "
                            "an object with a piecewise linear .base")
        s = getattr(getattr(fn, "params", None), "s", None)
        note = (f"rendered as the piecewise linear base; the actual values "
                f"move by +/-{s} on dense coset families inside the special "
                f"intervals")
    return base, note


def render_svg(fn, *, show_additive: bool = True,
               show_limit_cones: bool = True, color_by_nf: bool = False,
               report: AdditivityReport | None = None) -> str:
    base, note = _resolve(fn)
    if report is None:
        report = additive_face_report(base)
    cx = report.complex
    specials = base.special_intervals
    total = _SIZE + 2 * _MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(total)}" '
        f'height="{_fmt(total)}" viewBox="0 0 {_fmt(total)} {_fmt(total)}">',
        f'<rect x="0" y="0" width="{_fmt(total)}" height="{_fmt(total)}" '
        f'fill="#ffffff"/>',
        f'<title>{_esc(base.name or "function")} complex</title>',
    ]

    if color_by_nf:
        for cls in report.faces:
            face = cls.face
            if face.dim != 2:
                continue
            nf = n_f(face, specials)
            out.append(
                f'<polygon points="{_polygon_points(face.vertices)}" '
                f'fill="{_NF_FILL.get(nf, _NF_FILL[2])}" stroke="none" '
                f'data-nf="{nf}" data-face="{_esc(face.label())}"/>')

    # grid: breakpoint verticals/horizontals and the diagonals x + y = const
    grid = []
    for b in list(base.breakpoints) + [QNum(1)]:
        v = float(b)
        grid.append(((v, 0.0), (v, 1.0), str(b)))
        grid.append(((0.0, v), (1.0, v), str(b)))
    for c in cx.points_k:
        fc = float(c)
        if fc <= 1.0:
            seg = ((0.0, fc), (fc, 0.0))
        else:
            seg = ((fc - 1.0, 1.0), (1.0, fc - 1.0))
        grid.append((seg[0], seg[1], str(c)))
    for (a, b, exact) in grid:
        out.append(
            f'<line x1="{_fmt(_px(a[0]))}" y1="{_fmt(_py(a[1]))}" '
            f'x2="{_fmt(_px(b[0]))}" y2="{_fmt(_py(b[1]))}" '
            f'stroke="#b0b0b0" stroke-width="0.6" data-at="{_esc(exact)}"/>')

    if show_additive:
        for cls in report.faces:
            if cls.status != ADDITIVE:
                continue
            face = cls.face
            label = _esc(face.label())
            if face.dim == 2:
                out.append(
                    f'<polygon points="{_polygon_points(face.vertices)}" '
                    f'fill="{_GREEN}" fill-opacity="0.45" stroke="none" '
                    f'data-face="{label}" data-status="additive"/>')
            elif face.dim == 1:
                (u0, v0), (u1, v1) = face.vertices[0], face.vertices[-1]
                out.append(
                    f'<line x1="{_fmt(_px(float(u0)))}" '
                    f'y1="{_fmt(_py(float(v0)))}" '
                    f'x2="{_fmt(_px(float(u1)))}" '
                    f'y2="{_fmt(_py(float(v1)))}" stroke="{_GREEN}" '
                    f'stroke-width="2.4" data-face="{label}" '
                    f'data-status="additive"/>')
            else:
                (u, v) = face.vertices[0]
                out.append(
                    f'<circle cx="{_fmt(_px(float(u)))}" '
                    f'cy="{_fmt(_py(float(v)))}" r="3" fill="{_GREEN}" '
                    f'data-face="{label}" data-status="additive"/>')

    if show_limit_cones:
        for cls in report.faces:
            if cls.status != LIMIT_ADDITIVE:
                continue
            face = cls.face
            mid = centroid(face.vertices)
            for (u, v) in cls.zero_vertices:
                arrow = _cone_arrow((u, v), mid, f"({u}, {v})")
                if arrow:
                    out.append(arrow)

    if note:
        out.append(f'<text x="{_fmt(_MARGIN)}" y="{_fmt(total - 10.0)}" '
                   f'font-size="11" fill="#444444">{_esc(note)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_sidecar(fn, report: AdditivityReport | None = None) -> dict:
    """Exact JSON description of the function and its face classification."""
    base, note = _resolve(fn)
    if report is None:
        report = additive_face_report(base)
    specials = base.special_intervals
    faces = []
    for cls in report.faces:
        face = cls.face
        faces.append({
            "I": [str(face.I.a), str(face.I.b)],
            "J": [str(face.J.a), str(face.J.b)],
            "K": [str(face.K.a), str(face.K.b)],
            "dim": face.dim,
            "status": cls.status,
            "n_f": n_f(face, specials),
            "vertices": [[str(u), str(v)] for (u, v) in face.vertices],
            "slacks": [{
                "vertex": [str(r.vertex[0]), str(r.vertex[1])],
                "sides": list(r.sides),
                "slack": str(r.slack),
            } for r in cls.slacks],
        })
    data = {
        "schema": SCHEMA,
        "function": {
            "name": base.name,
            "f": str(base.f),
            "rows": [[str(r.x), str(r.left), str(r.value), str(r.right)]
                     for r in base.rows],
            "special_intervals": [[str(a), str(b)] for a, b in specials],
        },
        "faces": faces,
    }
    if note:
        data["note"] = note
    return data


def render_diagram(fn, *, show_additive: bool = True,
                   show_limit_cones: bool = True,
                   color_by_nf: bool = False) -> tuple[str, dict]:
    base, _ = _resolve(fn)
    report = additive_face_report(base)
    svg = render_svg(fn, show_additive=show_additive,
                     show_limit_cones=show_limit_cones,
                     color_by_nf=color_by_nf, report=report)
    return svg, render_sidecar(fn, report)


def sidecar_to_json(data: dict) -> str:
    return json.dumps(data, indent=1, sort_keys=True) + "\n"


def function_from_sidecar(data: dict) -> PwlFunction:
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unknown schema {data.get('schema')!r}")
    f = data["function"]
    rows = [BreakpointRow(*(parse_qnum(c) for c in row)) for row in f["rows"]]
    specials = tuple((parse_qnum(a), parse_qnum(b))
                     for a, b in f["special_intervals"])
    return PwlFunction(rows, parse_qnum(f["f"]), name=f["name"],
                       special_intervals=specials)


def classification_digest(source) -> dict:
    """Canonical face -> classification map, from a report or a sidecar.

    Equality of digests is the losslessness check for the JSON export.
    """
    if isinstance(source, AdditivityReport):
        out = {}
        for cls in source.faces:
            face = cls.face
            key = (str(face.I.a), str(face.I.b), str(face.J.a),
                   str(face.J.b), str(face.K.a), str(face.K.b))
            out[key] = (cls.status,
                        tuple((str(r.vertex[0]), str(r.vertex[1]),
                               tuple(r.sides), str(r.slack))
                              for r in cls.slacks))
        return out
    out = {}
    for item in source["faces"]:
        key = (item["I"][0], item["I"][1], item["J"][0], item["J"][1],
               item["K"][0], item["K"][1])
        out[key] = (item["status"],
                    tuple((r["vertex"][0], r["vertex"][1],
                           tuple(r["sides"]), r["slack"])
                          for r in item["slacks"]))
    return out
