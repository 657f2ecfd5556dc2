"""Machine-readable JSON reports and SVG figures for solved problems."""

from __future__ import annotations

import math
from typing import Any, Optional, Sequence

import numpy as np

from .geometry import OrientedRect, bounding_rect
from .rotating import SweepReport


def _num(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite number {x}")
    if x == 0:
        return "0"  # also folds -0.0
    return "%.17g" % x


def dumps(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with insertion-ordered keys and every float written with 17 significant digits.

    Identical inputs give byte-identical text.
    """
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(obj)
    if isinstance(obj, str):
        import json

        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        seq = list(obj)
        if not seq:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in seq):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in seq) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in seq]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _rect_json(r: Optional[OrientedRect]):
    if r is None:
        return None
    return {"theta": r.theta, "corners": [[float(x), float(y)] for x, y in r.corners()]}


def _shapes(report: SweepReport, points) -> tuple[OrientedRect, Optional[OrientedRect]]:
    if report.annulus is not None:
        return report.annulus.outer, report.annulus.inner
    return bounding_rect(points, report.rect.theta), report.rect


def build_report(
    report: SweepReport,
    points,
    spec: dict,
    version: str,
    index_map: Optional[Sequence[int]] = None,
    oracle: Optional[dict] = None,
) -> dict:
    """Assemble the report dictionary in its fixed field order.

    ``index_map`` translates solver point indices back to input line order
    when duplicates were dropped before solving.
    """
    outer, inner = _shapes(report, points)

    def remap(ids):
        ids = [int(i) for i in ids]
        return sorted({int(index_map[i]) for i in ids}) if index_map is not None else ids

    d = report.diagnostics
    out = {
        "spec": dict(spec),
        "n": int(len(points)),
        "theta_star": float(report.theta_star) % (math.pi / 2),
        "value": float(report.value),
        "width": float(report.width),
        "area": float(report.area),
        "side": report.side,
        "outer": _rect_json(outer),
        "inner": _rect_json(inner),
        "supports": {
            "outer": remap(report.supports.get("outer", [])),
            "inner": remap(report.supports.get("inner", [])),
        },
        "diagnostics": {
            "r": d.get("r"),
            "t": d.get("t"),
            "pairs_T": d.get("pairs_T"),
            "primary_intervals": int(d.get("primary_intervals") or 0),
            "elementary_intervals": int(d.get("elementary_intervals") or 0),
            "degenerate": bool(d.get("degenerate", False)),
        },
        "oracle": oracle,
        "version": version,
    }
    return out


def render_svg(report: SweepReport, points, size: int = 480) -> str:
    """A static figure: outer shape stroked, annulus (or empty shape) shaded, points as dots."""
    pts = np.asarray(points, dtype=float)
    outer, inner = _shapes(report, pts)
    oc, ic = outer.corners(), (inner.corners() if inner is not None else None)
    allxy = np.vstack([pts, oc] + ([ic] if ic is not None else []))
    lo, hi = allxy.min(axis=0), allxy.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    k = size / span

    def px(p) -> tuple[float, float]:
        # flip y so the figure reads with y pointing up
        return (p[0] - lo[0]) * k, (hi[1] - p[1]) * k

    def poly(corners) -> str:
        return "M " + " L ".join("%.4f %.4f" % px(c) for c in corners) + " Z"

    w, h = (hi[0] - lo[0]) * k, (hi[1] - lo[1]) * k
    m = 0.05 * max(w, h, 1.0)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%.4f %.4f %.4f %.4f">' % (-m, -m, w + 2 * m, h + 2 * m)
    ]
    if report.annulus is not None:
        region = poly(oc) + (" " + poly(ic) if ic is not None else "")
        parts.append(f'<path d="{region}" fill="#9ecae1" fill-opacity="0.6" fill-rule="evenodd" stroke="none"/>')
        if ic is not None:
            parts.append(f'<path d="{poly(ic)}" fill="none" stroke="#3182bd" stroke-width="1"/>')
    else:
        parts.append(f'<path d="{poly(ic)}" fill="#fdd0a2" fill-opacity="0.7" stroke="#e6550d" stroke-width="1"/>')
    parts.append(f'<path d="{poly(oc)}" fill="none" stroke="#08519c" stroke-width="1.5"/>')
    for p in pts:
        x, y = px(p)
        parts.append('<circle cx="%.4f" cy="%.4f" r="2" fill="#222"/>' % (x, y))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
