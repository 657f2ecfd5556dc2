"""One entry point for every supported (shape, objective, orientation) combination."""

from __future__ import annotations

from typing import Optional

from . import fixed, rotating
from .empty_rect import largest_empty_rect, largest_empty_square_fixed
from .geometry import as_points, bounding_rect, to_frame
from .rotating import SweepReport
from .sweep import elementary_intervals
from .validation import ANY, Orientation, check_orientation

SHAPES = ("square", "urect", "rect", "empty-rect", "empty-square")
ANNULUS_OBJECTIVES = ("width", "area", "area-width", "width-area")


class UnsupportedProblem(ValueError):
    """Raised for a shape/objective pairing that has no solver."""


def canonical(shape: str, objective: str) -> tuple[str, str]:
    shape = shape.strip().lower().replace("_", "-")
    objective = objective.strip().lower().replace("_", "-")
    if shape not in SHAPES:
        raise UnsupportedProblem(f"unknown shape {shape!r}; choose from {', '.join(SHAPES)}")
    if shape.startswith("empty-"):
        if objective != "largest":
            raise UnsupportedProblem(f"{shape} only supports the objective 'largest', got {objective!r}")
    elif objective not in ANNULUS_OBJECTIVES:
        raise UnsupportedProblem(
            f"{shape} annuli support objectives {', '.join(ANNULUS_OBJECTIVES)}, got {objective!r}"
        )
    return shape, objective


def _interval_counts(pts) -> dict:
    if len(pts) < 2:
        return {"primary_intervals": 0, "elementary_intervals": 0}
    prim, elem = elementary_intervals(pts)
    return {"primary_intervals": len(prim), "elementary_intervals": len(elem)}


def _from_fixed(problem: str, value_key: str, res: fixed.FixedSolveResult, pts) -> SweepReport:
    diag = {"r": res.diagnostics.get("r"), "t": None, "pairs_T": None}
    diag.update(_interval_counts(pts))
    diag["degenerate"] = res.degenerate
    value = res.width if value_key == "width" else res.area
    secondary = {"width": None, "area": None, "area-width": res.area, "width-area": res.width}[problem.split("/")[1]]
    return SweepReport(
        problem, res.theta, value, res.width, res.area, secondary=secondary, annulus=res.annulus,
        supports=res.supports, minimizers=(res.theta,), diagnostics=diag,
    )


_FIXED = {
    "square": lambda p, t, o: fixed.min_width_square_annulus_fixed(p, t),
    "urect": lambda p, t, o: fixed.uniform_rect_annulus_fixed(p, t),
    "rect": lambda p, t, o: {
        "width": fixed.min_area_min_width_rect_annulus_fixed,
        "area-width": fixed.min_area_min_width_rect_annulus_fixed,
        "area": fixed.min_area_rect_annulus_fixed,
        "width-area": fixed.min_width_min_area_rect_annulus_fixed,
    }[o](p, t),
}


def _solve_any(pts, shape: str, objective: str, threads: Optional[int]) -> SweepReport:
    if shape == "square":
        return rotating.square_annulus_any(pts, objective, threads)
    if shape == "urect":
        return rotating.uniform_rect_any(pts, objective, threads)
    if shape == "empty-rect":
        return rotating.largest_empty_rect_any(pts, threads)
    if shape == "empty-square":
        return rotating.largest_empty_square_any(pts, threads)
    if objective == "area":
        return rotating.min_area_rect_annulus_any(pts, threads)
    if objective == "width-area":
        return rotating.min_width_min_area_rect_annulus_any(pts, threads)
    rep = rotating.min_area_min_width_rect_annulus_any(pts, threads)
    if objective == "width":
        # the least width is the uniform width; the least-area witness among those is a fine representative
        return SweepReport(**{**rep.__dict__, "problem": "rect/width", "secondary": None})
    return rep


def solve(points, shape: str, objective: str, orientation: Orientation = ANY, threads: Optional[int] = None) -> SweepReport:
    """Solve one problem and return a :class:`SweepReport` (also for a fixed orientation)."""
    shape, objective = canonical(shape, objective)
    orientation = check_orientation(orientation)
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    if orientation == ANY:
        return _solve_any(pts, shape, objective, threads)

    theta = float(orientation)
    problem = f"{shape}/{objective}"
    if shape.startswith("empty-"):
        uv, box = to_frame(pts, theta), bounding_rect(pts, theta)
        if shape == "empty-rect":
            rect = largest_empty_rect(uv, box).rect
            value = rect.area
        else:
            rect = largest_empty_square_fixed(uv, box)
            value = rect.width
        diag = {"r": None, "t": None, "pairs_T": None, **_interval_counts(pts), "degenerate": min(box.width, box.height) <= 0}
        return SweepReport(problem, theta, value, 0.0, rect.area, rect=rect, minimizers=(theta,), diagnostics=diag)
    res = _FIXED[shape](pts, theta, objective)
    value_key = "width" if objective in ("width", "area-width") else "area"
    return _from_fixed(problem, value_key, res, pts)
