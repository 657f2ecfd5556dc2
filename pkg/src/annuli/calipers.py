"""Rotating extremes: the four extreme points of P as functions of the orientation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .geometry import HALF_PI, OrientedRect, Point, as_points, bounding_rect, from_frame, geo_eps, to_frame
from .trig import THETA_EPS, Sinusoid, roots

HEIGHT, WIDTH = "height", "width"


class ExtremeTuple(NamedTuple):
    """Indices of the topmost, bottommost, leftmost and rightmost points."""

    top: int
    bottom: int
    left: int
    right: int


@dataclass(frozen=True)
class PrimaryInterval:
    lo: float
    hi: float
    extremes: ExtremeTuple
    d_branch: str  # HEIGHT when the enclosing square's side is the rectangle height

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class CenterSegment:
    """Centers of all smallest enclosing theta-aligned squares."""

    theta: float
    start: Point
    end: Point
    alignment: float  # theta or theta + pi/2

    @property
    def length(self) -> float:
        return math.hypot(self.end.x - self.start.x, self.end.y - self.start.y)

    @property
    def midpoint(self) -> Point:
        return Point((self.start.x + self.end.x) / 2, (self.start.y + self.end.y) / 2)


def frame_x(p) -> Sinusoid:
    """Frame x-coordinate of a fixed world point as a function of theta."""
    return Sinusoid(p[0], p[1])


def frame_y(p) -> Sinusoid:
    return Sinusoid(p[1], -p[0])


def _first_extreme(values: np.ndarray, eps: float, largest: bool) -> int:
    target = values.max() if largest else values.min()
    hits = np.nonzero(values >= target - eps)[0] if largest else np.nonzero(values <= target + eps)[0]
    return int(hits[0])


def extremes(points, theta: float, eps: Optional[float] = None) -> ExtremeTuple:
    """Extreme points at ``theta``; ties within ``eps`` go to the smallest index."""
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    if eps is None:
        eps = geo_eps(pts)
    uv = to_frame(pts, theta)
    return ExtremeTuple(
        _first_extreme(uv[:, 1], eps, True),
        _first_extreme(uv[:, 1], eps, False),
        _first_extreme(uv[:, 0], eps, False),
        _first_extreme(uv[:, 0], eps, True),
    )


def enclosing_rect(points, theta: float) -> OrientedRect:
    """Smallest theta-aligned rectangle containing all points."""
    return bounding_rect(points, theta)


def swap_orientations(points) -> np.ndarray:
    """Sorted orientations in ``(0, pi/2)`` where some pair ties in frame x or frame y.

    Each pair contributes exactly one such orientation: its segment orientation
    reduced modulo pi/2.
    """
    pts = as_points(points)
    n = len(pts)
    if n < 2:
        return np.zeros(0)
    i, j = np.triu_indices(n, 1)
    d = pts[j] - pts[i]
    t = np.mod(np.arctan2(d[:, 1], d[:, 0]), HALF_PI)
    t = np.sort(t[(t > THETA_EPS) & (t < HALF_PI - THETA_EPS)])
    if len(t) == 0:
        return t
    keep = np.concatenate([[True], np.diff(t) > THETA_EPS])
    return t[keep]


def height_fn(pts: np.ndarray, ext: ExtremeTuple) -> Sinusoid:
    return frame_y(pts[ext.top]) - frame_y(pts[ext.bottom])


def width_fn(pts: np.ndarray, ext: ExtremeTuple) -> Sinusoid:
    return frame_x(pts[ext.right]) - frame_x(pts[ext.left])


def tuple_intervals(points) -> list[tuple[float, float, ExtremeTuple]]:
    """Maximal intervals of constant extreme tuple, before the d-branch refinement."""
    pts = as_points(points)
    cuts = [0.0, *swap_orientations(pts), HALF_PI]
    out: list[tuple[float, float, ExtremeTuple]] = []
    for a, b in zip(cuts, cuts[1:]):
        ext = extremes(pts, (a + b) / 2, eps=0.0)
        if out and out[-1][2] == ext:
            out[-1] = (out[-1][0], b, ext)
        else:
            out.append((a, b, ext))
    return out


def branch_cuts(pts: np.ndarray, lo: float, hi: float, ext: ExtremeTuple) -> list[float]:
    """Orientations inside ``(lo, hi)`` where rectangle height equals width."""
    diff = height_fn(pts, ext) - width_fn(pts, ext)
    return [t for t in roots(diff, lo, hi) if lo + THETA_EPS < t < hi - THETA_EPS]


def d_branch(pts: np.ndarray, lo: float, hi: float, ext: ExtremeTuple) -> str:
    m = (lo + hi) / 2
    return HEIGHT if height_fn(pts, ext).at(m) >= width_fn(pts, ext).at(m) else WIDTH


def primary_intervals(points) -> list[PrimaryInterval]:
    """Partition of ``[0, pi/2)`` into intervals of constant extreme tuple and d-branch."""
    pts = as_points(points)
    if len(pts) < 2:
        raise ValueError("primary intervals need at least two points")
    out = []
    for lo, hi, ext in tuple_intervals(pts):
        cuts = [lo, *branch_cuts(pts, lo, hi, ext), hi]
        for a, b in zip(cuts, cuts[1:]):
            out.append(PrimaryInterval(a, b, ext, d_branch(pts, a, b, ext)))
    return out


def square_side(points, theta: float) -> float:
    r = bounding_rect(points, theta)
    return max(r.width, r.height)


def center_segment(points, theta: float) -> CenterSegment:
    r = bounding_rect(points, theta)
    d = max(r.width, r.height)
    cx, cy = (r.lo_x + r.hi_x) / 2, (r.lo_y + r.hi_y) / 2
    if r.height >= r.width:
        a, b = (r.hi_x - d / 2, cy), (r.lo_x + d / 2, cy)
        align = theta
    else:
        a, b = (cx, r.hi_y - d / 2), (cx, r.lo_y + d / 2)
        align = theta + HALF_PI
    return CenterSegment(theta, from_frame(a, theta), from_frame(b, theta), align)
