"""Planar primitives: points, orientations, frame rotation and theta-aligned rectangles.

A *frame* at orientation ``theta`` is the coordinate system obtained by rotating
the world by ``-theta``; in it every theta-aligned rectangle is axis-parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

import numpy as np

from ._config import eps_scale

HALF_PI = math.pi / 2


class Point(NamedTuple):
    x: float
    y: float

    @classmethod
    def of(cls, x: float, y: float) -> "Point":
        x, y = float(x), float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"non-finite coordinate in point ({x}, {y})")
        return cls(x, y)


def normalize_orientation(theta: float, period: float = HALF_PI) -> float:
    """Reduce ``theta`` into ``[0, period)``; values within rounding of the period wrap to 0."""
    t = math.fmod(float(theta), period)
    if t < 0:
        t += period
    if t >= period or period - t <= 1e-15 * period:
        t = 0.0
    return t


def segment_orientation(p: Sequence[float], q: Sequence[float]) -> float:
    """Orientation in ``[0, pi)`` of the line through ``p`` and ``q``."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx == 0 and dy == 0:
        raise ValueError("degenerate segment: coincident points")
    return normalize_orientation(math.atan2(dy, dx), math.pi)


def project_width(p: Sequence[float], q: Sequence[float], theta: float) -> float:
    """Distance between the projections of ``p`` and ``q`` onto a theta-aligned line."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    return abs(dx * math.cos(theta) + dy * math.sin(theta))


def to_frame(p, theta: float):
    """World -> frame coordinates. Accepts a single point or an ``(n, 2)`` array."""
    c, s = math.cos(theta), math.sin(theta)
    arr = np.asarray(p, dtype=float)
    x, y = arr[..., 0], arr[..., 1]
    out = np.stack([x * c + y * s, -x * s + y * c], axis=-1)
    if arr.ndim == 1:
        return Point(float(out[0]), float(out[1]))
    return out


def from_frame(p, theta: float):
    """Inverse of :func:`to_frame`."""
    c, s = math.cos(theta), math.sin(theta)
    arr = np.asarray(p, dtype=float)
    u, v = arr[..., 0], arr[..., 1]
    out = np.stack([u * c - v * s, u * s + v * c], axis=-1)
    if arr.ndim == 1:
        return Point(float(out[0]), float(out[1]))
    return out


def as_points(points: Iterable[Sequence[float]]) -> np.ndarray:
    """Validate a point collection into a float ``(n, 2)`` array (no deduplication)."""
    arr = np.asarray(points, dtype=float)
    if arr.size == 0:
        return np.zeros((0, 2))
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("point coordinates must be finite (no NaN/Inf)")
    return arr


def dedupe_points(points) -> tuple[np.ndarray, int]:
    """Drop exact duplicates, keeping first occurrences in input order.

    Returns the reduced array and the number of removed points.
    """
    arr = as_points(points)
    if len(arr) == 0:
        return arr, 0
    _, first = np.unique(arr, axis=0, return_index=True)
    keep = np.sort(first)
    return arr[keep], len(arr) - len(keep)


def diameter(points) -> float:
    """Bounding-box diagonal; within a factor sqrt(2) of the true diameter."""
    arr = as_points(points)
    if len(arr) == 0:
        return 0.0
    ext = arr.max(axis=0) - arr.min(axis=0)
    return float(math.hypot(ext[0], ext[1]))


def geo_eps(points) -> float:
    """Global comparison tolerance, proportional to the instance size."""
    d = diameter(points)
    return eps_scale() * (d if d > 0 else 1.0)


@dataclass(frozen=True)
class OrientedRect:
    """A theta-aligned rectangle stored by its frame-coordinate extents."""

    theta: float
    lo_x: float
    hi_x: float
    lo_y: float
    hi_y: float

    def __post_init__(self):
        if self.lo_x > self.hi_x or self.lo_y > self.hi_y:
            raise ValueError(f"inverted rectangle extents: {self}")

    @property
    def width(self) -> float:
        return self.hi_x - self.lo_x

    @property
    def height(self) -> float:
        return self.hi_y - self.lo_y

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def center(self) -> Point:
        return from_frame(((self.lo_x + self.hi_x) / 2, (self.lo_y + self.hi_y) / 2), self.theta)

    def frame_corners(self) -> np.ndarray:
        return np.array(
            [
                [self.lo_x, self.lo_y],
                [self.hi_x, self.lo_y],
                [self.hi_x, self.hi_y],
                [self.lo_x, self.hi_y],
            ]
        )

    def corners(self) -> np.ndarray:
        """World corners, counter-clockwise from the frame's bottom-left corner."""
        return from_frame(self.frame_corners(), self.theta)

    def contains_frame(self, uv, eps: float = 0.0) -> np.ndarray:
        uv = np.asarray(uv, dtype=float)
        return (
            (uv[..., 0] >= self.lo_x - eps)
            & (uv[..., 0] <= self.hi_x + eps)
            & (uv[..., 1] >= self.lo_y - eps)
            & (uv[..., 1] <= self.hi_y + eps)
        )

    def contains_rect(self, other: "OrientedRect", eps: float = 0.0) -> bool:
        return (
            self.lo_x <= other.lo_x + eps
            and other.hi_x <= self.hi_x + eps
            and self.lo_y <= other.lo_y + eps
            and other.hi_y <= self.hi_y + eps
        )

    def shrink(self, w: float) -> "OrientedRect":
        """Inward offset by ``w`` on all four sides (clamped so it never inverts)."""
        cx, cy = (self.lo_x + self.hi_x) / 2, (self.lo_y + self.hi_y) / 2
        lo_x, hi_x = min(self.lo_x + w, cx), max(self.hi_x - w, cx)
        lo_y, hi_y = min(self.lo_y + w, cy), max(self.hi_y - w, cy)
        return OrientedRect(self.theta, lo_x, hi_x, lo_y, hi_y)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.lo_x, self.hi_x, self.lo_y, self.hi_y)


def bounding_rect(points, theta: float) -> OrientedRect:
    uv = to_frame(as_points(points), theta)
    if len(uv) == 0:
        raise ValueError("empty point set")
    lo, hi = uv.min(axis=0), uv.max(axis=0)
    return OrientedRect(theta, float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1]))


SQUARE, UNIFORM_RECT, RECT = "square", "uniform_rect", "rect"


@dataclass(frozen=True)
class Annulus:
    """Closed region between an outer and an inner rectangle sharing one orientation."""

    kind: str
    outer: OrientedRect
    inner: OrientedRect
    center: Optional[Point] = None
    outer_radius: Optional[float] = None
    inner_radius: Optional[float] = None
    side_widths: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.kind not in (SQUARE, UNIFORM_RECT, RECT):
            raise ValueError(f"unknown annulus kind {self.kind!r}")
        if abs(self.outer.theta - self.inner.theta) > 1e-15:
            raise ValueError("outer and inner rectangles must share an orientation")
        o, i = self.outer, self.inner
        sides = (o.hi_y - i.hi_y, i.lo_y - o.lo_y, i.lo_x - o.lo_x, o.hi_x - i.hi_x)
        object.__setattr__(self, "side_widths", sides)

    @classmethod
    def square(cls, theta: float, center_frame, outer_radius: float, inner_radius: float) -> "Annulus":
        cu, cv = float(center_frame[0]), float(center_frame[1])
        if inner_radius < 0 or inner_radius > outer_radius:
            raise ValueError("square annulus radii must satisfy 0 <= inner <= outer")
        outer = OrientedRect(theta, cu - outer_radius, cu + outer_radius, cv - outer_radius, cv + outer_radius)
        inner = OrientedRect(theta, cu - inner_radius, cu + inner_radius, cv - inner_radius, cv + inner_radius)
        return cls(SQUARE, outer, inner, from_frame((cu, cv), theta), outer_radius, inner_radius)

    @property
    def theta(self) -> float:
        return self.outer.theta

    @property
    def width(self) -> float:
        if self.kind == SQUARE:
            return self.outer_radius - self.inner_radius
        return max(self.side_widths)

    @property
    def area(self) -> float:
        if self.kind == SQUARE:
            return (2 * self.outer_radius) ** 2 - (2 * self.inner_radius) ** 2
        return self.outer.area - self.inner.area

    def contains(self, points, eps: float = 0.0) -> np.ndarray:
        """Closed-region membership of world points (tolerance ``eps`` on both boundaries)."""
        uv = to_frame(as_points(points), self.theta)
        in_outer = self.outer.contains_frame(uv, eps)
        i = self.inner
        strictly_inner = (
            (uv[:, 0] > i.lo_x + eps)
            & (uv[:, 0] < i.hi_x - eps)
            & (uv[:, 1] > i.lo_y + eps)
            & (uv[:, 1] < i.hi_y - eps)
        )
        return in_outer & ~strictly_inner
