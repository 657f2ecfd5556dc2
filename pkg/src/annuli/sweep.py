"""Orientation decomposition shared by the all-orientation solvers.

The domain ``[0, pi/2)`` is cut at every orientation where two points swap
their frame-x or frame-y order, and at every orientation where the bounding
rectangle turns square. Inside one such *elementary interval* both coordinate
orders are fixed, so the set of maximal-empty-rectangle support tuples is
fixed too; enumerating MERs at each interval midpoint is therefore exhaustive.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .calipers import HEIGHT, ExtremeTuple, PrimaryInterval, branch_cuts, d_branch, swap_orientations
from .empty_rect import BOX, Supports, enumerate_mers
from .geometry import HALF_PI, OrientedRect, as_points, to_frame


@dataclass(frozen=True)
class ElementaryInterval:
    lo: float
    hi: float
    primary: int  # index of the enclosing refined primary interval
    extremes: ExtremeTuple
    d_branch: str

    @property
    def mid(self) -> float:
        return (self.lo + self.hi) / 2


@dataclass
class MERClass:
    """Support markers plus the run of elementary intervals where they form a MER."""

    supports: Supports
    first: int
    last: int
    lo: float = 0.0
    hi: float = 0.0

    def resolve(self, ext: ExtremeTuple) -> Supports:
        """Replace box-side markers by the extreme point on that side."""
        s = self.supports
        return Supports(
            ext.top if s.top == BOX else s.top,
            ext.bottom if s.bottom == BOX else s.bottom,
            ext.left if s.left == BOX else s.left,
            ext.right if s.right == BOX else s.right,
        )


@dataclass(frozen=True)
class Piece:
    """A MER class restricted to one refined primary interval."""

    cls: int
    primary: int
    lo: float
    hi: float


@dataclass
class Arrangement:
    points: np.ndarray
    primaries: list[PrimaryInterval]
    elementary: list[ElementaryInterval]
    classes: list[MERClass] = field(default_factory=list)
    pieces: list[Piece] = field(default_factory=list)
    mer_counts: list[int] = field(default_factory=list)

    def diagnostics(self) -> dict:
        return {
            "primary_intervals": len(self.primaries),
            "elementary_intervals": len(self.elementary),
            "mer_classes": len(self.classes) if self.mer_counts else None,
            "pairs_T": len(self.pieces) if self.mer_counts else None,
            "class_interval_overlaps": sum(c.last - c.first + 1 for c in self.classes) if self.mer_counts else None,
            "r": max(self.mer_counts) if self.mer_counts else None,
        }


def _extremes_at(pts: np.ndarray, thetas: np.ndarray) -> list[ExtremeTuple]:
    th = thetas[:, None]
    c, s = np.cos(th), np.sin(th)
    u = pts[:, 0] * c + pts[:, 1] * s
    v = -pts[:, 0] * s + pts[:, 1] * c
    top, bottom = v.argmax(axis=1), v.argmin(axis=1)
    left, right = u.argmin(axis=1), u.argmax(axis=1)
    return [ExtremeTuple(*map(int, t)) for t in zip(top, bottom, left, right)]


def elementary_intervals(points) -> tuple[list[PrimaryInterval], list[ElementaryInterval]]:
    """Refined primary intervals and their elementary refinement, both partitioning ``[0, pi/2)``."""
    pts = as_points(points)
    if len(pts) < 2:
        raise ValueError("the orientation sweep needs at least two distinct points")
    cuts = np.concatenate([[0.0], swap_orientations(pts), [HALF_PI]])
    base = list(zip(cuts[:-1].tolist(), cuts[1:].tolist()))
    exts = _extremes_at(pts, (cuts[:-1] + cuts[1:]) / 2)

    # runs of constant extreme tuple
    runs: list[list[int]] = []
    for k, e in enumerate(exts):
        if runs and exts[runs[-1][0]] == e:
            runs[-1].append(k)
        else:
            runs.append([k])

    primaries: list[PrimaryInterval] = []
    elementary: list[ElementaryInterval] = []
    for run in runs:
        ext = exts[run[0]]
        lo, hi = base[run[0]][0], base[run[-1]][1]
        bc = branch_cuts(pts, lo, hi, ext)
        edges = [lo, *bc, hi]
        first_primary = len(primaries)
        for a, b in zip(edges, edges[1:]):
            primaries.append(PrimaryInterval(a, b, ext, d_branch(pts, a, b, ext)))
        for k in run:
            a, b = base[k]
            inner = [t for t in bc if a < t < b]
            sub = [a, *inner, b]
            for u, w in zip(sub, sub[1:]):
                m = (u + w) / 2
                pi = first_primary + sum(1 for t in bc if t <= m)
                elementary.append(ElementaryInterval(u, w, pi, ext, primaries[pi].d_branch))
    return primaries, elementary


def _supports_at(pts: np.ndarray, theta: float, stretch: Optional[str] = None) -> list[Supports]:
    uv = to_frame(pts, theta)
    lo, hi = uv.min(axis=0), uv.max(axis=0)
    lo_x, hi_x, lo_y, hi_y = float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1])
    if stretch is not None:
        # any margin works: the stretched sides only need to clear every point
        pad = 1.0 + (hi_x - lo_x) + (hi_y - lo_y)
        if stretch == HEIGHT:
            lo_x, hi_x = lo_x - pad, hi_x + pad
        else:
            lo_y, hi_y = lo_y - pad, hi_y + pad
    box = OrientedRect(theta, lo_x, hi_x, lo_y, hi_y)
    return [m.supports for m in enumerate_mers(uv, box)]


def build_arrangement(
    points, with_classes: bool = True, threads: Optional[int] = None, stretched: bool = False
) -> Arrangement:
    """Elementary intervals and (optionally) MER classes with their primary-interval pieces.

    With ``stretched`` the MERs are taken in the bounding rectangle extended
    without limit in the direction of the smallest enclosing square's center
    segment (frame x when the height is the larger extent, frame y otherwise).
    Box markers on those two sides then mean "unbounded", and the extreme
    points on them block like any other point. Square annuli need this since
    their inner square may leave the bounding rectangle.

    ``threads`` > 1 enumerates interval midpoints concurrently; the result is
    identical to the sequential one since outputs are consumed in interval order.
    """
    pts = as_points(points)
    primaries, elementary = elementary_intervals(pts)
    arr = Arrangement(pts, primaries, elementary)
    if not with_classes:
        return arr

    def job(e: ElementaryInterval) -> list[Supports]:
        return _supports_at(pts, e.mid, e.d_branch if stretched else None)

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_interval = list(pool.map(job, elementary))
    else:
        per_interval = [job(e) for e in elementary]

    open_: dict[Supports, int] = {}
    classes: list[MERClass] = []
    for k, sups in enumerate(per_interval):
        nxt: dict[Supports, int] = {}
        for s in sups:
            ci = open_.get(s)
            # with stretching the same markers mean different rectangles on the two branches
            same_branch = not stretched or elementary[k - 1].d_branch == elementary[k].d_branch
            if ci is not None and classes[ci].last == k - 1 and same_branch:
                classes[ci].last = k
            else:
                ci = len(classes)
                classes.append(MERClass(s, k, k))
            nxt[s] = ci
        open_ = nxt
    pieces: list[Piece] = []
    for ci, c in enumerate(classes):
        c.lo, c.hi = elementary[c.first].lo, elementary[c.last].hi
        k = c.first
        while k <= c.last:
            p = elementary[k].primary
            j = k
            while j + 1 <= c.last and elementary[j + 1].primary == p:
                j += 1
            pieces.append(Piece(ci, p, elementary[k].lo, elementary[j].hi))
            k = j + 1
    arr.classes = classes
    arr.pieces = pieces
    arr.mer_counts = [len(s) for s in per_interval]
    return arr


def mer_classes(points, threads: Optional[int] = None) -> list[MERClass]:
    return build_arrangement(points, True, threads).classes
