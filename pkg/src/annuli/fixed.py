"""Optimal annuli in one fixed orientation."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .empty_rect import BOX, MaxEmptyRect, enumerate_mers
from .geometry import RECT, UNIFORM_RECT, Annulus, OrientedRect, as_points, geo_eps, normalize_orientation, to_frame


@dataclass(frozen=True)
class FixedSolveResult:
    annulus: Annulus
    width: float
    area: float
    theta: float
    supports: dict = field(default_factory=dict)
    degenerate: bool = False
    diagnostics: dict = field(default_factory=dict)


def _prepare(points, theta):
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    theta = normalize_orientation(theta)
    uv = to_frame(pts, theta)
    lo, hi = uv.min(axis=0), uv.max(axis=0)
    outer = OrientedRect(theta, float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1]))
    return pts, theta, uv, outer


def _outer_supports(uv: np.ndarray) -> list[int]:
    # top, bottom, left, right; argmax/argmin keep the smallest index on ties
    return [int(np.argmax(uv[:, 1])), int(np.argmin(uv[:, 1])), int(np.argmin(uv[:, 0])), int(np.argmax(uv[:, 0]))]


def _result(annulus: Annulus, theta, outer_sup, inner_sup, eps, **diag) -> FixedSolveResult:
    o = annulus.outer
    return FixedSolveResult(
        annulus=annulus,
        width=annulus.width,
        area=annulus.area,
        theta=theta,
        supports={"outer": list(outer_sup), "inner": sorted(set(inner_sup))},
        degenerate=min(o.width, o.height) <= eps,
        diagnostics=diag,
    )


def best_square_center(uv: np.ndarray, outer: OrientedRect, tol: float) -> tuple[float, float, float, float]:
    """Center on the segment of smallest-square centers that maximizes the L-inf clearance.

    Returns ``(u, v, clearance, side)`` in frame coordinates. Along the segment the
    clearance is a lower envelope of functions ``max(|t - a_i|, h_i)``, so its
    maximum sits at a segment end, at a crossing ``(a_i + a_j)/2`` or at a plateau
    end ``a_i +- h_j``; all of those are evaluated.
    """
    w, h = outer.width, outer.height
    d = max(w, h)
    cu, cv = (outer.lo_x + outer.hi_x) / 2, (outer.lo_y + outer.hi_y) / 2
    if h >= w:
        along, across, across_c = uv[:, 0], uv[:, 1], cv
        s0, s1 = outer.hi_x - d / 2, outer.lo_x + d / 2
    else:
        along, across, across_c = uv[:, 1], uv[:, 0], cu
        s0, s1 = outer.hi_y - d / 2, outer.lo_y + d / 2
    s0, s1 = min(s0, s1), max(s0, s1)
    gap = np.abs(across - across_c)
    cand = np.concatenate(
        [
            [s0, s1],
            ((along[:, None] + along[None, :]) / 2).ravel(),
            (along[:, None] + gap[None, :]).ravel(),
            (along[:, None] - gap[None, :]).ravel(),
        ]
    )
    cand = np.unique(cand[(cand >= s0) & (cand <= s1)])
    rho = np.maximum(np.abs(cand[:, None] - along[None, :]), gap[None, :]).min(axis=1)
    best = rho.max()
    t = float(cand[np.nonzero(rho >= best - tol)[0][0]])
    u, v = (t, across_c) if h >= w else (across_c, t)
    return u, v, float(min(best, d / 2)), d


def min_width_square_annulus_fixed(points, theta: float) -> FixedSolveResult:
    """Minimum-width square annulus at ``theta`` whose outer square is a smallest enclosing one."""
    pts, theta, uv, outer = _prepare(points, theta)
    eps = geo_eps(pts)
    u, v, r, d = best_square_center(uv, outer, eps * 1e-3)
    ann = Annulus.square(theta, (u, v), d / 2, r)
    linf = np.maximum(np.abs(uv[:, 0] - u), np.abs(uv[:, 1] - v))
    inner_sup = np.nonzero(linf <= r + eps)[0].tolist() if r > 0 else []
    ext = _outer_supports(uv)
    outer_sup = ext[:2] if outer.height >= outer.width else ext[2:]
    return _result(ann, theta, outer_sup, inner_sup, eps)


def min_area_square_annulus_fixed(points, theta: float) -> FixedSolveResult:
    """Minimum-area square annulus at ``theta``.

    Its outer square must be a smallest enclosing square, and for a fixed outer
    square area and width are minimized together, so this is the same annulus
    as the minimum-width one; area = 4*d*w - 4*w**2.
    """
    return min_width_square_annulus_fixed(points, theta)


def uniform_rect_annulus_fixed(points, theta: float) -> FixedSolveResult:
    """The unique minimum-area uniform annulus (also minimum-width) at ``theta``."""
    pts, theta, uv, outer = _prepare(points, theta)
    f = np.minimum.reduce(
        [uv[:, 0] - outer.lo_x, outer.hi_x - uv[:, 0], uv[:, 1] - outer.lo_y, outer.hi_y - uv[:, 1]]
    )
    w = float(f.max())
    ann = Annulus(UNIFORM_RECT, outer, outer.shrink(w))
    eps = geo_eps(pts)
    return _result(ann, theta, _outer_supports(uv), np.nonzero(f >= w - eps)[0].tolist(), eps, uniform_width=w)


def _mer_supports(m: MaxEmptyRect) -> list[int]:
    return [s for s in m.supports if s != BOX]


def _lex(m: MaxEmptyRect):
    return (m.rect.lo_x, m.rect.lo_y, m.rect.hi_x, m.rect.hi_y)


def _rect_result(pts, theta, uv, outer, mer: MaxEmptyRect, r: int, **diag) -> FixedSolveResult:
    ann = Annulus(RECT, outer, mer.rect)
    return _result(ann, theta, _outer_supports(uv), _mer_supports(mer), geo_eps(pts), r=r, **diag)


def min_area_rect_annulus_fixed(points, theta: float) -> FixedSolveResult:
    """Outer rectangle is the bounding rectangle; inner is a largest empty rectangle."""
    pts, theta, uv, outer = _prepare(points, theta)
    mers = enumerate_mers(uv, outer)
    tol = 1e-12 * max(outer.area, 1e-300)
    best = max(m.area for m in mers)
    mer = min((m for m in mers if m.area >= best - tol), key=_lex)
    return _rect_result(pts, theta, uv, outer, mer, len(mers))


def min_area_min_width_rect_annulus_fixed(points, theta: float) -> FixedSolveResult:
    """Among minimum-width rectangular annuli at ``theta``, one of minimum area.

    The minimum width equals the uniform width w; an inner rectangle keeps every
    side-width <= w exactly when it contains the uniform annulus's inner rectangle,
    so the answer is the largest MER containing that rectangle.
    """
    pts, theta, uv, outer = _prepare(points, theta)
    eps = geo_eps(pts)
    uni = uniform_rect_annulus_fixed(pts, theta)
    core = uni.annulus.inner
    mers = enumerate_mers(uv, outer)
    fits = [m for m in mers if m.rect.contains_rect(core, eps)]
    if not fits:
        raise RuntimeError("no maximal empty rectangle contains the uniform inner rectangle")
    tol = 1e-12 * max(outer.area, 1e-300)
    best = max(m.area for m in fits)
    mer = min((m for m in fits if m.area >= best - tol), key=_lex)
    return _rect_result(pts, theta, uv, outer, mer, len(mers), uniform_width=uni.width)


def min_width_min_area_rect_annulus_fixed(points, theta: float) -> FixedSolveResult:
    """Among largest empty rectangles (area ties within eps*diam^2), the one giving least width."""
    pts, theta, uv, outer = _prepare(points, theta)
    eps = geo_eps(pts)
    mers = enumerate_mers(uv, outer)
    best = max(m.area for m in mers)
    tol = eps * max(outer.width, outer.height, eps)
    ties = [m for m in mers if m.area >= best - tol]

    def width(m: MaxEmptyRect) -> float:
        return Annulus(RECT, outer, m.rect).width

    wmin = min(width(m) for m in ties)
    mer = min((m for m in ties if width(m) <= wmin + eps * 1e-3), key=_lex)
    return _rect_result(pts, theta, uv, outer, mer, len(mers), ties=len(ties))
