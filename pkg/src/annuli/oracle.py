"""Brute-force reference computations.

Everything here is deliberately naive and written without calling the
solvers it is used to check: exhaustive candidate enumeration, dense grids
over centers and orientations, vectorized with numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import HALF_PI, OrientedRect, as_points

MAX_ORACLE_POINTS = 12


@dataclass(frozen=True)
class OracleConfig:
    theta_samples: int = 20000
    center_samples: int = 100000

    def __post_init__(self):
        if self.theta_samples < 100 or self.center_samples < 100:
            raise ValueError("oracle sample counts must be at least 100")


def _guard(n: int, limit: int = MAX_ORACLE_POINTS):
    if n > limit:
        raise ValueError(f"oracle size guard: {n} points exceeds the limit of {limit}")


def _rotate(pts: np.ndarray, theta):
    """Frame coordinates; ``theta`` may be an array, giving shape (T, n)."""
    th = np.asarray(theta, dtype=float)[..., None]
    c, s = np.cos(th), np.sin(th)
    x, y = pts[:, 0], pts[:, 1]
    return x * c + y * s, -x * s + y * c


# ---------------------------------------------------------------- MER oracle


def _empty(L, R, B, T, xs, ys):
    """Interior-emptiness of candidate rectangles (arrays) against all points."""
    if len(xs) == 0:
        return np.ones(L.shape, dtype=bool)
    inside = (
        (xs > L[:, None]) & (xs < R[:, None]) & (ys > B[:, None]) & (ys < T[:, None])
    )
    return ~inside.any(axis=1)


def _prev_below(vals: np.ndarray, coords: np.ndarray, floor: float) -> np.ndarray:
    """For each value, the largest coordinate strictly below it (or ``floor``)."""
    below = np.where(coords[None, :] < vals[:, None], coords[None, :], -np.inf)
    return np.maximum(below.max(axis=1, initial=-np.inf), floor)


def oracle_mers(points, box: OrientedRect) -> list[OrientedRect]:
    """Every maximal empty rectangle, by trying all (left, right, bottom, top) support choices."""
    q = as_points(points)
    _guard(len(q))
    lo_x, hi_x, lo_y, hi_y = box.as_tuple()
    xs, ys = q[:, 0], q[:, 1]
    lefts = np.concatenate([[lo_x], xs])
    rights = np.concatenate([xs, [hi_x]])
    bottoms = np.concatenate([[lo_y], ys])
    tops = np.concatenate([ys, [hi_y]])
    L, R, B, T = (a.ravel() for a in np.meshgrid(lefts, rights, bottoms, tops, indexing="ij"))
    ok = (L < R) & (B < T) & (L >= lo_x) & (R <= hi_x) & (B >= lo_y) & (T <= hi_y)
    if lo_x == hi_x or lo_y == hi_y:
        # degenerate box: the box itself is the only (zero-area) empty rectangle
        return [OrientedRect(box.theta, lo_x, hi_x, lo_y, hi_y)]
    L, R, B, T = L[ok], R[ok], B[ok], T[ok]
    keep = _empty(L, R, B, T, xs, ys)
    L, R, B, T = L[keep], R[keep], B[keep], T[keep]

    # a side is maximal iff pushing it halfway to the next coordinate outward breaks emptiness
    maximal = np.ones(len(L), dtype=bool)
    ext_l = (L + _prev_below(L, xs, lo_x)) / 2
    ext_r = (R - _prev_below(-R, -xs, -hi_x)) / 2
    ext_b = (B + _prev_below(B, ys, lo_y)) / 2
    ext_t = (T - _prev_below(-T, -ys, -hi_y)) / 2
    maximal &= (L <= lo_x) | ~_empty(ext_l, R, B, T, xs, ys)
    maximal &= (R >= hi_x) | ~_empty(L, ext_r, B, T, xs, ys)
    maximal &= (B <= lo_y) | ~_empty(L, R, ext_b, T, xs, ys)
    maximal &= (T >= hi_y) | ~_empty(L, R, B, ext_t, xs, ys)
    rows = np.unique(np.stack([L, R, B, T], axis=1)[maximal], axis=0)
    return [OrientedRect(box.theta, *map(float, r)) for r in rows]


# ------------------------------------------------------------- shared helpers

SHAPES = ("square", "urect", "rect", "empty-rect", "empty-square")
OBJECTIVES = ("width", "area", "area-width", "width-area", "largest")


def canonical_objective(objective: str) -> str:
    obj = objective.replace("_", "-")
    if obj not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    return obj


@dataclass(frozen=True)
class OracleResult:
    """Reference value of the primary objective plus the selected annulus's width and area.

    ``step`` is the orientation grid spacing (0 for fixed orientation) and
    ``lipschitz`` the per-radian bound the caller should combine with it.
    """

    value: float
    width: float
    area: float
    theta: float
    step: float = 0.0
    lipschitz: float = 0.0

    def __post_init__(self):
        for name in ("value", "width", "area", "theta", "step", "lipschitz"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def slack(self) -> float:
        return self.lipschitz * self.step


def _bbox_diag(pts: np.ndarray) -> float:
    if len(pts) == 0:
        return 0.0
    span = pts.max(axis=0) - pts.min(axis=0)
    return float(math.hypot(span[0], span[1]))


def _eps(pts: np.ndarray) -> float:
    from ._config import eps_scale

    d = _bbox_diag(pts)
    return eps_scale() * (d if d > 0 else 1.0)


def _two_stage(primary: np.ndarray, secondary: np.ndarray, tol: float, maximize: bool = False) -> int:
    """Index of the best secondary (min) among entries whose primary is within ``tol`` of optimal."""
    best = primary.max() if maximize else primary.min()
    near = (primary >= best - tol) if maximize else (primary <= best + tol)
    idx = np.nonzero(near)[0]
    return int(idx[np.argmin(secondary[idx])])


# ------------------------------------------------------------ fixed orientation


def oracle_fixed(points, theta: float, shape: str, objective: str = "width", config: OracleConfig = OracleConfig()) -> OracleResult:
    """Reference optimum at one orientation.

    Squares search ``center_samples`` centers spread along the segment of
    smallest-square centers (one-sided error at most d * segment / samples);
    everything else is exact.
    """
    pts = as_points(points)
    _guard(len(pts))
    if len(pts) == 0:
        raise ValueError("empty point set")
    obj = canonical_objective(objective)
    u, v = _rotate(pts, theta)
    lo_x, hi_x, lo_y, hi_y = u.min(), u.max(), v.min(), v.max()
    W, H = hi_x - lo_x, hi_y - lo_y
    eps = _eps(pts)

    if shape == "square":
        d = max(W, H)
        t = np.linspace(0.0, 1.0, config.center_samples)
        if H >= W:
            a, b = hi_x - d / 2, lo_x + d / 2
            cu, cv = a + (b - a) * t, np.full_like(t, (lo_y + hi_y) / 2)
        else:
            a, b = hi_y - d / 2, lo_y + d / 2
            cu, cv = np.full_like(t, (lo_x + hi_x) / 2), a + (b - a) * t
        rho = np.full_like(t, np.inf)
        for x, y in zip(u, v):
            rho = np.minimum(rho, np.maximum(np.abs(cu - x), np.abs(cv - y)))
        r = float(min(rho.max(), d / 2))
        width, area = d / 2 - r, d * d - 4 * r * r
        return OracleResult(area if obj == "area" else width, width, area, float(theta))

    f = np.minimum.reduce([u - lo_x, hi_x - u, v - lo_y, hi_y - v])
    w_uni = float(f.max())
    if shape == "urect":
        area = 2 * (W + H) * w_uni - 4 * w_uni * w_uni
        return OracleResult(area if obj in ("area", "area-width") else w_uni, w_uni, area, float(theta))

    box = OrientedRect(float(theta), float(lo_x), float(hi_x), float(lo_y), float(hi_y))
    mers = oracle_mers(np.stack([u, v], axis=1), box)
    areas = np.array([m.area for m in mers])
    if shape == "empty-rect":
        ler = float(areas.max())
        return OracleResult(ler, 0.0, ler, float(theta))
    if shape == "empty-square":
        side = max(min(m.width, m.height) for m in mers)
        return OracleResult(side, 0.0, side * side, float(theta))
    if shape != "rect":
        raise ValueError(f"unknown shape {shape!r}")

    def width_of(m: OrientedRect) -> float:
        return max(m.lo_x - lo_x, hi_x - m.hi_x, m.lo_y - lo_y, hi_y - m.hi_y)

    total = W * H
    if obj == "area":
        best = int(np.argmax(areas))
        return OracleResult(total - areas[best], width_of(mers[best]), total - areas[best], float(theta))
    if obj in ("width", "area-width"):
        core = (lo_x + w_uni, hi_x - w_uni, lo_y + w_uni, hi_y - w_uni)
        fits = [
            m for m in mers
            if m.lo_x <= core[0] + eps and m.hi_x >= core[1] - eps and m.lo_y <= core[2] + eps and m.hi_y >= core[3] - eps
        ]
        best = max(m.area for m in fits)
        area = total - best
        return OracleResult(w_uni if obj == "width" else area, w_uni, area, float(theta))
    # width-area: ties in area, then least width
    tol = eps * max(W, H, eps)
    ties = [m for m, a in zip(mers, areas) if a >= areas.max() - tol]
    width = min(width_of(m) for m in ties)
    area = float(total - areas.max())
    return OracleResult(area, width, area, float(theta))


# ------------------------------------------------------------- all orientations


def _strips(u: np.ndarray, v: np.ndarray):
    """Yield ``(a, b, inside)`` for every vertical strip bounded by point or box x-coordinates."""
    T, n = u.shape
    lo_x, hi_x = u.min(axis=1), u.max(axis=1)
    lefts = [lo_x] + [u[:, i] for i in range(n)]
    rights = [u[:, j] for j in range(n)] + [hi_x]
    for a in lefts:
        for b in rights:
            inside = (u > a[:, None]) & (u < b[:, None])
            yield a, b, inside


def _sorted_levels(v: np.ndarray, inside: np.ndarray, lo_y: np.ndarray, hi_y: np.ndarray) -> np.ndarray:
    ys = np.where(inside, v, lo_y[:, None])
    ys = np.sort(ys, axis=1)
    return np.concatenate([lo_y[:, None], ys, hi_y[:, None]], axis=1)


def _grid(config: OracleConfig) -> tuple[np.ndarray, float]:
    step = HALF_PI / config.theta_samples
    return np.arange(config.theta_samples) * step, step


def _square_rho(u, v, lo_x, hi_x, lo_y, hi_y, chunk: int = 500) -> np.ndarray:
    """Exact best clearance of a square center on the segment of smallest-square centers, per row."""
    W, H = hi_x - lo_x, hi_y - lo_y
    d = np.maximum(W, H)
    horiz = (H >= W)[:, None]
    along = np.where(horiz, u, v)
    across = np.where(horiz, v, u)
    across_c = np.where(horiz[:, 0], (lo_y + hi_y) / 2, (lo_x + hi_x) / 2)
    s0 = np.where(horiz[:, 0], hi_x - d / 2, hi_y - d / 2)
    s1 = np.where(horiz[:, 0], lo_x + d / 2, lo_y + d / 2)
    gap = np.abs(across - across_c[:, None])
    out = np.empty(len(u))
    n = u.shape[1]
    for k in range(0, len(u), chunk):
        sl = slice(k, k + chunk)
        a, g = along[sl], gap[sl]
        cand = np.concatenate(
            [
                s0[sl, None],
                s1[sl, None],
                ((a[:, :, None] + a[:, None, :]) / 2).reshape(-1, n * n),
                (a[:, :, None] + g[:, None, :]).reshape(-1, n * n),
                (a[:, :, None] - g[:, None, :]).reshape(-1, n * n),
            ],
            axis=1,
        )
        cand = np.clip(cand, s0[sl, None], s1[sl, None])
        rho = np.maximum(np.abs(cand[:, :, None] - a[:, None, :]), g[:, None, :]).min(axis=2)
        out[sl] = rho.max(axis=1)
    return np.minimum(out, d / 2)


def oracle_any(points, shape: str, objective: str = "width", config: OracleConfig = OracleConfig()) -> OracleResult:
    """Optimum over a uniform orientation grid on ``[0, pi/2)``.

    Each grid orientation is solved exactly by vectorized brute force. For the
    two-criteria objectives the second criterion is minimized over grid
    orientations whose first criterion is within the Lipschitz slack of the
    grid optimum.
    """
    pts = as_points(points)
    _guard(len(pts))
    if len(pts) == 0:
        raise ValueError("empty point set")
    obj = canonical_objective(objective)
    thetas, step = _grid(config)
    u, v = _rotate(pts, thetas)
    lo_x, hi_x, lo_y, hi_y = u.min(1), u.max(1), v.min(1), v.max(1)
    W, H = hi_x - lo_x, hi_y - lo_y
    diam = _bbox_diag(pts)
    eps = _eps(pts)
    L_width, L_area = 2 * diam, 4 * diam * diam

    def pick(i: int, value, width, area, lip) -> OracleResult:
        # the primary value is always the grid optimum, even when i was chosen by a second criterion
        return OracleResult(float(value.min()), float(width[i]), float(area[i]), float(thetas[i]), step, lip)

    if shape == "square":
        r = _square_rho(u, v, lo_x, hi_x, lo_y, hi_y)
        d = np.maximum(W, H)
        width, area = d / 2 - r, d * d - 4 * r * r
    elif shape in ("urect", "rect"):
        f = np.minimum.reduce([u - lo_x[:, None], hi_x[:, None] - u, v - lo_y[:, None], hi_y[:, None] - v])
        w_uni = f.max(axis=1)
        if shape == "urect":
            width, area = w_uni, 2 * (W + H) * w_uni - 4 * w_uni**2
    if shape in ("square", "urect"):
        if obj == "width":
            return pick(int(np.argmin(width)), width, width, area, L_width)
        if obj == "area":
            return pick(int(np.argmin(area)), area, width, area, L_area)
        if obj == "area-width":
            return pick(_two_stage(width, area, L_width * step), width, width, area, L_width)
        if obj == "width-area":
            return pick(_two_stage(area, width, L_area * step), area, width, area, L_area)
        raise ValueError(f"objective {objective!r} does not apply to {shape}")

    T = len(thetas)
    if shape in ("empty-rect", "empty-square"):
        best = np.zeros(T)
        for a, b, inside in _strips(u, v):
            levels = _sorted_levels(v, inside, lo_y, hi_y)
            gap = np.diff(levels, axis=1).max(axis=1)
            span = np.maximum(b - a, 0.0)
            val = span * gap if shape == "empty-rect" else np.minimum(span, gap)
            best = np.maximum(best, val)
        i = int(np.argmax(best))
        lip = L_area if shape == "empty-rect" else L_width
        return OracleResult(float(best[i]), 0.0, float(best[i] if shape == "empty-rect" else best[i] ** 2), float(thetas[i]), step, lip)

    if shape != "rect":
        raise ValueError(f"unknown shape {shape!r}")
    total = W * H
    if obj in ("width", "area-width"):
        cl, cr, cb, ct = lo_x + w_uni, hi_x - w_uni, lo_y + w_uni, hi_y - w_uni
        best = np.zeros(T)
        for a, b, inside in _strips(u, v):
            ok = (a <= cl + eps) & (b >= cr - eps)
            levels = _sorted_levels(v, inside, lo_y, hi_y)
            fits = (levels[:, :-1] <= cb[:, None] + eps) & (levels[:, 1:] >= ct[:, None] - eps)
            gaps = np.where(fits, np.diff(levels, axis=1), 0.0).max(axis=1)
            val = np.where(ok, (b - a) * gaps, 0.0)
            best = np.maximum(best, val)
        area = total - best
        if obj == "width":
            return pick(int(np.argmin(w_uni)), w_uni, w_uni, area, L_width)
        return pick(_two_stage(w_uni, area, L_width * step), w_uni, w_uni, area, L_width)

    # area objectives: largest empty rectangle, plus least width among its ties
    ler = np.zeros(T)
    cands = []
    for a, b, inside in _strips(u, v):
        levels = _sorted_levels(v, inside, lo_y, hi_y)
        span = np.maximum(b - a, 0.0)
        areas = span[:, None] * np.diff(levels, axis=1)
        ler = np.maximum(ler, areas.max(axis=1))
        if obj == "width-area":
            side = np.maximum.reduce(
                [
                    np.broadcast_to((a - lo_x)[:, None], areas.shape),
                    np.broadcast_to((hi_x - b)[:, None], areas.shape),
                    levels[:, :-1] - lo_y[:, None],
                    hi_y[:, None] - levels[:, 1:],
                ]
            )
            cands.append((areas, side))
    area = total - ler
    if obj == "area":
        return pick(int(np.argmin(area)), area, np.full(T, np.nan), area, L_area)
    if obj != "width-area":
        raise ValueError(f"objective {objective!r} does not apply to rect")
    tol = eps * np.maximum(np.maximum(W, H), eps)
    width = np.full(T, np.inf)
    for areas, side in cands:
        tie = areas >= (ler - tol)[:, None]
        width = np.minimum(width, np.where(tie, side, np.inf).min(axis=1))
    return pick(_two_stage(area, width, L_area * step), area, width, area, L_area)
