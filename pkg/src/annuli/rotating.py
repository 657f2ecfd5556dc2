"""Optimal annuli and empty shapes over all orientations.

Every objective is assembled, on each orientation piece where the combinatorics
are fixed, from sinusoids of the frame coordinates of a handful of points
(products of two of them give frequency-2 sinusoids). Minimizing each piece in
closed form and taking the best piece gives the exact optimum; the witness is
then recomputed by the fixed-orientation solver at the optimal orientation.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from . import fixed
from .calipers import HEIGHT, ExtremeTuple, PrimaryInterval, frame_x, frame_y, height_fn, width_fn
from .empty_rect import BOX, Supports, largest_empty_rect, largest_empty_square_fixed
from .geometry import HALF_PI, Annulus, OrientedRect, as_points, bounding_rect, diameter, geo_eps, normalize_orientation, to_frame
from .sweep import Arrangement, Piece, build_arrangement
from .trig import (
    THETA_EPS,
    PiecewiseSinusoid,
    Sinusoid,
    extremize,
    lower_envelope,
    multiply,
    near_optimal,
    roots,
    upper_envelope,
)

Fn = Union[Sinusoid, PiecewiseSinusoid]
OBJECTIVES = ("width", "area", "area_width", "width_area")


@dataclass(frozen=True)
class SweepReport:
    """Result of an all-orientation solve.

    ``value`` is the primary objective and ``secondary`` the tie-breaking one
    for two-criteria problems. ``width``/``area`` are recomputed from the
    witness (``annulus`` for annuli, ``rect`` for empty shapes).
    """

    problem: str
    theta_star: float
    value: float
    width: float
    area: float
    secondary: Optional[float] = None
    annulus: Optional[Annulus] = None
    rect: Optional[OrientedRect] = None
    supports: dict = field(default_factory=dict)
    minimizers: tuple = ()
    diagnostics: dict = field(default_factory=dict)

    @property
    def side(self) -> Optional[float]:
        if self.rect is None:
            return None
        return min(self.rect.width, self.rect.height)


@dataclass(frozen=True)
class _Cand:
    lo: float
    hi: float
    primary: Fn
    secondary: Optional[Fn] = None


# ----------------------------------------------------------------- plumbing


def _objective(objective: str) -> str:
    obj = objective.replace("-", "_")
    if obj not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    return obj


def _pmap(fn: Callable, items: Sequence, threads: Optional[int]) -> list:
    # results come back in input order, so reductions stay deterministic
    if threads and threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _prepare(points) -> np.ndarray:
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    return pts


def _trivial(pts: np.ndarray) -> bool:
    return len(np.unique(pts, axis=0)) < 2


class _Coords:
    """Cached frame-coordinate sinusoids of every point."""

    def __init__(self, pts: np.ndarray):
        self.X = [frame_x(p) for p in pts]
        self.Y = [frame_y(p) for p in pts]


def _best(cands: Sequence[_Cand], sense: str, tol: float) -> tuple[float, float, int]:
    """Global optimum over candidate pieces; within ``tol`` the smaller orientation wins."""
    maximize = sense == "max"
    exts = [extremize(c.primary, c.lo, c.hi, sense) for c in cands]
    vals = [e.value for e in exts]
    best = max(vals) if maximize else min(vals)
    pick = None
    for i, e in enumerate(exts):
        ok = e.value >= best - tol if maximize else e.value <= best + tol
        if ok and (pick is None or e.theta < exts[pick].theta):
            pick = i
    return exts[pick].theta, exts[pick].value, pick


def _merge_minimizers(items: list) -> tuple:
    """Sort and merge orientation points and plateau intervals into a canonical tuple."""
    pts = sorted(t for t in items if not isinstance(t, tuple))
    ivs = sorted(t for t in items if isinstance(t, tuple))
    merged: list[tuple[float, float]] = []
    for a, b in ivs:
        if merged and a <= merged[-1][1] + 1e-9:
            merged[-1] = (merged[-1][0], max(merged[-1][1], b))
        else:
            merged.append((a, b))
    out: list = []
    for t in pts:
        if any(a - 1e-9 <= t <= b + 1e-9 for a, b in merged):
            continue
        if out and abs(t - out[-1]) <= 1e-9:
            continue
        out.append(t)
    # pi/2 is the same orientation as 0
    if out and merged == [] and len(out) > 1 and out[-1] >= HALF_PI - 1e-9 and out[0] <= 1e-9:
        out.pop()
    return tuple(sorted(out + merged, key=lambda x: x[0] if isinstance(x, tuple) else x))


def _bicriteria(cands: Sequence[_Cand], tol1: float, tol2: float):
    """Minimize ``primary``, then ``secondary`` over all primary minimizers.

    Returns ``(theta, primary, secondary, minimizers)``. Flat pieces at the
    optimum are treated as intervals on which the secondary is minimized
    analytically.
    """
    v1 = min(extremize(c.primary, c.lo, c.hi, "min").value for c in cands)
    best: Optional[tuple[float, float, float]] = None
    found: list = []
    for c in cands:
        pts, plateau = near_optimal(c.primary, c.lo, c.hi, v1, tol1)
        if plateau:
            found.append((c.lo, c.hi))
            ex = extremize(c.secondary, c.lo, c.hi, "min")
            options = [(ex.theta, ex.value)]
        else:
            found.extend(pts)
            options = [(t, c.secondary.at(t)) for t in pts]
        for t, s in options:
            p = c.primary.at(t)
            if best is None or s < best[2] - tol2 or (abs(s - best[2]) <= tol2 and t < best[0]):
                best = (t, p, s)
    return best[0], best[1], best[2], _merge_minimizers(found)


def _eps_obj(pts: np.ndarray, power: int) -> float:
    d = diameter(pts)
    return 1e-9 * (d if d > 0 else 1.0) ** power


def _trivial_report(problem: str, res: fixed.FixedSolveResult, value: float) -> SweepReport:
    return SweepReport(
        problem, 0.0, value, res.width, res.area, annulus=res.annulus, supports=res.supports,
        minimizers=(0.0,), diagnostics={"primary_intervals": 1, "elementary_intervals": 1, "degenerate": True},
    )


def _report(problem, theta, value, res: fixed.FixedSolveResult, arr: Arrangement, secondary=None, minimizers=(), **diag) -> SweepReport:
    d = arr.diagnostics()
    d.update(diag)
    d["degenerate"] = res.degenerate
    return SweepReport(
        problem, theta, value, res.width, res.area, secondary=secondary, annulus=res.annulus,
        supports=res.supports, minimizers=tuple(minimizers), diagnostics=d,
    )


def _theta(t: float) -> float:
    # the sweep domain is closed at pi/2 for extremization; that orientation equals 0
    return normalize_orientation(t)


# ------------------------------------------------------- piece sinusoids


def _piece_context(arr: Arrangement, piece: Piece, C: _Coords):
    prim = arr.primaries[piece.primary]
    s = arr.classes[piece.cls].resolve(prim.extremes)
    return prim, s


def _rect_area(C: _Coords, ext: ExtremeTuple) -> Sinusoid:
    return multiply(C.Y[ext.top] - C.Y[ext.bottom], C.X[ext.right] - C.X[ext.left])


def _mer_height(C: _Coords, s: Supports) -> Sinusoid:
    return C.Y[s.top] - C.Y[s.bottom]


def _mer_width(C: _Coords, s: Supports) -> Sinusoid:
    return C.X[s.right] - C.X[s.left]


def _side_widths(C: _Coords, ext: ExtremeTuple, s: Supports) -> list[Sinusoid]:
    return [
        C.Y[ext.top] - C.Y[s.top],
        C.Y[s.bottom] - C.Y[ext.bottom],
        C.X[s.left] - C.X[ext.left],
        C.X[ext.right] - C.X[s.right],
    ]


# ------------------------------------------------------- general rectangles


def _rect_area_cands(arr: Arrangement, C: _Coords, with_width: bool, threads) -> list[_Cand]:
    def make(piece: Piece) -> _Cand:
        prim, s = _piece_context(arr, piece, C)
        a = _rect_area(C, prim.extremes) - multiply(_mer_height(C, s), _mer_width(C, s))
        sec = upper_envelope(_side_widths(C, prim.extremes, s), piece.lo, piece.hi) if with_width else None
        return _Cand(piece.lo, piece.hi, a, sec)

    return _pmap(make, arr.pieces, threads)


def min_area_rect_annulus_any(points, threads: Optional[int] = None) -> SweepReport:
    """Minimum-area rectangular annulus over all orientations."""
    pts = _prepare(points)
    if _trivial(pts):
        return _trivial_report("rect/area", fixed.min_area_rect_annulus_fixed(pts, 0.0), 0.0)
    arr = build_arrangement(pts, True, threads)
    cands = _rect_area_cands(arr, _Coords(pts), False, threads)
    theta, value, _ = _best(cands, "min", _eps_obj(pts, 2))
    res = fixed.min_area_rect_annulus_fixed(pts, _theta(theta))
    return _report("rect/area", theta, value, res, arr, minimizers=(theta,))


def min_width_min_area_rect_annulus_any(points, threads: Optional[int] = None) -> SweepReport:
    """Among minimum-area rectangular annuli over all orientations, one of least width."""
    pts = _prepare(points)
    if _trivial(pts):
        return _trivial_report("rect/width_area", fixed.min_width_min_area_rect_annulus_fixed(pts, 0.0), 0.0)
    arr = build_arrangement(pts, True, threads)
    cands = _rect_area_cands(arr, _Coords(pts), True, threads)
    theta, a, w, mins = _bicriteria(cands, _eps_obj(pts, 2), _eps_obj(pts, 1))
    res = fixed.min_width_min_area_rect_annulus_fixed(pts, _theta(theta))
    return _report("rect/width_area", theta, a, res, arr, secondary=w, minimizers=mins, t=len(mins))


# ------------------------------------------------------- uniform rectangles


def _uniform_width(pts: np.ndarray, C: _Coords, prim: PrimaryInterval) -> PiecewiseSinusoid:
    e = prim.extremes
    fs = []
    for i in range(len(pts)):
        parts = [C.Y[e.top] - C.Y[i], C.Y[i] - C.Y[e.bottom], C.X[i] - C.X[e.left], C.X[e.right] - C.X[i]]
        fs.append(lower_envelope(parts, prim.lo, prim.hi))
    return upper_envelope(fs)


def uniform_width_function(points, threads: Optional[int] = None) -> list[tuple[PrimaryInterval, PiecewiseSinusoid]]:
    """The uniform width w(theta) on each refined primary interval."""
    pts = _prepare(points)
    arr = build_arrangement(pts, False)
    C = _Coords(pts)
    return list(zip(arr.primaries, _pmap(lambda p: _uniform_width(pts, C, p), arr.primaries, threads)))


def _uniform_cands(pts: np.ndarray, w_parts, C: _Coords, obj: str) -> list[_Cand]:
    cands = []
    for prim, w in w_parts:
        peri2 = (height_fn(pts, prim.extremes) + width_fn(pts, prim.extremes)) * 2.0
        for lo, hi, wk in w.intervals():
            area = multiply(peri2, wk) - multiply(wk, wk) * 4.0
            if obj == "width":
                cands.append(_Cand(lo, hi, wk))
            elif obj == "area":
                cands.append(_Cand(lo, hi, area))
            elif obj == "area_width":
                cands.append(_Cand(lo, hi, wk, area))
            else:
                cands.append(_Cand(lo, hi, area, wk))
    return cands


def uniform_rect_any(points, objective: str = "width", threads: Optional[int] = None) -> SweepReport:
    """Optimal uniform rectangular annulus over all orientations.

    ``objective`` is ``width``, ``area``, ``area_width`` (least area among
    minimum-width annuli) or ``width_area`` (least width among minimum-area ones).
    """
    obj = _objective(objective)
    pts = _prepare(points)
    problem = f"urect/{obj}"
    if _trivial(pts):
        return _trivial_report(problem, fixed.uniform_rect_annulus_fixed(pts, 0.0), 0.0)
    arr = build_arrangement(pts, False)
    C = _Coords(pts)
    w_parts = list(zip(arr.primaries, _pmap(lambda p: _uniform_width(pts, C, p), arr.primaries, threads)))
    cands = _uniform_cands(pts, w_parts, C, obj)
    tol_w, tol_a = _eps_obj(pts, 1), _eps_obj(pts, 2)
    if obj in ("width", "area"):
        theta, value, _ = _best(cands, "min", tol_w if obj == "width" else tol_a)
        secondary, mins = None, (theta,)
    elif obj == "area_width":
        theta, value, secondary, mins = _bicriteria(cands, tol_w, tol_a)
    else:
        theta, value, secondary, mins = _bicriteria(cands, tol_a, tol_w)
    res = fixed.uniform_rect_annulus_fixed(pts, _theta(theta))
    extra = {"t": len(mins)} if secondary is not None else {}
    return _report(problem, theta, value, res, arr, secondary=secondary, minimizers=mins, **extra)


# ------------------------------------------- rectangles: area after width


def _containing_windows(C: _Coords, ext: ExtremeTuple, s: Supports, w: float, lo: float, hi: float, eps: float):
    """Sub-intervals of ``[lo, hi]`` where the MER contains the uniform inner rectangle of width ``w``."""
    slack = [
        C.X[ext.left] - C.X[s.left] + Sinusoid(0, 0, w),
        C.X[s.right] - C.X[ext.right] + Sinusoid(0, 0, w),
        C.Y[ext.bottom] - C.Y[s.bottom] + Sinusoid(0, 0, w),
        C.Y[s.top] - C.Y[ext.top] + Sinusoid(0, 0, w),
    ]
    cuts = sorted({lo, hi, *(t for f in slack for t in roots(f, lo, hi))})
    out = []
    for a, b in zip(cuts, cuts[1:]):
        m = (a + b) / 2
        if all(f.at(m) >= -eps for f in slack):
            out.append((a, b))
    return out


def min_area_min_width_rect_annulus_any(points, threads: Optional[int] = None) -> SweepReport:
    """Among minimum-width rectangular annuli over all orientations, one of least area.

    The minimum width at each orientation is the uniform width, so the
    candidate orientations are the global minimizers of w(theta). Isolated
    minimizers are solved at fixed orientation; on a flat stretch the area is
    minimized over every MER class that can contain the uniform inner
    rectangle there.
    """
    pts = _prepare(points)
    problem = "rect/area_width"
    if _trivial(pts):
        return _trivial_report(problem, fixed.min_area_min_width_rect_annulus_fixed(pts, 0.0), 0.0)
    base = build_arrangement(pts, False)
    C = _Coords(pts)
    w_parts = list(zip(base.primaries, _pmap(lambda p: _uniform_width(pts, C, p), base.primaries, threads)))
    tol_w = _eps_obj(pts, 1)
    cands = _uniform_cands(pts, w_parts, C, "width")
    w_star = min(extremize(c.primary, c.lo, c.hi, "min").value for c in cands)
    found: list = []
    for c in cands:
        tpts, plateau = near_optimal(c.primary, c.lo, c.hi, w_star, tol_w)
        found.extend([(c.lo, c.hi)] if plateau else tpts)
    minimizers = _merge_minimizers(found)

    probe: list[float] = []
    arr = base
    plateaus = [m for m in minimizers if isinstance(m, tuple)]
    if plateaus:
        arr = build_arrangement(pts, True, threads)
        eps = geo_eps(pts)
        for a, b in plateaus:
            probe.extend([a, b])
            for piece in arr.pieces:
                lo, hi = max(a, piece.lo), min(b, piece.hi)
                if hi <= lo:
                    continue
                prim, s = _piece_context(arr, piece, C)
                area = _rect_area(C, prim.extremes) - multiply(_mer_height(C, s), _mer_width(C, s))
                for u, v in _containing_windows(C, prim.extremes, s, w_star, lo, hi, eps):
                    probe.append(extremize(area, u, v, "min").theta)
    probe.extend(m for m in minimizers if not isinstance(m, tuple))

    tol_a = _eps_obj(pts, 2)
    best: Optional[tuple[float, fixed.FixedSolveResult]] = None
    for t in sorted(set(probe)):
        res = fixed.min_area_min_width_rect_annulus_fixed(pts, _theta(t))
        if best is None or res.area < best[1].area - tol_a:
            best = (t, res)
    theta, res = best
    return _report(problem, theta, res.width, res, arr, secondary=res.area, minimizers=minimizers, t=len(minimizers))


# ------------------------------------------------------------- squares


def compute_delta(
    C: _Coords, ext: ExtremeTuple, raw: Supports, branch: str, lo: float, hi: float
) -> PiecewiseSinusoid:
    """Side of the largest square centered on the center segment, inside a MER, on ``[lo, hi]``.

    ``ext`` are the extreme points and ``branch`` tells whether the smallest
    enclosing square's side is the height (center segment parallel to frame x)
    or the width. ``raw`` are the support markers of a MER taken in the
    bounding rectangle stretched without limit along the center segment (see
    :func:`build_arrangement`), so a box marker on those two sides means the
    side is unbounded; the outer square never binds a concentric inner square.
    The piece is cut wherever the case structure can change; on each sub-piece
    the answer is 0 or twice a lower envelope of signed distances.
    """
    s = Supports(
        ext.top if raw.top == BOX else raw.top,
        ext.bottom if raw.bottom == BOX else raw.bottom,
        ext.left if raw.left == BOX else raw.left,
        ext.right if raw.right == BOX else raw.right,
    )
    if branch == HEIGHT:
        along, across = C.X, C.Y
        a_lo, a_hi, b_lo, b_hi = raw.left, raw.right, s.bottom, s.top
        q_alo, q_ahi, q_blo, q_bhi = ext.left, ext.right, ext.bottom, ext.top
    else:
        along, across = C.Y, C.X
        a_lo, a_hi, b_lo, b_hi = raw.bottom, raw.top, s.left, s.right
        q_alo, q_ahi, q_blo, q_bhi = ext.bottom, ext.top, ext.left, ext.right
    A_lo = None if a_lo == BOX else along[a_lo]
    A_hi = None if a_hi == BOX else along[a_hi]
    mid_b = (across[q_blo] + across[q_bhi]) * 0.5
    mid_a = (along[q_alo] + along[q_ahi]) * 0.5
    half = ((across[q_bhi] - across[q_blo]) - (along[q_ahi] - along[q_alo])) * 0.5
    cl, cr = mid_a - half, mid_a + half
    gt, gb = across[b_hi] - mid_b, mid_b - across[b_lo]
    cp = (A_lo + A_hi) * 0.5 if A_lo is not None and A_hi is not None else None

    events = [gt, gb]
    for A in (A_lo, A_hi):
        if A is not None:
            events += [cl - A, cr - A]
    if cp is not None:
        events += [cl - cp, cr - cp]
    cuts = sorted({lo, hi, *(t for f in events for t in roots(f, lo, hi) if lo < t < hi)})
    breaks: list[float] = [lo]
    pieces: list[Sinusoid] = []
    zero = Sinusoid.zero()

    def rho(c: Sinusoid) -> list[Sinusoid]:
        out = [gt * 2.0, gb * 2.0]
        if A_lo is not None:
            out.append((c - A_lo) * 2.0)
        if A_hi is not None:
            out.append((A_hi - c) * 2.0)
        return out

    for a, b in zip(cuts, cuts[1:]):
        if b - a <= THETA_EPS:
            continue
        m = (a + b) / 2
        lo_m = -math.inf if A_lo is None else A_lo.at(m)
        hi_m = math.inf if A_hi is None else A_hi.at(m)
        clm, crm = cl.at(m), cr.at(m)
        if gt.at(m) < 0 or gb.at(m) < 0 or max(clm, lo_m) > min(crm, hi_m):
            part = PiecewiseSinusoid.single(zero, a, b)
        elif A_lo is not None and A_hi is not None and clm <= cp.at(m) <= crm:
            part = lower_envelope([gt * 2.0, gb * 2.0, A_hi - A_lo], a, b)
        else:
            l_in = lo_m <= clm <= hi_m
            r_in = lo_m <= crm <= hi_m
            if l_in and not r_in:
                part = lower_envelope(rho(cl), a, b)
            elif r_in and not l_in:
                part = lower_envelope(rho(cr), a, b)
            else:
                part = upper_envelope([lower_envelope(rho(cl), a, b), lower_envelope(rho(cr), a, b)])
        for u, v, f in part.intervals():
            pieces.append(f)
            breaks.append(v)
    if not pieces:
        return PiecewiseSinusoid.single(zero, lo, hi)
    breaks[-1] = hi
    return PiecewiseSinusoid.build(breaks, pieces)


def _square_side_fn(pts: np.ndarray, prim: PrimaryInterval) -> Sinusoid:
    return height_fn(pts, prim.extremes) if prim.d_branch == HEIGHT else width_fn(pts, prim.extremes)


def _square_piece_cands(arr: Arrangement, C: _Coords, piece: Piece, obj: str) -> list[_Cand]:
    prim = arr.primaries[piece.primary]
    delta = compute_delta(C, prim.extremes, arr.classes[piece.cls].supports, prim.d_branch, piece.lo, piece.hi)
    D = _square_side_fn(arr.points, prim)
    out = []
    for lo, hi, dk in delta.intervals():
        if dk.amplitude == 0 and dk.base == 0:
            continue  # covered by the no-inner-square baseline
        w = D * 0.5 - dk * 0.5
        a = multiply(D, D) - multiply(dk, dk)
        out.append(_square_cand(lo, hi, w, a, obj))
    return out


def _square_cand(lo, hi, w, a, obj) -> _Cand:
    if obj == "width":
        return _Cand(lo, hi, w)
    if obj == "area":
        return _Cand(lo, hi, a)
    if obj == "area_width":
        return _Cand(lo, hi, w, a)
    return _Cand(lo, hi, a, w)


def square_annulus_any(points, objective: str = "width", threads: Optional[int] = None) -> SweepReport:
    """Optimal square annulus over all orientations (``width``, ``area``, ``area_width``, ``width_area``)."""
    obj = _objective(objective)
    pts = _prepare(points)
    problem = f"square/{obj}"
    if _trivial(pts):
        return _trivial_report(problem, fixed.min_width_square_annulus_fixed(pts, 0.0), 0.0)
    arr = build_arrangement(pts, True, threads, stretched=True)
    C = _Coords(pts)
    cands: list[_Cand] = []
    for prim in arr.primaries:
        D = _square_side_fn(pts, prim)
        cands.append(_square_cand(prim.lo, prim.hi, D * 0.5, multiply(D, D), obj))
    for part in _pmap(lambda p: _square_piece_cands(arr, C, p, obj), arr.pieces, threads):
        cands.extend(part)
    tol_w, tol_a = _eps_obj(pts, 1), _eps_obj(pts, 2)
    secondary = None
    if obj in ("width", "area"):
        theta, value, _ = _best(cands, "min", tol_w if obj == "width" else tol_a)
        mins: tuple = (theta,)
    elif obj == "area_width":
        theta, value, secondary, mins = _bicriteria(cands, tol_w, tol_a)
    else:
        theta, value, secondary, mins = _bicriteria(cands, tol_a, tol_w)
    res = fixed.min_width_square_annulus_fixed(pts, _theta(theta))
    extra = {"t": len(mins)} if secondary is not None else {}
    return _report(problem, theta, value, res, arr, secondary=secondary, minimizers=mins, **extra)


def square_width_explicit(points) -> tuple[float, float, float]:
    """Cross-check route: build w(theta) explicitly as a lower envelope, then minimize.

    On each refined primary interval every MER class contributes its width
    function (extended by the no-inner-square value d/2 outside its range) and
    the lower envelope is w(theta). Returns ``(min width, min area, theta)``.
    Intended for small inputs; the cost grows quickly with the number of classes.
    """
    pts = _prepare(points)
    if _trivial(pts):
        return 0.0, 0.0, 0.0
    arr = build_arrangement(pts, True, stretched=True)
    C = _Coords(pts)
    by_primary: dict[int, list[Piece]] = {}
    for piece in arr.pieces:
        by_primary.setdefault(piece.primary, []).append(piece)
    best_w: Optional[tuple[float, float]] = None
    best_a: Optional[float] = None
    for k, prim in enumerate(arr.primaries):
        D = _square_side_fn(pts, prim)
        half = D * 0.5
        fns = [PiecewiseSinusoid.single(half, prim.lo, prim.hi)]
        for piece in by_primary.get(k, []):
            raw = arr.classes[piece.cls].supports
            delta = compute_delta(C, prim.extremes, raw, prim.d_branch, piece.lo, piece.hi)
            breaks, pieces = [prim.lo], []
            if piece.lo > prim.lo:
                breaks.append(piece.lo)
                pieces.append(half)
            for lo, hi, dk in delta.intervals():
                breaks.append(hi)
                pieces.append(half - dk * 0.5)
            if piece.hi < prim.hi:
                breaks.append(prim.hi)
                pieces.append(half)
            fns.append(PiecewiseSinusoid.build(breaks, pieces))
        w = lower_envelope(fns)
        ew = extremize(w, sense="min")
        if best_w is None or ew.value < best_w[0]:
            best_w = (ew.value, ew.theta)
        for lo, hi, wk in w.intervals():
            a = multiply(D * 4.0, wk) - multiply(wk, wk) * 4.0
            v = extremize(a, lo, hi, "min").value
            best_a = v if best_a is None else min(best_a, v)
    return best_w[0], best_a, best_w[1]


# -------------------------------------------------------- empty shapes


def _empty_report(problem, theta, value, rect: OrientedRect, arr: Arrangement) -> SweepReport:
    d = arr.diagnostics()
    d["degenerate"] = min(rect.width, rect.height) <= 0
    return SweepReport(problem, theta, value, 0.0, rect.area, rect=rect, minimizers=(theta,), diagnostics=d)


def _box_at(pts: np.ndarray, theta: float):
    return to_frame(pts, theta), bounding_rect(pts, theta)


def largest_empty_rect_any(points, threads: Optional[int] = None) -> SweepReport:
    """Largest empty rectangle inside the bounding rectangle, over all orientations."""
    pts = _prepare(points)
    if _trivial(pts):
        raise ValueError("all points coincide; the largest empty rectangle is degenerate")
    arr = build_arrangement(pts, True, threads)
    C = _Coords(pts)

    def make(piece: Piece) -> _Cand:
        _, s = _piece_context(arr, piece, C)
        return _Cand(piece.lo, piece.hi, multiply(_mer_height(C, s), _mer_width(C, s)))

    theta, value, _ = _best(_pmap(make, arr.pieces, threads), "max", _eps_obj(pts, 2))
    uv, box = _box_at(pts, _theta(theta))
    rect = largest_empty_rect(uv, box).rect
    return _empty_report("empty-rect/largest", theta, value, rect, arr)


def largest_empty_square_any(points, threads: Optional[int] = None) -> SweepReport:
    """Largest empty square inside the bounding rectangle, over all orientations."""
    pts = _prepare(points)
    if _trivial(pts):
        raise ValueError("all points coincide; the largest empty square is degenerate")
    arr = build_arrangement(pts, True, threads)
    C = _Coords(pts)

    def make(piece: Piece) -> _Cand:
        _, s = _piece_context(arr, piece, C)
        side = lower_envelope([_mer_height(C, s), _mer_width(C, s)], piece.lo, piece.hi)
        return _Cand(piece.lo, piece.hi, side)

    theta, value, _ = _best(_pmap(make, arr.pieces, threads), "max", _eps_obj(pts, 1))
    uv, box = _box_at(pts, _theta(theta))
    rect = largest_empty_square_fixed(uv, box)
    return _empty_report("empty-square/largest", theta, value, rect, arr)
