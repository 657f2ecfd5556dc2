"""Maximal empty rectangles (MERs) among points inside an axis-parallel box.

Coordinates here are frame coordinates of the box's orientation. Emptiness is
interior emptiness, so points on the boundary of a rectangle never block it;
in particular points on the box boundary are irrelevant, and a side lying on
the box is reported with the :data:`BOX` support marker.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .geometry import OrientedRect, as_points

BOX = -1


class Supports(NamedTuple):
    top: int
    bottom: int
    left: int
    right: int


@dataclass(frozen=True)
class MaxEmptyRect:
    rect: OrientedRect
    supports: Supports

    @property
    def area(self) -> float:
        return self.rect.area


def _check_inside(uv: np.ndarray, box: OrientedRect, eps: float):
    if len(uv) == 0:
        return
    bad = ~box.contains_frame(uv, eps)
    if bad.any():
        i = int(np.nonzero(bad)[0][0])
        raise ValueError(f"point {i} at {tuple(uv[i])} lies outside the bounding box")


def _sweep(order, xs, ys, anchor: int, lo_x: float, hi_x: float):
    """Walk points away from ``anchor`` (``order`` is sorted by distance in y, ties grouped).

    Yields ``(level, L, R, left_sup, right_sup, blocker)`` for every level that
    contains a point strictly inside the current x-window, then a final
    ``(None, L, R, left_sup, right_sup, None)`` unless the walk was cut off.
    """
    px = xs[anchor]
    L, R, lsup, rsup = lo_x, hi_x, BOX, BOX
    k, n = 0, len(order)
    while k < n:
        level = ys[order[k]]
        j = k
        while j < n and ys[order[j]] == level:
            j += 1
        inside = [q for q in order[k:j] if L < xs[q] < R]
        k = j
        if not inside:
            continue
        yield level, L, R, lsup, rsup, min(inside)
        stop = False
        for q in inside:
            x = xs[q]
            if x < px:
                if x > L or (x == L and q < lsup):
                    L, lsup = x, q
            elif x > px:
                if x < R or (x == R and q < rsup):
                    R, rsup = x, q
            else:
                stop = True
        if stop:
            return
    yield None, L, R, lsup, rsup, None


def enumerate_mers(points, box: OrientedRect, eps: float = 0.0) -> list[MaxEmptyRect]:
    """All maximal empty rectangles among ``points`` (frame coordinates) inside ``box``.

    Each rectangle is reported once (deduplicated by geometry, first support
    tuple kept). Runs in O(n^2 + r) after sorting.
    """
    uv = as_points(points)
    _check_inside(uv, box, eps)
    lo_x, hi_x, lo_y, hi_y = box.as_tuple()
    xs = uv[:, 0].tolist() if len(uv) else []
    ys = uv[:, 1].tolist() if len(uv) else []
    interior = [i for i in range(len(xs)) if lo_x < xs[i] < hi_x and lo_y < ys[i] < hi_y]

    found: dict[tuple, MaxEmptyRect] = {}

    def emit(lx, rx, by, ty, sup):
        key = (lx, rx, by, ty)
        if key not in found:
            found[key] = MaxEmptyRect(OrientedRect(box.theta, lx, rx, by, ty), Supports(*sup))

    by_y_desc = sorted(interior, key=lambda i: (-ys[i], i))
    by_y_asc = sorted(interior, key=lambda i: (ys[i], i))
    pos_desc = {i: k for k, i in enumerate(by_y_desc)}
    pos_asc = {i: k for k, i in enumerate(by_y_asc)}

    for p in interior:
        # rectangles whose top side is blocked by p
        k = pos_desc[p]
        while k < len(by_y_desc) and ys[by_y_desc[k]] == ys[p]:
            k += 1
        for level, L, R, ls, rs, q in _sweep(by_y_desc[k:], xs, ys, p, lo_x, hi_x):
            if level is None:
                emit(L, R, lo_y, ys[p], (p, BOX, ls, rs))
            else:
                emit(L, R, level, ys[p], (p, q, ls, rs))
        # rectangle whose bottom is blocked by p and whose top lies on the box
        k = pos_asc[p]
        while k < len(by_y_asc) and ys[by_y_asc[k]] == ys[p]:
            k += 1
        last = None
        for last in _sweep(by_y_asc[k:], xs, ys, p, lo_x, hi_x):
            pass
        if last is not None and last[0] is None:
            _, L, R, ls, rs, _ = last
            emit(L, R, ys[p], hi_y, (BOX, p, ls, rs))

    # full-height strips between consecutive blocking x-coordinates
    first_at_x: dict[float, int] = {}
    for i in sorted(interior):
        first_at_x.setdefault(xs[i], i)
    cuts = sorted({lo_x, hi_x, *first_at_x})
    for a, b in zip(cuts, cuts[1:]):
        emit(a, b, lo_y, hi_y, (BOX, BOX, first_at_x.get(a, BOX), first_at_x.get(b, BOX)))
    if len(cuts) == 1:
        emit(lo_x, hi_x, lo_y, hi_y, (BOX, BOX, BOX, BOX))
    return list(found.values())


def _lex_key(r: OrientedRect):
    return (r.lo_x, r.lo_y, r.hi_x, r.hi_y)


def largest_empty_rect(points, box: OrientedRect, eps: float = 0.0) -> MaxEmptyRect:
    """A maximum-area empty rectangle inside ``box``; ties go to the lexicographically smallest."""
    mers = enumerate_mers(points, box, eps)
    tol = 1e-12 * max(box.area, 1e-300)
    best = max(m.area for m in mers)
    return min((m for m in mers if m.area >= best - tol), key=lambda m: _lex_key(m.rect))


def largest_empty_square_fixed(points, box: OrientedRect, eps: float = 0.0) -> OrientedRect:
    """Largest empty square inside ``box``, placed at its MER's lower-left corner."""
    mers = enumerate_mers(points, box, eps)
    sides = [min(m.rect.width, m.rect.height) for m in mers]
    best = max(sides)
    tol = 1e-12 * max(best, 1e-300)
    choice = min(
        (m for m, s in zip(mers, sides) if s >= best - tol),
        key=lambda m: _lex_key(m.rect),
    )
    r = choice.rect
    return OrientedRect(box.theta, r.lo_x, r.lo_x + best, r.lo_y, r.lo_y + best)
