"""Sinusoids ``a*sin(w*t + phi) + b`` with w in {1, 2}, and piecewise functions built from them.

Internally a sinusoid is held by its coefficients ``c*cos(w*t) + s*sin(w*t) + b``;
sums and scalings are then exact linear operations, and amplitude/phase are
derived on demand in canonical form (``a >= 0``, ``phi`` in ``[0, 2*pi)``).
"""

from __future__ import annotations

import bisect
import math
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

import numpy as np

TWO_PI = 2 * math.pi
THETA_EPS = 1e-12  # pieces shorter than this are absorbed into a neighbour


class Sinusoid:
    __slots__ = ("c", "s", "base", "omega")

    def __init__(self, c: float = 0.0, s: float = 0.0, base: float = 0.0, omega: int = 1):
        if omega not in (1, 2):
            raise ValueError(f"frequency must be 1 or 2, got {omega}")
        self.c = float(c)
        self.s = float(s)
        self.base = float(base)
        self.omega = omega

    @classmethod
    def wave(cls, amplitude: float, phase: float = 0.0, omega: int = 1, base: float = 0.0) -> "Sinusoid":
        """Build ``amplitude*sin(omega*t + phase) + base``."""
        return cls(amplitude * math.sin(phase), amplitude * math.cos(phase), base, omega)

    @classmethod
    def zero(cls, omega: int = 1) -> "Sinusoid":
        return cls(0.0, 0.0, 0.0, omega)

    @property
    def amplitude(self) -> float:
        return math.hypot(self.c, self.s)

    @property
    def phase(self) -> float:
        if self.c == 0 and self.s == 0:
            return 0.0
        phi = math.atan2(self.c, self.s)
        return phi + TWO_PI if phi < 0 else phi

    def __call__(self, theta):
        wt = self.omega * np.asarray(theta, dtype=float)
        out = self.c * np.cos(wt) + self.s * np.sin(wt) + self.base
        return float(out) if np.ndim(out) == 0 else out

    def at(self, theta: float) -> float:
        wt = self.omega * theta
        return self.c * math.cos(wt) + self.s * math.sin(wt) + self.base

    def _check(self, other: "Sinusoid"):
        if self.omega != other.omega:
            raise ValueError(f"frequency mismatch: {self.omega} vs {other.omega}")

    def __add__(self, other: "Sinusoid") -> "Sinusoid":
        self._check(other)
        return Sinusoid(self.c + other.c, self.s + other.s, self.base + other.base, self.omega)

    def __sub__(self, other: "Sinusoid") -> "Sinusoid":
        self._check(other)
        return Sinusoid(self.c - other.c, self.s - other.s, self.base - other.base, self.omega)

    def __neg__(self) -> "Sinusoid":
        return Sinusoid(-self.c, -self.s, -self.base, self.omega)

    def __mul__(self, k: float) -> "Sinusoid":
        if isinstance(k, Sinusoid):
            return multiply(self, k)
        return Sinusoid(self.c * k, self.s * k, self.base * k, self.omega)

    __rmul__ = __mul__

    def scale(self) -> float:
        return self.amplitude + abs(self.base)

    def is_close(self, other: "Sinusoid", tol: float) -> bool:
        return (
            self.omega == other.omega
            and abs(self.c - other.c) <= tol
            and abs(self.s - other.s) <= tol
            and abs(self.base - other.base) <= tol
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Sinusoid)
            and (self.c, self.s, self.base, self.omega) == (other.c, other.s, other.base, other.omega)
        )

    def __hash__(self):
        return hash((self.c, self.s, self.base, self.omega))

    def __repr__(self) -> str:
        return (
            f"Sinusoid(a={self.amplitude:.6g}, phi={self.phase:.6g}, "
            f"w={self.omega}, b={self.base:.6g})"
        )


def add(f: Sinusoid, g: Sinusoid) -> Sinusoid:
    return f + g


def multiply(f: Sinusoid, g: Sinusoid) -> Sinusoid:
    """Product of two base-0 frequency-1 sinusoids: a frequency-2 sinusoid with a base."""
    if f.omega != 1 or g.omega != 1:
        raise ValueError("multiply needs frequency-1 factors")
    if f.base != 0 or g.base != 0:
        raise ValueError("multiply needs base-0 factors")
    # (c1 cos + s1 sin)(c2 cos + s2 sin), expanded with double-angle identities
    cc, ss = f.c * g.c, f.s * g.s
    return Sinusoid((cc - ss) / 2, (f.c * g.s + f.s * g.c) / 2, (cc + ss) / 2, 2)


def roots(f: Sinusoid, lo: float, hi: float) -> list[float]:
    """All zeros of ``f`` in the closed interval ``[lo, hi]``, sorted.

    A numerically vanishing ``f`` has no isolated zeros and yields ``[]``.
    """
    a = f.amplitude
    if a <= 1e-300:
        return []
    r = -f.base / a
    if r > 1 or r < -1:
        return []
    alpha = math.asin(r)
    phi = math.atan2(f.c, f.s)
    w = f.omega
    out: list[float] = []
    for root in (alpha, math.pi - alpha):
        # w*t + phi = root + 2k*pi
        t0 = (root - phi) / w
        period = TWO_PI / w
        k = math.ceil((lo - t0) / period - 1e-12)
        t = t0 + k * period
        while t <= hi + 1e-15:
            if t >= lo - 1e-15:
                out.append(min(max(t, lo), hi))
            t += period
    out.sort()
    dedup: list[float] = []
    for t in out:
        if not dedup or t - dedup[-1] > THETA_EPS:
            dedup.append(t)
    return dedup


def crossings(
    f: Sinusoid,
    g: Sinusoid,
    lo: float,
    hi: float,
    include_lo: bool = True,
    include_hi: bool = False,
    tol: float = 1e-12,
) -> list[float]:
    """Orientations in the interval where two base-0 frequency-1 sinusoids meet."""
    if f.omega != 1 or g.omega != 1 or f.base != 0 or g.base != 0:
        raise ValueError("crossings is defined for base-0 frequency-1 sinusoids")
    diff = f - g
    if diff.amplitude <= tol * max(f.amplitude, g.amplitude, 1e-300):
        raise ValueError("identical curves")
    out = []
    for t in roots(diff, lo, hi):
        if t == lo and not include_lo:
            continue
        if t == hi and not include_hi:
            continue
        out.append(t)
    return out


class Extremum(NamedTuple):
    theta: float
    value: float
    at_boundary: bool = False


def _critical_points(f: Sinusoid, lo: float, hi: float, maximize: bool) -> list[float]:
    """Interior points where ``w*t + phi`` hits +-pi/2 (mod 2*pi)."""
    if f.amplitude == 0:
        return []
    phi = math.atan2(f.c, f.s)
    target = math.pi / 2 if maximize else -math.pi / 2
    period = TWO_PI / f.omega
    t0 = (target - phi) / f.omega
    k = math.ceil((lo - t0) / period)
    t = t0 + k * period
    out = []
    while t < hi:
        if t > lo:
            out.append(t)
        t += period
    return out


def extremize_sinusoid(f: Sinusoid, lo: float, hi: float, sense: str = "min") -> Extremum:
    """Extremum of a single sinusoid over the closed interval ``[lo, hi]``."""
    maximize = _sense(sense)
    best_t, best_v = lo, f.at(lo)
    for t in _critical_points(f, lo, hi, maximize) + [hi]:
        v = f.at(t)
        if (v > best_v) if maximize else (v < best_v):
            best_t, best_v = t, v
    return Extremum(best_t, best_v, best_t in (lo, hi))


def _sense(sense: str) -> bool:
    if sense not in ("min", "max"):
        raise ValueError(f"sense must be 'min' or 'max', got {sense!r}")
    return sense == "max"


class PiecewiseSinusoid:
    """Sinusoid pieces on contiguous intervals ``[breaks[i], breaks[i+1])``."""

    __slots__ = ("breaks", "pieces")

    def __init__(self, breaks: Sequence[float], pieces: Sequence[Sinusoid]):
        if len(breaks) != len(pieces) + 1 or not pieces:
            raise ValueError("need len(breaks) == len(pieces) + 1 >= 2")
        for a, b in zip(breaks, breaks[1:]):
            if not b > a:
                raise ValueError(f"breakpoints must increase strictly: {a} !< {b}")
        self.breaks = list(map(float, breaks))
        self.pieces = list(pieces)

    @classmethod
    def single(cls, f: Sinusoid, lo: float, hi: float) -> "PiecewiseSinusoid":
        return cls([lo, hi], [f])

    @classmethod
    def build(cls, breaks: Sequence[float], pieces: Sequence[Sinusoid], tol: float = 0.0) -> "PiecewiseSinusoid":
        """Like the constructor, but drops sliver pieces and merges equal neighbours."""
        br: list[float] = [float(breaks[0])]
        pc: list[Sinusoid] = []
        for f, b in zip(pieces, breaks[1:]):
            if b - br[-1] <= THETA_EPS:
                # sliver: absorbed by the previous piece, or by the next one if leading
                if pc:
                    br[-1] = float(b)
                continue
            if pc and (pc[-1] is f or pc[-1].is_close(f, tol)):
                br[-1] = float(b)
                continue
            pc.append(f)
            br.append(float(b))
        if not pc:
            return cls([breaks[0], breaks[-1]], [pieces[0]])
        br[-1] = float(breaks[-1])
        return cls(br, pc)

    @property
    def lo(self) -> float:
        return self.breaks[0]

    @property
    def hi(self) -> float:
        return self.breaks[-1]

    @property
    def breakpoint_count(self) -> int:
        return len(self.pieces) - 1

    def intervals(self) -> Iterable[tuple[float, float, Sinusoid]]:
        return zip(self.breaks, self.breaks[1:], self.pieces)

    def piece_index(self, theta: float) -> int:
        i = bisect.bisect_right(self.breaks, theta) - 1
        return min(max(i, 0), len(self.pieces) - 1)

    def at(self, theta: float) -> float:
        return self.pieces[self.piece_index(theta)].at(theta)

    def __call__(self, theta):
        t = np.asarray(theta, dtype=float)
        if t.ndim == 0:
            return self.at(float(t))
        idx = np.clip(np.searchsorted(self.breaks, t, side="right") - 1, 0, len(self.pieces) - 1)
        out = np.empty_like(t)
        for i in np.unique(idx):
            mask = idx == i
            out[mask] = self.pieces[i](t[mask])
        return out

    def restrict(self, lo: float, hi: float) -> "PiecewiseSinusoid":
        lo, hi = max(lo, self.lo), min(hi, self.hi)
        if not hi > lo:
            raise ValueError("empty restriction")
        i, j = self.piece_index(lo), self.piece_index(hi)
        if hi == self.breaks[j] and j > i:
            j -= 1
        breaks = [lo] + self.breaks[i + 1 : j + 1] + [hi]
        return PiecewiseSinusoid(breaks, self.pieces[i : j + 1])

    def map(self, fn: Callable[[Sinusoid], Sinusoid]) -> "PiecewiseSinusoid":
        return PiecewiseSinusoid(self.breaks, [fn(p) for p in self.pieces])

    def amplitude_scale(self) -> float:
        return max(p.scale() for p in self.pieces)

    def __repr__(self) -> str:
        return f"PiecewiseSinusoid({len(self.pieces)} pieces on [{self.lo:.6g}, {self.hi:.6g}])"


def _merged_breaks(f: PiecewiseSinusoid, g: PiecewiseSinusoid, lo: float, hi: float) -> list[float]:
    pts = sorted({lo, hi, *(b for b in f.breaks if lo < b < hi), *(b for b in g.breaks if lo < b < hi)})
    return pts


def combine(
    f: PiecewiseSinusoid,
    g: PiecewiseSinusoid,
    op: Callable[[Sinusoid, Sinusoid], Sinusoid],
) -> PiecewiseSinusoid:
    """Pointwise ``op`` of two piecewise functions over their common domain."""
    lo, hi = max(f.lo, g.lo), min(f.hi, g.hi)
    pts = _merged_breaks(f, g, lo, hi)
    pieces = []
    for a, b in zip(pts, pts[1:]):
        m = (a + b) / 2
        pieces.append(op(f.pieces[f.piece_index(m)], g.pieces[g.piece_index(m)]))
    return PiecewiseSinusoid.build(pts, pieces)


def _merge_two(f: PiecewiseSinusoid, g: PiecewiseSinusoid, maximize: bool, eps_amp: float) -> PiecewiseSinusoid:
    lo, hi = max(f.lo, g.lo), min(f.hi, g.hi)
    pts = _merged_breaks(f, g, lo, hi)
    breaks = [lo]
    pieces: list[Sinusoid] = []
    for a, b in zip(pts, pts[1:]):
        m = (a + b) / 2
        pf, pg = f.pieces[f.piece_index(m)], g.pieces[g.piece_index(m)]
        diff = pf - pg
        if diff.amplitude <= eps_amp and abs(diff.base) <= eps_amp:
            cuts, choose = [a, b], [pf]
        else:
            inner = [t for t in roots(diff, a, b) if a + THETA_EPS < t < b - THETA_EPS]
            cuts = [a, *inner, b]
            choose = []
            for u, v in zip(cuts, cuts[1:]):
                d = diff.at((u + v) / 2)
                take_f = d >= 0 if maximize else d <= 0
                choose.append(pf if take_f else pg)
        for u, piece in zip(cuts[1:], choose):
            pieces.append(piece)
            breaks.append(u)
    return PiecewiseSinusoid.build(breaks, pieces)


def _envelope(fs: Sequence, lo: Optional[float], hi: Optional[float], maximize: bool) -> PiecewiseSinusoid:
    items = [PiecewiseSinusoid.single(f, lo, hi) if isinstance(f, Sinusoid) else f for f in fs]
    if not items:
        raise ValueError("envelope of an empty sequence")
    if lo is not None and hi is not None:
        items = [f.restrict(lo, hi) for f in items]
    scale = max(f.amplitude_scale() for f in items)
    eps_amp = 1e-12 * max(scale, 1e-300)

    def rec(i: int, j: int) -> PiecewiseSinusoid:
        if j - i == 1:
            return items[i]
        m = (i + j) // 2
        return _merge_two(rec(i, m), rec(m, j), maximize, eps_amp)

    return rec(0, len(items))


def upper_envelope(fs: Sequence, lo: Optional[float] = None, hi: Optional[float] = None) -> PiecewiseSinusoid:
    """Pointwise maximum of piecewise sinusoids (or plain sinusoids when ``lo``/``hi`` are given)."""
    return _envelope(fs, lo, hi, True)


def lower_envelope(fs: Sequence, lo: Optional[float] = None, hi: Optional[float] = None) -> PiecewiseSinusoid:
    """Pointwise minimum; same contract as :func:`upper_envelope`."""
    return _envelope(fs, lo, hi, False)


def extremize(
    f,
    lo: Optional[float] = None,
    hi: Optional[float] = None,
    sense: str = "min",
) -> Extremum:
    """Global extremum of ``f`` over the closure of ``[lo, hi]``; ties go to the smaller theta.

    ``at_boundary`` is set when the optimum sits on ``lo`` or ``hi`` (so for a
    half-open domain the value may only be approached, not attained).
    """
    maximize = _sense(sense)
    if isinstance(f, Sinusoid):
        if lo is None or hi is None:
            raise ValueError("a bare sinusoid needs an explicit interval")
        f = PiecewiseSinusoid.single(f, lo, hi)
    lo = f.lo if lo is None else max(lo, f.lo)
    hi = f.hi if hi is None else min(hi, f.hi)
    best: Optional[tuple[float, float]] = None
    for a, b, piece in f.intervals():
        a, b = max(a, lo), min(b, hi)
        if a > b:
            continue
        cand = extremize_sinusoid(piece, a, b, sense)
        if best is None or ((cand.value > best[1]) if maximize else (cand.value < best[1])):
            best = (cand.theta, cand.value)
    if best is None:
        raise ValueError("interval does not meet the function's domain")
    return Extremum(best[0], best[1], best[0] in (lo, hi))


def near_optimal(f: Sinusoid, lo: float, hi: float, target: float, tol: float) -> tuple[list[float], bool]:
    """Points of ``[lo, hi]`` where ``f`` is within ``tol`` of ``target`` (assumed extreme).

    Returns ``(points, plateau)``; ``plateau`` means ``f`` is flat at the target over
    the whole interval, in which case ``points`` holds just the two endpoints.
    """
    if f.amplitude <= tol and abs(f.at((lo + hi) / 2) - target) <= tol:
        return [lo, hi], True
    cands = [lo, hi, *_critical_points(f, lo, hi, True), *_critical_points(f, lo, hi, False)]
    return sorted({t for t in cands if abs(f.at(t) - target) <= tol}), False
