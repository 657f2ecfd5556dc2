import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annuli.trig import PiecewiseSinusoid, Sinusoid, extremize, lower_envelope, multiply, near_optimal, roots, upper_envelope

GRID = np.linspace(0.0, math.pi / 2, 2001)
amp = st.floats(0.1, 5.0)
phase = st.floats(0.0, 2 * math.pi)


@given(amp, phase, amp, phase)
def test_product_matches_closed_form(a1, p1, a2, p2):
    f, g = Sinusoid.wave(a1, p1), Sinusoid.wave(a2, p2)
    h = multiply(f, g)
    closed = (a1 * a2 / 2) * (np.sin(2 * GRID + p1 + p2 - math.pi / 2) + math.cos(p1 - p2))
    assert h.omega == 2
    assert np.abs(h(GRID) - closed).max() <= 1e-10
    assert np.abs(h(GRID) - f(GRID) * g(GRID)).max() <= 1e-10


def test_multiply_rejects_non_pure_factors():
    with pytest.raises(ValueError):
        multiply(Sinusoid(1, 0, base=1.0), Sinusoid(0, 1))


@given(amp, phase, st.floats(-3, 3))
def test_roots_are_zeros(a, p, base):
    f = Sinusoid.wave(a, p, base=base)
    for t in roots(f, 0.0, math.pi / 2):
        assert 0.0 <= t <= math.pi / 2
        assert abs(f.at(t)) <= 1e-9 * (a + abs(base))


def test_roots_count_sign_changes():
    f = Sinusoid(1.0, 0.0)  # cos
    assert roots(f, 0.0, math.pi) == pytest.approx([math.pi / 2])
    assert roots(Sinusoid(0.0, 0.0, base=1.0), 0.0, 1.0) == []


@settings(max_examples=50)
@given(st.lists(st.tuples(amp, phase, st.floats(-2, 2)), min_size=1, max_size=6))
def test_envelopes_match_pointwise(params):
    fs = [Sinusoid.wave(a, p, base=b) for a, p, b in params]
    vals = np.array([f(GRID) for f in fs])
    up = upper_envelope(fs, 0.0, math.pi / 2)
    lo = lower_envelope(fs, 0.0, math.pi / 2)
    assert np.abs(up(GRID) - vals.max(axis=0)).max() <= 1e-10
    assert np.abs(lo(GRID) - vals.min(axis=0)).max() <= 1e-10
    assert up.breakpoint_count <= 2 * len(fs) * 4


@given(amp, phase, st.floats(-2, 2))
def test_extremize_beats_grid(a, p, b):
    f = PiecewiseSinusoid.single(Sinusoid.wave(a, p, base=b), 0.0, math.pi / 2)
    mn, mx = extremize(f, 0.0, math.pi / 2, "min"), extremize(f, 0.0, math.pi / 2, "max")
    assert mn.value <= f(GRID).min() + 1e-12
    assert mx.value >= f(GRID).max() - 1e-12
    assert f.at(mn.theta) == pytest.approx(mn.value, abs=1e-12)


def test_near_optimal_plateau_and_points():
    flat = Sinusoid(0.0, 0.0, base=2.0)
    pts, plateau = near_optimal(flat, 0.1, 0.5, 2.0, 1e-12)
    assert plateau and pts == [0.1, 0.5]
    pts, plateau = near_optimal(Sinusoid(1.0, 0.0), 0.0, math.pi, -1.0, 1e-12)
    assert not plateau and pts == pytest.approx([math.pi])


def test_piecewise_build_merges_equal_neighbours():
    f = Sinusoid(1.0, 2.0)
    pw = PiecewiseSinusoid.build([0.0, 0.3, 0.7, 1.0], [f, f, Sinusoid(0.5, 0.0)])
    assert pw.breakpoint_count == 1
    assert pw.at(0.5) == pytest.approx(f.at(0.5))
    assert pw.restrict(0.2, 0.8).lo == 0.2
