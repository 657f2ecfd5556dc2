import math

import numpy as np
import pytest

from annuli import fixed
from annuli.oracle import oracle_fixed

from conftest import random_instance


def test_square_golden(corners_center, p5):
    assert fixed.min_width_square_annulus_fixed(corners_center, 0).width == pytest.approx(0.5)
    r = fixed.min_width_square_annulus_fixed(p5, 0)
    assert r.width == pytest.approx(1.0) and r.area == pytest.approx(12.0)
    assert fixed.min_area_square_annulus_fixed(p5, 0).area == pytest.approx(12.0)


def test_uniform_and_rect_golden(corners_center, p5):
    u = fixed.uniform_rect_annulus_fixed(p5, 0)
    assert (u.width, u.area) == pytest.approx((1.0, 8.0))
    assert fixed.uniform_rect_annulus_fixed(corners_center, 0).area == pytest.approx(1.0)
    assert fixed.min_area_rect_annulus_fixed(corners_center, 0).area == pytest.approx(0.5)
    aw = fixed.min_area_min_width_rect_annulus_fixed(corners_center, 0)
    assert (aw.width, aw.area) == pytest.approx((0.5, 0.5))


def test_corners_are_degenerate(corners):
    for fn in (fixed.min_width_square_annulus_fixed, fixed.uniform_rect_annulus_fixed,
               fixed.min_area_rect_annulus_fixed, fixed.min_width_min_area_rect_annulus_fixed):
        r = fn(corners, 0.0)
        assert r.width == 0.0 and r.area == 0.0


def test_witness_contains_points_and_matches_value():
    rng = np.random.default_rng(11)
    for _ in range(20):
        pts = random_instance(rng, 3, 9)
        theta = float(rng.uniform(0, math.pi / 2))
        for fn in (fixed.min_width_square_annulus_fixed, fixed.uniform_rect_annulus_fixed,
                   fixed.min_area_rect_annulus_fixed, fixed.min_area_min_width_rect_annulus_fixed):
            r = fn(pts, theta)
            assert r.annulus.contains(pts, 1e-9).all()
            assert r.annulus.area == pytest.approx(r.area, abs=1e-9)


def test_rect_matches_oracle_small():
    rng = np.random.default_rng(12)
    pts = random_instance(rng, 6, 6)
    ref = oracle_fixed(pts, 0.3, "rect", "area")
    assert fixed.min_area_rect_annulus_fixed(pts, 0.3).area == pytest.approx(ref.area, abs=1e-12)
