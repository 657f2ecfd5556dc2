import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annuli.empty_rect import BOX, enumerate_mers, largest_empty_rect, largest_empty_square_fixed
from annuli.geometry import OrientedRect, bounding_rect, to_frame
from annuli.oracle import oracle_mers

UNIT = OrientedRect(0.0, 0.0, 1.0, 0.0, 1.0)


def keys(rects):
    return {r.as_tuple() for r in rects}


def test_empty_box_is_its_own_mer():
    mers = enumerate_mers(np.zeros((0, 2)), UNIT)
    assert len(mers) == 1 and mers[0].rect.as_tuple() == UNIT.as_tuple()
    assert mers[0].supports == (BOX, BOX, BOX, BOX)


def test_single_interior_point_gives_four_strips():
    mers = enumerate_mers(np.array([(0.3, 0.6)]), UNIT)
    assert sorted(m.area for m in mers) == pytest.approx([0.3, 0.4, 0.6, 0.7])


def test_two_diagonal_points_have_eight_mers():
    pts = np.array([(0.3, 0.3), (0.7, 0.7)])
    mers = enumerate_mers(pts, UNIT)
    assert len(mers) == 8
    assert keys(m.rect for m in mers) == keys(oracle_mers(pts, UNIT))


def test_points_on_box_boundary_do_not_block():
    pts = np.array([(0.0, 0.5), (0.5, 1.0)])
    assert largest_empty_rect(pts, UNIT).area == pytest.approx(1.0)


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), min_size=1, max_size=8, unique=True),
       st.floats(0, math.pi / 2))
def test_enumeration_matches_oracle_with_ties(ints, theta):
    pts = np.array(ints, dtype=float)
    uv, box = to_frame(pts, theta), bounding_rect(pts, theta)
    assert keys(m.rect for m in enumerate_mers(uv, box)) == keys(oracle_mers(uv, box))


def test_mers_are_empty_and_supported():
    rng = np.random.default_rng(3)
    uv = rng.random((10, 2))
    for m in enumerate_mers(uv, UNIT):
        r = m.rect
        inside = (uv[:, 0] > r.lo_x) & (uv[:, 0] < r.hi_x) & (uv[:, 1] > r.lo_y) & (uv[:, 1] < r.hi_y)
        assert not inside.any()
        if m.supports.left != BOX:
            assert uv[m.supports.left, 0] == r.lo_x


def test_largest_empty_square_fixed():
    pts = np.array([(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5)])
    sq = largest_empty_square_fixed(pts, bounding_rect(pts, 0.0))
    assert sq.width == pytest.approx(0.5) and sq.height == pytest.approx(0.5)
