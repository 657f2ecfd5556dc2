import math

import numpy as np
import pytest

from annuli.empty_rect import enumerate_mers
from annuli.geometry import bounding_rect, to_frame
from annuli.sweep import build_arrangement, elementary_intervals


def test_elementary_intervals_partition_domain():
    pts = np.random.default_rng(0).random((8, 2))
    primaries, elem = elementary_intervals(pts)
    assert elem[0].lo == 0.0 and elem[-1].hi == pytest.approx(math.pi / 2)
    for a, b in zip(elem, elem[1:]):
        assert a.hi == b.lo
    for e in elem:
        p = primaries[e.primary]
        assert p.lo <= e.lo < e.hi <= p.hi


def test_square_has_breakpoint_at_quarter_pi():
    pts = np.array([(0, 0), (1, 0), (1, 1), (0, 1)], dtype=float)
    _, elem = elementary_intervals(pts)
    assert any(abs(e.lo - math.pi / 4) < 1e-12 for e in elem)


def test_classes_are_mers_throughout_their_run():
    pts = np.random.default_rng(5).random((6, 2))
    arr = build_arrangement(pts)
    for c in arr.classes:
        for k in range(c.first, c.last + 1):
            theta = arr.elementary[k].mid
            sups = {m.supports for m in enumerate_mers(to_frame(pts, theta), bounding_rect(pts, theta))}
            assert c.supports in sups
    d = arr.diagnostics()
    assert d["pairs_T"] >= d["mer_classes"] > 0
    assert d["r"] == max(arr.mer_counts)


def test_threads_do_not_change_result():
    pts = np.random.default_rng(6).random((7, 2))
    a, b = build_arrangement(pts), build_arrangement(pts, threads=3)
    assert [(c.supports, c.first, c.last) for c in a.classes] == [(c.supports, c.first, c.last) for c in b.classes]


def test_needs_two_points():
    with pytest.raises(ValueError):
        elementary_intervals(np.array([(1.0, 2.0)]))
