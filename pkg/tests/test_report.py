import json

import numpy as np

from annuli import solve
from annuli.report import build_report, dumps, render_svg

from conftest import CORNERS_CENTER


def test_dumps_is_valid_and_precise():
    text = dumps({"a": 0.1, "b": [1, 2.5], "c": None, "d": {"e": True}})
    obj = json.loads(text)
    assert obj["a"] == 0.1 and obj["d"]["e"] is True


def test_report_fields_and_svg():
    rep = solve(CORNERS_CENTER, "square", "width")
    out = build_report(rep, CORNERS_CENTER, {"shape": "square"}, "0.1.0", list(range(5)), None)
    keys = list(out)
    assert keys[:4] == ["spec", "n", "theta_star", "value"]
    assert np.isclose(out["value"], 0.5)
    svg = render_svg(rep, CORNERS_CENTER)
    assert svg.count("<circle") == 5
