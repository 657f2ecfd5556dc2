import json

import pytest

from annuli.cli import InputError, main, parse_points


def write(tmp_path, text):
    p = tmp_path / "pts.csv"
    p.write_text(text)
    return str(p)


CC = "0,0\n1,0\n1,1\n0,1\n0.5,0.5\n"


def test_square_fixed(tmp_path, capsys):
    assert main(["--shape", "square", "--orientation", "fixed:0", "--input", write(tmp_path, CC)]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["width"] == pytest.approx(0.5) and rep["area"] == pytest.approx(1.0)
    assert rep["n"] == 5


def test_empty_square_with_oracle(tmp_path):
    out = tmp_path / "r.json"
    svg = tmp_path / "r.svg"
    rc = main(["--shape", "empty-square", "--input", write(tmp_path, CC), "--oracle",
               "--theta-samples", "2000", "--output", str(out), "--svg", str(svg)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert rep["value"] == pytest.approx(0.5 ** 0.5)
    assert "oracle" in rep
    assert svg.read_text().startswith("<svg")


def test_random_is_byte_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["--shape", "urect", "--objective", "area", "--random", "8", "--seed", "3", "--output", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_exit_codes(tmp_path, capsys):
    assert main(["--shape", "square", "--input", write(tmp_path, "0,0\nfoo,1\n")]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["--shape", "empty-rect", "--objective", "width", "--input", write(tmp_path, CC)]) == 3


def test_parse_points_skips_blank_and_comments():
    pts = parse_points("# header\n0,0\n\n1, 2\n")
    assert pts.tolist() == [[0.0, 0.0], [1.0, 2.0]]
    with pytest.raises(InputError):
        parse_points("1,2,3\n")
