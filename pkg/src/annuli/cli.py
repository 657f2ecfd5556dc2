"""Command-line front end: ``annulus --shape square --objective width --orientation any --input pts.csv``."""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .api import SHAPES, UnsupportedProblem, canonical, solve
from .report import build_report, dumps, render_svg
from .validation import ANY, check_orientation

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 2, 3
OBJECTIVES = ("width", "area", "area-width", "width-area", "largest")

log = logging.getLogger("annuli")


class InputError(ValueError):
    pass


def parse_points(text: str) -> np.ndarray:
    """Parse ``x,y`` lines; blank lines and ``#`` comments are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'x,y', got {raw!r}")
        try:
            x, y = float(fields[0]), float(fields[1])
        except ValueError:
            raise InputError(f"line {lineno}: not a number in {raw!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InputError(f"line {lineno}: coordinates must be finite")
        rows.append((x, y))
    if not rows:
        raise InputError("no points in input")
    return np.array(rows, dtype=float)


def dedupe_with_index(pts: np.ndarray) -> tuple[np.ndarray, list[int]]:
    seen: dict[tuple[float, float], int] = {}
    for i, (x, y) in enumerate(pts.tolist()):
        seen.setdefault((x, y), i)
    idx = sorted(seen.values())
    return pts[idx], idx


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="annulus",
        description="Optimal square / rectangular annuli enclosing points, and largest empty rectangles or squares.",
    )
    p.add_argument("--shape", required=True, choices=SHAPES)
    p.add_argument("--objective", default=None, choices=OBJECTIVES, help="default: width, or largest for empty shapes")
    p.add_argument("--orientation", default=ANY, help="'any' or 'fixed:<radians>' (default: any)")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="CSV file with one 'x,y' point per line, '-' for stdin")
    src.add_argument("--random", type=int, metavar="N", help="use N uniform random points in the unit square")
    p.add_argument("--seed", type=int, default=0, help="seed for --random (default: 0)")
    p.add_argument("--output", default="-", help="JSON report path (default: stdout)")
    p.add_argument("--svg", help="also write an SVG figure here")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force reference (at most 12 points)")
    p.add_argument("--theta-samples", type=int, default=20000, help="orientation grid size for --oracle")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _oracle(pts, shape, objective, orientation, samples) -> dict:
    from .oracle import OracleConfig, oracle_any, oracle_fixed

    cfg = OracleConfig(theta_samples=samples)
    if orientation == ANY:
        res = oracle_any(pts, shape, objective, cfg)
    else:
        res = oracle_fixed(pts, float(orientation), shape, objective, cfg)
    return {"value": res.value, "theta": res.theta, "step": res.step, "lipschitz": res.lipschitz}


def run(args: argparse.Namespace) -> int:
    objective = args.objective or ("largest" if args.shape.startswith("empty-") else "width")
    try:
        shape, objective = canonical(args.shape, objective)
    except UnsupportedProblem as exc:
        print(f"annulus: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    try:
        orientation = check_orientation(args.orientation)
        if args.random is not None:
            if args.random < 1:
                raise InputError("--random needs a positive count")
            raw = np.random.default_rng(args.seed).random((args.random, 2))
        elif args.input == "-":
            raw = parse_points(sys.stdin.read())
        else:
            with open(args.input, encoding="utf-8") as fh:
                raw = parse_points(fh.read())
        pts, index_map = dedupe_with_index(raw)
        if len(pts) < len(raw):
            log.info("dropped %d duplicate points", len(raw) - len(pts))
        if args.theta_samples < 100:
            raise InputError("--theta-samples must be at least 100")
    except (OSError, ValueError, TypeError) as exc:
        print(f"annulus: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    threads = args.threads if args.threads is not None else (os.cpu_count() or 1)
    try:
        rep = solve(pts, shape, objective, orientation, threads)
        oracle = _oracle(pts, shape, objective, orientation, args.theta_samples) if args.oracle else None
    except ValueError as exc:
        print(f"annulus: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    spec = {
        "shape": shape,
        "objective": objective,
        "orientation": "any" if orientation == ANY else f"fixed:{float(orientation)!r}",
        "input": args.input if args.random is None else None,
        "random": args.random,
        "seed": args.seed,
    }
    text = dumps(build_report(rep, pts, spec, __version__, index_map, oracle)) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(render_svg(rep, pts))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
