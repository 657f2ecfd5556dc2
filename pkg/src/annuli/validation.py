"""Input checking shared by the estimators and the command line."""

from __future__ import annotations

import numbers
from typing import Union

import numpy as np
from sklearn.utils.validation import check_array

from .geometry import HALF_PI, dedupe_points, normalize_orientation

ANY = "any"
Orientation = Union[str, float]


def check_points(X, min_points: int = 1, dedupe: bool = True) -> np.ndarray:
    """Validate an ``(n, 2)`` array of finite coordinates, dropping repeated points."""
    X = check_array(X, dtype=np.float64, ensure_2d=True, ensure_all_finite=True, ensure_min_samples=1)
    if X.shape[1] != 2:
        raise ValueError(f"expected points with 2 coordinates, got {X.shape[1]}")
    if dedupe:
        X, _ = dedupe_points(X)
    if len(X) < min_points:
        raise ValueError(f"need at least {min_points} distinct points, got {len(X)}")
    return X


def check_orientation(orientation: Orientation) -> Orientation:
    """``"any"`` or an angle in radians, reduced to ``[0, pi/2)``."""
    if isinstance(orientation, str):
        text = orientation.strip().lower()
        if text == ANY:
            return ANY
        if text.startswith("fixed:"):
            text = text[len("fixed:"):]
        try:
            value = float(text)
        except ValueError:
            raise ValueError(f"orientation must be 'any', 'fixed:<radians>' or a number, got {orientation!r}") from None
        orientation = value
    if isinstance(orientation, bool) or not isinstance(orientation, numbers.Real):
        raise TypeError(f"orientation must be 'any' or a real number, got {type(orientation).__name__}")
    if not np.isfinite(orientation):
        raise ValueError("orientation must be finite")
    return normalize_orientation(float(orientation), HALF_PI)


def check_threads(n_jobs) -> int:
    if n_jobs is None:
        return 1
    if isinstance(n_jobs, bool) or not isinstance(n_jobs, numbers.Integral):
        raise TypeError("n_jobs must be an integer or None")
    if n_jobs == -1:
        import os

        return os.cpu_count() or 1
    if n_jobs < 1:
        raise ValueError("n_jobs must be a positive integer or -1")
    return int(n_jobs)
