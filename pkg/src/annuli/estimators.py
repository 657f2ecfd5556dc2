"""scikit-learn style estimators wrapping the solvers.

``fit`` finds the optimal shape for a point set; ``predict`` tells which
points fall inside the fitted annulus (or the fitted empty shape) and
``transform`` maps points into the fitted orientation's frame.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .api import solve
from .geometry import geo_eps, to_frame
from .validation import ANY, check_orientation, check_points, check_threads


class _ShapeEstimator(TransformerMixin, BaseEstimator):
    _shape = ""

    def __init__(self, objective="width", orientation=ANY, n_jobs=None):
        self.objective = objective
        self.orientation = orientation
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        """Solve for the optimal shape enclosing (or avoiding) the points in ``X``."""
        X = check_points(X)
        orientation = check_orientation(self.orientation)
        report = solve(X, self._shape, self.objective, orientation, check_threads(self.n_jobs))
        self.report_ = report
        self.theta_ = float(report.theta_star) % (np.pi / 2)
        self.value_ = float(report.value)
        self.width_ = float(report.width)
        self.area_ = float(report.area)
        self.n_features_in_ = 2
        self.eps_ = geo_eps(X)
        self._set_witness(report)
        return self

    def _set_witness(self, report):
        self.annulus_ = report.annulus

    def transform(self, X):
        """Coordinates of ``X`` in the frame rotated by ``theta_``."""
        check_is_fitted(self, "report_")
        X = check_points(X, dedupe=False)
        return np.atleast_2d(to_frame(X, self.theta_))

    def predict(self, X):
        """Boolean mask of points lying in the closed annulus."""
        check_is_fitted(self, "report_")
        X = check_points(X, dedupe=False)
        return self.annulus_.contains(X, self.eps_)


class SquareAnnulus(_ShapeEstimator):
    """Optimal square annulus; objective ``width``, ``area``, ``area-width`` or ``width-area``."""

    _shape = "square"


class UniformRectAnnulus(_ShapeEstimator):
    """Optimal rectangular annulus whose four side widths are equal."""

    _shape = "urect"


class RectAnnulus(_ShapeEstimator):
    """Optimal rectangular annulus; side widths may differ."""

    _shape = "rect"


class _EmptyShape(_ShapeEstimator):
    def __init__(self, orientation=ANY, n_jobs=None):
        self.orientation = orientation
        self.n_jobs = n_jobs

    @property
    def objective(self):
        return "largest"

    @objective.setter
    def objective(self, value):
        if value != "largest":
            raise ValueError("empty shapes only support the objective 'largest'")

    def _set_witness(self, report):
        self.rect_ = report.rect
        self.side_ = float(report.side)

    def predict(self, X):
        """Boolean mask of points strictly inside the fitted empty shape (always false for the fitted set)."""
        check_is_fitted(self, "report_")
        uv = self.transform(X)
        r = self.rect_
        return (uv[:, 0] > r.lo_x) & (uv[:, 0] < r.hi_x) & (uv[:, 1] > r.lo_y) & (uv[:, 1] < r.hi_y)


class LargestEmptyRectangle(_EmptyShape):
    """Largest rectangle inside the points' bounding rectangle containing none of them."""

    _shape = "empty-rect"


class LargestEmptySquare(_EmptyShape):
    """Largest square inside the points' bounding rectangle containing none of them."""

    _shape = "empty-square"
