"""Optimal square and rectangular annuli enclosing planar points, and largest empty rectangles."""

from .api import UnsupportedProblem, solve
from .estimators import LargestEmptyRectangle, LargestEmptySquare, RectAnnulus, SquareAnnulus, UniformRectAnnulus
from .fixed import (
    min_area_min_width_rect_annulus_fixed,
    min_area_rect_annulus_fixed,
    min_area_square_annulus_fixed,
    min_width_min_area_rect_annulus_fixed,
    min_width_square_annulus_fixed,
    uniform_rect_annulus_fixed,
)
from .geometry import Annulus, OrientedRect
from .rotating import (
    SweepReport,
    largest_empty_rect_any,
    largest_empty_square_any,
    min_area_min_width_rect_annulus_any,
    min_area_rect_annulus_any,
    min_width_min_area_rect_annulus_any,
    square_annulus_any,
    uniform_rect_any,
)

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "LargestEmptyRectangle",
    "LargestEmptySquare",
    "OrientedRect",
    "RectAnnulus",
    "SquareAnnulus",
    "SweepReport",
    "UniformRectAnnulus",
    "UnsupportedProblem",
    "largest_empty_rect_any",
    "largest_empty_square_any",
    "min_area_min_width_rect_annulus_any",
    "min_area_min_width_rect_annulus_fixed",
    "min_area_rect_annulus_any",
    "min_area_rect_annulus_fixed",
    "min_area_square_annulus_fixed",
    "min_width_min_area_rect_annulus_any",
    "min_width_min_area_rect_annulus_fixed",
    "min_width_square_annulus_fixed",
    "solve",
    "square_annulus_any",
    "uniform_rect_annulus_fixed",
    "uniform_rect_any",
]
