import numpy as np
import pytest
from sklearn.base import clone

from annuli import LargestEmptyRectangle, LargestEmptySquare, RectAnnulus, SquareAnnulus, UniformRectAnnulus

from conftest import CORNERS_CENTER


@pytest.mark.parametrize("cls", [SquareAnnulus, UniformRectAnnulus, RectAnnulus])
def test_params_clone_fit(cls):
    est = cls(objective="area", orientation="fixed:0")
    assert est.get_params()["objective"] == "area"
    c = clone(est).fit(CORNERS_CENTER)
    assert c.predict(CORNERS_CENTER).all()
    assert c.transform(CORNERS_CENTER).shape == (5, 2)
    assert c.theta_ == 0.0


def test_square_values():
    est = SquareAnnulus(objective="width").fit(CORNERS_CENTER)
    assert est.value_ == pytest.approx(0.5)
    assert not est.predict([[10.0, 10.0]])[0]


def test_empty_shapes():
    r = LargestEmptyRectangle(orientation="fixed:0").fit(CORNERS_CENTER)
    assert r.value_ == pytest.approx(0.5)
    s = LargestEmptySquare().fit(CORNERS_CENTER)
    assert s.side_ == pytest.approx(np.sqrt(0.5))
    assert not s.predict(CORNERS_CENTER).any()


def test_unfitted_and_bad_input():
    from sklearn.exceptions import NotFittedError

    with pytest.raises(NotFittedError):
        SquareAnnulus().predict(CORNERS_CENTER)
    with pytest.raises(ValueError):
        SquareAnnulus().fit(np.array([[0.0, np.nan], [1.0, 1.0]]))
    with pytest.raises(ValueError):
        SquareAnnulus().fit(np.zeros((3, 3)))
