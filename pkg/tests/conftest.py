import pytest

from linkpursuit.geom import Point, Polygon


@pytest.fixture
def l_hexagon():
    # L-shaped hexagon with one reflex vertex at (1,1)
    return Polygon([Point(0, 0), Point(2, 0), Point(2, 1),
                    Point(1, 1), Point(1, 2), Point(0, 2)])


@pytest.fixture
def unit_square():
    return Polygon([Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)])
