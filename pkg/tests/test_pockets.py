import pytest

from linkpursuit.geom import Point, Polygon, sees, visibility_graph
from linkpursuit.graphgame import check_dismantle_certificate
from linkpursuit.pockets import (check_nesting_along_edge,
                                 geometric_dismantling, maximal_pockets,
                                 pocket, pocket_interior_invisible_from_u,
                                 visibility_increasing_edges)


def P(x, y):
    return Point(x, y)


class TestPocket:
    def test_convex_edge_none(self, unit_square):
        assert pocket(unit_square, 0, 1) is None

    def test_l_hexagon_upper_pocket(self, l_hexagon):
        # u = (2,1), v = (1,1): ray exits at (0,1)
        pk = pocket(l_hexagon, 2, 3)
        assert pk is not None
        assert pk.t == P(0, 1)
        assert list(pk.region.vertices) == [P(1, 1), P(1, 2), P(0, 2),
                                            P(0, 1)]

    def test_l_hexagon_lower_pocket(self, l_hexagon):
        # u = (1,2), v = (1,1): ray exits at (1,0)
        pk = pocket(l_hexagon, 4, 3)
        assert pk is not None
        assert pk.t == P(1, 0)
        assert set(pk.region.vertices) == {P(1, 1), P(2, 1), P(2, 0),
                                           P(1, 0)}

    def test_u_blind_to_pocket_interior(self, l_hexagon):
        for pk in (pocket(l_hexagon, 2, 3), pocket(l_hexagon, 4, 3)):
            assert pocket_interior_invisible_from_u(l_hexagon, pk)


class TestMaximalPockets:
    def test_convex_empty(self, unit_square):
        assert maximal_pockets(unit_square) == []

    def test_l_hexagon_exactly_two(self, l_hexagon):
        mps = maximal_pockets(l_hexagon)
        assert {(pk.u, pk.v) for pk in mps} == {(2, 3), (4, 3)}
        # their u vertices are mutually invisible
        assert not sees(P(2, 1), P(1, 2), l_hexagon)


class TestVisibilityIncreasingEdges:
    def test_convex_all_edges(self, unit_square):
        es = visibility_increasing_edges(unit_square)
        assert len(es) == 4

    def test_l_hexagon(self, l_hexagon):
        es = {(e.u, e.v) for e in visibility_increasing_edges(l_hexagon)}
        assert es == {(2, 3), (4, 3)}

    def test_nesting_holds_on_samples(self, l_hexagon):
        for e in visibility_increasing_edges(l_hexagon):
            assert check_nesting_along_edge(l_hexagon, e.u, e.v)


class TestGeometricDismantling:
    def test_convex(self, unit_square):
        cert = geometric_dismantling(unit_square)
        assert sorted(cert.order) == [0, 1, 2, 3]
        assert check_dismantle_certificate(visibility_graph(unit_square),
                                           cert)

    def test_l_hexagon(self, l_hexagon):
        cert = geometric_dismantling(l_hexagon)
        assert cert.order[0] in (2, 4)
        assert cert.dominators[0] == 3
        assert check_dismantle_certificate(visibility_graph(l_hexagon), cert)

    def test_spiky_polygon(self):
        poly = Polygon([P(0, 0), P(6, 0), P(6, 3), P(5, 1), P(4, 3),
                        P(3, 1), P(2, 3), P(1, 1), P(0, 3)])
        cert = geometric_dismantling(poly)
        assert sorted(cert.order) == list(range(9))
        assert check_dismantle_certificate(visibility_graph(poly), cert)
