import itertools

import pytest

from linkpursuit.geom import (GeometryError, Location, Orient, Point, Polygon,
                              point_location, sees)
from linkpursuit.pursuit import (ActiveRegion, CorridorRobber,
                                 DiscreteOptimalRobber, GameState, Metric,
                                 RandomRobber, ShortestPathCop, active_region,
                                 cop_move_shortest_path, link_distance,
                                 robber_discrete_optimal, run_polygon_game,
                                 shortest_path, split_by_chord, verify_trace)


def P(x, y):
    return Point(x, y)


class TestShortestPath:
    def test_visible_pair(self, unit_square):
        res = shortest_path(P("1/4", "1/4"), P("3/4", "3/4"), unit_square)
        assert res.waypoints == [P("1/4", "1/4"), P("3/4", "3/4")]
        assert res.metric is Metric.EUCLIDEAN

    def test_same_point(self, unit_square):
        res = shortest_path(P("1/2", "1/2"), P("1/2", "1/2"), unit_square)
        assert res.waypoints == [P("1/2", "1/2")]
        assert res.length == 0

    def test_l_hexagon_around_notch(self, l_hexagon):
        res = shortest_path(P(2, "1/2"), P("1/2", 2), l_hexagon)
        assert res.waypoints == [P(2, "1/2"), P(1, 1), P("1/2", 2)]

    def test_interior_waypoints_are_reflex(self, l_hexagon):
        res = shortest_path(P(2, "1/2"), P("1/2", 2), l_hexagon)
        for w in res.waypoints[1:-1]:
            assert w in [l_hexagon.vertices[i]
                         for i in l_hexagon.reflex_indices()]

    def test_exterior_raises(self, l_hexagon):
        with pytest.raises(GeometryError):
            shortest_path(P(5, 5), P(0, 0), l_hexagon)

    def test_length_matches_geometry(self, l_hexagon):
        res = shortest_path(P(2, 1), P(1, 2), l_hexagon)
        assert res.waypoints == [P(2, 1), P(1, 1), P(1, 2)]
        assert abs(res.length - 2.0) < 1e-12


class TestLinkDistance:
    def test_identical(self, unit_square):
        assert link_distance(P("1/2", "1/2"), P("1/2", "1/2"),
                             unit_square) == 0

    def test_visible_is_one(self, unit_square):
        assert link_distance(P(0, 0), P(1, 1), unit_square) == 1

    def test_grazing_diagonal_is_one(self, l_hexagon):
        # both points on the line x + y = 2 through the reflex vertex: the
        # straight segment grazes the corner but never leaves the polygon
        assert link_distance(P("3/2", "1/2"), P("1/2", "3/2"), l_hexagon) == 1

    def test_l_hexagon_two(self, l_hexagon):
        assert link_distance(P("3/2", "1/2"), P("1/2", "7/4"), l_hexagon) == 2

    def test_one_iff_sees(self, l_hexagon):
        pts = [P("1/2", "1/2"), P("3/2", "1/2"), P("1/2", "3/2"),
               P(2, 1), P(1, 2)]
        for a, b in itertools.combinations(pts, 2):
            d = link_distance(a, b, l_hexagon)
            assert (d == 1) == sees(a, b, l_hexagon)

    def test_triangle_inequality(self, l_hexagon):
        pts = [P("1/2", "1/2"), P("3/2", "1/2"), P("1/2", "3/2"), P(2, 1)]
        for a, b, c in itertools.permutations(pts, 3):
            assert link_distance(a, c, l_hexagon) <= \
                link_distance(a, b, l_hexagon) + \
                link_distance(b, c, l_hexagon)

    def test_three_links(self):
        # double bend: two opposite notches force a three-segment path
        poly = Polygon([P(0, 0), P(4, 0), P(4, 2), P(5, 2), P(5, 0),
                        P(7, 0), P(7, 3), P(3, 3), P(3, 1), P(2, 1),
                        P(2, 3), P(0, 3)])
        assert link_distance(P("1/2", "1/2"), P("13/2", "5/2"), poly) == 3


class TestCopMove:
    def test_visible_captures(self, unit_square):
        st = GameState(unit_square, P(0, 0), P(1, 1), 0, [])
        assert cop_move_shortest_path(st) == P(1, 1)

    def test_l_hexagon_corner(self, l_hexagon):
        st = GameState(l_hexagon, P(2, "1/2"), P("1/2", "3/2"), 0, [])
        assert cop_move_shortest_path(st) == P(1, 1)

    def test_already_captured(self, unit_square):
        st = GameState(unit_square, P(1, 1), P(1, 1), 0, [])
        assert cop_move_shortest_path(st) == P(1, 1)


class TestActiveRegion:
    def test_l_hexagon_cut(self, l_hexagon):
        st = GameState(l_hexagon, P(2, "1/2"), P("1/2", "3/2"), 0, [])
        ar = active_region(st, P(1, 1))
        assert ar.cut == (P(1, 1), P(2, "1/2"))
        assert point_location(P("1/2", "3/2"), ar.region) is not \
            Location.EXTERIOR
        verts = set(ar.region.vertices)
        assert P(2, 1) not in verts
        assert ar.vertex_count == 5

    def test_cop_sees_robber_raises(self, unit_square):
        st = GameState(unit_square, P(0, 0), P(1, 1), 0, [])
        with pytest.raises(GeometryError):
            active_region(st, P(1, 1))


class TestSplitByChord:
    def test_boundary_chord_no_split(self, unit_square):
        pieces = split_by_chord(unit_square, P(0, 0), P(1, 0))
        assert len(pieces) == 1
        assert pieces[0].area2() == unit_square.area2()

    def test_interior_chord_two_pieces(self, unit_square):
        pieces = split_by_chord(unit_square, P(0, 0), P(1, 1))
        assert len(pieces) == 2
        assert sum(p.area2() for p in pieces) == unit_square.area2()

    def test_chord_grazing_reflex(self, l_hexagon):
        # chord through the reflex vertex: three contact points, one split
        pieces = split_by_chord(l_hexagon, P(2, 0), P(0, 2))
        assert sum(p.area2() for p in pieces) == l_hexagon.area2()
        assert len(pieces) == 3


class TestGameLoop:
    def test_convex_round_one(self, unit_square):
        tr = run_polygon_game(unit_square, ShortestPathCop(),
                              DiscreteOptimalRobber())
        assert tr.captured and tr.capture_round == 1

    def test_l_hexagon_optimal_robber(self, l_hexagon):
        tr = run_polygon_game(l_hexagon, ShortestPathCop(),
                              DiscreteOptimalRobber())
        assert tr.captured
        assert tr.capture_round <= l_hexagon.n
        assert verify_trace(tr) == []

    def test_spiky_polygon_all_robbers(self):
        poly = Polygon([P(0, 0), P(6, 0), P(6, 3), P(5, 1), P(4, 3),
                        P(3, 1), P(2, 3), P(1, 1), P(0, 3)])
        for robber in (DiscreteOptimalRobber(), RandomRobber(7),
                       RandomRobber(11)):
            tr = run_polygon_game(poly, ShortestPathCop(), robber)
            assert tr.captured
            assert tr.capture_round <= poly.n
            assert verify_trace(tr) == []

    def test_trace_determinism(self):
        poly = Polygon([P(0, 0), P(6, 0), P(6, 3), P(5, 1), P(4, 3),
                        P(3, 1), P(2, 3), P(1, 1), P(0, 3)])
        a = run_polygon_game(poly, ShortestPathCop(), RandomRobber(3))
        b = run_polygon_game(poly, ShortestPathCop(), RandomRobber(3))
        assert a.to_canonical_json() == b.to_canonical_json()

    def test_region_counts_strictly_decrease(self):
        poly = Polygon([P(0, 0), P(6, 0), P(6, 3), P(5, 1), P(4, 3),
                        P(3, 1), P(2, 3), P(1, 1), P(0, 3)])
        tr = run_polygon_game(poly, ShortestPathCop(),
                              DiscreteOptimalRobber())
        counts = [ar.vertex_count for ar in tr.active_regions
                  if ar is not None]
        assert counts == sorted(counts, reverse=True)
        assert len(set(counts)) == len(counts)


class TestCorridorRobber:
    def test_stays_when_hidden(self, l_hexagon):
        anchors = [P("3/2", "1/2"), P(1, 1), P("1/2", "3/2")]
        rb = CorridorRobber(anchors)
        st = GameState(l_hexagon, P(2, 1), P("1/2", "3/2"), 0, [])
        assert rb.move(st) == P("1/2", "3/2")

    def test_hops_to_hidden_neighbor(self, l_hexagon):
        anchors = [P("3/2", "1/2"), P(1, 1), P("1/2", "3/2")]
        rb = CorridorRobber(anchors)
        st = GameState(l_hexagon, P(2, 1), P(1, 1), 0, [])
        # cop at (2,1) sees the middle anchor and the lower one, not the upper
        assert rb.move(st) == P("1/2", "3/2")

    def test_placement_prefers_hidden_middle(self, l_hexagon):
        anchors = [P("3/2", "1/2"), P(1, 1), P("1/2", "3/2")]
        rb = CorridorRobber(anchors)
        assert rb.place(l_hexagon, P(2, 1)) == P("1/2", "3/2")


class TestDiscreteOptimalRobber:
    def test_survival_matches_solver_on_vertices(self, l_hexagon):
        # cop on the reflex vertex dominates: capture value is finite
        st = GameState(l_hexagon, P(1, 1), P(2, 1), 0, [])
        mv = robber_discrete_optimal(st, list(l_hexagon.vertices))
        assert point_location(mv, l_hexagon) is not Location.EXTERIOR
