import itertools

import pytest

from linkpursuit.geom import visibility_graph
from linkpursuit.graphgame import (Graph, check_dismantle_certificate,
                                   check_two_dismantle_certificate, dismantle,
                                   dominates, solve_game, two_dismantle)


def complete(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestDominates:
    def test_complete(self):
        g = complete(4)
        for a, b in itertools.permutations(range(4), 2):
            assert dominates(g, a, b)

    def test_c4_opposite(self):
        g = cycle(4)
        assert not dominates(g, 0, 2)
        assert not dominates(g, 0, 1)

    def test_l_hexagon_center_dominates_all(self, l_hexagon):
        g = visibility_graph(l_hexagon)
        for v in range(6):
            assert dominates(g, 3, v)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            dominates(cycle(4), 0, 7)


class TestDismantle:
    def test_complete(self):
        cert = dismantle(complete(5))
        assert cert is not None
        assert check_dismantle_certificate(complete(5), cert)

    def test_c4_fails(self):
        assert dismantle(cycle(4)) is None

    def test_l_hexagon_visgraph(self, l_hexagon):
        g = visibility_graph(l_hexagon)
        cert = dismantle(g)
        assert cert is not None
        assert check_dismantle_certificate(g, cert)

    def test_checker_rejects_bogus(self):
        g = cycle(4)
        bogus = dismantle(complete(4))
        assert not check_dismantle_certificate(g, bogus)


class TestTwoDismantle:
    def test_k7(self):
        g = complete(7)
        cert = two_dismantle(g)
        assert cert is not None
        assert len(cert.pairs) == 1
        assert check_two_dismantle_certificate(g, cert)

    def test_c4_fails(self):
        assert two_dismantle(cycle(4)) is None

    def test_l_hexagon(self, l_hexagon):
        g = visibility_graph(l_hexagon)
        cert = two_dismantle(g)
        assert cert is not None
        assert check_two_dismantle_certificate(g, cert)


class TestSolveGame:
    def test_complete(self):
        sol = solve_game(complete(5))
        assert sol.cop_wins and sol.capture_time == 1

    def test_c4_robber_wins(self):
        sol = solve_game(cycle(4))
        assert not sol.cop_wins
        assert sol.capture_time is None

    def test_path_graph(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        sol = solve_game(g)
        assert sol.cop_wins
        assert sol.capture_time <= 2

    def test_l_hexagon_capture_from_dominating_vertex(self, l_hexagon):
        g = visibility_graph(l_hexagon)
        sol = solve_game(g)
        assert sol.cop_wins
        assert sol.capture_time <= 3
        # v3 dominates everything, so starting there captures in one move
        assert sol.capture_time == 1

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            solve_game(Graph(4, [(0, 1), (2, 3)]))


class TestEquivalenceSmall:
    def test_dismantlable_iff_copwin_n5(self):
        # exhaustive over all labeled connected graphs on 5 vertices
        pairs = list(itertools.combinations(range(5), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            g = Graph(5, edges)
            if not g.is_connected():
                continue
            assert (dismantle(g) is not None) == solve_game(g).cop_wins
