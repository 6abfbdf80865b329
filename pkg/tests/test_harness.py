import itertools

import pytest

from linkpursuit.geom import Location, Point, point_location, sees
from linkpursuit.harness import (GeneratorSpec, anchors_for, corridor,
                                 corridor_anchors, experiment_capture_bounds,
                                 generate, random_simple, zigzag,
                                 zigzag_anchors)
from linkpursuit.pockets import maximal_pockets
from linkpursuit.pursuit import (CorridorRobber, ShortestPathCop,
                                 link_distance, run_polygon_game,
                                 verify_trace)


class TestZigzag:
    def test_vertex_count(self):
        for k in (2, 3, 7):
            assert zigzag(k).n == 4 * k

    def test_has_maximal_pockets(self):
        assert len(maximal_pockets(zigzag(3))) >= 2

    def test_anchor_chain_visibility(self):
        z = zigzag(4)
        a = zigzag_anchors(4)
        for i, j in itertools.combinations(range(len(a)), 2):
            assert sees(a[i], a[j], z) == (j == i + 1)

    def test_corridor_robber_survival(self):
        z = zigzag(5)
        tr = run_polygon_game(z, ShortestPathCop(),
                              CorridorRobber(zigzag_anchors(5)))
        assert tr.captured
        assert tr.capture_round >= z.n // 4 - 2
        assert verify_trace(tr) == []


class TestCorridor:
    def test_anchor_chain_visibility(self):
        c = corridor(6)
        a = corridor_anchors(6)
        for p in a:
            assert point_location(p, c) is Location.INTERIOR
        for i, j in itertools.combinations(range(len(a)), 2):
            assert sees(a[i], a[j], c) == (j == i + 1)

    def test_sampled_link_diameter_three(self):
        c = corridor(6)
        a = corridor_anchors(6)
        samples = [a[0], a[2], a[5], Point("3/2", "1/10"),
                   Point("21/2", "1/10")]
        ds = [link_distance(p, q, c)
              for p, q in itertools.combinations(samples, 2)]
        assert max(ds) == 3

    def test_corridor_robber_survival(self):
        k = 8
        c = corridor(k)
        tr = run_polygon_game(c, ShortestPathCop(),
                              CorridorRobber(corridor_anchors(k)))
        assert tr.captured
        assert tr.capture_round >= k // 2 - 1
        assert verify_trace(tr) == []


class TestRandomSimple:
    def test_deterministic(self):
        a = random_simple(12, 7)
        b = random_simple(12, 7)
        assert a.vertices == b.vertices

    def test_sizes_and_simplicity(self):
        for n in (6, 9, 14, 20):
            for seed in (0, 1):
                p = random_simple(n, seed)
                assert p.n == n  # constructor validated simplicity

    def test_distinct_seeds_differ(self):
        assert random_simple(10, 0).vertices != random_simple(10, 1).vertices


class TestGenerate:
    def test_dispatch(self):
        assert generate(GeneratorSpec("Zigzag", 3)).n == 12
        assert generate(GeneratorSpec("Corridor", 4)).n == 22
        assert generate(GeneratorSpec("RandomSimple", 8, seed=2)).n == 8

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            GeneratorSpec("Heptagon", 3)

    def test_anchors_for(self):
        assert len(anchors_for(GeneratorSpec("Zigzag", 4))) == 8
        assert len(anchors_for(GeneratorSpec("Corridor", 4))) == 4


class TestExperiments:
    def test_zigzag_sweep_clean(self):
        rep = experiment_capture_bounds("Zigzag", [3, 4], trials=1)
        assert rep["violations"] == []
        assert all(r["captured"] for r in rep["rows"])

    def test_random_simple_capture_within_n(self):
        rep = experiment_capture_bounds("RandomSimple", [8, 10], trials=2)
        assert rep["violations"] == []
        for r in rep["rows"]:
            assert r["rounds"] <= r["n"]
