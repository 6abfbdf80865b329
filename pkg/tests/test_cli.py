import json

import pytest

from linkpursuit import svgout
from linkpursuit.cli import main
from linkpursuit.harness import zigzag
from linkpursuit.pockets import maximal_pockets
from linkpursuit.splinegon import run_splinegon_game, star_region, \
    BayHopRobber


def run(tmp_path, *argv, name="out"):
    out = tmp_path / name
    code = main(list(argv) + ["--out", str(out)])
    return code, out.read_text()


class TestCli:
    def test_gen_polygon_json(self, tmp_path):
        code, text = run(tmp_path, "gen", "--family", "Zigzag", "--size", "3")
        assert code == 0
        assert len(json.loads(text)["vertices"]) == 12

    def test_gen_splinegon_json(self, tmp_path):
        code, text = run(tmp_path, "gen", "--family", "Stadium")
        obj = json.loads(text)
        assert code == 0 and obj["d"] == 1 and len(obj["edges"]) == 6

    def test_gen_svg(self, tmp_path):
        code, text = run(tmp_path, "gen", "--family", "RandomSimple",
                         "--size", "8", "--seed", "1", "--format", "svg")
        assert code == 0 and text.startswith("<svg")

    def test_visgraph(self, tmp_path):
        code, text = run(tmp_path, "visgraph", "--family", "Zigzag",
                         "--size", "2")
        obj = json.loads(text)
        assert code == 0 and obj["n"] == 8

    def test_dismantle_two(self, tmp_path):
        code, text = run(tmp_path, "dismantle", "--two", "--family",
                         "RandomSimple", "--size", "8", "--seed", "0")
        obj = json.loads(text)
        assert code == 0 and obj["dismantlable"]

    def test_dismantle_failure_exit_code(self, tmp_path):
        cyc = {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}
        src = tmp_path / "c4.json"
        src.write_text(json.dumps(cyc))
        code, text = run(tmp_path, "dismantle", "--in", str(src))
        assert code == 1 and not json.loads(text)["dismantlable"]

    def test_pockets_json(self, tmp_path):
        code, text = run(tmp_path, "pockets", "--family", "Zigzag",
                         "--size", "3")
        assert code == 0 and len(json.loads(text)) >= 2

    def test_play_clean(self, tmp_path):
        code, text = run(tmp_path, "play", "--family", "Zigzag",
                         "--size", "3", "--robber", "corridor")
        obj = json.loads(text)
        assert code == 0 and obj["captured"] and obj["diagnostics"] == []

    def test_splinegon_play_clean(self, tmp_path):
        code, text = run(tmp_path, "splinegon-play", "--family",
                         "GodfriedRegion", "--size", "4", "--robber", "bay")
        obj = json.loads(text)
        assert code == 0 and obj["captured"] and obj["diagnostics"] == []

    def test_experiment_exit_zero(self, tmp_path):
        code, text = run(tmp_path, "experiment", "--family", "Zigzag",
                         "--sizes", "3,4")
        assert code == 0 and json.loads(text)["violations"] == []

    def test_render_svg_round_trip(self, tmp_path):
        _, text = run(tmp_path, "gen", "--family", "Stadium", name="a.json")
        src = tmp_path / "a.json"
        code, svg = run(tmp_path, "render-svg", "--in", str(src), name="a.svg")
        assert code == 0 and svg.startswith("<svg") and "A " in svg


class TestSvg:
    def test_pocket_overlay_has_mouth_lines(self):
        z = zigzag(3)
        pks = maximal_pockets(z)
        svg = svgout.render_pockets(z, pks)
        assert svg.count("polyline") >= len(pks)

    def test_spline_trace_overlays(self):
        tr = run_splinegon_game(star_region(4),
                                robber_strategy=BayHopRobber())
        svg = svgout.render_splinegon_trace(tr)
        rounds = [r for r in tr.rounds if r is not None]
        assert svg.count("stroke-dasharray") >= len(rounds)
        assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
