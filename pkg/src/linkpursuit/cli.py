"""Command-line interface tying the generators, solvers, and renderers
together.

Every subcommand writes JSON (or SVG with --format svg) to --out or stdout
and exits nonzero when a theorem-level diagnostic fires, so shell pipelines
can gate on clean runs.
"""

import argparse
import json
import sys

from . import svgout
from .geom import Polygon, visibility_graph
from .graphgame import Graph, dismantle, two_dismantle
from .harness import (FAMILIES, GeneratorSpec, anchors_for,
                      experiment_capture_bounds, generate)
from .pockets import maximal_pockets
from .pursuit import (CorridorRobber, DiscreteOptimalRobber, RandomRobber,
                      ShortestPathCop, run_polygon_game, verify_trace)
from .splinegon import (BayHopRobber, BoundaryCycleRobber,
                        RandomVisibleRobber, Splinegon, run_splinegon_game,
                        verify_spline_trace)


def _write(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _write(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _spec(args):
    return GeneratorSpec(args.family, args.size, seed=args.seed)


def _arena(args):
    if getattr(args, "infile", None):
        obj = _load_json(args.infile)
        if "vertices" in obj:
            return Polygon.from_json(obj)
        return Splinegon.from_json(obj)
    return generate(_spec(args))


def _add_source(sub, need_family=True):
    sub.add_argument("--in", dest="infile", help="input JSON file")
    sub.add_argument("--family", choices=FAMILIES,
                     required=False, default="RandomSimple")
    sub.add_argument("--size", type=int, default=10)
    sub.add_argument("--seed", type=int, default=0)


def _add_output(sub, formats=("json",)):
    sub.add_argument("--out", help="output path (default stdout)")
    sub.add_argument("--format", choices=list(formats), default=formats[0])


def cmd_gen(args):
    arena = _arena(args)
    if args.format == "svg":
        text = svgout.render_polygon(arena) if isinstance(arena, Polygon) \
            else svgout.render_splinegon(arena)
        _write(args, text)
    else:
        _emit_json(args, arena.to_json())
    return 0


def cmd_visgraph(args):
    arena = _arena(args)
    if not isinstance(arena, Polygon):
        raise SystemExit("visgraph needs a polygon arena")
    _emit_json(args, visibility_graph(arena).to_json())
    return 0


def cmd_dismantle(args):
    if args.infile:
        obj = _load_json(args.infile)
        if "vertices" in obj:
            g = visibility_graph(Polygon.from_json(obj))
        else:
            g = Graph.from_json(obj)
    else:
        g = visibility_graph(generate(_spec(args)))
    if args.two:
        cert = two_dismantle(g)
    else:
        cert = dismantle(g)
    if cert is None:
        _emit_json(args, {"dismantlable": False})
        return 1
    _emit_json(args, {"dismantlable": True, "certificate": cert.to_json()})
    return 0


def cmd_pockets(args):
    poly = _arena(args)
    pks = maximal_pockets(poly)
    if args.format == "svg":
        _write(args, svgout.render_pockets(poly, pks))
        return 0
    _emit_json(args, [{
        "u": pk.u, "v": pk.v, "t": pk.t.to_json(),
        "mouth": [pk.mouth[0].to_json(), pk.mouth[1].to_json()],
        "region": pk.region.to_json(),
    } for pk in pks])
    return 0


def _polygon_robber(args, poly):
    if args.robber == "corridor":
        return CorridorRobber(anchors_for(_spec(args)))
    if args.robber == "discrete":
        return DiscreteOptimalRobber()
    return RandomRobber(seed=str(args.seed))


def cmd_play(args):
    poly = _arena(args)
    trace = run_polygon_game(poly, ShortestPathCop(),
                             _polygon_robber(args, poly))
    probs = verify_trace(trace)
    if args.format == "svg":
        _write(args, svgout.render_polygon_trace(trace))
    else:
        out = trace.to_json()
        out["diagnostics"] = probs
        _emit_json(args, out)
    return 1 if probs else 0


def _spline_robber(args):
    if args.robber == "cycle":
        return BoundaryCycleRobber()
    if args.robber == "bay":
        return BayHopRobber()
    return RandomVisibleRobber(args.seed)


def cmd_splinegon_play(args):
    arena = _arena(args)
    if isinstance(arena, Polygon):
        raise SystemExit("splinegon-play needs a curved arena")
    trace = run_splinegon_game(arena, robber_strategy=_spline_robber(args))
    probs = verify_spline_trace(trace)
    if args.format == "svg":
        _write(args, svgout.render_splinegon_trace(trace))
    else:
        out = trace.to_json()
        out["diagnostics"] = probs
        _emit_json(args, out)
    return 1 if probs else 0


def cmd_experiment(args):
    sizes = [int(s) for s in args.sizes.split(",")]
    report = experiment_capture_bounds(args.family, sizes,
                                       trials=args.trials, seed=args.seed)
    _emit_json(args, report)
    return 1 if report["violations"] else 0


def cmd_render_svg(args):
    obj = _load_json(args.infile)
    if "vertices" in obj:
        text = svgout.render_polygon(Polygon.from_json(obj))
    elif "edges" in obj and "d" in obj:
        text = svgout.render_splinegon(Splinegon.from_json(obj))
    elif "polygon" in obj:
        from .pursuit import GameTrace  # noqa: F401 (shape check only)
        raise SystemExit("trace SVG: use play/splinegon-play --format svg")
    else:
        raise SystemExit("unrecognized JSON shape")
    _write(args, text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="linkpursuit")
    sp = ap.add_subparsers(dest="cmd", required=True)

    g = sp.add_parser("gen", help="generate an arena")
    _add_source(g)
    _add_output(g, ("json", "svg"))
    g.set_defaults(fn=cmd_gen)

    v = sp.add_parser("visgraph", help="vertex visibility graph")
    _add_source(v)
    _add_output(v)
    v.set_defaults(fn=cmd_visgraph)

    d = sp.add_parser("dismantle", help="dismantle a graph or a polygon's "
                                        "visibility graph")
    _add_source(d)
    _add_output(d)
    d.add_argument("--two", action="store_true",
                   help="remove two vertices per step")
    d.set_defaults(fn=cmd_dismantle)

    p = sp.add_parser("pockets", help="maximal pockets of a polygon")
    _add_source(p)
    _add_output(p, ("json", "svg"))
    p.set_defaults(fn=cmd_pockets)

    pl = sp.add_parser("play", help="run a polygon pursuit game")
    _add_source(pl)
    _add_output(pl, ("json", "svg"))
    pl.add_argument("--robber", choices=("corridor", "discrete", "random"),
                    default="discrete")
    pl.set_defaults(fn=cmd_play)

    spl = sp.add_parser("splinegon-play", help="run a curved-region game")
    _add_source(spl)
    _add_output(spl, ("json", "svg"))
    spl.add_argument("--robber", choices=("cycle", "bay", "random"),
                     default="bay")
    spl.set_defaults(fn=cmd_splinegon_play)

    ex = sp.add_parser("experiment", help="capture-bound sweeps")
    ex.add_argument("--family", choices=FAMILIES, required=True)
    ex.add_argument("--sizes", required=True, help="comma-separated sizes")
    ex.add_argument("--trials", type=int, default=1)
    ex.add_argument("--seed", type=int, default=0)
    _add_output(ex)
    ex.set_defaults(fn=cmd_experiment)

    rs = sp.add_parser("render-svg", help="render an arena JSON file")
    rs.add_argument("--in", dest="infile", required=True)
    _add_output(rs, ("svg",))
    rs.set_defaults(fn=cmd_render_svg)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
