"""Instance generators and experiment drivers.

Polygon families:

* Zigzag(k): a skinny zig-zag corridor with k upward spikes (bases on y=0,
  tips alternating near y=1), 4k vertices.  The robber anchor chain runs
  along the corridor's center line; each anchor sees only its two chain
  neighbors.
* Corridor(k): k open chambers in a 2k-by-3 box separated by thin
  floor/ceiling spike pairs whose tips leave a narrow window around y=1.
  Anchor levels alternate 1 +- 1/8 while the window half-aperture is 1/16,
  so straight lines can thread at most two windows; the line y=1 threads
  them all, keeping the link diameter at 3.
* RandomSimple(n): random lattice points untangled into a simple polygon by
  2-opt edge uncrossing.

All generators are deterministic functions of (family, size, seed,
perturbation).
"""

import random
from dataclasses import dataclass

from .geom import GeometryError, Point, Polygon, scalar, _signed_area2, \
    _segments_touch, on_segment
from .pursuit import (CorridorRobber, DiscreteOptimalRobber, RandomRobber,
                      ShortestPathCop, run_polygon_game, verify_trace)

FAMILIES = ("Zigzag", "Corridor", "RandomSimple", "Stadium",
            "CurvedTriangle", "Crescent", "GodfriedRegion")


@dataclass
class GeneratorSpec:
    family: str
    size: int
    seed: int = 0
    perturbation: object = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family: %s" % self.family)


def generate(spec):
    """Build the instance described by spec (Polygon or Splinegon)."""
    if spec.family == "Zigzag":
        return zigzag(spec.size)
    if spec.family == "Corridor":
        return corridor(spec.size)
    if spec.family == "RandomSimple":
        return random_simple(spec.size, spec.seed)
    from . import splinegon
    return splinegon.generate_scene(spec.family, spec.size, spec.seed)


def zigzag(k):
    """Skinny zig-zag polygon with k spikes and exactly 4k vertices."""
    if k < 2:
        raise ValueError("zigzag needs k >= 2")
    w = scalar(1) / 8
    delta = scalar(1) / 8
    heights = []
    for j in range(2 * k):
        if j % 2 == 0:
            heights.append(scalar(0))
        else:
            heights.append(scalar(1) + (delta if j % 4 == 3 else 0))
    lower = [Point(j, heights[j] - w) for j in range(2 * k)]
    upper = [Point(j, heights[j] + w) for j in range(2 * k)]
    return Polygon(lower + list(reversed(upper)))


def zigzag_anchors(k):
    """The robber's anchor chain: the corridor's bend points."""
    delta = scalar(1) / 8
    out = []
    for j in range(2 * k):
        h = scalar(0) if j % 2 == 0 else \
            scalar(1) + (delta if j % 4 == 3 else 0)
        out.append(Point(j, h))
    return out


def corridor(k, perturbation=None):
    """Constant-link-diameter corridor with k chambers.

    Chambers are 2 wide and 3 tall; between chambers a floor spike and a
    ceiling spike leave a window of half-aperture 1/16 around y=1.  The
    anchor levels alternate by the perturbation (default 5/32): anything
    strictly above twice the aperture keeps a cop at a window tip from
    seeing past the adjacent chamber, and no line threads three windows.
    """
    if k < 2:
        raise ValueError("corridor needs k >= 2")
    gamma = scalar(1) / 16
    beta = scalar(1) / 4
    bottom = [Point(0, 0)]
    for i in range(1, k):
        x = scalar(2 * i)
        bottom += [Point(x - beta, 0), Point(x, 1 - gamma), Point(x + beta, 0)]
    bottom.append(Point(2 * k, 0))
    top = [Point(2 * k, 3)]
    for i in range(k - 1, 0, -1):
        x = scalar(2 * i)
        top += [Point(x + beta, 3), Point(x, 1 + gamma), Point(x - beta, 3)]
    top.append(Point(0, 3))
    return Polygon(bottom + top)


def corridor_anchors(k, perturbation=None):
    """One anchor per chamber, levels alternating 1 +- perturbation."""
    delta = scalar(perturbation) if perturbation is not None else \
        scalar(5) / 32
    return [Point(2 * i - 1, 1 + (delta if i % 2 == 0 else -delta))
            for i in range(1, k + 1)]


def random_simple(n, seed, span=None, max_passes=None):
    """Random simple polygon on n distinct lattice points, by 2-opt
    uncrossing; deterministic per seed."""
    if n < 3:
        raise ValueError("need n >= 3")
    span = span or 3 * n
    rng = random.Random("random-simple:%d:%d" % (seed, n))
    for attempt in range(50):
        pts = set()
        while len(pts) < n:
            pts.add((rng.randrange(span + 1), rng.randrange(span + 1)))
        order = [Point(x, y) for x, y in sorted(pts)]
        rng.shuffle(order)
        poly = _untangle(order, max_passes or 6 * n * n)
        if poly is not None:
            return poly
    raise GeometryError("random_simple failed to untangle after 50 attempts")


def _untangle(order, max_passes):
    vs = list(order)
    n = len(vs)
    if _signed_area2(vs) < 0:
        vs.reverse()
    for _ in range(max_passes):
        bad = _find_conflict(vs)
        if bad is None:
            try:
                return Polygon(vs)
            except GeometryError:
                return None
        i, j = bad
        vs[i + 1:j + 1] = reversed(vs[i + 1:j + 1])
        if _signed_area2(vs) < 0:
            vs.reverse()
    return None


def _find_conflict(vs):
    n = len(vs)
    for i in range(n):
        a1, a2 = vs[i], vs[(i + 1) % n]
        for j in range(i + 1, n):
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            b1, b2 = vs[j], vs[(j + 1) % n]
            if adjacent:
                shared = a2 if j == i + 1 else a1
                other_a = a1 if j == i + 1 else a2
                other_b = b2 if j == i + 1 else b1
                if (on_segment(b1, b2, other_a) and other_a != shared) or \
                        (on_segment(a1, a2, other_b) and other_b != shared):
                    return (i, j) if j == i + 1 else (0, n - 1)
            elif _segments_touch(a1, a2, b1, b2):
                return i, j
    return None


def anchors_for(spec):
    if spec.family == "Zigzag":
        return zigzag_anchors(spec.size)
    if spec.family == "Corridor":
        return corridor_anchors(spec.size, spec.perturbation)
    raise ValueError("no anchor chain for family %s" % spec.family)


# ---------------------------------------------------------------------------
# experiments


def _robber_for(spec, poly, trial):
    if spec.family in ("Zigzag", "Corridor"):
        return "corridor", CorridorRobber(anchors_for(spec))
    if trial % 2 == 0:
        return "discrete-optimal", DiscreteOptimalRobber()
    return "random", RandomRobber(seed="%d:%d" % (spec.seed, trial))


def experiment_capture_bounds(family, sizes, trials=1, seed=0):
    """Run the shortest-path cop against family-appropriate robbers and
    check the capture/survival bounds; returns a report dict with one row
    per game and the list of bound violations."""
    rows = []
    violations = []
    for size in sizes:
        spec = GeneratorSpec(family, size, seed)
        poly = generate(spec)
        for trial in range(trials):
            name, robber = _robber_for(spec, poly, trial)
            trace = run_polygon_game(poly, ShortestPathCop(), robber)
            row = {
                "family": family,
                "size": size,
                "n": poly.n,
                "trial": trial,
                "robber": name,
                "captured": trace.captured,
                "rounds": trace.capture_round if trace.captured
                else trace.rounds_used(),
            }
            probs = verify_trace(trace)
            if family == "Zigzag":
                floor = poly.n // 4 - 2
                row["survivalBound"] = floor
                if trace.captured and trace.capture_round < floor:
                    probs.append("zigzag survival %d below bound %d"
                                 % (trace.capture_round, floor))
            if family == "Corridor":
                floor = size // 2 - 1
                row["survivalBound"] = floor
                if trace.captured and trace.capture_round < floor:
                    probs.append("corridor survival %d below bound %d"
                                 % (trace.capture_round, floor))
            row["violations"] = probs
            rows.append(row)
            violations.extend("%s(%d) trial %d: %s" % (family, size, trial, p)
                              for p in probs)
    return {"rows": rows, "violations": violations}
