"""The continuous pursuit game inside a simple polygon.

Euclidean shortest paths (turning only at reflex vertices), link distance,
the shortest-path cop strategy with its active-region bookkeeping, several
robber strategies, and the round-by-round game loop producing replayable
traces.
"""

import json
from dataclasses import dataclass, field
from enum import Enum

from mpmath import mp

from .geom import (GeometryError, Location, Orient, Point, dist2, orient,
                   point_location, scalar, sees, visibility_polygon,
                   _line_intersect, _ray_edge_hits, _segment_boundary_params,
                   _seg_param)
from . import graphgame


class RuleViolation(Exception):
    """A strategy returned an illegal move (target not visible)."""


class Metric(Enum):
    EUCLIDEAN = "euclidean"
    LINK = "link"


@dataclass
class PathResult:
    waypoints: list
    metric: Metric
    length: object    # float for Euclidean, int for link

    def to_json(self):
        return {"waypoints": [p.to_json() for p in self.waypoints],
                "metric": self.metric.value,
                "length": self.length}


@dataclass
class GameState:
    polygon: object
    cop: Point
    robber: Point
    round: int
    history: list
    captured: bool = False


@dataclass
class ActiveRegion:
    cut: tuple           # (start point, terminal boundary point)
    region: object       # Polygon piece containing the robber
    vertex_count: int    # original polygon vertices on the piece
    flagged: bool = False  # terminal at a vertex with a collinear edge

    def to_json(self):
        return {"cut": [self.cut[0].to_json(), self.cut[1].to_json()],
                "region": self.region.to_json(),
                "vertexCount": self.vertex_count,
                "flagged": self.flagged}


# ---------------------------------------------------------------------------
# Euclidean shortest paths


_BASE_DPS = 60
_HIGH_DPS = 220
_TIE = mp.mpf("1e-40")


def _to_mpf(q):
    from fractions import Fraction
    f = Fraction(q)
    return mp.mpf(f.numerator) / mp.mpf(f.denominator)


def _path_length(points, dps):
    with mp.workdps(dps):
        total = mp.mpf(0)
        for a, b in zip(points, points[1:]):
            total += mp.sqrt(_to_mpf(dist2(a, b)))
    return total


def _reflex_vis_pairs(poly):
    """Mutually visible reflex-vertex index pairs, cached per polygon."""
    cached = poly._cache.get("reflex_vis")
    if cached is not None:
        return cached
    refl = poly.reflex_indices()
    vs = poly.vertices
    pairs = set()
    for a in range(len(refl)):
        for b in range(a + 1, len(refl)):
            i, j = refl[a], refl[b]
            if sees(vs[i], vs[j], poly):
                pairs.add((i, j))
    result = (refl, pairs)
    poly._cache["reflex_vis"] = result
    return result


def shortest_path(s, t, poly):
    """Globally shortest Euclidean path from s to t inside poly.

    Interior waypoints are reflex vertices.  Ties between equal-length paths
    are broken by lexicographic waypoint order so traces are deterministic.
    """
    for p in (s, t):
        if point_location(p, poly) is Location.EXTERIOR:
            raise GeometryError("shortest_path endpoint outside polygon")
    if s == t:
        return PathResult([s], Metric.EUCLIDEAN, 0.0)
    if sees(s, t, poly):
        return PathResult([s, t], Metric.EUCLIDEAN,
                          float(_path_length([s, t], _BASE_DPS)))

    refl, pairs = _reflex_vis_pairs(poly)
    vs = poly.vertices
    nodes = [s, t] + [vs[i] for i in refl]
    adj = {k: [] for k in range(len(nodes))}
    for a in range(len(refl)):
        for b in range(a + 1, len(refl)):
            i, j = refl[a], refl[b]
            if (i, j) in pairs:
                adj[2 + a].append(2 + b)
                adj[2 + b].append(2 + a)
    for k, p in ((0, s), (1, t)):
        for a in range(len(refl)):
            if sees(p, vs[refl[a]], poly):
                adj[k].append(2 + a)
                adj[2 + a].append(k)

    weight = {}
    with mp.workdps(_BASE_DPS):
        for u in adj:
            for v in adj[u]:
                if (u, v) not in weight:
                    w = mp.sqrt(_to_mpf(dist2(nodes[u], nodes[v])))
                    weight[(u, v)] = w
                    weight[(v, u)] = w

    best = {0: (mp.mpf(0), (0,))}
    for _ in range(len(nodes) + 1):
        changed = False
        for u in sorted(best):
            du, pu = best[u]
            for v in adj[u]:
                cand = (du + weight[(u, v)], pu + (v,))
                cur = best.get(v)
                if cur is None or _path_better(cand, cur, nodes):
                    best[v] = cand
                    changed = True
        if not changed:
            break
    if 1 not in best:
        raise GeometryError("no path found (polygon disconnected?)")
    _, path = best[1]
    waypoints = [nodes[k] for k in path]
    return PathResult(waypoints, Metric.EUCLIDEAN,
                      float(_path_length(waypoints, _HIGH_DPS)))


def _path_better(cand, cur, nodes):
    diff = cand[0] - cur[0]
    if diff < -_TIE:
        return True
    if diff > _TIE:
        return False
    # near-tie: re-evaluate both at high precision, then lexicographic
    la = _path_length([nodes[k] for k in cand[1]], _HIGH_DPS)
    lb = _path_length([nodes[k] for k in cur[1]], _HIGH_DPS)
    d = la - lb
    with mp.workdps(_HIGH_DPS):
        tiny = mp.mpf("1e-150")
    if d < -tiny:
        return True
    if d > tiny:
        return False
    # exact tie: fewest waypoints (drops collinear pass-through chains),
    # then lexicographic for determinism
    return (len(cand[1]), cand[1]) < (len(cur[1]), cur[1])


# ---------------------------------------------------------------------------
# link distance


def _region_boundary_segments(region):
    segs = []
    b = region.boundary
    for k in range(len(b)):
        a, c = b[k], b[(k + 1) % len(b)]
        if a != c:
            segs.append((a, c))
    segs.extend(region.spurs)
    return segs


def _region_candidate_points(*regions):
    pts = set()
    for r in regions:
        pts.update(r.boundary)
        for a, b in r.spurs:
            pts.add(a)
            pts.add(b)
    # pairwise boundary crossings between distinct regions
    for i in range(len(regions)):
        for j in range(i + 1, len(regions)):
            for a, b in _region_boundary_segments(regions[i]):
                for c, d in _region_boundary_segments(regions[j]):
                    o1, o2 = orient(a, b, c), orient(a, b, d)
                    if o1 is Orient.COLLINEAR and o2 is Orient.COLLINEAR:
                        for q in (c, d):
                            from .geom import on_segment
                            if on_segment(a, b, q):
                                pts.add(q)
                        continue
                    if o1 is o2:
                        continue
                    o3, o4 = orient(c, d, a), orient(c, d, b)
                    if o3 is o4 and o3 is not Orient.COLLINEAR:
                        continue
                    q = _line_intersect(a, b, c, d)
                    from .geom import on_segment
                    if q is not None and on_segment(a, b, q) and \
                            on_segment(c, d, q):
                        pts.add(q)
    return pts


def _two_link_witness(s, t, poly, vs_region=None, vt_region=None):
    """A point seeing both s and t, or None (exact)."""
    vs_region = vs_region or visibility_polygon(s, poly)
    vt_region = vt_region or visibility_polygon(t, poly)
    for w in sorted(_region_candidate_points(vs_region, vt_region)):
        if point_location(w, poly) is Location.EXTERIOR:
            continue
        if sees(s, w, poly) and sees(w, t, poly):
            return w
    return None


def link_distance(s, t, poly, candidate_cap=20000):
    """Minimum number of segments of a polygonal path in poly from s to t.

    Distances 0, 1, 2 and the certificate that the answer exceeds 2 are
    exact; answers of 3 or more come from a search over pinned candidate
    points (polygon vertices, visibility-region features, and intersections
    of critical lines), capped loudly at candidate_cap.
    """
    for p in (s, t):
        if point_location(p, poly) is Location.EXTERIOR:
            raise GeometryError("link_distance endpoint outside polygon")
    if s == t:
        return 0
    if sees(s, t, poly):
        return 1
    vs_region = visibility_polygon(s, poly)
    vt_region = visibility_polygon(t, poly)
    if _two_link_witness(s, t, poly, vs_region, vt_region) is not None:
        return 2

    # cheap three-link witness: region features as middle-segment endpoints
    feats = set(poly.vertices) | _region_candidate_points(vs_region) \
        | _region_candidate_points(vt_region)
    feats = [w for w in sorted(feats)
             if point_location(w, poly) is not Location.EXTERIOR]
    ws = [w for w in feats if sees(s, w, poly)]
    wt = [w for w in feats if sees(w, t, poly)]
    for w1 in ws:
        for w2 in wt:
            if sees(w1, w2, poly):
                return 3

    # full search over pinned-line intersection candidates
    cands = _pinned_candidates(s, t, poly, candidate_cap)
    level = {s: 0}
    frontier = [s]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for w in cands:
            if w in level:
                continue
            if any(sees(u, w, poly) for u in frontier):
                level[w] = d
                nxt.append(w)
        if any(sees(u, t, poly) for u in frontier):
            return d
        frontier = nxt
    raise GeometryError("link_distance: candidate search exhausted")


def _pinned_candidates(s, t, poly, cap):
    vs = poly.vertices
    lines = []
    for a, b in poly.edges():
        lines.append((a, b))
    refl, pairs = _reflex_vis_pairs(poly)
    for i, j in pairs:
        lines.append((vs[i], vs[j]))
    for p in (s, t):
        for i in refl:
            if sees(p, vs[i], poly):
                lines.append((p, vs[i]))
    pts = set(vs) | {s, t}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            q = _line_intersect(*lines[i], *lines[j])
            if q is not None and \
                    point_location(q, poly) is not Location.EXTERIOR:
                pts.add(q)
            if len(pts) > cap:
                raise GeometryError("link_distance candidate cap exceeded")
    return sorted(pts)


# ---------------------------------------------------------------------------
# the shortest-path cop and its active regions


def cop_move_shortest_path(state):
    """First step of the cop's shortest path to the robber; the robber's own
    point when visible (capture)."""
    if sees(state.cop, state.robber, state.polygon):
        return state.robber
    path = shortest_path(state.cop, state.robber, state.polygon)
    return path.waypoints[1]


def _local_boundary_neighbors(poly, q):
    """Points adjacent to q along the boundary (q must be on the boundary)."""
    vs = poly.vertices
    n = poly.n
    for k in range(n):
        if vs[k] == q:
            return [vs[(k - 1) % n], vs[(k + 1) % n]]
    from .geom import on_segment
    out = []
    for a, b in poly.edges():
        if on_segment(a, b, q) and q != a and q != b:
            out.extend([a, b])
    return out


def active_region(prev_state, new_cop):
    """Active region after the cop's move to new_cop (a reflex vertex).

    The cut starts at new_cop, runs through the previous cop position, and
    ends at the first boundary point where the boundary strictly crosses to
    the turn side of the ray; the region is the piece of the polygon split
    by the cut that contains the robber.
    """
    poly = prev_state.polygon
    c_prev, r = prev_state.cop, prev_state.robber
    if sees(c_prev, r, poly):
        raise GeometryError("degenerate cut: cop already sees the robber")
    path = shortest_path(c_prev, r, poly)
    if path.waypoints[1] != new_cop:
        raise GeometryError("new_cop is not the strategy's move")
    nxt = path.waypoints[2] if len(path.waypoints) > 2 else r
    turn = orient(c_prev, new_cop, nxt)
    if turn is Orient.COLLINEAR:
        raise GeometryError("degenerate cut: path does not turn at new_cop")
    side = Orient.LEFT if turn is Orient.LEFT else Orient.RIGHT

    dx, dy = c_prev.x - new_cop.x, c_prev.y - new_cop.y
    hits = sorted({tt for tt, _ in _ray_edge_hits(new_cop, dx, dy, poly)
                   if tt >= 1})
    far = Point(new_cop.x + dx, new_cop.y + dy)
    terminal = None
    flagged = False
    half = scalar(1) / 2
    for k, tt in enumerate(hits):
        q = Point(new_cop.x + tt * dx, new_cop.y + tt * dy)
        nbrs = _local_boundary_neighbors(poly, q)
        sides = [orient(new_cop, far, w) for w in nbrs]
        if side in sides:
            terminal = q
            flagged = Orient.COLLINEAR in sides and any(
                vv == q for vv in poly.vertices)
            break
        # ray leaving the polygon without a strict crossing to `side`
        if k + 1 < len(hits):
            tm = (tt + hits[k + 1]) * half
            m = Point(new_cop.x + tm * dx, new_cop.y + tm * dy)
            if point_location(m, poly) is Location.EXTERIOR:
                terminal = q
                break
        else:
            terminal = q
    if terminal is None:  # pragma: no cover - defensive
        raise GeometryError("cut never reached the boundary")

    pieces = split_by_chord(poly, new_cop, terminal)
    region = _piece_containing(pieces, r)
    originals = set(poly.vertices)
    count = len({v for v in region.vertices if v in originals})
    return ActiveRegion((new_cop, terminal), region, count, flagged)


def split_by_chord(poly, a, b):
    """Pieces of poly cut along segment ab (both endpoints on the boundary).

    Portions of ab that run along the boundary do not cut; each interior
    portion splits the piece it lies in.  Pieces may be weakly simple.
    """
    from .geom import Polygon, on_segment

    ts = _segment_boundary_params(a, b, poly)
    contacts = [Point(a.x + tt * (b.x - a.x), a.y + tt * (b.y - a.y))
                for tt in ts]
    # augmented vertex cycle: insert contact points on their edges
    cycle = []
    for i in range(poly.n):
        ea, eb = poly.edge(i)
        cycle.append(ea)
        onedge = [q for q in contacts
                  if on_segment(ea, eb, q) and q != ea and q != eb]
        onedge.sort(key=lambda q: _seg_param(ea, eb, q))
        cycle.extend(onedge)
    dedup = []
    for q in cycle:
        if not dedup or dedup[-1] != q:
            dedup.append(q)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    pieces = [dedup]

    half = scalar(1) / 2
    for t0, t1 in zip(ts, ts[1:]):
        m = Point(a.x + (t0 + t1) * half * (b.x - a.x),
                  a.y + (t0 + t1) * half * (b.y - a.y))
        if point_location(m, poly) is not Location.INTERIOR:
            continue
        q0 = Point(a.x + t0 * (b.x - a.x), a.y + t0 * (b.y - a.y))
        q1 = Point(a.x + t1 * (b.x - a.x), a.y + t1 * (b.y - a.y))
        for idx, cyc in enumerate(pieces):
            if q0 in cyc and q1 in cyc:
                i0, i1 = cyc.index(q0), cyc.index(q1)
                if i0 == i1:
                    continue
                if i0 < i1:
                    first = cyc[i0:i1 + 1]
                    second = cyc[i1:] + cyc[:i0 + 1]
                else:
                    first = cyc[i0:] + cyc[:i1 + 1]
                    second = cyc[i1:i0 + 1]
                pieces[idx:idx + 1] = [first, second]
                break

    out = []
    for cyc in pieces:
        if len(cyc) < 3:
            continue
        from .geom import _signed_area2
        if _signed_area2(cyc) <= 0:
            continue
        out.append(Polygon(cyc, validate=False))
    return out


def _piece_containing(pieces, p):
    interior = [pc for pc in pieces
                if point_location(p, pc) is Location.INTERIOR]
    if interior:
        return interior[0]
    boundary = [pc for pc in pieces
                if point_location(p, pc) is Location.BOUNDARY]
    if not boundary:
        raise GeometryError("no piece contains the robber")
    return max(boundary, key=lambda pc: pc.area2())


# ---------------------------------------------------------------------------
# strategies


class ShortestPathCop:
    """Moves along the first segment of the shortest path to the robber."""

    tracks_regions = True

    def place(self, poly):
        return poly.vertices[0]

    def move(self, state):
        return cop_move_shortest_path(state)


class CorridorRobber:
    """Plays on a fixed anchor chain: stationary until the cop is visible,
    then hops to an adjacent anchor the cop cannot see."""

    def __init__(self, anchors):
        self.anchors = list(anchors)

    def place(self, poly, cop):
        k = len(self.anchors) // 2
        safe = [i for i, a in enumerate(self.anchors)
                if not sees(cop, a, poly)]
        if not safe:
            return self.anchors[k]
        return self.anchors[min(safe, key=lambda i: (abs(i - k), i))]

    def move(self, state):
        poly = state.polygon
        i = self.anchors.index(state.robber)
        if not sees(state.cop, self.anchors[i], poly):
            return self.anchors[i]
        nbrs = [j for j in (i - 1, i + 1) if 0 <= j < len(self.anchors)]
        safe = [j for j in nbrs if not sees(state.cop, self.anchors[j], poly)]
        if not safe:
            return self.anchors[i]  # trapped at a chain end
        if len(safe) == 2:
            safe.sort(key=lambda j: (dist2(state.cop, self.anchors[j]), -j))
            return self.anchors[safe[-1]]
        return self.anchors[safe[0]]


def robber_discrete_optimal(state, sample_set):
    """The robber move maximizing solver-computed survival on the finite
    visibility game over sample_set plus both players' positions."""
    poly = state.polygon
    pts = []
    for p in list(sample_set) + [state.robber, state.cop]:
        if p not in pts:
            pts.append(p)
    idx = {p: k for k, p in enumerate(pts)}
    edges = []
    for a in range(len(pts)):
        for b in range(a + 1, len(pts)):
            if sees(pts[a], pts[b], poly):
                edges.append((a, b))
    g = graphgame.Graph(len(pts), edges)
    if not g.is_connected():
        return state.robber
    sol = graphgame.solve_game(g)
    c = idx[state.cop]
    r = idx[state.robber]
    moves = [r] + [w for w in g.adj[r]]
    best = max(moves, key=lambda w: (sol.state_values[(c, w)]
                                     if w != c else -1, pts[w]))
    return pts[best]


class DiscreteOptimalRobber:
    """Adversarial baseline: plays the solver-optimal move on the finite
    visibility game restricted to a sample set (default: the vertices)."""

    def __init__(self, sample_set=None):
        self.sample_set = sample_set

    def _samples(self, poly):
        if self.sample_set is not None:
            return list(self.sample_set)
        return list(poly.vertices)

    def place(self, poly, cop):
        pts = self._samples(poly)
        hidden = [p for p in pts if p != cop and not sees(cop, p, poly)]
        if hidden:
            return sorted(hidden)[0]
        far = [p for p in pts if p != cop]
        if not far:
            return cop
        return max(far, key=lambda p: (dist2(cop, p), p))

    def move(self, state):
        return robber_discrete_optimal(state, self._samples(state.polygon))


class RandomRobber:
    """Uniformly random legal moves over polygon vertices, seeded."""

    def __init__(self, seed=0):
        import random
        self.rng = random.Random(seed)

    def place(self, poly, cop):
        hidden = [p for p in poly.vertices
                  if p != cop and not sees(cop, p, poly)]
        pool = hidden or [p for p in poly.vertices if p != cop] or [cop]
        return self.rng.choice(sorted(pool))

    def move(self, state):
        poly = state.polygon
        pool = [p for p in poly.vertices
                if p != state.cop and sees(state.robber, p, poly)]
        pool.append(state.robber)
        return self.rng.choice(sorted(pool))


# ---------------------------------------------------------------------------
# game loop and traces


@dataclass
class GameTrace:
    polygon: object
    cop_start: Point
    robber_start: Point
    moves: list = field(default_factory=list)   # (cop, robber) per round
    captured: bool = False
    capture_round: object = None
    active_regions: list = field(default_factory=list)  # per round or None
    turns: list = field(default_factory=list)   # Orient per round or None
    unterminated: bool = False

    def rounds_used(self):
        return len(self.moves)

    def to_json(self):
        return {
            "polygon": self.polygon.to_json(),
            "copStart": self.cop_start.to_json(),
            "robberStart": self.robber_start.to_json(),
            "moves": [[c.to_json(), r.to_json()] for c, r in self.moves],
            "captured": self.captured,
            "captureRound": self.capture_round,
            "activeRegions": [ar.to_json() if ar is not None else None
                              for ar in self.active_regions],
            "turns": [t.value if t is not None else None
                      for t in self.turns],
            "unterminated": self.unterminated,
        }

    def to_canonical_json(self):
        return json.dumps(self.to_json(), sort_keys=True,
                          separators=(",", ":"))


def run_polygon_game(poly, cop_strategy, robber_strategy, max_rounds=None):
    """Play the game round by round (cop moves first) and return the trace.

    Moves are validated: each player may only move to a point visible from
    its current position.  Active regions and turn directions are logged
    when the cop strategy advertises tracks_regions.
    """
    if max_rounds is None:
        max_rounds = 4 * poly.n
    c = cop_strategy.place(poly)
    r = robber_strategy.place(poly, c)
    trace = GameTrace(poly, c, r)
    if c == r:
        trace.captured = True
        trace.capture_round = 0
        return trace
    history = [(c, r)]
    track = getattr(cop_strategy, "tracks_regions", False)

    for i in range(1, max_rounds + 1):
        state = GameState(poly, c, r, i - 1, list(history))
        new_c = cop_strategy.move(state)
        if not sees(c, new_c, poly):
            raise RuleViolation("cop move not visible from its position")
        ar = None
        turn = None
        if track and not sees(c, r, poly):
            ar = active_region(state, new_c)
            path = shortest_path(c, r, poly)
            nxt = path.waypoints[2] if len(path.waypoints) > 2 else r
            turn = orient(c, new_c, nxt)
        trace.active_regions.append(ar)
        trace.turns.append(turn)
        if new_c == r:
            trace.moves.append((new_c, r))
            trace.captured = True
            trace.capture_round = i
            return trace
        mid = GameState(poly, new_c, r, i, list(history))
        new_r = robber_strategy.move(mid)
        if not sees(r, new_r, poly):
            raise RuleViolation("robber move not visible from its position")
        trace.moves.append((new_c, new_r))
        if new_r == new_c:
            trace.captured = True
            trace.capture_round = i
            return trace
        c, r = new_c, new_r
        history.append((c, r))

    trace.unterminated = True
    return trace


def verify_trace(trace):
    """Check the invariants the shortest-path cop guarantees.

    Returns a list of human-readable violations (empty when clean).
    """
    out = []
    poly = trace.polygon
    n = poly.n
    if trace.captured:
        if trace.capture_round is not None and trace.capture_round > n:
            out.append("capture took %d rounds on %d vertices"
                       % (trace.capture_round, n))
    else:
        out.append("trace unterminated after %d rounds" % trace.rounds_used())

    counts = [ar.vertex_count for ar in trace.active_regions
              if ar is not None]
    for a, b in zip(counts, counts[1:]):
        if b >= a:
            out.append("active-region vertex count %d -> %d did not"
                       " strictly decrease" % (a, b))
            break

    # robber containment: each logged region holds the robber it was cut for
    robbers = [trace.robber_start] + [r for _, r in trace.moves]
    for k, ar in enumerate(trace.active_regions):
        if ar is None:
            continue
        if point_location(robbers[k], ar.region) is Location.EXTERIOR:
            out.append("round %d: robber outside its active region" % (k + 1))

    out.extend(case_1b_violations(trace))
    return out


def case_1b_violations(trace):
    """Rounds where two same-direction turns fail to stay on the turn side:
    after a left turn at c_i followed by a left turn at c_{i+1}, c_{i+1}
    must be strictly left of ray c_{i-1} c_i (mirrored for right turns)."""
    cops = [trace.cop_start] + [c for c, _ in trace.moves]
    out = []
    for i in range(1, len(trace.turns)):
        t_prev, t_cur = trace.turns[i - 1], trace.turns[i]
        if t_prev is None or t_cur is None or t_prev is not t_cur:
            continue
        o = orient(cops[i - 1], cops[i], cops[i + 1])
        if o is not t_prev:
            out.append("round %d: consecutive %s turns but the new corner is"
                       " not strictly on that side" % (i + 1, t_prev.name))
    return out
