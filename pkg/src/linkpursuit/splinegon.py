"""Pursuit in curved regions bounded by circular-arc splines.

A splinegon here is a simple closed chain of straight segments and circular
arcs, each arc spanning less than 180 degrees.  Everything in this module
runs in double precision with one global tolerance EPS; all fuzzy
comparisons go through the tiny predicate layer below so the tolerance is
auditable in one place.
"""

import math
import random
from dataclasses import dataclass, field

EPS = 1e-9


class SplineError(Exception):
    """Invalid splinegon or a geometric precondition violation."""


# ---------------------------------------------------------------------------
# predicate layer: every tolerance comparison lives here


def near(a, b, tol=EPS):
    return abs(a - b) <= tol


def is_zero(x, tol=EPS):
    return abs(x) <= tol


def side_sign(x, tol=EPS):
    """-1, 0, +1 with a dead zone of width tol around zero."""
    if x > tol:
        return 1
    if x < -tol:
        return -1
    return 0


def pts_near(p, q, tol=EPS):
    return near(p[0], q[0], tol) and near(p[1], q[1], tol)


# ---------------------------------------------------------------------------
# small vector helpers


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def mul(a, s):
    return (a[0] * s, a[1] * s)


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def norm(a):
    return math.hypot(a[0], a[1])


def unit(a):
    n = norm(a)
    if n < EPS:
        raise SplineError("cannot normalize near-zero vector")
    return (a[0] / n, a[1] / n)


def perp(a):
    return (-a[1], a[0])


def lerp(a, b, t):
    return (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))


def angle_of(v):
    return math.atan2(v[1], v[0])


def on_circle(center, r, phi):
    return (center[0] + r * math.cos(phi), center[1] + r * math.sin(phi))


# ---------------------------------------------------------------------------
# edges


@dataclass
class ArcEdge:
    """One boundary piece: a straight segment or a circular arc.

    For arcs, ccw tells whether the boundary runs counterclockwise around
    the center when going from a to b; the angular extent must stay below
    180 degrees so each arc lies on its own convex hull.
    """

    kind: str               # "seg" or "arc"
    a: tuple
    b: tuple
    center: tuple = None
    radius: float = 0.0
    ccw: bool = True

    def __post_init__(self):
        if self.kind not in ("seg", "arc"):
            raise SplineError("edge kind must be seg or arc")
        if self.kind == "seg":
            if pts_near(self.a, self.b):
                raise SplineError("zero-length segment")
            return
        if self.radius <= EPS:
            raise SplineError("arc needs a positive radius")
        for p in (self.a, self.b):
            if not near(norm(sub(p, self.center)), self.radius, 1e-6):
                raise SplineError("arc endpoint off its circle")
        if self.extent() >= math.pi - EPS:
            raise SplineError("arc extent must be under 180 degrees")

    def phi_a(self):
        return angle_of(sub(self.a, self.center))

    def phi_b(self):
        return angle_of(sub(self.b, self.center))

    def extent(self):
        d = self.phi_b() - self.phi_a()
        if self.ccw:
            return d % (2 * math.pi)
        return (-d) % (2 * math.pi)

    def point_at(self, t):
        """Point at parameter t in [0,1] along the edge."""
        if self.kind == "seg":
            return lerp(self.a, self.b, t)
        phi = self.phi_a() + (self.extent() * t) * (1 if self.ccw else -1)
        return on_circle(self.center, self.radius, phi)

    def tangent_at(self, t):
        """Unit tangent in the direction of travel at parameter t."""
        if self.kind == "seg":
            return unit(sub(self.b, self.a))
        phi = self.phi_a() + (self.extent() * t) * (1 if self.ccw else -1)
        d = (-math.sin(phi), math.cos(phi))
        return d if self.ccw else mul(d, -1)

    def param_of(self, p):
        """Parameter of a point assumed on the edge (clamped to [0,1])."""
        if self.kind == "seg":
            d = sub(self.b, self.a)
            t = dot(sub(p, self.a), d) / dot(d, d)
        else:
            ext = self.extent()
            dphi = angle_of(sub(p, self.center)) - self.phi_a()
            dphi = dphi % (2 * math.pi) if self.ccw else \
                (-dphi) % (2 * math.pi)
            # points a hair "before" a wrap to 2*pi are parameter ~0
            if dphi > ext + 1e-6:
                dphi = 0.0 if 2 * math.pi - dphi < dphi - ext else ext
            t = dphi / ext
        return min(1.0, max(0.0, t))

    def distance_to(self, p):
        if self.kind == "seg":
            d = sub(self.b, self.a)
            t = min(1.0, max(0.0, dot(sub(p, self.a), d) / dot(d, d)))
            return norm(sub(p, lerp(self.a, self.b, t)))
        v = sub(p, self.center)
        phi = angle_of(v)
        dphi = (phi - self.phi_a()) % (2 * math.pi)
        if not self.ccw:
            dphi = (self.phi_a() - phi) % (2 * math.pi)
        if dphi <= self.extent():
            return abs(norm(v) - self.radius)
        return min(norm(sub(p, self.a)), norm(sub(p, self.b)))

    def length(self):
        if self.kind == "seg":
            return norm(sub(self.b, self.a))
        return self.radius * self.extent()

    def to_json(self):
        if self.kind == "seg":
            return {"kind": "seg", "from": list(self.a), "to": list(self.b)}
        return {"kind": "arc", "from": list(self.a), "to": list(self.b),
                "center": list(self.center), "radius": self.radius,
                "ccw": self.ccw}

    @staticmethod
    def from_json(obj):
        if obj["kind"] == "seg":
            return ArcEdge("seg", tuple(obj["from"]), tuple(obj["to"]))
        return ArcEdge("arc", tuple(obj["from"]), tuple(obj["to"]),
                       tuple(obj["center"]), obj["radius"], obj["ccw"])


def seg(a, b):
    return ArcEdge("seg", tuple(a), tuple(b))


def arc(a, b, center, ccw=True):
    c = tuple(center)
    return ArcEdge("arc", tuple(a), tuple(b), c, norm(sub(tuple(a), c)), ccw)


def arc_through(a, b, bulge):
    """Arc from a to b whose midpoint is offset by `bulge` to the left of
    a->b (negative bulge bows right).  |bulge| must stay under half the
    chord so the extent stays below 180 degrees."""
    a, b = tuple(a), tuple(b)
    ch = norm(sub(b, a))
    h = abs(bulge)
    if h < EPS:
        raise SplineError("arc_through needs a nonzero bulge")
    if h >= ch / 2:
        raise SplineError("bulge too large for a sub-180-degree arc")
    r = (ch * ch / 4 + h * h) / (2 * h)
    mid = mul(add(a, b), 0.5)
    n = unit(perp(sub(b, a)))
    if bulge > 0:
        # bulge to the left of travel: center on the right, clockwise arc
        center = add(mid, mul(n, -(r - h)))
        return ArcEdge("arc", a, b, center, r, False)
    center = add(mid, mul(n, r - h))
    return ArcEdge("arc", a, b, center, r, True)


# ---------------------------------------------------------------------------
# line / edge intersections

_RAY_DIR = (math.cos(0.5772156649), math.sin(0.5772156649))


def _line_circle_params(p, d, center, r):
    """Parameters t with p + t*d on the circle (|d| need not be 1)."""
    f = sub(p, center)
    a = dot(d, d)
    b = 2 * dot(f, d)
    c = dot(f, f) - r * r
    disc = b * b - 4 * a * c
    if disc < -EPS * max(1.0, abs(c)):
        return []
    disc = max(disc, 0.0)
    sq = math.sqrt(disc)
    return [(-b - sq) / (2 * a), (-b + sq) / (2 * a)]


def edge_line_hits(edge, p, d):
    """(t, point) pairs where the infinite line p + t*d meets the edge."""
    out = []
    if edge.kind == "seg":
        e = sub(edge.b, edge.a)
        den = cross2(d, e)
        if is_zero(den, EPS * max(1.0, norm(d) * norm(e))):
            return out
        t = cross2(sub(edge.a, p), e) / den
        u = cross2(sub(edge.a, p), d) / den
        if -EPS <= u <= 1 + EPS:
            out.append((t, add(p, mul(d, t))))
        return out
    for t in _line_circle_params(p, d, edge.center, edge.radius):
        q = add(p, mul(d, t))
        if edge.distance_to(q) <= 1e-7:
            out.append((t, q))
    return out


# ---------------------------------------------------------------------------
# the region


class Location:
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


class Splinegon:
    """Closed chain of ArcEdges bounding a simply connected region.

    Validation checks chain closure, sampled simplicity, and rejects
    tangential (cusp) vertices, where the link diameter becomes infinite.
    """

    def __init__(self, edges, link_diameter_bound=None, validate=True):
        self.edges = list(edges)
        self.n = len(self.edges)
        if self.n < 2:
            raise SplineError("need at least 2 edges")
        for i in range(self.n):
            if not pts_near(self.edges[i].b,
                            self.edges[(i + 1) % self.n].a, 1e-6):
                raise SplineError("edge chain does not close at edge %d" % i)
        self._cache = {}
        if validate:
            self._check_cusps()
            self._check_simple_sampled()
            if self.signed_area() < 0:
                raise SplineError("boundary must be counterclockwise")
        self.link_diameter_bound = link_diameter_bound
        if validate and link_diameter_bound is None:
            self.link_diameter_bound = sampled_link_diameter(self)

    def vertices(self):
        return [e.a for e in self.edges]

    def _check_cusps(self):
        for i in range(self.n):
            prev = self.edges[i - 1]
            cur = self.edges[i]
            din = prev.tangent_at(1.0)
            dout = cur.tangent_at(0.0)
            # interior angle ~0 (mod 360): outgoing doubles back on incoming
            if dot(din, dout) < 0 and is_zero(cross2(din, dout), 1e-6):
                raise SplineError(
                    "infinite link diameter: tangential cusp at vertex %d"
                    % i)

    def _sample_chain(self, per_edge=24):
        pts = []
        for e in self.edges:
            for k in range(per_edge):
                pts.append(e.point_at(k / per_edge))
        return pts

    def _check_simple_sampled(self):
        pts = self._sample_chain()
        m = len(pts)
        for i in range(m):
            a1, a2 = pts[i], pts[(i + 1) % m]
            for j in range(i + 2, m):
                if i == 0 and j == m - 1:
                    continue
                b1, b2 = pts[j], pts[(j + 1) % m]
                if _segs_cross(a1, a2, b1, b2):
                    raise SplineError("boundary self-intersects (sampled)")

    def signed_area(self):
        s = 0.0
        for e in self.edges:
            s += cross2(e.a, e.b) / 2
            if e.kind == "arc":
                ext = e.extent()
                bulge = e.radius * e.radius / 2 * (ext - math.sin(ext))
                s += bulge if e.ccw else -bulge
        return s

    def location(self, p):
        for e in self.edges:
            if e.distance_to(p) <= 1e-7:
                return Location.BOUNDARY
        hits = []
        for e in self.edges:
            for t, q in edge_line_hits(e, p, _RAY_DIR):
                if t > EPS:
                    hits.append(round(t, 9))
        return Location.INTERIOR if len(set(hits)) % 2 == 1 else \
            Location.EXTERIOR

    def to_json(self):
        return {"edges": [e.to_json() for e in self.edges],
                "d": self.link_diameter_bound}

    @staticmethod
    def from_json(obj):
        return Splinegon([ArcEdge.from_json(e) for e in obj["edges"]],
                         link_diameter_bound=obj.get("d"))

    def __repr__(self):
        return "Splinegon(%d edges)" % self.n


def _segs_cross(a1, a2, b1, b2):
    d1 = cross2(sub(a2, a1), sub(b1, a1))
    d2 = cross2(sub(a2, a1), sub(b2, a1))
    d3 = cross2(sub(b2, b1), sub(a1, b1))
    d4 = cross2(sub(b2, b1), sub(a2, b1))
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


def sees_spline(p, q, R):
    """True iff segment pq stays inside the closed region."""
    lp, lq = R.location(p), R.location(q)
    if lp == Location.EXTERIOR or lq == Location.EXTERIOR:
        raise SplineError("sees endpoint outside the region")
    d = sub(q, p)
    L = norm(d)
    if L < EPS:
        return True
    ts = {0.0, 1.0}
    for e in R.edges:
        for t, _ in edge_line_hits(e, p, d):
            if -EPS <= t <= 1 + EPS:
                ts.add(min(1.0, max(0.0, t)))
    ts = sorted(ts)
    for t0, t1 in zip(ts, ts[1:]):
        if t1 - t0 < 1e-12:
            continue
        m = add(p, mul(d, (t0 + t1) / 2))
        if R.location(m) == Location.EXTERIOR:
            return False
    return True


# ---------------------------------------------------------------------------
# tangents


def _refine_tangent(p, center, r, q):
    """One Newton step pushing q toward exact tangency from p on the circle."""
    phi = angle_of(sub(q, center))
    for _ in range(1):
        qq = on_circle(center, r, phi)
        dq = (-r * math.sin(phi), r * math.cos(phi))
        f = dot(sub(qq, center), sub(qq, p))
        fp = dot(dq, sub(qq, p)) + dot(sub(qq, center), dq)
        if is_zero(fp, 1e-12):
            break
        phi -= f / fp
    return on_circle(center, r, phi)


def circle_tangents_from_point(p, center, r):
    """Tangent points on the circle for tangent lines through p."""
    v = sub(p, center)
    d2 = dot(v, v)
    if d2 < r * r - EPS:
        return []
    if near(math.sqrt(d2), r, 1e-7):
        return [add(center, mul(v, r / math.sqrt(d2)))]
    a = r * r / d2
    h = r * math.sqrt(max(d2 - r * r, 0.0)) / d2
    base = add(center, mul(v, a))
    off = mul(perp(v), h)
    return [_refine_tangent(p, center, r, add(base, off)),
            _refine_tangent(p, center, r, sub(base, off))]


def circle_circle_tangents(c1, r1, c2, r2):
    """Bitangent (point1, point2) pairs for two circles, outer and inner."""
    out = []
    d = norm(sub(c2, c1))
    if d < EPS:
        return out
    for sign2 in (1.0, -1.0):
        # tangent line: unit normal n with n.c1 + h = r1, n.c2 + h = sign2*r2
        rdiff = r1 - sign2 * r2
        if abs(rdiff) > d + EPS:
            continue
        cosv = rdiff / d
        sinv = math.sqrt(max(1 - cosv * cosv, 0.0))
        axis = unit(sub(c2, c1))
        for s in (1.0, -1.0):
            n = (axis[0] * cosv - s * axis[1] * sinv,
                 axis[0] * s * sinv + axis[1] * cosv)
            p1 = add(c1, mul(n, r1))
            p2 = add(c2, mul(n, sign2 * r2))
            if pts_near(p1, p2, 1e-7):
                continue
            out.append((p1, p2))
    # dedup (outer tangents coincide for equal radii edge cases)
    uniq = []
    for pair in out:
        if not any(pts_near(pair[0], u[0], 1e-7) and
                   pts_near(pair[1], u[1], 1e-7) for u in uniq):
            uniq.append(pair)
    return uniq


@dataclass
class StopLine:
    kind: str               # "CommonTangent", "EndpointTangent", "RobberExitLine"
    segment: tuple          # (point, point): maximal chord inside the region
    tangent_points: list = field(default_factory=list)

    def to_json(self):
        return {"kind": self.kind,
                "segment": [list(self.segment[0]), list(self.segment[1])],
                "tangentPoints": [list(p) for p in self.tangent_points]}


def extend_line_in_region(R, p, d, anchor_t=0.0):
    """Maximal sub-segment of line p + t*d inside R containing anchor_t."""
    ts = set()
    for e in R.edges:
        for t, _ in edge_line_hits(e, p, d):
            ts.add(t)
    ts = sorted(ts)
    lo, hi = None, None
    below = [t for t in ts if t <= anchor_t + EPS]
    above = [t for t in ts if t >= anchor_t - EPS]
    lo = anchor_t
    for t in reversed(below):
        m = add(p, mul(d, (t + lo) / 2)) if t < lo - 1e-12 else None
        if m is not None and R.location(m) == Location.EXTERIOR:
            break
        lo = min(lo, t)
    hi = anchor_t
    for t in above:
        m = add(p, mul(d, (hi + t) / 2)) if t > hi + 1e-12 else None
        if m is not None and R.location(m) == Location.EXTERIOR:
            break
        hi = max(hi, t)
    return (add(p, mul(d, lo)), add(p, mul(d, hi)))


def line_components_in_region(R, p, d):
    """All maximal sub-segments of the full line p + t*d inside R, as
    (lo, hi) parameter intervals.  A tangent line can leave the region at
    its tangent point and re-enter elsewhere; every interior component is
    reported, with grazing touches merged."""
    ts = []
    for e in R.edges:
        for t, _ in edge_line_hits(e, p, d):
            ts.append(t)
    ts.sort()
    hits = []
    for t in ts:
        if not hits or t - hits[-1] > 1e-9:
            hits.append(t)
    comps = []
    for t0, t1 in zip(hits, hits[1:]):
        if t1 - t0 < 1e-7:
            continue
        m = add(p, mul(d, (t0 + t1) / 2))
        if R.location(m) != Location.EXTERIOR:
            if comps and t0 - comps[-1][1] < 1e-7:
                comps[-1] = (comps[-1][0], t1)
            else:
                comps.append((t0, t1))
    return comps


def _segment_inside(R, a, b):
    try:
        return sees_spline(a, b, R)
    except SplineError:
        return False


def _is_reflex_arc(edge):
    """Arc bulging into the region (boundary turning clockwise)."""
    return edge.kind == "arc" and not edge.ccw


def _reflex_vertices(R):
    out = []
    for i in range(R.n):
        din = R.edges[i - 1].tangent_at(1.0)
        dout = R.edges[i].tangent_at(0.0)
        if cross2(din, dout) < -EPS:
            out.append((i, R.edges[i].a))
    return out


def _vertex_locally_tangent(R, i, d):
    """True iff the line with direction d through vertex i keeps both
    incident boundary directions (weakly) on one side."""
    din = mul(R.edges[i - 1].tangent_at(1.0), -1.0)
    dout = R.edges[i].tangent_at(0.0)
    s1 = side_sign(cross2(d, din), 1e-7)
    s2 = side_sign(cross2(d, dout), 1e-7)
    return s1 * s2 >= 0


def _on_arc(edge, p, tol=1e-6):
    return edge.kind == "arc" and edge.distance_to(p) <= tol


def common_tangents(R):
    """All common tangents of the region: endpoint tangents at every vertex
    plus bitangents between reflex features, each extended to region exit.
    Cached per region."""
    cached = R._cache.get("common_tangents")
    if cached is not None:
        return cached
    out = []

    def add_tangent(kind, p, d, pts):
        if norm(d) < EPS:
            return
        u = unit(d)
        for lo, hi in line_components_in_region(R, p, u):
            segm = (add(p, mul(u, lo)), add(p, mul(u, hi)))
            if norm(sub(segm[1], segm[0])) < EPS:
                continue
            out.append(StopLine(kind, segm, pts))

    for i in range(R.n):
        v = R.edges[i].a
        for e in (R.edges[i - 1], R.edges[i]):
            t = 1.0 if e is R.edges[i - 1] else 0.0
            add_tangent("EndpointTangent", v, e.tangent_at(t), [v])

    arcs = [(i, e) for i, e in enumerate(R.edges) if _is_reflex_arc(e)]
    verts = _reflex_vertices(R)
    # arc-arc bitangents
    for ai in range(len(arcs)):
        for bi in range(ai + 1, len(arcs)):
            e1, e2 = arcs[ai][1], arcs[bi][1]
            for p1, p2 in circle_circle_tangents(e1.center, e1.radius,
                                                 e2.center, e2.radius):
                if _on_arc(e1, p1) and _on_arc(e2, p2) and \
                        _segment_inside(R, p1, p2):
                    add_tangent("CommonTangent", p1, sub(p2, p1), [p1, p2])
    # vertex-arc tangents
    for vi, v in verts:
        for _, e in arcs:
            for q in circle_tangents_from_point(v, e.center, e.radius):
                if _on_arc(e, q) and not pts_near(q, v, 1e-7) and \
                        _vertex_locally_tangent(R, vi, sub(q, v)) and \
                        _segment_inside(R, v, q):
                    add_tangent("CommonTangent", v, sub(q, v), [v, q])
    # vertex-vertex tangents
    for x in range(len(verts)):
        for y in range(x + 1, len(verts)):
            (vi, v), (wi, w) = verts[x], verts[y]
            d = sub(w, v)
            if norm(d) < EPS:
                continue
            if _vertex_locally_tangent(R, vi, d) and \
                    _vertex_locally_tangent(R, wi, d) and \
                    _segment_inside(R, v, w):
                add_tangent("CommonTangent", v, d, [v, w])
    R._cache["common_tangents"] = out
    return out


def tangents_from_point(p, R):
    """Tangent segments from p to the region boundary (reflex arcs and
    locally tangent reflex vertices), each ending at its tangent point."""
    out = []
    for i, e in enumerate(R.edges):
        if not _is_reflex_arc(e):
            continue
        for q in circle_tangents_from_point(p, e.center, e.radius):
            if _on_arc(e, q) and not pts_near(p, q, 1e-7) and \
                    _segment_inside(R, p, q):
                out.append(StopLine("RobberExitLine", (p, q), [q]))
    for vi, v in _reflex_vertices(R):
        if pts_near(p, v, 1e-7):
            continue
        if _vertex_locally_tangent(R, vi, sub(v, p)) and \
                _segment_inside(R, p, v):
            out.append(StopLine("RobberExitLine", (p, v), [v]))
    return out


def robber_exit_lines(r, ell_origin, ell_dir, R):
    """Tangent segments from r that cross the ray, leaving the tangent
    point (and the bay behind it) on the far side of the ray from the
    robber.  A robber sitting exactly on the ray still counts: its tangent
    crosses at the segment's start."""
    out = []
    d = unit(ell_dir)
    for tl in tangents_from_point(r, R):
        a, q = tl.segment
        e = sub(q, a)
        den = cross2(d, e)
        if is_zero(den):
            continue
        rel = sub(a, ell_origin)
        t_ray = cross2(rel, e) / den       # along the ray
        u = -cross2(d, rel) / den          # along the tangent segment
        if t_ray < EPS or not (-1e-9 <= u < 1 - EPS):
            continue
        s_r = side_sign(cross2(d, sub(a, ell_origin)))
        s_q = side_sign(cross2(d, sub(q, ell_origin)))
        if s_q != 0 and s_q != s_r:
            out.append(tl)
    return out


def bay_of_exit_line(tl, R):
    """The bay behind an exit line: the piece beyond the tangent point,
    bounded by the extension of the line to the region boundary."""
    a, q = tl.segment
    d = unit(sub(q, a))
    far = extend_line_in_region(R, q, d, 0.0)[1]
    return (q, far)


# ---------------------------------------------------------------------------
# shortest paths


@dataclass
class SplinePath:
    points: list      # waypoint chain; consecutive points joined by a
    links: list       # parallel to gaps: ("seg", None) or ("arc", edge idx)
    length: float


def _static_path_graph(R):
    """Tangency-graph skeleton (reflex features only), cached per region."""
    cached = R._cache.get("path_graph")
    if cached is not None:
        return cached
    nodes = []
    arcs = [(i, e) for i, e in enumerate(R.edges) if _is_reflex_arc(e)]
    for vi, v in _reflex_vertices(R):
        nodes.append((v, None))
    for p, _ in list(nodes):
        for i, e in arcs:
            for q in circle_tangents_from_point(p, e.center, e.radius):
                if _on_arc(e, q):
                    nodes.append((q, i))
    for ai in range(len(arcs)):
        for bi in range(ai + 1, len(arcs)):
            (i1, e1), (i2, e2) = arcs[ai], arcs[bi]
            for p1, p2 in circle_circle_tangents(e1.center, e1.radius,
                                                 e2.center, e2.radius):
                if _on_arc(e1, p1) and _on_arc(e2, p2):
                    nodes.append((p1, i1))
                    nodes.append((p2, i2))
    adj = {i: [] for i in range(len(nodes))}
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            for link, w in _node_link(R, nodes[i], nodes[j]):
                adj[i].append((j, w, link))
                adj[j].append((i, w, link))
    R._cache["path_graph"] = (nodes, adj)
    return nodes, adj


def _node_link(R, a, b):
    """Connections between two tangency-graph nodes: a shared reflex-arc
    portion (a node may sit on several arcs), and/or a free segment."""
    (p, _), (q, _) = a, b
    if pts_near(p, q, 1e-9):
        return []
    out = []
    for i, e in enumerate(R.edges):
        if _is_reflex_arc(e) and e.distance_to(p) <= 1e-7 and \
                e.distance_to(q) <= 1e-7:
            w = e.radius * abs(e.param_of(p) - e.param_of(q)) * e.extent()
            out.append((("arc", i), w))
    if _segment_inside(R, p, q):
        out.append((("seg", None), norm(sub(q, p))))
    return out


def _arc_under(R, p):
    for i, e in enumerate(R.edges):
        if _is_reflex_arc(e) and e.distance_to(p) <= 1e-7:
            return i
    return None


def splinegon_shortest_path(s, t, R):
    """Locally shortest path from s to t: free tangent segments plus
    portions of reflex arcs, found by search over the tangency graph."""
    s, t = tuple(s), tuple(t)
    for p in (s, t):
        if R.location(p) == Location.EXTERIOR:
            raise SplineError("shortest path endpoint outside the region")
    if pts_near(s, t):
        return SplinePath([s], [], 0.0)
    if sees_spline(s, t, R):
        return SplinePath([s, t], [("seg", None)], norm(sub(t, s)))

    base_nodes, base_adj = _static_path_graph(R)
    fresh = [(s, _arc_under(R, s)), (t, _arc_under(R, t))]
    for p in (s, t):
        for i, e in enumerate(R.edges):
            if not _is_reflex_arc(e):
                continue
            for q in circle_tangents_from_point(p, e.center, e.radius):
                if _on_arc(e, q):
                    fresh.append((q, i))
    nf = len(fresh)
    nodes = fresh + list(base_nodes)
    adj = {i: [] for i in range(nf)}
    for i, lst in base_adj.items():
        adj[i + nf] = [(j + nf, w, link) for j, w, link in lst]
    for qi in range(nf):
        for j in range(qi + 1, len(nodes)):
            for link, w in _node_link(R, nodes[qi], nodes[j]):
                adj[qi].append((j, w, link))
                adj[j].append((qi, w, link))

    import heapq
    dist = {0: 0.0}
    prev = {}
    heap = [(0.0, 0)]
    seen = set()
    while heap:
        du, u = heapq.heappop(heap)
        if u in seen:
            continue
        seen.add(u)
        if u == 1:
            break
        for v, w, link in adj.get(u, []):
            nd = du + w
            if nd < dist.get(v, float("inf")) - 1e-15:
                dist[v] = nd
                prev[v] = (u, link)
                heapq.heappush(heap, (nd, v))
    if 1 not in dist:
        raise SplineError("no path found between the query points")
    chain = [1]
    links = []
    while chain[-1] != 0:
        u, link = prev[chain[-1]]
        links.append(link)
        chain.append(u)
    chain.reverse()
    links.reverse()
    return SplinePath([nodes[k][0] for k in chain], links, dist[1])


def sampled_link_diameter(R, per_edge=6, cap=30):
    """Upper estimate of the link diameter from a sampled point set (BFS
    over mutual visibility).  Raises if some sampled pair is unreachable."""
    pts = []
    for e in R.edges:
        for k in range(1, per_edge + 1):
            q = e.point_at(k / (per_edge + 1))
            pts.append(q)
    # pull boundary samples slightly inward so visibility is well defined
    inner = []
    for q in pts:
        loc = R.location(q)
        if loc == Location.EXTERIOR:
            continue
        inner.append(q)
    m = len(inner)
    vis = [[False] * m for _ in range(m)]
    for i in range(m):
        vis[i][i] = True
        for j in range(i + 1, m):
            try:
                v = sees_spline(inner[i], inner[j], R)
            except SplineError:
                v = False
            vis[i][j] = vis[j][i] = v
    worst = 1
    for src in range(m):
        level = {src: 0}
        frontier = [src]
        d = 0
        while frontier and d <= cap:
            d += 1
            nxt = []
            for j in range(m):
                if j in level:
                    continue
                if any(vis[u][j] for u in frontier):
                    level[j] = d
                    nxt.append(j)
            frontier = nxt
        if len(level) < m:
            raise SplineError("sampled link diameter exceeds cap %d" % cap)
        worst = max(worst, max(level.values()))
    return worst


# ---------------------------------------------------------------------------
# boundary bookkeeping and chord splits


def boundary_position(R, p):
    """(edge index, parameter) of the closest boundary point to p."""
    best = None
    for i, e in enumerate(R.edges):
        d = e.distance_to(p)
        if best is None or d < best[0]:
            best = (d, i, e.param_of(p))
    if best[0] > 1e-6:
        raise SplineError("point is not on the boundary")
    return best[1], best[2]


def _sub_edge(edge, t0, t1):
    """Portion of the edge between parameters t0 < t1, or None if tiny."""
    if t1 - t0 < 1e-9:
        return None
    a, b = edge.point_at(t0), edge.point_at(t1)
    if norm(sub(b, a)) < 1e-9:
        return None
    if edge.kind == "seg":
        return ArcEdge("seg", a, b)
    return ArcEdge("arc", a, b, edge.center, edge.radius, edge.ccw)


def _boundary_walk(R, pos_a, pos_b):
    """Sub-edges running forward (counterclockwise) from pos_a to pos_b."""
    out = []
    ia, ta = pos_a
    ib, tb = pos_b
    if ia == ib and ta <= tb + 1e-12:
        se = _sub_edge(R.edges[ia], ta, tb)
        return [se] if se else []
    se = _sub_edge(R.edges[ia], ta, 1.0)
    if se:
        out.append(se)
    i = (ia + 1) % R.n
    while i != ib:
        out.append(R.edges[i])
        i = (i + 1) % R.n
    se = _sub_edge(R.edges[ib], 0.0, tb)
    if se:
        out.append(se)
    return out


def split_spline_by_chord(R, a, b):
    """Split the region along a boundary-to-boundary chord; returns the two
    pieces, each a positively oriented closed chain."""
    pa, pb = boundary_position(R, a), boundary_position(R, b)
    a_snap = R.edges[pa[0]].point_at(pa[1])
    b_snap = R.edges[pb[0]].point_at(pb[1])
    if pts_near(a_snap, b_snap, 1e-9):
        raise SplineError("degenerate chord")
    w1 = _boundary_walk(R, pa, pb) + [seg(b_snap, a_snap)]
    w2 = _boundary_walk(R, pb, pa) + [seg(a_snap, b_snap)]
    return (Splinegon(w1, validate=False), Splinegon(w2, validate=False))


def _piece_containing(pieces, p):
    """Pick the piece holding p, preferring strict interior."""
    locs = [pc.location(p) for pc in pieces]
    for pc, loc in zip(pieces, locs):
        if loc == Location.INTERIOR:
            return pc
    onb = [pc for pc, loc in zip(pieces, locs) if loc == Location.BOUNDARY]
    if not onb:
        raise SplineError("split lost the tracked point")
    return max(onb, key=lambda pc: pc.signed_area())


def _local_sides_at(R, q, u):
    """Signs (relative to the directed line with direction u) of boundary
    samples in a small neighborhood of the boundary point q."""
    sides = set()
    for e in R.edges:
        if e.distance_to(q) > 1e-6:
            continue
        tq = e.param_of(q)
        for h in (1e-4, 1e-3, 1e-2):
            for tt in (tq - h, tq + h):
                if not 0.0 <= tt <= 1.0:
                    continue
                s = side_sign(cross2(u, sub(e.point_at(tt), q)), 1e-8)
                if s:
                    sides.add(s)
    return sides


def dist_point_seg(p, a, b):
    d = sub(b, a)
    L2 = dot(d, d)
    if L2 < EPS * EPS:
        return norm(sub(p, a))
    t = min(1.0, max(0.0, dot(sub(p, a), d) / L2))
    return norm(sub(p, lerp(a, b, t)))


# ---------------------------------------------------------------------------
# the cop's round


@dataclass
class SplineRound:
    """Everything produced by one cop round: the aiming ray, the divergence
    point, the stop witness, the trailing cut and the active region."""

    c_prev: tuple
    c: tuple
    r: tuple
    ell: tuple            # (origin, unit direction)
    b: tuple
    gamma: object         # edge index of the far-side curve, or None
    turn: int             # +1 left, -1 right, 0 degenerate
    stop: tuple           # (kind, witness point or stop-line)
    ell_bar: tuple        # (b, terminal) cut chord
    region: object        # active region piece (holds the robber)
    area: float
    flagged: bool = False
    case_tag: str = None
    event: tuple = None   # (kind, witness) certified progress event

    def to_json(self):
        ev = list(self.event[:1]) if self.event else None
        return {"cPrev": list(self.c_prev), "c": list(self.c),
                "r": list(self.r),
                "ell": [list(self.ell[0]), list(self.ell[1])],
                "b": list(self.b), "gamma": self.gamma, "turn": self.turn,
                "stop": self.stop[0],
                "ellBar": [list(self.ell_bar[0]), list(self.ell_bar[1])],
                "area": self.area, "flagged": self.flagged,
                "caseTag": self.case_tag,
                "event": ev[0] if ev else None}


def _far_side_gamma(R, b, u):
    """At a vertex b, the incident edge continuing past b along u; flags
    the ambiguous both-tangent situation."""
    for j in range(R.n):
        if pts_near(R.edges[j].a, b, 1e-7):
            e_out, e_in = R.edges[j], R.edges[j - 1]
            d_out = e_out.tangent_at(0.0)
            d_in = mul(e_in.tangent_at(1.0), -1.0)
            flagged = is_zero(cross2(u, d_out), 1e-7) and \
                is_zero(cross2(u, d_in), 1e-7)
            if dot(d_out, u) >= dot(d_in, u):
                return j, flagged
            return (j - 1) % R.n, flagged
    return None, False


def _stop_candidates(R, c_prev, u, t_b, robber):
    """(t, kind, witness) stop candidates along the ray past the divergence
    point: common tangents, robber exit lines, and the boundary itself."""
    t_min = t_b + 1e-6
    bd = []
    for e in R.edges:
        for t, q in edge_line_hits(e, c_prev, u):
            if t > t_min:
                bd.append((t, q))
    if not bd:
        raise SplineError("aiming ray never returns to the boundary")
    t_bd, q_bd = min(bd)
    sides = _local_sides_at(R, q_bd, u)
    bd_kind = "BoundaryExit" if len(sides) == 2 else "BoundaryTouch"
    out = [(t_bd, bd_kind, q_bd)]
    lines = list(common_tangents(R)) + \
        robber_exit_lines(robber, c_prev, u, R)
    for tl in lines:
        p1, p2 = tl.segment
        e = sub(p2, p1)
        den = cross2(u, e)
        if is_zero(den):
            continue
        rel = sub(p1, c_prev)
        t = cross2(rel, e) / den
        v = -cross2(u, rel) / den
        if t_min < t <= t_bd + 1e-7 and -1e-9 <= v <= 1 + 1e-9:
            out.append((t, tl.kind, tl))
    return out


def _witness_key(kind, witness):
    if isinstance(witness, StopLine):
        pts = [witness.segment[0], witness.segment[1]]
    else:
        pts = [witness]
    return (kind,) + tuple(round(c, 9) for p in pts for c in p)


def cop_move_splinegon(R, cop, robber):
    """One round of the cop's strategy; returns (new position, round record).

    The cop aims along the start of the shortest path to the robber,
    passes the divergence point b, and stops at the first common tangent,
    robber exit line, or boundary contact (or at b itself when b is a
    vertex).  The trailing cut through the old position bounds the new
    active region.
    """
    path = splinegon_shortest_path(cop, robber, R)
    if len(path.points) < 2 or (len(path.points) < 3 and
                                path.links[0][0] == "seg"):
        raise SplineError("cop already sees the robber")
    flagged = False
    if path.links[0][0] == "arc":
        gamma = path.links[0][1]
        b = tuple(cop)
        e = R.edges[gamma]
        u = e.tangent_at(e.param_of(cop))
        if dot(u, sub(path.points[1], cop)) < 0:
            u = mul(u, -1.0)
        q_after = path.points[1]
    else:
        b = path.points[1]
        u = unit(sub(b, cop))
        q_after = path.points[2]
        gamma = None
        if len(path.links) > 1 and path.links[1][0] == "arc":
            gamma = path.links[1][1]
        else:
            vi = [j for j in range(R.n)
                  if pts_near(R.edges[j].a, b, 1e-7)]
            if vi:
                gamma, flagged = _far_side_gamma(R, b, u)
            else:
                gamma = _arc_under(R, b)
    turn = side_sign(cross2(u, sub(q_after, b)), 1e-9)

    b_is_vertex = any(pts_near(R.edges[j].a, b, 1e-7) for j in range(R.n))
    t_b = dot(sub(b, cop), u)
    if b_is_vertex and not pts_near(b, cop, 1e-7):
        c_new = b
        stop = ("Vertex", b)
    else:
        cands = _stop_candidates(R, cop, u, t_b, robber)
        t_first = min(t for t, _, _ in cands)
        best = min((c for c in cands if c[0] <= t_first + 1e-7),
                   key=lambda c: _witness_key(c[1], c[2]))
        c_new = add(cop, mul(u, t_first))
        stop = (best[1], best[2])

    # trailing cut: from b, away from the aiming ray, through the old
    # position, until boundary shows up opposite the far-side curve
    u_bar = mul(u, -1.0) if pts_near(b, cop, 1e-7) else unit(sub(cop, b))
    g_side = _gamma_side(R, gamma, b, u_bar, turn)
    terminal = _cut_terminal(R, b, u_bar, -g_side)
    if terminal is None:
        region, terminal = R, tuple(b)
    else:
        pieces = split_spline_by_chord(R, b, terminal)
        region = _piece_containing(pieces, robber)
    rnd = SplineRound(tuple(cop), tuple(c_new), tuple(robber),
                      (tuple(cop), u), tuple(b), gamma, turn, stop,
                      (tuple(b), terminal), region, region.signed_area(),
                      flagged)
    return c_new, rnd


def _gamma_side(R, gamma, b, u_bar, turn):
    """Side of the trailing cut on which the far-side curve leaves b."""
    if gamma is not None:
        e = R.edges[gamma]
        tb = e.param_of(b)
        for h in (1e-3, 1e-2, 0.1):
            for tt in (tb + h, tb - h):
                if not 0.0 <= tt <= 1.0:
                    continue
                s = side_sign(cross2(u_bar, sub(e.point_at(tt), b)), 1e-9)
                if s:
                    return s
    # fall back to the path's turn side: the curve being wrapped lies on
    # the turn side of the aiming ray, hence opposite side of the cut
    return -turn if turn else 1


def _cut_terminal(R, b, u_bar, target_side):
    """First point along the cut ray where the boundary appears strictly
    on the target side, or None when the ray leaves the region before any
    such point (a degenerate cut: the active region is everything)."""
    cands = []
    for e in R.edges:
        for t, q in edge_line_hits(e, b, u_bar):
            if t > 1e-6:
                cands.append((round(t, 7), t, q))
    seen = set()
    t_prev = 0.0
    for _, t, q in sorted(cands):
        key = round(t, 7)
        if key in seen:
            continue
        seen.add(key)
        if t - t_prev > 1e-7:
            mid = add(b, mul(u_bar, (t_prev + t) / 2))
            if R.location(mid) == Location.EXTERIOR:
                return None
        if target_side in _local_sides_at(R, q, u_bar):
            return q
        t_prev = t
    return None


# ---------------------------------------------------------------------------
# case classification and progress events


def classify_round(prev, cur):
    """Case tag for two consecutive rounds, normalized so the previous
    round's path turned left; 1b is the provably impossible case."""
    if prev.turn == 0 or cur.turn == 0:
        return "degenerate", None
    s = side_sign(cross2(sub(prev.c, prev.c_prev), sub(cur.c, prev.c)),
                  1e-9)
    s_norm = s * prev.turn
    if cur.turn == prev.turn:
        tag = "1a" if s_norm > 0 else "1b"
    else:
        tag = "2a" if s_norm > 0 else "2b"
    return tag, None


def _tangency_on_segment_side(R, a, b, want_side):
    """Boundary point grazing the open segment a->b on the wanted side of
    its direction, or None.  Used as the 2a tangency witness: the segment
    from the stop point to the next divergence point must touch the
    boundary on the normalized-left (= previous turn's) side."""
    u = unit(sub(b, a))
    L = norm(sub(b, a))
    best = None

    def consider(q, d):
        nonlocal best
        if best is None or d < best[0]:
            best = (d, q)

    for e in R.edges:
        if not _is_reflex_arc(e):
            continue
        off = cross2(u, sub(e.center, a))
        if abs(abs(off) - e.radius) > 1e-6:
            continue
        if side_sign(off, 1e-12) != want_side:
            continue
        foot = add(a, mul(u, dot(sub(e.center, a), u)))
        q = add(e.center, mul(unit(sub(foot, e.center)), e.radius)) \
            if norm(sub(foot, e.center)) > EPS else foot
        proj = dot(sub(q, a), u)
        if -1e-6 <= proj <= L - 1e-6 and e.distance_to(q) <= 1e-6:
            consider(q, abs(abs(off) - e.radius))
    for vi, v in _reflex_vertices(R):
        d = dist_point_seg(v, a, b)
        if d > 1e-6:
            continue
        proj = dot(sub(v, a), u)
        if not -1e-6 <= proj <= L - 1e-6:
            continue
        if _local_sides_at(R, v, u) <= {want_side, 0}:
            consider(v, d)
    return best[1] if best else None


def excluded_contains(q, rnd, rnd_next):
    """Membership in the newly excluded slab between two rounds: inside
    this round's region but off its own cut, and no longer strictly inside
    the next round's region (the next cut itself counts as excluded)."""
    if dist_point_seg(q, *rnd.ell_bar) <= 1e-7:
        return False
    if rnd.region.location(q) == Location.EXTERIOR:
        return False
    nxt = rnd_next.region.location(q)
    if nxt == Location.EXTERIOR:
        return True
    return nxt == Location.BOUNDARY and \
        dist_point_seg(q, *rnd_next.ell_bar) <= 1e-7


def progress_event(R, rnd, rnd_next):
    """Certify one of the five progress events for a middle round, or None.

    Budgets per trace: stop at a vertex (n), stop-to-divergence common
    tangent (n^2), excluded vertex (n), excluded common-tangent endpoint
    (n^2), excluded bend of a minimum-link path (d).
    """
    if rnd.stop[0] == "Vertex":
        return ("CVertex", rnd.c)
    if rnd.stop[0] == "BoundaryTouch":
        return ("CBTangent", (rnd.c, rnd.b))
    if rnd.stop[0] == "RobberExitLine":
        for v in R.vertices():
            if excluded_contains(v, rnd, rnd_next):
                return ("EVertex", v)
    for v in R.vertices():
        if excluded_contains(v, rnd, rnd_next):
            return ("EVertex", v)
    for tl in common_tangents(R):
        for p in tl.segment:
            if excluded_contains(p, rnd, rnd_next):
                return ("ECommonTangentEndpoint", p)
    if rnd.stop[0] in ("CommonTangent", "EndpointTangent"):
        for p in rnd.stop[1].segment:
            if rnd_next.region.location(p) != Location.EXTERIOR:
                return ("ECommonTangentEndpoint", p)
    if rnd.stop[0] == "BoundaryExit":
        return ("EBend", rnd.c)
    return None


# ---------------------------------------------------------------------------
# the game


class SplineCop:
    """The boundary-aiming cop strategy."""

    def place(self, R):
        return R.edges[0].a

    def move(self, R, cop, robber):
        return cop_move_splinegon(R, cop, robber)


@dataclass
class SplineTrace:
    region: object
    cop_start: tuple
    robber_start: tuple
    moves: list                 # (cop, robber) per round
    rounds: list                # SplineRound or None (capture round)
    captured: bool
    capture_round: int
    violations: list
    n: int
    d: int

    def rounds_used(self):
        return len(self.moves)

    def case_counts(self):
        out = {}
        for rnd in self.rounds:
            if rnd is not None and rnd.case_tag:
                out[rnd.case_tag] = out.get(rnd.case_tag, 0) + 1
        return out

    def event_counts(self):
        out = {}
        for rnd in self.rounds:
            if rnd is not None and rnd.event:
                out[rnd.event[0]] = out.get(rnd.event[0], 0) + 1
        return out

    def to_json(self):
        return {
            "region": self.region.to_json(),
            "copStart": list(self.cop_start),
            "robberStart": list(self.robber_start),
            "moves": [[list(c), list(r)] for c, r in self.moves],
            "rounds": [rnd.to_json() if rnd else None
                       for rnd in self.rounds],
            "captured": self.captured,
            "captureRound": self.capture_round,
            "violations": list(self.violations),
            "n": self.n, "d": self.d,
        }


def round_budget(R, c=4):
    d = R.link_diameter_bound or R.n
    return c * (2 * R.n * R.n + 2 * R.n + d)


def run_splinegon_game(R, cop_strategy=None, robber_strategy=None,
                       max_rounds=None):
    """Play the curved-region game to capture or the round budget."""
    cop_strategy = cop_strategy or SplineCop()
    if robber_strategy is None:
        raise SplineError("a robber strategy is required")
    cap = max_rounds or round_budget(R)
    c = tuple(cop_strategy.place(R))
    r = tuple(robber_strategy.place(R, c))
    trace = SplineTrace(R, c, r, [], [], False, None, [], R.n,
                        R.link_diameter_bound or R.n)
    for i in range(1, cap + 1):
        if sees_spline(c, r, R):
            c = r
            trace.moves.append((c, r))
            trace.rounds.append(None)
            trace.captured = True
            trace.capture_round = i
            break
        c_new, rnd = cop_move_splinegon(R, c, r)
        if not sees_spline(c, c_new, R):
            trace.violations.append("round %d: cop move leaves region" % i)
        r_new = tuple(robber_strategy.move(R, r, c_new, rnd))
        if not sees_spline(r, r_new, R):
            trace.violations.append("round %d: robber move not visible" % i)
        if rnd.region.location(r_new) == Location.EXTERIOR:
            trace.violations.append(
                "round %d: robber crossed the trailing cut" % i)
        c, r = tuple(c_new), r_new
        rnd.r = r
        trace.moves.append((c, r))
        trace.rounds.append(rnd)
    _annotate_trace(trace)
    return trace


def _annotate_trace(trace):
    R = trace.region
    rounds = [rnd for rnd in trace.rounds if rnd is not None]
    for prev, cur in zip(rounds, rounds[1:]):
        tag, witness = classify_round(prev, cur)
        cur.case_tag = tag
        if tag == "2a" and witness is None:
            witness = _tangency_on_segment_side(R, cur.ell[0], cur.b,
                                                prev.turn)
            if witness is None:
                trace.violations.append(
                    "2a round without left-side tangency witness")
        cur._tangency_witness = witness
    for rnd, rnd_next in zip(rounds, rounds[1:]):
        ev = progress_event(R, rnd, rnd_next)
        rnd.event = ev


def verify_spline_trace(trace):
    """Theorem-level checks; returns a list of diagnostics (empty = clean)."""
    probs = list(trace.violations)
    R = trace.region
    if not trace.captured:
        probs.append("no capture within %d rounds" % trace.rounds_used())
    rounds = [rnd for rnd in trace.rounds if rnd is not None]
    for k in range(len(rounds) - 1):
        if rounds[k + 1].area > rounds[k].area + 1e-9:
            probs.append("round %d: active region area not decreasing "
                         "(%.12g -> %.12g)"
                         % (k + 2, rounds[k].area, rounds[k + 1].area))
        prev_region = rounds[k].region
        for pt in rounds[k + 1].ell_bar:
            if prev_region.location(pt) == Location.EXTERIOR:
                probs.append("round %d: cut endpoint outside previous "
                             "active region" % (k + 2))
                break
    cc = trace.case_counts()
    if cc.get("1b"):
        probs.append("case 1b occurred %d times" % cc["1b"])
    for k, rnd in enumerate(rounds[:-1]):
        if rnd.event is None:
            probs.append("round %d: no progress event certified" % (k + 1))
    budgets = {"CVertex": R.n, "CBTangent": R.n * R.n, "EVertex": R.n,
               "ECommonTangentEndpoint": R.n * R.n,
               "EBend": trace.d}
    for kind, count in trace.event_counts().items():
        if count > budgets[kind]:
            probs.append("event budget exceeded: %s %d > %d"
                         % (kind, count, budgets[kind]))
    return probs


# ---------------------------------------------------------------------------
# robber strategies


def region_samples(R, per_edge=8, grid=7):
    """Boundary samples (in boundary order) and interior grid points,
    cached per region."""
    cached = R._cache.get("samples")
    if cached is not None:
        return cached
    boundary = []
    for e in R.edges:
        for k in range(per_edge):
            boundary.append(e.point_at((k + 0.5) / per_edge))
    xs = [p[0] for p in boundary]
    ys = [p[1] for p in boundary]
    interior = []
    for i in range(grid):
        for j in range(grid):
            q = (min(xs) + (max(xs) - min(xs)) * (i + 0.5) / grid,
                 min(ys) + (max(ys) - min(ys)) * (j + 0.5) / grid)
            if R.location(q) == Location.INTERIOR:
                interior.append(q)
    R._cache["samples"] = (boundary, interior)
    return boundary, interior


def _legal_targets(R, r, rnd):
    boundary, interior = region_samples(R)
    out = []
    for q in boundary + interior:
        if rnd is not None and rnd.region.location(q) == Location.EXTERIOR:
            continue
        try:
            if sees_spline(r, q, R):
                out.append(q)
        except SplineError:
            continue
    return out


def _hidden_place(R, cop):
    boundary, interior = region_samples(R)
    best, best_hidden = None, None
    for q in boundary + interior:
        d = norm(sub(q, cop))
        vis = sees_spline(cop, q, R)
        if not vis and (best_hidden is None or d > best_hidden[0]):
            best_hidden = (d, q)
        if best is None or d > best[0]:
            best = (d, q)
    return (best_hidden or best)[1]


class BoundaryCycleRobber:
    """Runs forward around the boundary as far as visibility allows."""

    def place(self, R, cop):
        return _hidden_place(R, cop)

    def move(self, R, r, cop, rnd):
        boundary, _ = region_samples(R)
        m = len(boundary)
        cur = min(range(m), key=lambda i: norm(sub(boundary[i], r)))
        best = None
        for i in range(m):
            gain = (i - cur) % m
            if gain == 0 or gain > int(0.45 * m):
                continue
            q = boundary[i]
            if rnd.region.location(q) == Location.EXTERIOR:
                continue
            if sees_spline(r, q, R) and (best is None or gain > best[0]):
                best = (gain, q)
        return best[1] if best else r


class BayHopRobber:
    """Dives for points the cop cannot see, as far from the cop as it can."""

    def place(self, R, cop):
        return _hidden_place(R, cop)

    def move(self, R, r, cop, rnd):
        targets = _legal_targets(R, r, rnd)
        hidden = [q for q in targets if not sees_spline(cop, q, R)]
        pool = hidden or targets
        if not pool:
            return r
        return max(pool, key=lambda q: (norm(sub(q, cop)), q))


class RandomVisibleRobber:
    """Moves to a uniformly random legal sample point."""

    def __init__(self, seed="0"):
        self.rng = random.Random("spline-robber:%s" % seed)

    def place(self, R, cop):
        boundary, interior = region_samples(R)
        pool = [q for q in boundary + interior
                if not pts_near(q, cop, 1e-7)]
        return self.rng.choice(pool)

    def move(self, R, r, cop, rnd):
        targets = _legal_targets(R, r, rnd)
        if not targets:
            return r
        return targets[self.rng.randrange(len(targets))]


# ---------------------------------------------------------------------------
# scenes


def stadium():
    """Convex track: two straights and two split semicircular caps."""
    return Splinegon([
        seg((-2.0, -1.0), (2.0, -1.0)),
        arc((2.0, -1.0), (3.0, 0.0), (2.0, 0.0), True),
        arc((3.0, 0.0), (2.0, 1.0), (2.0, 0.0), True),
        seg((2.0, 1.0), (-2.0, 1.0)),
        arc((-2.0, 1.0), (-3.0, 0.0), (-2.0, 0.0), True),
        arc((-3.0, 0.0), (-2.0, -1.0), (-2.0, 0.0), True),
    ])


def curved_triangle(sag=0.4):
    """Three inward-bowing arcs between equilateral corners.  The sag must
    keep each arc's extent under the 60-degree corner angle or the horns
    cross themselves."""
    s3 = math.sqrt(3.0)
    v = [(0.0, 2.0), (-s3, -1.0), (s3, -1.0)]
    return Splinegon([arc_through(v[i], v[(i + 1) % 3], sag)
                      for i in range(3)])


def scene_with_bays():
    """Room with one inward arc bump on the ceiling, making two bays."""
    return Splinegon([
        seg((-4.0, 0.0), (4.0, 0.0)),
        seg((4.0, 0.0), (4.0, 3.0)),
        seg((4.0, 3.0), (1.5, 3.0)),
        arc_through((1.5, 3.0), (-1.5, 3.0), 0.9),
        seg((-1.5, 3.0), (-4.0, 3.0)),
        seg((-4.0, 3.0), (-4.0, 0.0)),
    ])


def star_region(lobes=4, extent_ratio=0.7):
    """Pinwheel of inward-bowing arcs: the cycling-robber showcase.  Each
    arc's extent is a fixed fraction of the corner angle so the lobes stay
    open."""
    lobes = max(3, lobes)
    v = [on_circle((0.0, 0.0), 2.0, 2 * math.pi * k / lobes + math.pi / 2)
         for k in range(lobes)]
    corner = math.pi - 2 * math.pi / lobes
    edges = []
    for k in range(lobes):
        a, b = v[k], v[(k + 1) % lobes]
        ch = norm(sub(b, a))
        sag = ch / 2 * math.tan(extent_ratio * corner / 4)
        edges.append(arc_through(a, b, sag))
    return Splinegon(edges)


def crescent():
    """Two internally tangent circles: the cusped region whose link
    diameter is infinite.  Construction only; validation must reject it."""
    outer = [arc(on_circle((0.0, 0.0), 2.0, 2 * math.pi * k / 3),
                 on_circle((0.0, 0.0), 2.0, 2 * math.pi * (k + 1) / 3),
                 (0.0, 0.0), True) for k in range(3)]
    inner = [arc(on_circle((1.0, 0.0), 1.0, -2 * math.pi * k / 3),
                 on_circle((1.0, 0.0), 1.0, -2 * math.pi * (k + 1) / 3),
                 (1.0, 0.0), False) for k in range(3)]
    return Splinegon(outer + inner)


def random_arcgon(n, seed):
    """Random mixed segment/arc region with up to n edges; deterministic
    per seed, retried until validation passes."""
    if n < 3:
        raise SplineError("need at least 3 edges")
    rng = random.Random("arcgon:%d:%d" % (seed, n))
    for attempt in range(200):
        # deep concave bulges make richer regions but fail simplicity more
        # often, so the depth backs off as attempts accumulate
        depth = max(0.12, 0.42 - 0.003 * attempt)
        angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
        if min((angles[(i + 1) % n] - angles[i]) % (2 * math.pi)
               for i in range(n)) < min(0.2, 3.0 / n):
            continue
        pts = [on_circle((0.0, 0.0), 3.0 + rng.uniform(-1.2, 1.2), a)
               for a in angles]
        edges = []
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            ch = norm(sub(b, a))
            roll = rng.random()
            if roll < 0.25:
                edges.append(seg(a, b))
            elif roll < 0.55:
                edges.append(arc_through(a, b, -rng.uniform(0.1, 0.4) * ch))
            else:
                edges.append(arc_through(a, b, rng.uniform(0.1, depth) * ch))
        try:
            return Splinegon(edges)
        except SplineError:
            continue
    raise SplineError("random_arcgon failed after 200 attempts")


def generate_scene(family, size, seed=0):
    if family == "Stadium":
        return stadium()
    if family == "CurvedTriangle":
        return curved_triangle()
    if family == "GodfriedRegion":
        return star_region(max(3, size))
    if family == "Crescent":
        return crescent()
    raise SplineError("unknown scene family: %s" % family)
