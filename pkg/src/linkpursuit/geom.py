"""Exact planar primitives: rational points, simple polygons, visibility.

All polygon-mode computation is done in exact rational arithmetic (gmpy2.mpq,
falling back to fractions.Fraction), so there are no tolerances anywhere in
this module.  Derived points (ray hits, window endpoints) stay rational.
"""

from enum import Enum
from fractions import Fraction
from functools import cmp_to_key

try:
    from gmpy2 import mpq as _mpq

    def _make_scalar(v):
        return _mpq(v)

    _SCALAR_TYPES = (type(_mpq(0)), Fraction)
except ImportError:  # pragma: no cover - gmpy2 is normally present
    _mpq = Fraction

    def _make_scalar(v):
        return Fraction(v)

    _SCALAR_TYPES = (Fraction,)


class GeometryError(Exception):
    """Raised on precondition violations (exterior points, bad polygons)."""


def scalar(v):
    """Coerce v to an exact rational.

    Accepts ints, rationals, strings like "3/4" or "0.25" (parsed exactly),
    and floats (interpreted via their shortest decimal repr, so a literal
    like 0.5 means exactly 1/2).
    """
    if isinstance(v, _SCALAR_TYPES):
        return _make_scalar(v)
    if isinstance(v, float):
        return _make_scalar(Fraction(repr(v)))
    if isinstance(v, str):
        return _make_scalar(Fraction(v))
    return _make_scalar(v)


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = scalar(x)
        self.y = scalar(y)

    def __eq__(self, other):
        return isinstance(other, Point) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return "Point(%s, %s)" % (self.x, self.y)

    def __lt__(self, other):
        return (self.x, self.y) < (other.x, other.y)

    def to_floats(self):
        return (float(self.x), float(self.y))

    def to_json(self):
        return [_rat_str(self.x), _rat_str(self.y)]


def _rat_str(q):
    f = Fraction(q)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def pt(x, y):
    return Point(x, y)


class Orient(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def cross(ox, oy, ax, ay, bx, by):
    """Exact cross product (a-o) x (b-o)."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def orient(p, q, r):
    """Turn direction of p -> q -> r."""
    c = cross(p.x, p.y, q.x, q.y, r.x, r.y)
    if c > 0:
        return Orient.LEFT
    if c < 0:
        return Orient.RIGHT
    return Orient.COLLINEAR


def on_segment(a, b, p):
    """True iff p lies on the closed segment ab (a == b allowed)."""
    if orient(a, b, p) is not Orient.COLLINEAR:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def dist2(a, b):
    dx, dy = b.x - a.x, b.y - a.y
    return dx * dx + dy * dy


class Location(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


class Polygon:
    """Simple polygon, counterclockwise vertex order.

    Collinear consecutive vertices are permitted; repeated vertices and
    self-intersections are not.
    """

    __slots__ = ("vertices", "n", "_reflex", "_cache")

    def __init__(self, vertices, validate=True):
        vs = tuple(v if isinstance(v, Point) else Point(*v) for v in vertices)
        if len(vs) < 3:
            raise GeometryError("polygon needs at least 3 vertices")
        if _signed_area2(vs) < 0:
            raise GeometryError("polygon must be counterclockwise")
        self.vertices = vs
        self.n = len(vs)
        self._reflex = None
        self._cache = {}
        if validate:
            self._check_simple()

    def _check_simple(self):
        vs = self.vertices
        n = self.n
        if len(set(vs)) != n:
            raise GeometryError("repeated vertex")
        for i in range(n):
            a1, a2 = vs[i], vs[(i + 1) % n]
            if a1 == a2:
                raise GeometryError("zero-length edge")
            for j in range(i + 1, n):
                b1, b2 = vs[j], vs[(j + 1) % n]
                adjacent = (j == i + 1) or (i == 0 and j == n - 1)
                if adjacent:
                    # may share exactly the common endpoint
                    shared = a2 if j == i + 1 else a1
                    other_a = a1 if j == i + 1 else a2
                    other_b = b2 if j == i + 1 else b1
                    if on_segment(b1, b2, other_a) and other_a != shared:
                        raise GeometryError("adjacent edges overlap")
                    if on_segment(a1, a2, other_b) and other_b != shared:
                        raise GeometryError("adjacent edges overlap")
                else:
                    if _segments_touch(a1, a2, b1, b2):
                        raise GeometryError(
                            "non-adjacent edges intersect: %d-%d" % (i, j))

    def edges(self):
        vs = self.vertices
        for i in range(self.n):
            yield vs[i], vs[(i + 1) % self.n]

    def edge(self, i):
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    def area2(self):
        """Twice the (positive) area."""
        return _signed_area2(self.vertices)

    def is_reflex(self, i):
        """True iff vertex i has interior angle > 180 degrees."""
        if self._reflex is None:
            vs = self.vertices
            self._reflex = tuple(
                orient(vs[k - 1], vs[k], vs[(k + 1) % self.n]) is Orient.RIGHT
                for k in range(self.n))
        return self._reflex[i]

    def reflex_indices(self):
        return [i for i in range(self.n) if self.is_reflex(i)]

    def is_convex(self):
        return not any(self.is_reflex(i) for i in range(self.n))

    def to_json(self):
        return {"vertices": [v.to_json() for v in self.vertices]}

    @staticmethod
    def from_json(obj):
        return Polygon([Point(x, y) for x, y in obj["vertices"]])

    def __repr__(self):
        return "Polygon(%d vertices)" % self.n


def _signed_area2(vs):
    s = scalar(0)
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        s += a.x * b.y - b.x * a.y
    return s


def _segments_touch(a1, a2, b1, b2):
    """True iff closed segments a1a2 and b1b2 share any point."""
    o1 = orient(a1, a2, b1)
    o2 = orient(a1, a2, b2)
    o3 = orient(b1, b2, a1)
    o4 = orient(b1, b2, a2)
    if o1 is not o2 and o3 is not o4:
        return True
    if o1 is Orient.COLLINEAR and on_segment(a1, a2, b1):
        return True
    if o2 is Orient.COLLINEAR and on_segment(a1, a2, b2):
        return True
    if o3 is Orient.COLLINEAR and on_segment(b1, b2, a1):
        return True
    if o4 is Orient.COLLINEAR and on_segment(b1, b2, a2):
        return True
    return False


def point_location(p, poly):
    """Exact classification of p against poly: interior/boundary/exterior."""
    for a, b in poly.edges():
        if on_segment(a, b, p):
            return Location.BOUNDARY
    # ray to +x, half-open rule on y
    inside = False
    for a, b in poly.edges():
        if (a.y > p.y) != (b.y > p.y):
            # x coordinate of edge at height p.y
            t = (p.y - a.y) / (b.y - a.y)
            xint = a.x + t * (b.x - a.x)
            if xint > p.x:
                inside = not inside
    return Location.INTERIOR if inside else Location.EXTERIOR


def _seg_param(a, b, p):
    """Parameter t with p = a + t*(b-a), assuming p on line ab."""
    if b.x != a.x:
        return (p.x - a.x) / (b.x - a.x)
    return (p.y - a.y) / (b.y - a.y)


def _line_intersect(a, b, c, d):
    """Intersection point of lines ab and cd, or None if parallel."""
    r_x, r_y = b.x - a.x, b.y - a.y
    s_x, s_y = d.x - c.x, d.y - c.y
    denom = r_x * s_y - r_y * s_x
    if denom == 0:
        return None
    t = ((c.x - a.x) * s_y - (c.y - a.y) * s_x) / denom
    return Point(a.x + t * r_x, a.y + t * r_y)


def _segment_boundary_params(a, b, poly):
    """Sorted unique parameters t in [0,1] where segment ab meets poly's boundary.

    Collinear overlaps contribute both overlap endpoints.
    """
    ts = set()
    for c, d in poly.edges():
        o1 = orient(a, b, c)
        o2 = orient(a, b, d)
        if o1 is Orient.COLLINEAR and o2 is Orient.COLLINEAR:
            # edge collinear with segment line: overlap interval
            for q in (c, d):
                if on_segment(a, b, q):
                    ts.add(_seg_param(a, b, q))
            for q in (a, b):
                if on_segment(c, d, q):
                    ts.add(_seg_param(a, b, q))
            continue
        o3 = orient(c, d, a)
        o4 = orient(c, d, b)
        if (o1 is o2 and o1 is not Orient.COLLINEAR) or \
           (o3 is o4 and o3 is not Orient.COLLINEAR):
            continue
        q = _line_intersect(a, b, c, d)
        if q is None:
            continue
        if on_segment(a, b, q) and on_segment(c, d, q):
            ts.add(_seg_param(a, b, q))
    return sorted(ts)


def sees(a, b, poly):
    """True iff every point of segment ab is interior or boundary of poly.

    Boundary contact (including grazing reflex vertices) counts as visible.
    Raises GeometryError if a or b lies outside the polygon.
    """
    la = point_location(a, poly)
    lb = point_location(b, poly)
    if la is Location.EXTERIOR or lb is Location.EXTERIOR:
        raise GeometryError("sees() endpoint outside polygon")
    if a == b:
        return True
    ts = _segment_boundary_params(a, b, poly)
    checkpoints = [scalar(0)] + ts + [scalar(1)]
    half = scalar(1) / 2
    for t0, t1 in zip(checkpoints, checkpoints[1:]):
        if t0 == t1:
            continue
        tm = (t0 + t1) * half
        m = Point(a.x + tm * (b.x - a.x), a.y + tm * (b.y - a.y))
        if point_location(m, poly) is Location.EXTERIOR:
            return False
    return True


# ---------------------------------------------------------------------------
# visibility polygon


class VisRegion:
    """Visibility region of a viewpoint: a cyclic boundary plus degenerate
    one-dimensional spurs (kept explicitly, each attached at a boundary point).

    Membership treats spurs as part of the region.
    """

    __slots__ = ("viewpoint", "polygon", "boundary", "spurs", "windows")

    def __init__(self, viewpoint, polygon, boundary, spurs, windows):
        self.viewpoint = viewpoint
        self.polygon = polygon
        self.boundary = boundary
        self.spurs = spurs
        self.windows = windows  # chords of the host polygon bounding the region

    def contains(self, p):
        if point_location(p, self.polygon) is Location.EXTERIOR:
            return False
        return sees(self.viewpoint, p, self.polygon)

    def to_json(self):
        return {
            "viewpoint": self.viewpoint.to_json(),
            "boundary": [q.to_json() for q in self.boundary],
            "spurs": [[q.to_json() for q in s] for s in self.spurs],
        }


def _dir_key(dx, dy):
    """Canonical representative of a direction vector (same ray from origin)."""
    if dx != 0:
        s = dx if dx > 0 else -dx
    else:
        s = dy if dy > 0 else -dy
    return (dx / s, dy / s)


def _angle_cmp(d1, d2):
    """CCW angular order starting just above the +x axis."""
    def half(d):
        dx, dy = d
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
    h1, h2 = half(d1), half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = d1[0] * d2[1] - d1[1] * d2[0]
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def _ray_edge_hits(x, dx, dy, poly):
    """All (t, edge_index) with t > 0 where ray x + t*(dx,dy) meets an edge.

    Collinear edges contribute their endpoints' parameters.
    """
    hits = []
    far = Point(x.x + dx, x.y + dy)
    for i in range(poly.n):
        c, d = poly.edge(i)
        o1 = orient(x, far, c)
        o2 = orient(x, far, d)
        if o1 is Orient.COLLINEAR and o2 is Orient.COLLINEAR:
            for q in (c, d):
                t = _ray_param(x, dx, dy, q)
                if t is not None and t > 0:
                    hits.append((t, i))
            continue
        if o1 is o2:
            continue
        q = _line_intersect(x, far, c, d)
        if q is None or not on_segment(c, d, q):
            continue
        t = _ray_param(x, dx, dy, q)
        if t is not None and t > 0:
            hits.append((t, i))
    return hits


def _ray_param(x, dx, dy, q):
    """t such that q = x + t*(dx,dy), or None if q off the ray's line."""
    if dx != 0:
        t = (q.x - x.x) / dx
    elif dy != 0:
        t = (q.y - x.y) / dy
    else:
        return None
    if x.y + t * dy != q.y or x.x + t * dx != q.x:
        return None
    return t


def visibility_polygon(x, poly):
    """The visibility region V(x): all points of poly visible from x.

    Raises GeometryError if x is exterior.  The result keeps degenerate
    spurs (1-dimensional features) explicitly.
    """
    if point_location(x, poly) is Location.EXTERIOR:
        raise GeometryError("viewpoint outside polygon")

    # critical directions: toward every distinct vertex direction
    dirmap = {}
    for v in poly.vertices:
        dx, dy = v.x - x.x, v.y - x.y
        if dx == 0 and dy == 0:
            continue
        dirmap.setdefault(_dir_key(dx, dy), []).append(v)
    dirs = sorted(dirmap.keys(), key=cmp_to_key(_angle_cmp))
    m = len(dirs)
    if m < 2:
        raise GeometryError("degenerate polygon directions")

    # per wedge (dirs[k], dirs[k+1]): the visible far edge portion, or None
    portions = [None] * m
    for k in range(m):
        d1 = dirs[k]
        d2 = dirs[(k + 1) % m]
        c = d1[0] * d2[1] - d1[1] * d2[0]
        if c <= 0:
            continue  # wedge of >= 180 degrees: no polygon interior here
        bx, by = d1[0] + d2[0], d1[1] + d2[1]
        hits = _ray_edge_hits(x, bx, by, poly)
        if not hits:
            continue
        tmin, emin = min(hits)
        half = scalar(1) / 2
        mid = Point(x.x + tmin * half * bx, x.y + tmin * half * by)
        if point_location(mid, poly) is Location.EXTERIOR:
            continue
        ea, eb = poly.edge(emin)
        far1 = Point(x.x + d1[0], x.y + d1[1])
        far2 = Point(x.x + d2[0], x.y + d2[1])
        p_start = _line_intersect(x, far1, ea, eb)
        p_end = _line_intersect(x, far2, ea, eb)
        if p_start is None or p_end is None:  # pragma: no cover - defensive
            continue
        portions[k] = (p_start, p_end)

    boundary = []
    spurs = []
    windows = []

    def param_along(k, q):
        dx, dy = dirs[k]
        t = _ray_param(x, dx, dy, q)
        return t if t is not None else scalar(0)

    for k in range(m):
        prev_portion = portions[(k - 1) % m]
        next_portion = portions[k]
        d = dirs[k]
        a_pt = prev_portion[1] if prev_portion is not None else x
        b_pt = next_portion[0] if next_portion is not None else x
        t_a = param_along(k, a_pt)
        t_b = param_along(k, b_pt)

        # farthest visible point along this critical ray
        cand = sorted({t for t, _ in _ray_edge_hits(x, d[0], d[1], poly)},
                      reverse=True)
        t_f = scalar(0)
        for t in cand:
            q = Point(x.x + t * d[0], x.y + t * d[1])
            if point_location(q, poly) is not Location.EXTERIOR and \
                    sees(x, q, poly):
                t_f = t
                break

        t_hi = max(t_a, t_b)
        if t_f > t_hi:
            base = Point(x.x + t_hi * d[0], x.y + t_hi * d[1])
            tip = Point(x.x + t_f * d[0], x.y + t_f * d[1])
            spurs.append((base, tip))
        if prev_portion is None and next_portion is None:
            continue
        if boundary and boundary[-1] != a_pt:
            boundary.append(a_pt)
        elif not boundary:
            boundary.append(a_pt)
        if b_pt != a_pt:
            windows.append((a_pt, b_pt) if t_a < t_b else (b_pt, a_pt))
            boundary.append(b_pt)
        if next_portion is not None and next_portion[1] != boundary[-1]:
            boundary.append(next_portion[1])

    # collapse duplicates (cyclic)
    cleaned = []
    for q in boundary:
        if not cleaned or cleaned[-1] != q:
            cleaned.append(q)
    while len(cleaned) > 1 and cleaned[0] == cleaned[-1]:
        cleaned.pop()

    return VisRegion(x, poly, cleaned, spurs, windows)


def visibility_graph(poly):
    """Visibility graph of the polygon's vertices, as a graphgame.Graph."""
    from . import graphgame

    n = poly.n
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if sees(poly.vertices[i], poly.vertices[j], poly):
                edges.append((i, j))
    return graphgame.Graph(n, edges)
