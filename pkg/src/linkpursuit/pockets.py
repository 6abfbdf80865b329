"""Pockets, maximal pockets, visibility-increasing edges, and the
constructive ear-removal dismantling of a simple polygon."""

from dataclasses import dataclass

from .geom import (GeometryError, Location, Point, Polygon, on_segment,
                   point_location, scalar, sees, visibility_graph,
                   _ray_edge_hits)
from .graphgame import DismantleCertificate, dominates


class ConsistencyError(Exception):
    """A geometric step contradicted a property the construction relies on.

    Surfaced loudly: this would falsify the ear-removal argument, never a
    condition to ignore.
    """


@dataclass
class Pocket:
    u: int                  # edge endpoint that cannot see into the pocket
    v: int                  # reflex endpoint; ray u->v defines the mouth
    t: Point                # first boundary point beyond v on the ray
    region: Polygon         # boundary path v..t plus the mouth t->v
    mouth: tuple            # (v point, t)


def ray_first_exit(a, b, poly):
    """First point beyond b where the ray from a through b leaves the closed
    polygon.  Grazing contact (touch without crossing) does not stop the ray;
    running along a collinear boundary chain continues to the chain's end.
    """
    dx, dy = b.x - a.x, b.y - a.y
    hits = sorted({t for t, _ in _ray_edge_hits(a, dx, dy, poly) if t >= 1})
    if not hits:
        raise GeometryError("ray never meets the boundary beyond b")
    half = scalar(1) / 2
    prev = scalar(1)
    for t in hits:
        if t > prev:
            tm = (prev + t) * half
            m = Point(a.x + tm * dx, a.y + tm * dy)
            if point_location(m, poly) is Location.EXTERIOR:
                if prev == 1:
                    raise GeometryError("ray exits immediately past b")
                return Point(a.x + prev * dx, a.y + prev * dy)
        prev = t
    return Point(a.x + prev * dx, a.y + prev * dy)


def _boundary_path(poly, v_idx, t, forward):
    """Vertices from v along the boundary (forward or backward) up to and
    including t, where t lies on some edge of the walk."""
    vs = poly.vertices
    n = poly.n
    path = [vs[v_idx]]
    i = v_idx
    for _ in range(n + 1):
        j = (i + 1) % n if forward else (i - 1) % n
        a, b = vs[i], vs[j]
        if on_segment(a, b, t) and t != a:
            if t != path[-1]:
                path.append(t)
            return path
        path.append(b)
        i = j
    raise GeometryError("boundary walk never reached t")


def pocket(poly, u, v):
    """Pocket(u, v) behind reflex vertex v, or None if v is not reflex.

    u and v must be the endpoints of a polygon edge (either orientation).
    """
    n = poly.n
    forward = (v == (u + 1) % n)
    if not forward and v != (u - 1) % n:
        raise GeometryError("uv is not a polygon edge")
    if not poly.is_reflex(v):
        return None
    up, vp = poly.vertices[u], poly.vertices[v]
    t = ray_first_exit(up, vp, poly)
    # sigma: the boundary path from v to t that does not contain u
    path = _boundary_path(poly, v, t, forward)
    # the mouth may graze reflex vertices of sigma (collinear cases), making
    # the region weakly simple (pinched); skip the strict simplicity check
    region = Polygon(path if forward else list(reversed(path)), validate=False)
    return Pocket(u, v, t, region, (vp, t))


def _region_contains(outer, inner):
    """inner subset of outer, for two pockets of the same polygon."""
    if inner.area2() > outer.area2():
        return False
    half = scalar(1) / 2
    for a, b in inner.edges():
        if point_location(a, outer) is Location.EXTERIOR:
            return False
        m = Point((a.x + b.x) * half, (a.y + b.y) * half)
        if point_location(m, outer) is Location.EXTERIOR:
            return False
    return True


def all_pockets(poly):
    out = []
    n = poly.n
    for i in range(n):
        j = (i + 1) % n
        for u, v in ((i, j), (j, i)):
            p = pocket(poly, u, v)
            if p is not None:
                out.append(p)
    return out


def maximal_pockets(poly):
    """Pockets whose region is not properly contained in another pocket's."""
    ps = all_pockets(poly)
    out = []
    for p in ps:
        maximal = True
        for q in ps:
            if q is p:
                continue
            if _region_contains(q.region, p.region) and \
                    q.region.area2() > p.region.area2():
                maximal = False
                break
        if maximal:
            out.append(p)
    return out


@dataclass
class VisIncreasingEdge:
    u: int
    v: int


def visibility_increasing_edges(poly):
    """Edges along which visibility polygons nest toward v.

    For a convex polygon every edge qualifies; otherwise these are the
    edges of the maximal pockets (at least two for any nonconvex polygon).
    """
    if poly.is_convex():
        return [VisIncreasingEdge(i, (i + 1) % poly.n)
                for i in range(poly.n)]
    return [VisIncreasingEdge(p.u, p.v) for p in maximal_pockets(poly)]


def check_nesting_along_edge(poly, u, v, samples=11):
    """Sampled check that visibility regions nest along edge uv: for p1
    before p2 on the edge, every sampled visible point of p1 is visible
    from p2.  Exact arithmetic per sample."""
    up, vp = poly.vertices[u], poly.vertices[v]
    params = [scalar(k) / (samples + 1) for k in range(samples + 2)]
    pts = [Point(up.x + t * (vp.x - up.x), up.y + t * (vp.y - up.y))
           for t in params]
    probe = list(poly.vertices)
    for a, b in poly.edges():
        probe.append(Point((a.x + b.x) / 2, (a.y + b.y) / 2))
    for p1, p2 in zip(pts, pts[1:]):
        for q in probe:
            if sees(p1, q, poly) and not sees(p2, q, poly):
                return False
    return True


def geometric_dismantling(poly, verify_limit=14):
    """Full dismantling order of the polygon's vertices by ear removal.

    Repeatedly takes a maximal pocket's edge uv, checks that v dominates u
    in the current visibility graph, removes the ear at u, and recurses;
    a convex remainder is appended in boundary order.  Returns a
    DismantleCertificate over the original vertex indices.

    Raises ConsistencyError if a claimed domination or the induced-subgraph
    property fails (either would falsify the ear-removal argument).
    """
    order = []
    doms = []
    current = poly
    labels = list(range(poly.n))

    while not current.is_convex():
        g = visibility_graph(current)
        pk = maximal_pockets(current)[0]
        u, v = pk.u, pk.v
        if not dominates(g, v, u):
            raise ConsistencyError(
                "pocket edge (%d,%d): v does not dominate u in the visibility"
                " graph" % (labels[u], labels[v]))
        rest = [current.vertices[k] for k in range(current.n) if k != u]
        try:
            smaller = Polygon(rest)
        except GeometryError as e:
            raise ConsistencyError("ear removal broke simplicity: %s" % e)
        if current.n <= verify_limit:
            sub, idx = g.induced([k for k in range(current.n) if k != u])
            if set(visibility_graph(smaller).edges()) != set(sub.edges()):
                raise ConsistencyError(
                    "visibility graph after ear removal differs from the"
                    " induced subgraph")
        order.append(labels[u])
        doms.append(labels[v])
        del labels[u]
        current = smaller

    # convex remainder: complete visibility graph, any order works
    for k in range(current.n - 1):
        order.append(labels[k])
        doms.append(labels[k + 1])
    order.append(labels[-1])
    doms.append(labels[-1])
    return DismantleCertificate(order, doms)


def pocket_interior_invisible_from_u(poly, pk, samples=5):
    """Sampled check of the defining pocket property: u sees no point of the
    pocket region off the mouth line."""
    up = poly.vertices[pk.u]
    vp = pk.mouth[0]
    region = pk.region
    pts = list(region.vertices)
    half = scalar(1) / 2
    for a, b in region.edges():
        pts.append(Point((a.x + b.x) * half, (a.y + b.y) * half))
    # a few interior-ish points: midpoints between vertex pairs that fall inside
    vs = region.vertices
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            m = Point((vs[i].x + vs[j].x) * half, (vs[i].y + vs[j].y) * half)
            if point_location(m, region) is Location.INTERIOR:
                pts.append(m)
    from .geom import Orient, orient
    for q in pts:
        on_mouth_line = orient(up, vp, q) is Orient.COLLINEAR
        if on_mouth_line:
            continue
        if point_location(q, region) is Location.EXTERIOR:
            continue
        if sees(up, q, poly):
            return False
    return True
