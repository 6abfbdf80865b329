"""SVG rendering for polygons, pockets, game traces, and curved regions.

All renderers return an SVG document string.  Geometry is drawn in model
coordinates inside a y-flipped group so that y grows upward, matching the
rest of the package.
"""

import math

PALETTE = {
    "boundary": "#1f2430",
    "fill": "#f3f4f6",
    "pocket": "#f2a65a80",
    "mouth": "#d94f30",
    "cop": "#2a6fdb",
    "robber": "#d43d51",
    "cut": "#7a7d85",
    "region": "#2a6fdb22",
    "ray": "#2a9d8f",
}


def _fmt(x):
    return "%.6g" % float(x)


def _pt(p):
    if hasattr(p, "to_floats"):
        return p.to_floats()
    return (float(p[0]), float(p[1]))


def _bounds(points, pad=0.5):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)


def svg_document(body, bounds, width=640):
    x0, y0, x1, y1 = bounds
    w, h = x1 - x0, y1 - y0
    height = int(width * h / w) if w > 0 else width
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="%s %s %s %s">\n'
        '<g transform="translate(0,%s) scale(1,-1)">\n%s</g>\n</svg>\n'
        % (width, height, _fmt(x0), _fmt(0), _fmt(w), _fmt(h),
           _fmt(y1), body)
    )


def _polyline(points, stroke, width=0.04, dash=None, fill="none"):
    d = " ".join("%s,%s" % (_fmt(p[0]), _fmt(p[1])) for p in points)
    dash_attr = ' stroke-dasharray="%s"' % dash if dash else ""
    return ('<polyline points="%s" fill="%s" stroke="%s" '
            'stroke-width="%s"%s/>\n' % (d, fill, stroke, _fmt(width),
                                         dash_attr))


def _marker(p, color, r=0.09):
    return ('<circle cx="%s" cy="%s" r="%s" fill="%s"/>\n'
            % (_fmt(p[0]), _fmt(p[1]), _fmt(r), color))


def _polygon_path(poly, fill, stroke, width=0.05):
    pts = [_pt(v) for v in poly.vertices]
    d = "M " + " L ".join("%s %s" % (_fmt(p[0]), _fmt(p[1])) for p in pts) \
        + " Z"
    return ('<path d="%s" fill="%s" stroke="%s" stroke-width="%s"/>\n'
            % (d, fill, stroke, _fmt(width)))


def render_polygon(poly, extras="", width=640):
    pts = [_pt(v) for v in poly.vertices]
    body = _polygon_path(poly, PALETTE["fill"], PALETTE["boundary"]) + extras
    return svg_document(body, _bounds(pts), width)


def render_pockets(poly, pockets, width=640):
    extras = []
    for pk in pockets:
        extras.append(_polygon_path(pk.region, PALETTE["pocket"], "none"))
        m = [_pt(pk.mouth[0]), _pt(pk.mouth[1])]
        extras.append(_polyline(m, PALETTE["mouth"], 0.06, dash="0.12,0.08"))
    return render_polygon(poly, "".join(extras), width)


def render_polygon_trace(trace, width=640):
    extras = []
    for ar in trace.active_regions:
        if ar is None:
            continue
        extras.append(_polygon_path(ar.region, PALETTE["region"], "none"))
        extras.append(_polyline([_pt(ar.cut[0]), _pt(ar.cut[1])],
                                PALETTE["cut"], 0.03, dash="0.1,0.1"))
    cops = [_pt(trace.cop_start)] + [_pt(c) for c, _ in trace.moves]
    robs = [_pt(trace.robber_start)] + [_pt(r) for _, r in trace.moves]
    extras.append(_polyline(cops, PALETTE["cop"], 0.05))
    extras.append(_polyline(robs, PALETTE["robber"], 0.05,
                            dash="0.18,0.1"))
    extras.append(_marker(cops[0], PALETTE["cop"]))
    extras.append(_marker(robs[0], PALETTE["robber"]))
    if trace.captured:
        extras.append(_marker(cops[-1], PALETTE["boundary"], 0.12))
    return render_polygon(trace.polygon, "".join(extras), width)


def splinegon_path_d(R):
    parts = ["M %s %s" % (_fmt(R.edges[0].a[0]), _fmt(R.edges[0].a[1]))]
    for e in R.edges:
        if e.kind == "seg":
            parts.append("L %s %s" % (_fmt(e.b[0]), _fmt(e.b[1])))
        else:
            sweep = 1 if e.ccw else 0
            parts.append("A %s %s 0 0 %d %s %s"
                         % (_fmt(e.radius), _fmt(e.radius), sweep,
                            _fmt(e.b[0]), _fmt(e.b[1])))
    parts.append("Z")
    return " ".join(parts)


def _spline_samples(R, per_edge=16):
    out = []
    for e in R.edges:
        for k in range(per_edge):
            out.append(e.point_at(k / per_edge))
    return out


def render_splinegon(R, extras="", width=640):
    body = ('<path d="%s" fill="%s" stroke="%s" stroke-width="0.05"/>\n'
            % (splinegon_path_d(R), PALETTE["fill"], PALETTE["boundary"]))
    return svg_document(body + extras, _bounds(_spline_samples(R)), width)


def render_splinegon_trace(trace, width=640):
    extras = []
    rounds = [rnd for rnd in trace.rounds if rnd is not None]
    for rnd in rounds:
        extras.append(
            '<path d="%s" fill="%s" stroke="none"/>\n'
            % (splinegon_path_d(rnd.region), PALETTE["region"]))
    for rnd in rounds:
        o, u = rnd.ell
        span = math.dist(rnd.c_prev, rnd.c) or 1.0
        tip = (o[0] + u[0] * span, o[1] + u[1] * span)
        extras.append(_polyline([o, tip], PALETTE["ray"], 0.03))
        extras.append(_polyline(list(rnd.ell_bar), PALETTE["cut"], 0.03,
                                dash="0.1,0.1"))
    cops = [trace.cop_start] + [c for c, _ in trace.moves]
    robs = [trace.robber_start] + [r for _, r in trace.moves]
    extras.append(_polyline(cops, PALETTE["cop"], 0.05))
    extras.append(_polyline(robs, PALETTE["robber"], 0.05, dash="0.18,0.1"))
    extras.append(_marker(cops[0], PALETTE["cop"]))
    extras.append(_marker(robs[0], PALETTE["robber"]))
    if trace.captured:
        extras.append(_marker(cops[-1], PALETTE["boundary"], 0.12))
    return render_splinegon(trace.region, "".join(extras), width)
