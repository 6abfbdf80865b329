// Small planar helpers for the advisory legal-region test.  The server
// is authoritative; this code only decides whether a click is worth a
// request at all, so ties go to "submit it".

export type Pt = [number, number];

const EPS = 1e-9;

function cross(ox: number, oy: number, ax: number, ay: number,
               bx: number, by: number): number {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

export function onSegment(p: Pt, a: Pt, b: Pt): boolean {
  const area = cross(a[0], a[1], b[0], b[1], p[0], p[1]);
  const len = Math.hypot(b[0] - a[0], b[1] - a[1]);
  if (len < EPS) return Math.hypot(p[0] - a[0], p[1] - a[1]) < EPS;
  if (Math.abs(area) / len > EPS) return false;
  const dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]);
  return dot >= -EPS && dot <= len * len + EPS;
}

/** Boundary-inclusive point-in-polygon by crossing parity. */
export function pointInPolygon(p: Pt, poly: Pt[]): boolean {
  const n = poly.length;
  if (n < 3) return false;
  for (let i = 0; i < n; i++) {
    if (onSegment(p, poly[i], poly[(i + 1) % n])) return true;
  }
  let inside = false;
  for (let i = 0, j = n - 1; i < n; j = i++) {
    const [xi, yi] = poly[i];
    const [xj, yj] = poly[j];
    const hits = (yi > p[1]) !== (yj > p[1]) &&
      p[0] < ((xj - xi) * (p[1] - yi)) / (yj - yi) + xi;
    if (hits) inside = !inside;
  }
  return inside;
}

export function boundingBox(pts: Pt[]): { x0: number; y0: number;
                                          x1: number; y1: number } {
  let x0 = Infinity, y0 = Infinity, x1 = -Infinity, y1 = -Infinity;
  for (const [x, y] of pts) {
    x0 = Math.min(x0, x); y0 = Math.min(y0, y);
    x1 = Math.max(x1, x); y1 = Math.max(y1, y);
  }
  return { x0, y0, x1, y1 };
}
