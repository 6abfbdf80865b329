// Canvas rendering for polygon sessions.  World coordinates are mapped
// into the canvas with y flipped so the arena reads the usual way up.
// Curved sessions are shown via the server's rendered trace instead.

import { PointPair, SessionState, PolygonArena } from './api.js';
import { Pt, boundingBox } from './geometry.js';

export interface Transform {
  scale: number;
  ox: number;
  oy: number;
  height: number;
}

export function toWorld(t: Transform, px: number, py: number): Pt {
  return [(px - t.ox) / t.scale, (t.height - py - t.oy) / t.scale];
}

export function toPixel(t: Transform, p: Pt): [number, number] {
  return [p[0] * t.scale + t.ox, t.height - (p[1] * t.scale + t.oy)];
}

export function fitTransform(pts: Pt[], width: number, height: number,
                             pad = 24): Transform {
  const bb = boundingBox(pts);
  const spanX = Math.max(bb.x1 - bb.x0, 1e-9);
  const spanY = Math.max(bb.y1 - bb.y0, 1e-9);
  const scale = Math.min((width - 2 * pad) / spanX,
                         (height - 2 * pad) / spanY);
  return {
    scale,
    ox: pad - bb.x0 * scale,
    oy: pad - bb.y0 * scale,
    height,
  };
}

export function arenaPoints(arena: PolygonArena): Pt[] {
  return arena.vertices.map(([x, y]) => [Number(x), Number(y)]);
}

function numericPair(p: PointPair): Pt {
  return [Number(p[0]), Number(p[1])];
}

function tracePath(ctx: CanvasRenderingContext2D, t: Transform, pts: Pt[],
                   close: boolean): void {
  ctx.beginPath();
  pts.forEach((p, i) => {
    const [x, y] = toPixel(t, p);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  if (close) ctx.closePath();
}

function marker(ctx: CanvasRenderingContext2D, t: Transform, p: Pt,
                color: string): void {
  const [x, y] = toPixel(t, p);
  ctx.beginPath();
  ctx.arc(x, y, 6, 0, 2 * Math.PI);
  ctx.fillStyle = color;
  ctx.fill();
}

/** Draw the arena, advisory legal region, move history up to
 * `uptoRound` (for the replay scrubber; Infinity = live), and the
 * current markers. */
export function renderPolygonSession(
  ctx: CanvasRenderingContext2D,
  t: Transform,
  state: SessionState,
  uptoRound = Infinity,
): void {
  const arena = arenaPoints(state.arena as PolygonArena);
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);

  tracePath(ctx, t, arena, true);
  ctx.fillStyle = '#f4f1ea';
  ctx.fill();

  if (state.legalRegion && state.phase === 'AwaitRobberMove' &&
      uptoRound === Infinity) {
    tracePath(ctx, t, state.legalRegion, true);
    ctx.fillStyle = 'rgba(120, 180, 120, 0.35)';
    ctx.fill();
  }

  tracePath(ctx, t, arena, true);
  ctx.strokeStyle = '#333';
  ctx.lineWidth = 2;
  ctx.stroke();

  const shown = state.moves.slice(0, Math.min(state.moves.length,
                                              uptoRound));
  const copTrail: Pt[] = shown.map(([c]) => numericPair(c));
  const robberTrail: Pt[] = shown.map(([, r]) => numericPair(r));
  if (state.cop && uptoRound === Infinity) copTrail.push(numericPair(state.cop));
  for (const [trail, color] of [[copTrail, '#b33'],
                                [robberTrail, '#36b']] as const) {
    if (trail.length > 1) {
      tracePath(ctx, t, trail, false);
      ctx.strokeStyle = color;
      ctx.lineWidth = 1.5;
      ctx.stroke();
    }
  }

  const last = shown[shown.length - 1];
  const cop = uptoRound === Infinity ? state.cop : last?.[0] ?? state.cop;
  const robber = uptoRound === Infinity ? state.robber : last?.[1] ?? null;
  if (cop) marker(ctx, t, numericPair(cop), '#b33');
  if (robber) marker(ctx, t, numericPair(robber), '#36b');
}

export function roundLog(state: SessionState): string[] {
  const lines = state.moves.map(([c, r], i) =>
    `round ${i + 1}: robber (${r[0]}, ${r[1]}) / cop (${c[0]}, ${c[1]})`);
  if (state.captured) {
    lines.push(`captured in round ${state.captureRound}`);
  }
  return lines;
}
