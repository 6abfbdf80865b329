// Browser entry point: wires the canvas, click handling, status banner,
// round log, and the replay scrubber to a GameController.

import { ApiClient, SessionState } from './api.js';
import { GameController } from './controller.js';
import { Pt } from './geometry.js';
import { arenaPoints, fitTransform, renderPolygonSession, roundLog,
         toWorld, Transform } from './view.js';

const SERVER = (window as { LINKPURSUIT_SERVER?: string })
  .LINKPURSUIT_SERVER ?? 'http://127.0.0.1:8000';

function el<T extends HTMLElement>(tag: string, parent: HTMLElement,
                                   attrs: Partial<T> = {}): T {
  const node = document.createElement(tag) as T;
  Object.assign(node, attrs);
  parent.appendChild(node);
  return node;
}

function banner(msg: string, isError: boolean): void {
  const b = document.getElementById('banner')!;
  b.textContent = msg;
  b.className = isError ? 'banner error' : 'banner';
}

function setup(): void {
  const root = document.body;
  el<HTMLDivElement>('div', root, { id: 'banner' });
  const canvas = el<HTMLCanvasElement>('canvas', root,
                                       { width: 720, height: 540 });
  const scrubber = el<HTMLInputElement>('input', root, { type: 'range' });
  const log = el<HTMLPreElement>('pre', root);
  const ctx = canvas.getContext('2d')!;

  let transform: Transform | null = null;
  let scrubAt = Infinity;

  const controller = new GameController(new ApiClient(SERVER), {
    onState: (state: SessionState) => {
      if (state.kind !== 'polygon') {
        banner('curved arenas render server-side; see /trace.svg',
               false);
        return;
      }
      transform = fitTransform(arenaPoints(state.arena as never),
                               canvas.width, canvas.height);
      scrubber.max = String(state.moves.length);
      scrubber.value = scrubber.max;
      scrubAt = Infinity;
      renderPolygonSession(ctx, transform, state, scrubAt);
      log.textContent = roundLog(state).join('\n');
      if (state.phase === 'Finished') {
        banner(`captured in round ${state.captureRound} - drag the ` +
               'slider to replay', false);
      } else if (state.phase === 'AwaitRobberPlacement') {
        banner('click anywhere inside the arena to place the robber',
               false);
      } else {
        banner('click inside the shaded region to move', false);
      }
    },
    onLocalRejection: () => banner('not visible from here', true),
    onServerRejection: (_s: number, detail: string) =>
      banner(detail, true),
  });

  canvas.addEventListener('click', (ev: MouseEvent) => {
    if (!transform || controller.busy) return;
    const rect = canvas.getBoundingClientRect();
    const p: Pt = toWorld(transform, ev.clientX - rect.left,
                          ev.clientY - rect.top);
    void controller.click(p);
  });

  scrubber.addEventListener('input', () => {
    const state = controller.state;
    if (!state || !transform) return;
    const v = Number(scrubber.value);
    scrubAt = v >= state.moves.length ? Infinity : v;
    renderPolygonSession(ctx, transform, state, scrubAt);
  });

  const params = new URLSearchParams(window.location.search);
  const body = params.get('family')
    ? { family: params.get('family'), size: Number(params.get('size') ?? 10),
        seed: Number(params.get('seed') ?? 0) }
    : { family: 'RandomSimple', size: 10, seed: 0 };
  controller.start(body).catch((err: Error) => banner(err.message, true));
}

if (typeof document !== 'undefined') setup();
