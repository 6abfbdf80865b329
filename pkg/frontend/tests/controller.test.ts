import { describe, expect, it } from 'vitest';

import { ApiClient, SessionState } from '../src/api.js';
import { GameController } from '../src/controller.js';

function state(overrides: Partial<SessionState>): SessionState {
  return {
    id: 's1',
    kind: 'polygon',
    phase: 'AwaitRobberPlacement',
    round: 0,
    arena: { vertices: [['0', '0'], ['4', '0'], ['4', '4'], ['0', '4']] },
    cop: ['0', '0'],
    robber: null,
    captured: false,
    captureRound: null,
    moves: [],
    legalRegion: null,
    ...overrides,
  };
}

/** ApiClient test double that records every request it receives. */
function fakeApi(responses: SessionState[]): {
  api: ApiClient;
  submitted: [number, number][];
} {
  const submitted: [number, number][] = [];
  let i = 0;
  const api = {
    createSession: async () => responses[i++],
    getSession: async () => responses[i - 1],
    submitMove: async (_id: string, x: number, y: number) => {
      submitted.push([x, y]);
      return responses[i++];
    },
  } as unknown as ApiClient;
  return { api, submitted };
}

describe('GameController', () => {
  it('sends placement clicks without a legal-region test', async () => {
    const { api, submitted } = fakeApi([
      state({}),
      state({ phase: 'AwaitRobberMove', robber: ['1', '1'] }),
    ]);
    const ctl = new GameController(api);
    await ctl.start({});
    const out = await ctl.click([1, 1]);
    expect(out.kind).toBe('accepted');
    expect(submitted).toEqual([[1, 1]]);
  });

  it('rejects clicks outside the legal region with no request', async () => {
    const region: [number, number][] = [[0, 0], [2, 0], [2, 2], [0, 2]];
    const rejected: [number, number][] = [];
    const { api, submitted } = fakeApi([
      state({ phase: 'AwaitRobberMove', robber: ['1', '1'],
              legalRegion: region }),
    ]);
    const ctl = new GameController(api, {
      onLocalRejection: (p) => rejected.push(p),
    });
    await ctl.start({});
    const out = await ctl.click([3.5, 3.5]);
    expect(out.kind).toBe('rejected-locally');
    expect(submitted).toEqual([]);
    expect(rejected).toEqual([[3.5, 3.5]]);
  });

  it('submits boundary clicks and lets the server decide', async () => {
    const region: [number, number][] = [[0, 0], [2, 0], [2, 2], [0, 2]];
    const { api, submitted } = fakeApi([
      state({ phase: 'AwaitRobberMove', robber: ['1', '1'],
              legalRegion: region }),
      state({ phase: 'AwaitRobberMove', robber: ['2', '1'],
              legalRegion: region }),
    ]);
    const ctl = new GameController(api);
    await ctl.start({});
    const out = await ctl.click([2, 1]);
    expect(out.kind).toBe('accepted');
    expect(submitted).toEqual([[2, 1]]);
  });

  it('ignores clicks after the game finished', async () => {
    const { api, submitted } = fakeApi([
      state({ phase: 'Finished', captured: true, captureRound: 2 }),
    ]);
    const ctl = new GameController(api);
    await ctl.start({});
    expect((await ctl.click([1, 1])).kind).toBe('ignored');
    expect(submitted).toEqual([]);
  });

  it('surfaces a server rejection and keeps the old state', async () => {
    const first = state({ phase: 'AwaitRobberMove', robber: ['1', '1'] });
    const api = {
      createSession: async () => first,
      submitMove: async () => {
        const { ServerRejection } = await import('../src/api.js');
        throw new ServerRejection(422, 'move not visible');
      },
    } as unknown as ApiClient;
    const ctl = new GameController(api);
    await ctl.start({});
    const out = await ctl.click([1.5, 1.5]);
    expect(out.kind).toBe('rejected-by-server');
    expect(ctl.state).toBe(first);
    expect(ctl.busy).toBe(false);
  });
});
