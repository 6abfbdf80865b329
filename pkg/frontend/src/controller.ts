// Session driver: turns clicks in world coordinates into server calls.
//
// Rules it enforces locally:
//  * clicks strictly outside the advisory legal region are rejected
//    without any request (visual cue only);
//  * at most one request in flight, input disabled while waiting;
//  * the server's response always replaces local state (server wins).

import { ApiClient, ServerRejection, SessionState } from './api.js';
import { Pt, pointInPolygon } from './geometry.js';

export type ClickOutcome =
  | { kind: 'accepted'; state: SessionState }
  | { kind: 'rejected-locally' }
  | { kind: 'rejected-by-server'; status: number; detail: string }
  | { kind: 'ignored' };

export interface ControllerEvents {
  onState?(state: SessionState): void;
  onLocalRejection?(p: Pt): void;
  onServerRejection?(status: number, detail: string): void;
}

export class GameController {
  state: SessionState | null = null;
  busy = false;

  constructor(
    private readonly api: ApiClient,
    private readonly events: ControllerEvents = {},
  ) {}

  async start(body: object): Promise<SessionState> {
    this.state = await this.api.createSession(body);
    this.events.onState?.(this.state);
    return this.state;
  }

  /** The advisory legal region for the next click, if the server sent
   * one.  During placement (or curved sessions) there is none and every
   * click goes to the server. */
  legalRegion(): Pt[] | null {
    const s = this.state;
    if (!s || s.phase !== 'AwaitRobberMove') return null;
    return s.legalRegion;
  }

  clickIsLegal(p: Pt): boolean {
    const region = this.legalRegion();
    if (region === null) return true;
    return pointInPolygon(p, region);
  }

  async click(p: Pt): Promise<ClickOutcome> {
    const s = this.state;
    if (!s || s.phase === 'Finished' || this.busy) {
      return { kind: 'ignored' };
    }
    if (!this.clickIsLegal(p)) {
      this.events.onLocalRejection?.(p);
      return { kind: 'rejected-locally' };
    }
    this.busy = true;
    try {
      this.state = await this.api.submitMove(s.id, p[0], p[1]);
      this.events.onState?.(this.state);
      return { kind: 'accepted', state: this.state };
    } catch (err) {
      if (err instanceof ServerRejection) {
        this.events.onServerRejection?.(err.status, err.message);
        return { kind: 'rejected-by-server', status: err.status,
                 detail: err.message };
      }
      throw err;
    } finally {
      this.busy = false;
    }
  }
}
