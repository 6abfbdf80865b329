// Thin typed wrapper over the game server's HTTP+JSON API.
// The client never mutates game state locally: every transition comes
// back as a fresh SessionState from the server.

export type Phase = 'AwaitRobberPlacement' | 'AwaitRobberMove' | 'Finished';

// polygon sessions use decimal-string coordinates; curved sessions use
// plain numbers
export type Coord = string | number;
export type PointPair = [Coord, Coord];

export interface PolygonArena {
  vertices: [string, string][];
}

export interface SplinegonArena {
  edges: unknown[];
  d: number;
}

export interface SessionState {
  id: string;
  kind: 'polygon' | 'splinegon';
  phase: Phase;
  round: number;
  arena: PolygonArena | SplinegonArena;
  cop: PointPair | null;
  robber: PointPair | null;
  captured: boolean;
  captureRound: number | null;
  moves: [PointPair, PointPair][];
  legalRegion: [number, number][] | null;
}

export interface ApiError {
  status: number;
  detail: string;
}

export class ServerRejection extends Error {
  readonly status: number;

  constructor(status: number, detail: string) {
    super(detail);
    this.status = status;
  }
}

/** Fixed-precision decimal encoding for outgoing coordinates.  The
 * server parses these exactly, so the encoding is part of the protocol:
 * always 12 fractional digits. */
export function encodeCoord(x: number): string {
  if (!Number.isFinite(x)) throw new Error(`non-finite coordinate ${x}`);
  return x.toFixed(12);
}

async function parseOrThrow(resp: Response): Promise<SessionState> {
  const body = await resp.json();
  if (!resp.ok) {
    throw new ServerRejection(resp.status, body.detail ?? 'request failed');
  }
  return body as SessionState;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async createSession(body: object): Promise<SessionState> {
    const resp = await this.fetchFn(`${this.baseUrl}/sessions`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(body),
    });
    return parseOrThrow(resp);
  }

  async getSession(id: string): Promise<SessionState> {
    const resp = await this.fetchFn(`${this.baseUrl}/sessions/${id}`);
    return parseOrThrow(resp);
  }

  /** Submit a robber placement or move as exact decimal strings. */
  async submitMove(id: string, x: number, y: number): Promise<SessionState> {
    const resp = await this.fetchFn(`${this.baseUrl}/sessions/${id}/moves`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ point: [encodeCoord(x), encodeCoord(y)] }),
    });
    return parseOrThrow(resp);
  }
}
