"""HTTP session service: a human plays the robber against the cop strategy.

Endpoints:

* POST /sessions            create a session (cop placed immediately)
* GET  /sessions/{id}       full snapshot incl. trace so far
* POST /sessions/{id}/moves robber placement or move; cop replies atomically
* GET  /sessions/{id}/trace.svg   rendered trace

Sessions persist as append-only JSON-lines files (one header line, then one
line per robber input); on restart every session is rebuilt by replaying its
file through the deterministic cop strategy.
"""

import json
import os
import threading
import uuid

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from . import svgout
from .geom import (GeometryError, Location, Point, Polygon, point_location,
                   sees, visibility_polygon)
from .harness import GeneratorSpec, generate
from .pursuit import (GameState, GameTrace, ShortestPathCop, active_region,
                      cop_move_shortest_path, shortest_path)
from .splinegon import (Location as SpLocation, SplineCop, SplineError,
                        SplineTrace, Splinegon, cop_move_splinegon,
                        sees_spline)

PLACEMENT, AWAIT_MOVE, FINISHED = ("AwaitRobberPlacement",
                                   "AwaitRobberMove", "Finished")


class SessionError(Exception):
    def __init__(self, status, detail):
        self.status = status
        self.detail = detail


def _parse_arena(body):
    arena = body.get("arena")
    if arena is None and "family" in body:
        try:
            spec = GeneratorSpec(body["family"], int(body.get("size", 10)),
                                 seed=int(body.get("seed", 0)))
            return generate(spec)
        except SplineError as ex:
            raise SessionError(
                422 if "infinite link diameter" in str(ex) else 400, str(ex))
        except (ValueError, GeometryError) as ex:
            raise SessionError(400, str(ex))
    if not isinstance(arena, dict):
        raise SessionError(400, "missing arena")
    try:
        if "vertices" in arena:
            return Polygon.from_json(arena)
        return Splinegon.from_json(arena)
    except SplineError as ex:
        if "infinite link diameter" in str(ex):
            raise SessionError(422, str(ex))
        raise SessionError(400, str(ex))
    except (GeometryError, KeyError, TypeError, ValueError) as ex:
        raise SessionError(400, "invalid arena: %s" % ex)


class Session:
    """One live game; all mutation goes through robber_input under lock."""

    def __init__(self, sid, arena):
        self.id = sid
        self.arena = arena
        self.kind = "polygon" if isinstance(arena, Polygon) else "splinegon"
        self.lock = threading.Lock()
        self.phase = PLACEMENT
        self.round = 0
        if self.kind == "polygon":
            self.cop = ShortestPathCop().place(arena)
            self.trace = GameTrace(arena, self.cop, None)
        else:
            self.cop = SplineCop().place(arena)
            self.trace = SplineTrace(arena, self.cop, None, [], [], False,
                                     None, [], arena.n,
                                     arena.link_diameter_bound or arena.n)
        self.robber = None

    # -- input validation ---------------------------------------------------

    def _point(self, raw):
        if (not isinstance(raw, (list, tuple))) or len(raw) != 2:
            raise SessionError(422, "point must be an [x, y] pair")
        try:
            if self.kind == "polygon":
                return Point(str(raw[0]), str(raw[1]))
            return (float(raw[0]), float(raw[1]))
        except (ValueError, ZeroDivisionError) as ex:
            raise SessionError(422, "bad coordinate: %s" % ex)

    def _inside(self, p):
        if self.kind == "polygon":
            return point_location(p, self.arena) is not Location.EXTERIOR
        return self.arena.location(p) != SpLocation.EXTERIOR

    def _visible(self, a, b):
        if self.kind == "polygon":
            return sees(a, b, self.arena)
        try:
            return sees_spline(a, b, self.arena)
        except SplineError:
            return False

    # -- the round ----------------------------------------------------------

    def robber_input(self, raw_point):
        if self.phase == FINISHED:
            raise SessionError(409, "game already finished")
        p = self._point(raw_point)
        if not self._inside(p):
            raise SessionError(422, "point outside the arena")
        if self.phase == PLACEMENT:
            self.robber = p
            self.trace.robber_start = p
        else:
            if not self._visible(self.robber, p):
                raise SessionError(422, "move not visible from the "
                                        "robber's position")
            self.robber = p
        self._cop_reply()

    def _cop_reply(self):
        self.round += 1
        if self.kind == "polygon":
            self._cop_reply_polygon()
        else:
            self._cop_reply_splinegon()
        self.phase = FINISHED if self.trace.captured else AWAIT_MOVE

    def _cop_reply_polygon(self):
        state = GameState(self.arena, self.cop, self.robber,
                          self.round - 1, [])
        new_c = cop_move_shortest_path(state)
        ar = None
        turn = None
        if not sees(self.cop, self.robber, self.arena):
            ar = active_region(state, new_c)
            path = shortest_path(self.cop, self.robber, self.arena)
            nxt = path.waypoints[2] if len(path.waypoints) > 2 \
                else self.robber
            from .geom import orient
            turn = orient(self.cop, new_c, nxt)
        self.trace.active_regions.append(ar)
        self.trace.turns.append(turn)
        self.cop = new_c
        self.trace.moves.append((new_c, self.robber))
        if new_c == self.robber:
            self.trace.captured = True
            self.trace.capture_round = self.round

    def _cop_reply_splinegon(self):
        if self._visible(self.cop, self.robber):
            new_c, rnd = self.robber, None
        else:
            new_c, rnd = cop_move_splinegon(self.arena, self.cop,
                                            self.robber)
        self.cop = new_c
        self.trace.moves.append((new_c, self.robber))
        self.trace.rounds.append(rnd)
        if rnd is None:
            self.trace.captured = True
            self.trace.capture_round = self.round

    # -- views --------------------------------------------------------------

    def _point_json(self, p):
        if p is None:
            return None
        if self.kind == "polygon":
            return [str(p.x), str(p.y)]
        return [p[0], p[1]]

    def _legal_region(self):
        if self.robber is None or self.kind != "polygon" or \
                self.phase == FINISHED:
            return None
        region = visibility_polygon(self.robber, self.arena)
        return [[float(q.x), float(q.y)] for q in region.boundary]

    def summary(self):
        return {
            "id": self.id,
            "kind": self.kind,
            "phase": self.phase,
            "round": self.round,
            "arena": self.arena.to_json(),
            "cop": self._point_json(self.cop),
            "robber": self._point_json(self.robber),
            "captured": bool(self.trace.captured),
            "captureRound": self.trace.capture_round,
            "moves": [[self._point_json(c), self._point_json(r)]
                      for c, r in self.trace.moves],
            "legalRegion": self._legal_region(),
        }

    def trace_svg(self):
        if self.robber is None:
            if self.kind == "polygon":
                return svgout.render_polygon(self.arena)
            return svgout.render_splinegon(self.arena)
        if self.kind == "polygon":
            return svgout.render_polygon_trace(self.trace)
        return svgout.render_splinegon_trace(self.trace)


class SessionStore:
    def __init__(self, directory=None):
        self.directory = directory
        self.sessions = {}
        self.lock = threading.Lock()
        if directory:
            os.makedirs(directory, exist_ok=True)
            self._replay_all()

    def _path(self, sid):
        return os.path.join(self.directory, "%s.jsonl" % sid)

    def _replay_all(self):
        for name in sorted(os.listdir(self.directory)):
            if not name.endswith(".jsonl"):
                continue
            sid = name[:-6]
            with open(os.path.join(self.directory, name)) as fh:
                lines = [json.loads(line) for line in fh if line.strip()]
            if not lines:
                continue
            arena = _parse_arena(lines[0])
            sess = Session(sid, arena)
            for event in lines[1:]:
                sess.robber_input(event["point"])
            self.sessions[sid] = sess

    def create(self, body):
        arena = _parse_arena(body)
        sid = uuid.uuid4().hex[:12]
        sess = Session(sid, arena)
        with self.lock:
            self.sessions[sid] = sess
        if self.directory:
            with open(self._path(sid), "w") as fh:
                fh.write(json.dumps({"arena": arena.to_json()}) + "\n")
        return sess

    def get(self, sid):
        with self.lock:
            sess = self.sessions.get(sid)
        if sess is None:
            raise SessionError(404, "no such session")
        return sess

    def log_input(self, sess, raw_point):
        if self.directory:
            with open(self._path(sess.id), "a") as fh:
                fh.write(json.dumps({"point": raw_point}) + "\n")


def create_app(session_dir=None):
    app = FastAPI(title="linkpursuit")
    store = SessionStore(session_dir or
                         os.environ.get("LINKPURSUIT_SESSION_DIR"))
    app.state.store = store

    @app.exception_handler(SessionError)
    async def _session_error(request: Request, exc: SessionError):
        return JSONResponse({"detail": exc.detail}, status_code=exc.status)

    @app.post("/sessions", status_code=201)
    async def create_session(body: dict):
        sess = store.create(body)
        return sess.summary()

    @app.get("/sessions/{sid}")
    async def get_session(sid: str):
        return store.get(sid).summary()

    @app.post("/sessions/{sid}/moves")
    async def submit_move(sid: str, body: dict):
        sess = store.get(sid)
        raw = body.get("point")
        with sess.lock:
            sess.robber_input(raw)
            store.log_input(sess, raw)
            return sess.summary()

    @app.get("/sessions/{sid}/trace.svg")
    async def trace_svg(sid: str):
        sess = store.get(sid)
        with sess.lock:
            return Response(sess.trace_svg(), media_type="image/svg+xml")

    return app


def main():
    import argparse

    import uvicorn
    ap = argparse.ArgumentParser(prog="linkpursuit-server")
    ap.add_argument("--host", default="127.0.0.1")
    ap.add_argument("--port", type=int, default=8000)
    ap.add_argument("--session-dir", default=None)
    args = ap.parse_args()
    uvicorn.run(create_app(args.session_dir), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
