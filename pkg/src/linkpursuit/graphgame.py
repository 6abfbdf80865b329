"""Finite cops-and-robbers machinery on undirected graphs.

Dismantlability and 2-dismantlability certification, and an exact game
solver (backward induction over cop/robber states) used as the brute-force
oracle throughout the repo.
"""

from dataclasses import dataclass, field
from typing import Optional

INF = float("inf")


class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n, edges):
        self.n = n
        adj = [set() for _ in range(n)]
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError("edge endpoint out of range: (%d,%d)" % (i, j))
            if i == j:
                raise ValueError("self-loop at %d" % i)
            adj[i].add(j)
            adj[j].add(i)
        self.adj = [tuple(sorted(s)) for s in adj]

    def closed_nbhd(self, v):
        return frozenset(self.adj[v]) | {v}

    def edges(self):
        return [(i, j) for i in range(self.n) for j in self.adj[i] if i < j]

    def induced(self, keep):
        """Induced subgraph on sorted vertex list `keep`; returns (graph, mapping
        old->new)."""
        keep = sorted(keep)
        idx = {v: k for k, v in enumerate(keep)}
        edges = [(idx[i], idx[j]) for i, j in self.edges()
                 if i in idx and j in idx]
        return Graph(len(keep), edges), idx

    def is_connected(self):
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @staticmethod
    def from_json(obj):
        return Graph(obj["n"], [tuple(e) for e in obj["edges"]])

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, len(self.edges()))


def dominates(g, a, b):
    """True iff N[a] contains N[b] (closed neighborhoods)."""
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise IndexError("vertex out of range")
    return g.closed_nbhd(a) >= g.closed_nbhd(b)


@dataclass
class DismantleCertificate:
    order: list          # removal order, last vertex survives
    dominators: list     # dominators[k] dominated order[k] at removal time

    def to_json(self):
        return {"order": self.order, "dominators": self.dominators}


def dismantle(g):
    """Greedy dismantling: repeatedly remove any dominated vertex.

    Returns a certificate, or None if the graph is not dismantlable.
    Greedy elimination is sound for cop-win recognition because domination
    elimination is confluent.
    """
    remaining = set(range(g.n))
    nbhd = {v: g.closed_nbhd(v) & remaining for v in remaining}
    order = []
    doms = []
    changed = True
    while len(remaining) > 1 and changed:
        changed = False
        for v in sorted(remaining):
            nv = nbhd[v]
            for w in sorted(nv):
                if w == v:
                    continue
                if nbhd[w] >= nv:
                    order.append(v)
                    doms.append(w)
                    remaining.discard(v)
                    for u in remaining:
                        nbhd[u] = nbhd[u] - {v}
                    del nbhd[v]
                    changed = True
                    break
            if changed:
                break
    if len(remaining) != 1:
        return None
    last = remaining.pop()
    order.append(last)
    doms.append(last)
    return DismantleCertificate(order, doms)


def check_dismantle_certificate(g, cert):
    """Independently replay a dismantle certificate."""
    if sorted(cert.order) != list(range(g.n)):
        return False
    remaining = set(range(g.n))
    for k, v in enumerate(cert.order[:-1]):
        w = cert.dominators[k]
        if w == v or w not in remaining or v not in remaining:
            return False
        sub, idx = g.induced(remaining)
        if not dominates(sub, idx[w], idx[v]):
            return False
        remaining.discard(v)
    return len(remaining) == 1 and cert.order[-1] in remaining


@dataclass
class TwoDismantleCertificate:
    pairs: list          # list of (a, b) removed together
    dominators: list     # list of (dom_a, dom_b), each outside {a, b}
    base: list           # surviving vertices (< 7, cop-win)

    def to_json(self):
        return {"pairs": [list(p) for p in self.pairs],
                "dominators": [list(d) for d in self.dominators],
                "base": self.base}


def two_dismantle(g):
    """2-dismantling certificate via backtracking over removable pairs.

    A pair (a, b) is removable when each is dominated by a vertex outside
    {a, b}; recursion bottoms out at fewer than 7 vertices that form a
    cop-win graph.
    """
    failed = set()

    def recurse(remaining):
        key = frozenset(remaining)
        if key in failed:
            return None
        if len(remaining) < 7:
            sub, _ = g.induced(remaining)
            if dismantle(sub) is not None:
                return ([], [], sorted(remaining))
            failed.add(key)
            return None
        sub, idx = g.induced(remaining)
        rev = {k: v for v, k in idx.items()}
        dom_of = {}
        for v in remaining:
            dom_of[v] = [rev[w] for w in range(sub.n)
                         if rev[w] != v and dominates(sub, w, idx[v])]
        cands = sorted(v for v in remaining if dom_of[v])
        for ai in range(len(cands)):
            a = cands[ai]
            for b in cands[ai + 1:]:
                da = next((w for w in dom_of[a] if w != b), None)
                db = next((w for w in dom_of[b] if w != a), None)
                if da is None or db is None:
                    continue
                rest = recurse(remaining - {a, b})
                if rest is not None:
                    pairs, doms, base = rest
                    return ([(a, b)] + pairs, [(da, db)] + doms, base)
        failed.add(key)
        return None

    res = recurse(frozenset(range(g.n)))
    if res is None:
        return None
    return TwoDismantleCertificate(*res)


def check_two_dismantle_certificate(g, cert):
    remaining = set(range(g.n))
    for (a, b), (da, db) in zip(cert.pairs, cert.dominators):
        if {a, b} & {da, db} or not {a, b, da, db} <= remaining:
            return False
        sub, idx = g.induced(remaining)
        if not dominates(sub, idx[da], idx[a]):
            return False
        if not dominates(sub, idx[db], idx[b]):
            return False
        remaining -= {a, b}
    if remaining != set(cert.base) or len(remaining) >= 7:
        return False
    sub, _ = g.induced(remaining)
    return dismantle(sub) is not None


@dataclass
class GameSolution:
    cop_wins: bool
    capture_time: Optional[int]
    cop_start: Optional[int]
    # state_values[(c, r)] = optimal number of remaining cop moves with the
    # cop to move; INF where the robber escapes forever
    state_values: dict = field(repr=False, default_factory=dict)
    robber_values: dict = field(repr=False, default_factory=dict)


def solve_game(g):
    """Exact cops-and-robbers values by iterated fixpoint.

    Cop places first, robber second, cop moves first each round; both may
    stay in place.  Capture when the cop moves onto the robber.  The cop
    minimizes and the robber maximizes the number of cop moves.
    """
    if not g.is_connected():
        raise ValueError("solve_game requires a connected graph")
    n = g.n
    closed = [tuple(sorted(g.closed_nbhd(v))) for v in range(n)]
    vc = {}  # cop to move
    vr = {}  # robber to move
    for c in range(n):
        for r in range(n):
            vc[(c, r)] = 0 if c == r else INF
            vr[(c, r)] = 0 if c == r else INF
    changed = True
    while changed:
        changed = False
        for c in range(n):
            for r in range(n):
                if c == r:
                    continue
                best = min(vr[(cc, r)] for cc in closed[c]) + 1
                if best < vc[(c, r)]:
                    vc[(c, r)] = best
                    changed = True
        for c in range(n):
            for r in range(n):
                if c == r:
                    continue
                worst = max(vc[(c, rr)] for rr in closed[r])
                if worst < vr[(c, r)]:
                    vr[(c, r)] = worst
                    changed = True
    best_start, best_val = None, INF
    for c in range(n):
        val = max(vc[(c, r)] for r in range(n))
        if val < best_val:
            best_val = val
            best_start = c
    cop_wins = best_val < INF
    return GameSolution(cop_wins, int(best_val) if cop_wins else None,
                        best_start if cop_wins else None, vc, vr)
