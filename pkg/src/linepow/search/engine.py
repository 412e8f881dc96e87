"""Isomorph-free generation of connected bounded-degree graphs.

Graphs are grown in breadth-first fashion.  A state is a connected partial
graph whose vertices ``0..closed-1`` are *closed* (their neighbourhood is
final).  Expanding a state picks the lowest open vertex and chooses its whole
remaining neighbourhood at once: a set of open partners, some brand-new
vertices, and (for multigraphs) loops and parallel edges; then the vertex is
closed.  Every connected graph of the class is reachable, and the set of
completions of a state depends only on the isomorphism class of the
(partial graph, closed-vertex colouring, degree cap), so states are
deduplicated by canonical code.

A run is split into a fixed, deterministic list of jobs (subtrees) so that
results do not depend on the worker count, and so that a run can be
checkpointed between jobs and resumed.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from ..canon import MAX_VERTICES, canonical_order, raw_canonical_code
from ..formats import to_sparse6
from ..graph import INF, CapExceeded, MultiGraph

log = logging.getLogger(__name__)

VERSION = "linepow-search/1"
PROBE_NODES = 3000
SPLIT_SIZE = 48


class SearchError(ValueError):
    pass


class CheckpointError(SearchError):
    pass


@dataclass
class SearchConfig:
    """Parameters of an exhaustive run.

    ``vertex_cap`` bounds the number of vertices; with ``exact_vertices`` the
    final graphs must have exactly that many.  ``node_budget`` applies per
    job.  ``threads`` and ``checkpoint`` never change the result.
    """

    delta: int
    t: int = 2
    vertex_cap: int = 12
    edge_target: Optional[int] = None
    min_girth: int = 0
    regular: bool = False
    multigraph: bool = False
    exact_vertices: Optional[int] = None
    threads: int = 1
    checkpoint: Optional[str] = None
    node_budget: int = 5_000_000

    def validate(self) -> None:
        if self.delta < 1:
            raise SearchError("delta must be positive")
        if self.t < 1:
            raise SearchError("t must be positive")
        if self.vertex_cap < 1:
            raise SearchError("vertex_cap must be positive")
        if self.vertex_cap > MAX_VERTICES:
            raise CapExceeded(f"vertex_cap exceeds the canonical labelling cap {MAX_VERTICES}")
        if self.min_girth >= 3 and self.multigraph:
            raise SearchError("min_girth >= 3 excludes loops and parallel edges")
        if self.exact_vertices is not None and self.exact_vertices > self.vertex_cap:
            raise SearchError("exact_vertices exceeds vertex_cap")
        if self.threads < 1:
            raise SearchError("threads must be positive")

    def result_fields(self) -> dict:
        d = asdict(self)
        d.pop("threads")
        d.pop("checkpoint")
        return d

    def digest(self, mode: str) -> str:
        blob = json.dumps({"mode": mode, "version": VERSION, **self.result_fields()}, sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class ExtremalResult:
    best: int
    witnesses: list
    exhaustive: bool
    nodes: int
    wall_time: float
    config_hash: str
    version: str = VERSION
    graphs: list = field(default_factory=list)
    complete: bool = True
    details: dict = field(default_factory=dict)

    def payload(self) -> dict:
        """Everything except timing: identical for identical inputs."""
        d = asdict(self)
        d.pop("wall_time")
        return d


# state -------------------------------------------------------------------

@dataclass(frozen=True)
class State:
    n: int
    edges: tuple
    closed: int
    cap: int

    def to_json(self):
        return [self.n, [list(e) for e in self.edges], self.closed, self.cap]

    @classmethod
    def from_json(cls, obj):
        n, edges, closed, cap = obj
        return cls(n, tuple(tuple(e) for e in edges), closed, cap)


def _structure(state: State):
    n = state.n
    mult = [dict() for _ in range(n)]
    loops = [0] * n
    deg = [0] * n
    for u, v in state.edges:
        if u == v:
            loops[u] += 1
            deg[u] += 2
        else:
            mult[u][v] = mult[u].get(v, 0) + 1
            mult[v][u] = mult[v].get(u, 0) + 1
            deg[u] += 1
            deg[v] += 1
    return mult, loops, deg


def _distances(n, mult):
    out = []
    for s in range(n):
        dist = [INF] * n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for w in mult[x]:
                    if dist[w] is INF:
                        dist[w] = d
                        nxt.append(w)
            frontier = nxt
        out.append(dist)
    return out


def state_key(state: State) -> bytes:
    mult, loops, _ = _structure(state)
    nbrs = [list(m.items()) for m in mult]
    colors = [1 if x < state.closed else 0 for x in range(state.n)]
    return bytes([state.cap]) + raw_canonical_code(state.n, nbrs, loops, colors)


def graph_of(state: State) -> MultiGraph:
    return MultiGraph.from_edges(state.n, state.edges)


def canonical_edges(n: int, edges) -> tuple:
    """Edge list of the canonical relabelling (sorted), plus the canonical code."""
    g = MultiGraph.from_edges(n, edges)
    order = canonical_order(g.n, g.adjacency, g.loops)
    pos = {v: i for i, v in enumerate(order)}
    relabeled = sorted(tuple(sorted((pos[a], pos[b]))) for a, b in edges)
    code = raw_canonical_code(g.n, g.adjacency, g.loops)
    return code, relabeled


# expansion ---------------------------------------------------------------

def _partitions(total, max_part, max_count):
    """Non-increasing sequences of positive parts summing to ``total``."""
    if total == 0:
        yield ()
        return
    if max_count == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_count - 1):
            yield (first,) + rest


def children(state: State, cfg: SearchConfig) -> list:
    """Child states of ``state`` ordered densest first."""
    n, v = state.n, state.closed
    if v >= n:
        return []
    mult, loops, deg = _structure(state)
    caps = [state.cap] if v == 0 and state.cap == 0 else None
    limit = cfg.exact_vertices or cfg.vertex_cap
    avail = limit - n
    out = []
    if caps is not None:
        choices = [cfg.delta] if cfg.regular else range(cfg.delta, 0, -1)
        for d0 in choices:
            out.extend(_options(state, cfg, mult, loops, deg, d0, d0, True, avail))
        return out
    r = state.cap - deg[v]
    if r < 0:
        return []
    return _options(state, cfg, mult, loops, deg, state.cap, r, cfg.regular, avail)


def _options(state, cfg, mult, loops, deg, cap, r, exact, avail):
    n, v = state.n, state.closed
    simple = not cfg.multigraph
    g = cfg.min_girth
    dist = _distances(n, mult) if g >= 3 else None
    cands = []
    for w in range(v + 1, n):
        res = cap - deg[w]
        if res <= 0:
            continue
        if simple and w in mult[v]:
            continue
        if dist is not None and dist[v][w] + 1 < g:
            continue
        cands.append((w, res))
    results = []
    if simple:
        for s in range(min(r, len(cands)), -1, -1):
            for combo in itertools.combinations(cands, s):
                ws = [w for w, _ in combo]
                if dist is not None and any(dist[a][b] + 2 < g for a, b in itertools.combinations(ws, 2)):
                    continue
                left = r - s
                news = [left] if exact else range(min(left, avail), -1, -1)
                for k in news:
                    if k > avail:
                        continue
                    new_edges = [(v, w) for w in ws] + [(v, n + i) for i in range(k)]
                    results.append((s + k, s, new_edges, n + k))
    else:
        for nloops in range(r // 2, -1, -1):
            r1 = r - 2 * nloops
            for counts in _multiplicities(cands, r1):
                used = sum(counts)
                left = r1 - used
                totals = [left] if exact else range(left, -1, -1)
                for tot in totals:
                    for parts in _partitions(tot, cap, avail):
                        new_edges = [(v, v)] * nloops
                        for (w, _), c in zip(cands, counts):
                            new_edges += [(v, w)] * c
                        for i, c in enumerate(parts):
                            new_edges += [(v, n + i)] * c
                        results.append((2 * nloops + used + tot, used, new_edges, n + len(parts)))
    results.sort(key=lambda x: (-x[0], -x[1]))
    kids = []
    for _, _, new_edges, n2 in results:
        edges = tuple(sorted(state.edges + tuple(new_edges)))
        kids.append(State(n2, edges, state.closed + 1, cap))
    return kids


def _multiplicities(cands, r):
    if not cands:
        yield ()
        return
    (_, res), rest = cands[0], cands[1:]
    for c in range(min(res, r), -1, -1):
        for tail in _multiplicities(rest, r - c):
            yield (c,) + tail


# objectives --------------------------------------------------------------

class Enumerate:
    """Collect every completed graph (all vertices closed)."""

    mode = "enumerate"

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg

    def visit(self, state: State, job: "JobResult") -> bool:
        """Record ``state`` if terminal; return False to prune its subtree."""
        if state.closed == state.n:
            if self.cfg.exact_vertices is None or state.n == self.cfg.exact_vertices:
                code, edges = canonical_edges(state.n, state.edges)
                job.graphs.setdefault(code.hex(), [state.n, edges])
            return False
        return True


def _tree1(length, cap):
    return sum((cap - 1) ** (i - 1) for i in range(1, length + 1))


class StrongMax:
    """Maximise edges subject to line-graph diameter <= t (all edges pairwise within t)."""

    mode = "strong"

    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg
        self.global_cap = math.floor(1.5 * cfg.delta ** cfg.t) if cfg.delta ** cfg.t < 2 ** 50 else None

    def threshold(self, job) -> int:
        return max(job.best, self.cfg.edge_target or 0)

    def visit(self, state: State, job: "JobResult") -> bool:
        cfg, t = self.cfg, self.cfg.t
        m = len(state.edges)
        if m == 0:
            return True
        mult, loops, deg = _structure(state)
        dist = _distances(state.n, mult)
        terminal = state.closed == state.n
        counts = (not cfg.regular or terminal) and (cfg.exact_vertices is None or state.n == cfg.exact_vertices)
        if counts and m >= job.best and _strong(state.edges, dist, t):
            code, edges = canonical_edges(state.n, state.edges)
            if m > job.best:
                job.best = m
                job.witnesses = {}
            job.witnesses.setdefault(code.hex(), [state.n, edges])
        if terminal:
            return False
        ub = self.upper_bound(state, deg, dist)
        return ub is not None and ub >= self.threshold(job)

    def upper_bound(self, state, deg, dist):
        """Monotone bound on the edge count of any completion, ``None`` if none can be strong."""
        cfg, t = self.cfg, self.cfg.t
        cap = state.cap if state.cap else cfg.delta
        limit = cfg.exact_vertices or cfg.vertex_cap
        n = state.n
        m = len(state.edges)
        res = [0] * n
        for x in range(state.closed, n):
            res[x] = cap - deg[x]
        open_ = [x for x in range(n) if res[x] > 0]
        total = sum(res) + (limit - n) * cap
        ub = m + total // 2
        if self.global_cap is not None:
            ub = min(ub, self.global_cap)
        d_open = [min((dist[x][o] for o in open_), default=INF) for x in range(n)]

        def aug(a, b):
            return min(dist[a][b], d_open[a] + 1 + d_open[b])

        ends = [(u,) if u == v else (u, v) for u, v in state.edges]
        uniq = sorted(set(ends))
        for i, e in enumerate(uniq):
            for f in uniq[i + 1:]:
                if 1 + min(aug(a, b) for a in e for b in f) > t:
                    return None
        for e in uniq:
            near = [min(aug(a, x) for a in e) for x in range(n)]
            cnt = sum(1 for x in ends if min(near[y] for y in x) <= t - 1)
            for o in open_:
                if near[o] <= t - 1:
                    cnt += res[o] * _tree1(t - near[o], cap)
            ub = min(ub, cnt)
        return ub


def _strong(edges, dist, t) -> bool:
    ends = sorted(set((u,) if u == v else (u, v) for u, v in edges))
    for i, e in enumerate(ends):
        for f in ends[i + 1:]:
            if 1 + min(dist[a][b] for a in e for b in f) > t:
                return False
    return True


OBJECTIVES = {"enumerate": Enumerate, "strong": StrongMax}


# jobs --------------------------------------------------------------------

@dataclass
class JobResult:
    best: int = 0
    witnesses: dict = field(default_factory=dict)
    graphs: dict = field(default_factory=dict)
    nodes: int = 0
    exhausted: bool = False

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, obj):
        return cls(**obj)


def run_job(mode: str, cfg: SearchConfig, root: State, best: int, budget: int) -> JobResult:
    """Depth-first search of the subtree under ``root`` with a private seen-set."""
    objective = OBJECTIVES[mode](cfg)
    job = JobResult(best=best)
    seen = set()
    stack = [root]
    while stack:
        s = stack.pop()
        key = state_key(s)
        if key in seen:
            continue
        seen.add(key)
        job.nodes += 1
        if job.nodes > budget:
            job.exhausted = True
            break
        if objective.visit(s, job):
            stack.extend(reversed(children(s, cfg)))
    return job


def _job_entry(args):
    mode, cfg_dict, state_json, best, budget = args
    cfg = SearchConfig(**cfg_dict)
    return run_job(mode, cfg, State.from_json(state_json), best, budget).to_json()


def _split(mode, cfg, first_best):
    """Breadth-first expansion from the root until at least SPLIT_SIZE open states remain."""
    objective = OBJECTIVES[mode](cfg)
    head = JobResult(best=first_best)
    frontier = [State(1, (), 0, 0)]
    seen = set()
    while frontier and len(frontier) < SPLIT_SIZE:
        nxt = []
        for s in frontier:
            key = state_key(s)
            if key in seen:
                continue
            seen.add(key)
            head.nodes += 1
            if objective.visit(s, head):
                nxt.extend(children(s, cfg))
        if not nxt:
            frontier = []
            break
        frontier = nxt
    dedup = {}
    for s in frontier:
        dedup.setdefault(state_key(s), s)
    return head, [dedup[k] for k in sorted(dedup)]


# checkpoints -------------------------------------------------------------

def _checksum(payload: dict) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def save_checkpoint(path: str, payload: dict) -> None:
    doc = {"payload": payload, "checksum": _checksum(payload)}
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(doc, fh)
    os.replace(tmp, path)


def load_checkpoint(path: str, config_hash: str) -> Optional[dict]:
    """Stored payload, or ``None`` for a missing/empty file (fresh run)."""
    if not path or not os.path.exists(path) or os.path.getsize(path) == 0:
        return None
    try:
        with open(path) as fh:
            doc = json.load(fh)
        payload = doc["payload"]
        ok = doc["checksum"] == _checksum(payload)
    except (ValueError, KeyError, TypeError) as exc:
        raise CheckpointError(f"corrupt checkpoint {path}: {exc}") from None
    if not ok:
        raise CheckpointError(f"checkpoint {path} failed its checksum")
    if payload.get("config_hash") != config_hash:
        raise CheckpointError("checkpoint was written for a different configuration")
    return payload


# driver ------------------------------------------------------------------

def run(mode: str, cfg: SearchConfig, stop_after: Optional[int] = None) -> ExtremalResult:
    """Execute (or resume) a full deterministic run.

    ``stop_after`` ends the run after that many newly finished jobs, leaving
    a checkpoint behind; the returned result then has ``complete=False``.
    """
    cfg.validate()
    started = time.perf_counter()
    digest = cfg.digest(mode)
    payload = load_checkpoint(cfg.checkpoint, digest) if cfg.checkpoint else None
    if payload is None:
        probe = run_job(mode, cfg, State(1, (), 0, 0), 0, PROBE_NODES) if mode == "strong" else JobResult()
        head, frontier = _split(mode, cfg, probe.best)
        payload = {
            "config_hash": digest,
            "probe": probe.to_json(),
            "head": head.to_json(),
            "frontier": [s.to_json() for s in frontier],
            "done": {},
        }
        if cfg.checkpoint:
            save_checkpoint(cfg.checkpoint, payload)
    probe = JobResult.from_json(payload["probe"])
    head = JobResult.from_json(payload["head"])
    seed = max(probe.best, head.best)
    frontier = payload["frontier"]
    pending = [i for i in range(len(frontier)) if str(i) not in payload["done"]]
    if stop_after is not None:
        pending = pending[:stop_after]
    cfg_dict = asdict(cfg)
    args = [(mode, cfg_dict, frontier[i], seed, cfg.node_budget) for i in pending]

    def record(i, res):
        payload["done"][str(i)] = res
        if cfg.checkpoint:
            save_checkpoint(cfg.checkpoint, payload)

    if cfg.threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            for i, res in zip(pending, pool.map(_job_entry, args)):
                record(i, res)
    else:
        for i, a in zip(pending, args):
            record(i, _job_entry(a))
    complete = len(payload["done"]) == len(frontier)
    jobs = [probe, head] + [JobResult.from_json(payload["done"][k])
                            for k in sorted(payload["done"], key=int)]
    best = max(j.best for j in jobs)
    witnesses, graphs = {}, {}
    for j in jobs:
        if j.best == best:
            for code, g in j.witnesses.items():
                witnesses.setdefault(code, g)
        for code, g in j.graphs.items():
            graphs.setdefault(code, g)
    exhaustive = complete and not any(j.exhausted for j in jobs[1:])
    return ExtremalResult(
        best=best,
        witnesses=[_witness(code, *witnesses[code]) for code in sorted(witnesses)],
        exhaustive=exhaustive,
        nodes=sum(j.nodes for j in jobs),
        wall_time=time.perf_counter() - started,
        config_hash=digest,
        graphs=[_witness(code, *graphs[code]) for code in sorted(graphs)],
        complete=complete,
    )


def _witness(code, n, edges):
    g = MultiGraph.from_edges(n, [tuple(e) for e in edges])
    return {"code": code, "n": n, "m": g.num_edges, "sparse6": to_sparse6(g).decode(),
            "edges": [list(e) for e in edges]}


def witness_graph(w: dict) -> MultiGraph:
    return MultiGraph.from_edges(w["n"], [tuple(e) for e in w["edges"]])
