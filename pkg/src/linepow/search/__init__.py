"""Exhaustive searches: regular-graph enumeration and extremal strong edge sets."""
from __future__ import annotations

import logging
from typing import Callable, Optional

from ..graph import MultiGraph
from ..metrics import is_strong_clique
from .engine import (
    CheckpointError,
    ExtremalResult,
    SearchConfig,
    SearchError,
    load_checkpoint,
    run,
    save_checkpoint,
    witness_graph,
)

log = logging.getLogger(__name__)

__all__ = [
    "CheckpointError", "ExtremalResult", "SearchConfig", "SearchError",
    "enumerate_regular_girth", "regular_girth_graphs", "max_edges_strong",
    "checkpoint_save", "checkpoint_resume", "witness_graph",
]


def regular_girth_graphs(n: int, delta: int, min_girth: int = 0, threads: int = 1,
                         checkpoint: Optional[str] = None) -> list:
    """All connected ``delta``-regular simple graphs on ``n`` vertices with girth >= ``min_girth``, one per class."""
    if n * delta % 2:
        raise SearchError("n * delta must be even")
    if n < 1:
        raise SearchError("n must be positive")
    if delta == 0:
        return [MultiGraph.empty(1)] if n == 1 else []
    if n == 1:
        return []
    cfg = SearchConfig(delta=delta, vertex_cap=n, exact_vertices=n, regular=True,
                       min_girth=max(min_girth, 3), threads=threads, checkpoint=checkpoint)
    res = run("enumerate", cfg)
    if not res.exhaustive:
        raise SearchError("node budget exhausted before the enumeration finished")
    return [witness_graph(w) for w in res.graphs]


def enumerate_regular_girth(n: int, delta: int, min_girth: int = 0,
                            visitor: Optional[Callable[[MultiGraph], None]] = None, **kw) -> int:
    """Count (and optionally visit) the graphs of :func:`regular_girth_graphs`."""
    graphs = regular_girth_graphs(n, delta, min_girth, **kw)
    if visitor is not None:
        for g in graphs:
            visitor(g)
    return len(graphs)


def max_edges_strong(cfg: SearchConfig, stop_after: Optional[int] = None) -> ExtremalResult:
    """Maximum edge count of a graph within ``cfg`` whose edges are pairwise within distance ``t``.

    Every witness is re-checked with the line-metric code before returning.
    """
    res = run("strong", cfg, stop_after=stop_after)
    for w in res.witnesses:
        g = witness_graph(w)
        if g.max_degree > cfg.delta or g.num_edges != res.best or not is_strong_clique(g, cfg.t, range(g.num_edges)):
            raise AssertionError(f"witness {w['sparse6']} failed independent re-check")
    return res


def checkpoint_save(path: str, payload: dict) -> None:
    save_checkpoint(path, payload)


def checkpoint_resume(path: str, cfg: SearchConfig, mode: str = "strong") -> Optional[dict]:
    """Validated checkpoint payload for ``cfg``; ``None`` means start fresh."""
    return load_checkpoint(path, cfg.digest(mode))
