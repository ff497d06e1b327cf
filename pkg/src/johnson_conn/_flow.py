"""Unit vertex-capacity max-flow on the split graph of an undirected graph.

Every vertex ``v`` becomes an arc ``v_in -> v_out`` of capacity 1, every
undirected edge becomes two arcs ``v_out -> w_in`` of unbounded capacity, and a
super source / super sink are wired to the terminal vertices.  Terminals and
vertices forced to survive get an unbounded internal arc; vertices forced into
the cut get capacity 0.  The kernels are compiled with numba when available.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

INF = 1 << 40


@njit(cache=True)
def _dinic(start, to, cap, part, s, t, limit):
    nn = start.shape[0] - 1
    level = np.empty(nn, np.int64)
    it = np.empty(nn, np.int64)
    queue = np.empty(nn, np.int64)
    stack = np.empty(nn, np.int64)
    flow = 0
    while flow < limit:
        for i in range(nn):
            level[i] = -1
        level[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for a in range(start[u], start[u + 1]):
                v = to[a]
                if cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue[tail] = v
                    tail += 1
        if level[t] < 0:
            break
        for i in range(nn):
            it[i] = start[i]
        while flow < limit:
            sp = 0
            u = s
            while u != t:
                advanced = False
                while it[u] < start[u + 1]:
                    a = it[u]
                    v = to[a]
                    if cap[a] > 0 and level[v] == level[u] + 1:
                        stack[sp] = a
                        sp += 1
                        u = v
                        advanced = True
                        break
                    it[u] += 1
                if not advanced:
                    if sp == 0:
                        break
                    level[u] = -1
                    sp -= 1
                    u = to[part[stack[sp]]]
                    it[u] += 1
            if u != t:
                break
            push = limit - flow
            for i in range(sp):
                if cap[stack[i]] < push:
                    push = cap[stack[i]]
            for i in range(sp):
                cap[stack[i]] -= push
                cap[part[stack[i]]] += push
            flow += push
    return flow


@njit(cache=True)
def _screen(start, to, base, part, internal, snk_arc, s, t, sinks, limit, out):
    work = np.empty_like(base)
    for i in range(sinks.shape[0]):
        work[:] = base
        for j in range(sinks.shape[1]):
            v = sinks[i, j]
            work[snk_arc[v]] = 1 << 40
            work[internal[v]] = 1 << 40
        out[i] = _dinic(start, to, work, part, s, t, limit)


@njit(cache=True)
def _reachable(start, to, cap, s):
    nn = start.shape[0] - 1
    seen = np.zeros(nn, np.bool_)
    queue = np.empty(nn, np.int64)
    seen[s] = True
    queue[0] = s
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        for a in range(start[u], start[u + 1]):
            v = to[a]
            if cap[a] > 0 and not seen[v]:
                seen[v] = True
                queue[tail] = v
                tail += 1
    return seen


class FlowResult(NamedTuple):
    value: int
    residual: np.ndarray
    initial: np.ndarray


class SplitNetwork:
    """Reusable vertex-split flow network for one graph.

    Parameters
    ----------
    adjacency : sequence of sequences of int
        Neighbour ranks per vertex (symmetric).
    """

    def __init__(self, adjacency: Sequence[Sequence[int]]):
        n = len(adjacency)
        self.n = n
        self.source, self.sink = 2 * n, 2 * n + 1
        heads, tails, caps = [], [], []

        def arc(u, v, c):
            heads.append(u)
            tails.append(v)
            caps.append(c)

        for v in range(n):
            arc(2 * v, 2 * v + 1, 1)
        for v in range(n):
            for w in adjacency[v]:
                arc(2 * v + 1, 2 * w, INF)
        for v in range(n):
            arc(self.source, 2 * v + 1, 0)
        for v in range(n):
            arc(2 * v, self.sink, 0)
        m = len(heads)
        frm = np.empty(2 * m, np.int64)
        to = np.empty(2 * m, np.int64)
        cap = np.zeros(2 * m, np.int64)
        frm[0::2], to[0::2], cap[0::2] = heads, tails, caps
        frm[1::2], to[1::2] = tails, heads
        order = np.argsort(frm, kind="stable")
        pos = np.empty(2 * m, np.int64)
        pos[order] = np.arange(2 * m)
        self.to = to[order]
        self.cap0 = cap[order]
        self.part = pos[np.arange(2 * m) ^ 1][order]
        self.start = np.searchsorted(frm[order], np.arange(2 * n + 3)).astype(np.int64)
        self.forward = (np.arange(2 * m) % 2 == 0)[order]
        nedge = m - 3 * n
        self.internal = pos[2 * np.arange(n)]
        self.src_arc = pos[2 * (n + nedge + np.arange(n))]
        self.snk_arc = pos[2 * (2 * n + nedge + np.arange(n))]

    def capacities(
        self,
        sources: Iterable[int],
        sinks: Iterable[int] = (),
        keep: Iterable[int] = (),
        removed: Iterable[int] = (),
    ) -> np.ndarray:
        cap = self.cap0.copy()
        for v in keep:
            cap[self.internal[v]] = INF
        for v in removed:
            cap[self.internal[v]] = 0
        for v in sources:
            cap[self.src_arc[v]] = INF
            cap[self.internal[v]] = INF
        for v in sinks:
            cap[self.snk_arc[v]] = INF
            cap[self.internal[v]] = INF
        return cap

    def max_flow(
        self,
        sources: Iterable[int],
        sinks: Iterable[int],
        keep: Iterable[int] = (),
        removed: Iterable[int] = (),
        limit: int = INF,
    ) -> FlowResult:
        """Maximum number of vertex-disjoint source-sink paths, capped at ``limit``.

        ``keep`` vertices may not be cut, ``removed`` vertices are deleted.
        A value >= INF means no finite separator exists.
        """
        initial = self.capacities(sources, sinks, keep, removed)
        cap = initial.copy()
        value = _dinic(self.start, self.to, cap, self.part, self.source, self.sink, limit)
        return FlowResult(int(value), cap, initial)

    def screen(self, sources: Sequence[int], sink_sets: np.ndarray, limit: int) -> np.ndarray:
        """Capped flow values from ``sources`` to each row of ``sink_sets``."""
        base = self.capacities(sources)
        out = np.empty(sink_sets.shape[0], np.int64)
        if len(out):
            _screen(self.start, self.to, base, self.part, self.internal, self.snk_arc,
                    self.source, self.sink, np.ascontiguousarray(sink_sets, dtype=np.int64),
                    limit, out)
        return out

    def min_cut(self, result: FlowResult) -> list[int]:
        """Vertices of the minimum cut closest to the source side."""
        seen = _reachable(self.start, self.to, result.residual, self.source)
        ins, outs = seen[0:2 * self.n:2], seen[1:2 * self.n:2]
        return np.flatnonzero(ins & ~outs).tolist()

    def paths(self, result: FlowResult) -> list[list[int]]:
        """Decompose a flow into vertex paths from the sources to the sinks."""
        flow = np.where(self.forward, result.initial - result.residual, 0)
        flow[flow < 0] = 0
        flow = {int(a): int(f) for a in np.flatnonzero(flow) for f in [flow[a]]}
        by_tail: dict[int, list[int]] = {}
        for a in sorted(flow):
            tail = int(np.searchsorted(self.start, a, side="right") - 1)
            by_tail.setdefault(tail, []).append(a)
        out = []
        while True:
            path, u = [], self.source
            while u != self.sink:
                nxt = None
                for a in by_tail.get(u, ()):
                    if flow[a] > 0:
                        nxt = a
                        break
                if nxt is None:
                    return out
                flow[nxt] -= 1
                u = int(self.to[nxt])
                if u < 2 * self.n and (u % 2 == 0 or not path):
                    v = u // 2
                    if v in path:  # drop a circulation
                        del path[path.index(v) + 1:]
                    else:
                        path.append(v)
            out.append(path)
