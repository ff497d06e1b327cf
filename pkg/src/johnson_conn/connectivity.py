"""Exact vertex connectivity and super-connectivity with checkable certificates.

Two independent routes compute the super-connectivity:

* :func:`super_connectivity_exact` minimises, over pairs of vertex-disjoint
  edges, the smallest separator of the two edges that leaves no isolated
  vertex.  Each pair gets a max-flow lower bound; pairs whose bound cannot
  beat the incumbent are dropped and the rest go through a branch-and-bound
  that repairs isolated vertices.
* :func:`super_cut_oracle` enumerates vertex subsets by increasing size.  It
  is the only routine allowed to conclude that no super vertex-cut exists.
"""
from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from ._flow import INF, SplitNetwork
from .errors import (
    AdjacentTerminalsError,
    DegenerateGraphError,
    EmptyGraphError,
    InvalidPairError,
    InvalidVertexError,
    NotConnectedError,
    NoVertexCutError,
    TooLargeError,
)
from .subset_graph import UniformSubsetGraph

INFINITY = math.inf
DEFAULT_ORACLE_CAP = 24
DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class VertexCut:
    removed: frozenset[int]

    @classmethod
    def of(cls, ranks: Iterable[int]) -> VertexCut:
        return cls(frozenset(ranks))

    def __len__(self) -> int:
        return len(self.removed)

    def __iter__(self):
        return iter(sorted(self.removed))

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.removed))


@dataclass(frozen=True)
class CutCertificate:
    cut: VertexCut
    components: tuple[tuple[int, ...], ...]
    min_component_order: int
    is_disconnecting: bool
    is_super: bool


@dataclass(frozen=True)
class ExhaustionProof:
    """Record that every vertex subset up to ``max_cut_size`` was examined."""

    vertex_count: int
    max_cut_size: int
    subsets_examined: int


@dataclass
class ConnectivityReport:
    kappa: int
    kappa_prime: int | float | None
    kappa_witness: VertexCut | None
    kappa_prime_witness: CutCertificate | None
    method: str
    elapsed: float = 0.0
    status: str = "exact"
    exhaustion: ExhaustionProof | None = None
    lower_bound: int | None = None
    upper_bound: int | None = None
    notes: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    all_minimum_cuts: list[VertexCut] | None = None


class PairSeparation(NamedTuple):
    cut: VertexCut | None
    size: int | None

    @property
    def separable(self) -> bool:
        return self.cut is not None


def _mask(ranks: Iterable[int]) -> int:
    m = 0
    for r in ranks:
        m |= 1 << r
    return m


def _component_masks(nbr_masks: Sequence[int], alive: int) -> list[int]:
    comps = []
    while alive:
        seen = frontier = alive & -alive
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= nbr_masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & alive & ~seen
            seen |= frontier
        comps.append(seen)
        alive &= ~seen
    return comps


def _ranks(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _first_isolated(nbr_masks: Sequence[int], alive: int) -> int | None:
    a = alive
    while a:
        low = a & -a
        v = low.bit_length() - 1
        if not nbr_masks[v] & alive:
            return v
        a ^= low
    return None


def components(g: UniformSubsetGraph, removed: VertexCut | Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of ``g - removed``, ordered by smallest member."""
    rem = removed.removed if isinstance(removed, VertexCut) else frozenset(removed)
    full = (1 << len(g)) - 1
    alive = full & ~_mask(rem)
    if not alive:
        raise EmptyGraphError("removing every vertex leaves the empty graph")
    return [_ranks(m) for m in _component_masks(g.nbr_masks, alive)]


def is_super_vertex_cut(g: UniformSubsetGraph, cut: VertexCut | Iterable[int]) -> CutCertificate:
    """Certificate describing ``g - cut``.

    ``is_super`` holds when at least two components remain and none of them
    is a single vertex.
    """
    if not isinstance(cut, VertexCut):
        cut = VertexCut.of(cut)
    for r in cut.removed:
        if not 0 <= r < len(g):
            raise InvalidVertexError(f"rank {r} out of range for {len(g)} vertices")
    comps = tuple(components(g, cut))
    smallest = min(map(len, comps))
    disconnecting = len(comps) >= 2
    return CutCertificate(cut, comps, smallest, disconnecting, disconnecting and smallest >= 2)


def _closed_nbr_mask(g: UniformSubsetGraph, v: int) -> int:
    return g.nbr_masks[v] | 1 << v


# -- vertex connectivity -----------------------------------------------------


def local_vertex_connectivity(g: UniformSubsetGraph, s: int, t: int, network: SplitNetwork | None = None) -> int:
    """Minimum number of vertices separating non-adjacent ``s`` and ``t``."""
    _check_terminals(g, s, t)
    net = network or SplitNetwork(g.adjacency)
    return net.max_flow([s], [t]).value


def disjoint_paths(g: UniformSubsetGraph, s: int, t: int) -> list[list[int]]:
    """A maximum family of internally disjoint ``s``-``t`` paths (as rank lists)."""
    _check_terminals(g, s, t)
    net = SplitNetwork(g.adjacency)
    return net.paths(net.max_flow([s], [t]))


def _check_terminals(g: UniformSubsetGraph, s: int, t: int) -> None:
    if s == t:
        raise InvalidVertexError("terminals must be distinct")
    if g.has_edge(s, t):
        raise AdjacentTerminalsError(f"vertices {s} and {t} are adjacent")


def global_vertex_connectivity(g: UniformSubsetGraph, network: SplitNetwork | None = None) -> tuple[int, VertexCut]:
    """Vertex connectivity of ``g`` and a minimum vertex cut.

    Uses Even's scheme: with vertices in rank order, some vertex among the
    first kappa + 1 survives every minimum cut, so only pairs ``(i, j)`` with
    ``i <= current bound`` and ``j > i`` need a flow computation.

    Raises
    ------
    NoVertexCutError
        For complete graphs; the exception's ``kappa`` attribute is |V| - 1.
    """
    n = len(g)
    if g.params.is_degenerate:
        raise DegenerateGraphError(f"{g.params.label()} is a single isolated vertex")
    if g.is_complete():
        err = NoVertexCutError(f"{g.params.label()} is complete; kappa = |V| - 1 = {n - 1}")
        err.kappa = n - 1
        raise err
    if not g.is_connected():
        raise NotConnectedError(f"{g.params.label()} is not connected")
    net = network or SplitNetwork(g.adjacency)
    best, witness = None, None
    for v in range(n):
        if g.degree(v) < n - 1 and (best is None or g.degree(v) < best):
            best, witness = g.degree(v), VertexCut.of(g.neighbors(v))
    i = 0
    while i <= best and i < n:
        far = [j for j in range(i + 1, n) if not g.has_edge(i, j)]
        if far:
            vals = net.screen([i], np.array(far, np.int64)[:, None], best)
            for j, val in zip(far, vals):
                if val < best:
                    res = net.max_flow([i], [j])
                    best, witness = res.value, VertexCut.of(net.min_cut(res))
        i += 1
    return best, witness


# -- edge-pair separators ------------------------------------------------------


def _check_edge(g: UniformSubsetGraph, e: Sequence[int]) -> tuple[int, int]:
    a, b = e
    if not g.has_edge(a, b):
        raise InvalidPairError(f"({a}, {b}) is not an edge")
    return (a, b) if a < b else (b, a)


def min_edge_pair_separator(
    g: UniformSubsetGraph, e: Sequence[int], f: Sequence[int], network: SplitNetwork | None = None
) -> PairSeparation:
    """Smallest vertex set avoiding both edges that separates ``e`` from ``f``.

    Returns ``PairSeparation(None, None)`` when an endpoint of ``e`` is
    adjacent to an endpoint of ``f`` (no separator exists).
    """
    e, f = _check_edge(g, e), _check_edge(g, f)
    if set(e) & set(f):
        raise InvalidPairError(f"edges {e} and {f} share a vertex")
    if any(g.has_edge(a, b) for a in e for b in f):
        return PairSeparation(None, None)
    net = network or SplitNetwork(g.adjacency)
    res = net.max_flow(e, f)
    cut = VertexCut.of(net.min_cut(res))
    return PairSeparation(cut, len(cut))


class _BudgetExceeded(Exception):
    pass


class _PairSearch:
    """Branch-and-bound for the best super separator of one edge pair."""

    def __init__(self, g: UniformSubsetGraph, net: SplitNetwork, budget: int):
        self.g = g
        self.net = net
        self.full = (1 << len(g)) - 1
        self.budget = budget
        self.nodes = 0

    def run(self, e, f, bound):
        self.best = None
        self.bound = bound
        self.e, self.f = e, f
        self._visit(frozenset(e) | frozenset(f), ())
        return self.best

    def _visit(self, keep, removed):
        limit = self.bound - len(removed)
        if limit <= 0:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded
        res = self.net.max_flow(self.e, self.f, keep=keep, removed=removed, limit=limit)
        if res.value >= limit:
            return
        cut = set(self.net.min_cut(res)) | set(removed)
        alive = self.full & ~_mask(cut)
        w = _first_isolated(self.g.nbr_masks, alive)
        if w is None:
            self.bound = len(cut)
            self.best = (len(cut), tuple(sorted(cut)))
            return
        # every feasible completion either cuts w, or keeps w with a first surviving neighbour
        if w not in keep:
            self._visit(keep, removed + (w,))
        rm = set(removed)
        free = [u for u in self.g.neighbors(w) if u not in rm]
        for i, u in enumerate(free):
            self._visit(keep | {w, u}, removed + tuple(free[:i]))


def _edge_neighbourhood_bound(g: UniformSubsetGraph) -> tuple[int, tuple[int, ...]] | None:
    """Smallest super cut of the form N({a, b}) over edges ab, if any."""
    best = None
    full = (1 << len(g)) - 1
    for a, b in g.edges():
        cut = (g.nbr_masks[a] | g.nbr_masks[b]) & ~(1 << a | 1 << b)
        size = cut.bit_count()
        if best is not None and size >= best[0]:
            continue
        alive = full & ~cut
        if _first_isolated(g.nbr_masks, alive) is not None:
            continue
        if len(_component_masks(g.nbr_masks, alive)) >= 2:
            best = (size, _ranks(cut))
    return best


def _pair_candidates(g: UniformSubsetGraph, edges: np.ndarray, i: int) -> np.ndarray:
    a, b = edges[i]
    block = _closed_nbr_mask(g, int(a)) | _closed_nbr_mask(g, int(b))
    rest = edges[i + 1:]
    ok = [j for j, (c, d) in enumerate(rest, start=i + 1)
          if not (block >> int(c) & 1 or block >> int(d) & 1)]
    return np.array(ok, np.int64)


def _search_block(g: UniformSubsetGraph, first: int, last: int, bound: int, budget: int):
    """Scan edge pairs (i, j) with first <= i < last; returns best and counters."""
    net = SplitNetwork(g.adjacency)
    edges = np.array(g.edges(), np.int64)
    search = _PairSearch(g, net, budget)
    best = None
    screened = 0
    try:
        for i in range(first, last):
            js = _pair_candidates(g, edges, i)
            if not len(js):
                continue
            vals = net.screen(edges[i], edges[js], bound)
            screened += len(js)
            search.nodes += len(js)
            if search.nodes > budget:
                raise _BudgetExceeded
            for j, val in zip(js.tolist(), vals.tolist()):
                if val >= bound:
                    continue
                found = search.run(tuple(edges[i]), tuple(edges[j]), bound)
                if found is not None:
                    bound = found[0]
                    best = (found[0], i, j, found[1])
    except _BudgetExceeded:
        return best, screened, search.nodes, False
    return best, screened, search.nodes, True


def super_connectivity_exact(
    g: UniformSubsetGraph,
    budget: int | None = DEFAULT_BUDGET,
    workers: int | None = 1,
    upper_bound: int | None = None,
    seed_bound: bool = True,
) -> ConnectivityReport:
    """Exact super-connectivity by edge-pair flow search.

    Parameters
    ----------
    g : UniformSubsetGraph
        Connected graph with at least four vertices.
    budget : int, optional
        Maximum number of flow evaluations (screened pairs plus branch nodes).
        When exceeded the report has ``status == "budget-exceeded"`` and
        carries lower/upper bounds instead of a value.
    workers : int, optional
        Number of processes; ``None`` uses every available CPU.  The result
        does not depend on this value.
    upper_bound : int, optional
        Known size of some super vertex-cut; only used for pruning.
    seed_bound : bool, optional
        Seed the incumbent with the best edge-neighbourhood cut.  Turning
        this off leaves the search unaided (useful for testing).

    Notes
    -----
    The witness is the branch-and-bound optimum of the first edge pair, in
    rank order, that attains the minimum.  The search never reports infinity;
    when no pair admits a super separator the status is ``"none-found"`` and
    :func:`super_cut_oracle` must settle the question.
    """
    t0 = time.perf_counter()
    if g.params.is_degenerate:
        raise DegenerateGraphError(f"{g.params.label()} is a single isolated vertex")
    if not g.is_connected():
        raise NotConnectedError(f"{g.params.label()} is not connected")
    if len(g) < 4:
        notes = ["fewer than four vertices: no super vertex-cut can exist"]
        kappa, kwit = _kappa_or_complete(g)
        return ConnectivityReport(kappa, None, kwit, None, "flow-search", time.perf_counter() - t0,
                                  status="none-found", notes=notes)
    budget = DEFAULT_BUDGET if budget is None else budget
    kappa, kwit = _kappa_or_complete(g)

    heuristic = _edge_neighbourhood_bound(g) if seed_bound else None
    bound = INF
    if heuristic is not None:
        bound = heuristic[0] + 1
    if upper_bound is not None:
        bound = min(bound, upper_bound + 1)

    m = g.edge_count
    if workers is None:
        workers = os.cpu_count() or 1
    workers = max(1, min(workers, m or 1))
    if workers == 1:
        results = [_search_block(g, 0, m, bound, budget)]
    else:
        cuts = np.linspace(0, m, workers + 1).astype(int)
        with ProcessPoolExecutor(workers) as pool:
            futs = [pool.submit(_search_block, g, int(a), int(b), bound, budget)
                    for a, b in zip(cuts[:-1], cuts[1:]) if b > a]
            results = [f.result() for f in futs]

    complete = all(r[3] for r in results)
    found = [r[0] for r in results if r[0] is not None]
    stats = {"pairs_screened": sum(r[1] for r in results), "flow_evaluations": sum(r[2] for r in results)}
    elapsed = time.perf_counter() - t0
    if not complete:
        ub = min([b[0] for b in found] + ([heuristic[0]] if heuristic else []), default=None)
        return ConnectivityReport(kappa, None, kwit, None, "flow-search", elapsed,
                                  status="budget-exceeded", lower_bound=kappa, upper_bound=ub,
                                  notes=[f"flow budget of {budget} evaluations exceeded"], stats=stats)
    if not found:
        if heuristic is not None or upper_bound is not None:
            raise AssertionError("search missed a known super vertex-cut")
        return ConnectivityReport(kappa, None, kwit, None, "flow-search", elapsed, status="none-found",
                                  notes=["no edge pair admits a super separator; "
                                         "only the oracle may conclude infinity"], stats=stats)
    value, i, j, cut = min(found)
    cert = is_super_vertex_cut(g, cut)
    if not cert.is_super or len(cert.cut) != value:
        raise AssertionError("flow search produced an invalid certificate")
    edges = g.edges()
    stats["witness_pair"] = [list(edges[i]), list(edges[j])]
    return ConnectivityReport(kappa, value, kwit, cert, "flow-search", elapsed, stats=stats,
                              lower_bound=value, upper_bound=value)


def _kappa_or_complete(g: UniformSubsetGraph) -> tuple[int, VertexCut | None]:
    try:
        return global_vertex_connectivity(g)
    except NoVertexCutError as err:
        return err.kappa, None


# -- brute-force oracle ----------------------------------------------------------


def _subsets(n: int, size: int):
    """Bit masks of all ``size``-subsets of ``range(n)`` (Gosper's order)."""
    if size == 0:
        yield 0
        return
    x = (1 << size) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def _oracle_kappa(g: UniformSubsetGraph) -> tuple[int, VertexCut | None]:
    n = len(g)
    full = (1 << n) - 1
    masks = g.nbr_masks
    for size in range(0, n - 1):
        for s in _subsets(n, size):
            if len(_component_masks(masks, full & ~s)) >= 2:
                return size, VertexCut.of(_ranks(s))
    return n - 1, None


def super_cut_oracle(
    g: UniformSubsetGraph, max_vertices: int = DEFAULT_ORACLE_CAP, all_minimum: bool = False
) -> ConnectivityReport:
    """Super-connectivity by exhaustive enumeration of vertex subsets.

    Subsets are examined by increasing size up to |V| - 4 (two components of
    order at least two must survive).  If none is a super vertex-cut the
    result is ``INFINITY`` together with an :class:`ExhaustionProof`.
    With ``all_minimum`` every minimum super vertex-cut is collected.
    """
    t0 = time.perf_counter()
    n = len(g)
    if n > max_vertices:
        raise TooLargeError(f"{n} vertices exceeds the oracle cap {max_vertices}; "
                            "use super_connectivity_exact")
    kappa, kwit = _oracle_kappa(g)
    full = (1 << n) - 1
    masks = g.nbr_masks
    examined = 0
    for size in range(0, n - 3):
        hits = []
        for s in _subsets(n, size):
            examined += 1
            alive = full & ~s
            if _first_isolated(masks, alive) is not None:
                continue
            if len(_component_masks(masks, alive)) >= 2:
                hits.append(s)
                if not all_minimum:
                    break
        if hits:
            cert = is_super_vertex_cut(g, _ranks(hits[0]))
            rep = ConnectivityReport(kappa, size, kwit, cert, "oracle", time.perf_counter() - t0,
                                     lower_bound=size, upper_bound=size,
                                     stats={"subsets_examined": examined})
            if all_minimum:
                rep.all_minimum_cuts = [VertexCut.of(_ranks(h)) for h in hits]
            return rep
    proof = ExhaustionProof(n, max(n - 4, -1), examined)
    return ConnectivityReport(kappa, INFINITY, kwit, None, "oracle", time.perf_counter() - t0,
                              exhaustion=proof, stats={"subsets_examined": examined},
                              all_minimum_cuts=[] if all_minimum else None)


# -- structure checks ------------------------------------------------------------------


@dataclass(frozen=True)
class MinCutStructure:
    kappa: int
    minimum_cuts: int
    neighbourhood_cuts: int
    all_neighbourhoods: bool
    offending: tuple[tuple[int, ...], ...] = ()


def min_cut_structure_check(g: UniformSubsetGraph, guard: int = 2_000_000) -> MinCutStructure:
    """Check that every minimum vertex cut is the neighbourhood of a vertex.

    All subsets of size kappa are enumerated, so ``C(|V|, kappa)`` must not
    exceed ``guard``.  Complete graphs pass vacuously.
    """
    n = len(g)
    if g.params.is_degenerate:
        raise DegenerateGraphError(f"{g.params.label()} is a single isolated vertex")
    if g.is_complete():
        return MinCutStructure(n - 1, 0, 0, True)
    kappa, _ = global_vertex_connectivity(g)
    if math.comb(n, kappa) > guard:
        raise TooLargeError(f"C({n}, {kappa}) subsets exceed the guard {guard}")
    full = (1 << n) - 1
    hoods = {g.nbr_masks[v] for v in range(n)}
    cuts, bad = 0, []
    for s in _subsets(n, kappa):
        if len(_component_masks(g.nbr_masks, full & ~s)) >= 2:
            cuts += 1
            if s not in hoods:
                bad.append(_ranks(s))
    return MinCutStructure(kappa, cuts, cuts - len(bad), not bad, tuple(bad))


def cut_structure_properties(g: UniformSubsetGraph, cert: CutCertificate) -> dict[str, bool]:
    """Entry-level and neighbourhood facts about a super vertex-cut.

    Keys
    ----
    every_entry_in_cut
        each ground-set entry lies in some vertex of the cut.
    no_entry_in_whole_cut
        no entry lies in every vertex of the cut.
    entry_missing_on_both_sides
        some entry is absent from a vertex of a smallest component and from
        a vertex of the rest of the graph.
    some_cut_vertex_sees_all
        a cut vertex has a neighbour in every component.
    cut_vertices_see_all_or_none
        a cut vertex with a neighbour in one component has one in every
        component.
    """
    n = g.params.n
    cut = [g.vertex(r) for r in cert.cut]
    comps = cert.components
    smallest = min(comps, key=len)
    rest = [r for c in comps if c is not smallest for r in c]
    comp_masks = [_mask(c) for c in comps]

    def lacks(ranks, entry):
        return any(entry not in g.vertex(r) for r in ranks)

    touch = []
    for r in cert.cut:
        hits = [bool(g.nbr_masks[r] & m) for m in comp_masks]
        touch.append((any(hits), all(hits)))
    return {
        "every_entry_in_cut": all(any(e in v for v in cut) for e in range(1, n + 1)),
        "no_entry_in_whole_cut": not any(all(e in v for v in cut) for e in range(1, n + 1)),
        "entry_missing_on_both_sides": any(lacks(smallest, e) and lacks(rest, e) for e in range(1, n + 1)),
        "some_cut_vertex_sees_all": any(all_ for _, all_ in touch),
        "cut_vertices_see_all_or_none": all(all_ or not any_ for any_, all_ in touch),
    }
