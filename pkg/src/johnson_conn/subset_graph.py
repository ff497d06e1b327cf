"""Uniform subset graphs G(n, k, t) and subset-level primitives.

Vertices are the k-subsets of ``{1, ..., n}`` stored as bit sets (bit ``i - 1``
set when entry ``i`` is present).  Two vertices are adjacent when their
intersection has exactly ``t`` elements; ``t = k - 1`` gives the Johnson graph
J(n, k) and ``t = 0`` the Kneser graph KG(n, k).

The canonical rank of a vertex is its position in the lexicographic order of
sorted subsets.  Every file format and report in the package uses these ranks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    CapacityError,
    InvalidEntryError,
    InvalidParamsError,
    InvalidSwapError,
    InvalidVertexError,
    UnsupportedError,
)

MAX_N = 64


@dataclass(frozen=True)
class GraphParams:
    """Ground-set size ``n``, subset size ``k`` and intersection size ``t``.

    ``t`` defaults to ``k - 1`` (Johnson mode).
    """

    n: int
    k: int
    t: int | None = None

    def __post_init__(self):
        n, k, t = self.n, self.k, self.t
        if t is None:
            t = k - 1
            object.__setattr__(self, "t", t)
        for name, value in (("n", n), ("k", k), ("t", t)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParamsError(f"{name} must be an integer, got {value!r}")
        if n < 1:
            raise InvalidParamsError(f"n must be positive, got {n}")
        if n > MAX_N:
            raise CapacityError(f"n={n} exceeds the supported bit-set width {MAX_N}")
        if not 1 <= k <= n:
            raise InvalidParamsError(f"need 1 <= k <= n, got n={n}, k={k}")
        if not 0 <= t <= k - 1:
            raise InvalidParamsError(f"need 0 <= t <= k-1, got k={k}, t={t}")

    @classmethod
    def johnson(cls, n: int, k: int) -> GraphParams:
        return cls(n, k, k - 1)

    @classmethod
    def kneser(cls, n: int, k: int) -> GraphParams:
        return cls(n, k, 0)

    @property
    def is_johnson(self) -> bool:
        return self.t == self.k - 1

    @property
    def is_degenerate(self) -> bool:
        return self.n == self.k

    @property
    def vertex_count(self) -> int:
        return comb(self.n, self.k)

    def label(self) -> str:
        if self.is_johnson:
            return f"J({self.n},{self.k})"
        return f"G({self.n},{self.k},{self.t})"


@dataclass(frozen=True)
class SubsetVertex:
    """A subset of ``{1, ..., 64}`` stored as an integer bit set."""

    bits: int

    @classmethod
    def of(cls, entries: Iterable[int]) -> SubsetVertex:
        bits = 0
        for r in entries:
            if not isinstance(r, int) or not 1 <= r <= MAX_N:
                raise InvalidEntryError(f"entry {r!r} outside 1..{MAX_N}")
            if bits >> (r - 1) & 1:
                raise InvalidVertexError(f"repeated entry {r}")
            bits |= 1 << (r - 1)
        return cls(bits)

    def entries(self) -> tuple[int, ...]:
        out = []
        bits, r = self.bits, 1
        while bits:
            if bits & 1:
                out.append(r)
            bits >>= 1
            r += 1
        return tuple(out)

    def __contains__(self, r: int) -> bool:
        return r >= 1 and bool(self.bits >> (r - 1) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries())

    def sort_key(self) -> tuple[int, ...]:
        return self.entries()

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.entries())) + "}"


def _check_vertex(v: SubsetVertex, params: GraphParams) -> None:
    if len(v) != params.k:
        raise InvalidVertexError(f"{v!r} has {len(v)} entries, expected k={params.k}")
    if v.bits >> params.n:
        raise InvalidVertexError(f"{v!r} has entries outside 1..{params.n}")


def enumerate_vertices(params: GraphParams) -> list[SubsetVertex]:
    """All k-subsets of ``[n]`` in lexicographic order.

    The list position is the canonical rank used throughout the package.

    >>> enumerate_vertices(GraphParams(3, 2))
    [{1,2}, {1,3}, {2,3}]
    """
    return [
        SubsetVertex.of(c)
        for c in itertools.combinations(range(1, params.n + 1), params.k)
    ]


def is_adjacent(u: SubsetVertex, v: SubsetVertex, params: GraphParams) -> bool:
    _check_vertex(u, params)
    _check_vertex(v, params)
    if u == v:
        raise InvalidVertexError("adjacency is only defined for distinct vertices")
    return (u.bits & v.bits).bit_count() == params.t


def hamming_distance(u: SubsetVertex, v: SubsetVertex) -> int:
    """Number of entries of ``u`` missing from ``v`` (equivalently k - |u & v|)."""
    if len(u) != len(v):
        raise InvalidVertexError(f"{u!r} and {v!r} have different cardinalities")
    return len(u) - (u.bits & v.bits).bit_count()


def swap(x: SubsetVertex, remove: int, add: int) -> SubsetVertex:
    """Replace entry ``remove`` of ``x`` by the absent entry ``add``."""
    if remove not in x:
        raise InvalidSwapError(f"entry {remove} is not in {x!r}")
    if add in x:
        raise InvalidSwapError(f"entry {add} is already in {x!r}")
    if not 1 <= add <= MAX_N:
        raise InvalidEntryError(f"entry {add} outside 1..{MAX_N}")
    return SubsetVertex(x.bits & ~(1 << (remove - 1)) | 1 << (add - 1))


def swap_many(x: SubsetVertex, remove: Sequence[int], add: Sequence[int]) -> SubsetVertex:
    """Remove the entries ``remove`` from ``x`` and insert the entries ``add``.

    An entry may appear in both lists, in which case it is kept; this matches
    the way multi-index swaps are written when one of the inserted entries is
    an entry that was just taken out.
    """
    rm, ad = set(remove), set(add)
    if len(rm) != len(remove) or len(ad) != len(add) or len(rm) != len(ad):
        raise InvalidSwapError(f"bad swap lists remove={remove} add={add}")
    missing = [r for r in rm if r not in x]
    if missing:
        raise InvalidSwapError(f"entries {sorted(missing)} are not in {x!r}")
    kept = set(x) - rm
    clash = ad & kept
    if clash:
        raise InvalidSwapError(f"entries {sorted(clash)} are already in {x!r}")
    return SubsetVertex.of(sorted(kept | ad))


@dataclass(frozen=True, eq=False)
class UniformSubsetGraph:
    """Immutable graph on all k-subsets of ``[n]``.

    ``adjacency[i]`` holds the sorted ranks of the neighbours of vertex ``i``.
    Graphs read back from files are built through the same constructor, so the
    adjacency is not assumed to match ``params`` unless it came from
    :func:`build_graph`.
    """

    params: GraphParams
    vertices: tuple[SubsetVertex, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False)
    nbr_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {v.bits: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise InvalidVertexError("duplicate vertices")
        if len(self.adjacency) != len(self.vertices):
            raise InvalidVertexError("adjacency length does not match vertex count")
        masks = []
        for i, nbrs in enumerate(self.adjacency):
            m = 0
            for j in nbrs:
                if not 0 <= j < len(self.vertices) or j == i:
                    raise InvalidVertexError(f"bad neighbour {j} of vertex {i}")
                m |= 1 << j
            masks.append(m)
        for i, m in enumerate(masks):
            for j in self.adjacency[i]:
                if not masks[j] >> i & 1:
                    raise InvalidVertexError(f"adjacency not symmetric at ({i}, {j})")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "nbr_masks", tuple(masks))

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"<UniformSubsetGraph {self.params.label()} |V|={len(self)} |E|={self.edge_count}>"

    def rank(self, v: SubsetVertex | Iterable[int]) -> int:
        if not isinstance(v, SubsetVertex):
            v = SubsetVertex.of(v)
        try:
            return self._index[v.bits]
        except KeyError:
            raise InvalidVertexError(f"{v!r} is not a vertex of {self.params.label()}") from None

    def vertex(self, rank: int) -> SubsetVertex:
        return self.vertices[rank]

    def neighbors(self, rank: int) -> tuple[int, ...]:
        return self.adjacency[rank]

    def degree(self, rank: int) -> int:
        return len(self.adjacency[rank])

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.nbr_masks[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, nbrs in enumerate(self.adjacency) for b in nbrs if a < b]

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def is_complete(self) -> bool:
        n = len(self)
        return all(len(nbrs) == n - 1 for nbrs in self.adjacency)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        full = (1 << len(self)) - 1
        seen = frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.nbr_masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == full

    def ranks_of(self, vertices: Iterable[SubsetVertex]) -> list[int]:
        return [self.rank(v) for v in vertices]


def build_graph(params: GraphParams) -> UniformSubsetGraph:
    """Construct G(n, k, t) with full adjacency.

    Neighbours are generated directly (keep ``t`` entries, add ``k - t`` new
    ones) rather than by testing all pairs.
    """
    vertices = enumerate_vertices(params)
    index = {v.bits: i for i, v in enumerate(vertices)}
    n, k, t = params.n, params.k, params.t
    full = (1 << n) - 1
    adjacency = []
    for v in vertices:
        inside = v.entries()
        outside = [r for r in range(1, n + 1) if not v.bits >> (r - 1) & 1]
        nbrs = []
        for keep in itertools.combinations(inside, t):
            kb = sum(1 << (r - 1) for r in keep)
            for add in itertools.combinations(outside, k - t):
                nbrs.append(index[(kb | sum(1 << (r - 1) for r in add)) & full])
        adjacency.append(tuple(sorted(nbrs)))
    return UniformSubsetGraph(params, tuple(vertices), tuple(adjacency))


def johnson_graph(n: int, k: int) -> UniformSubsetGraph:
    return build_graph(GraphParams.johnson(n, k))


def kneser_graph(n: int, k: int) -> UniformSubsetGraph:
    return build_graph(GraphParams.kneser(n, k))


def vertices_containing_entry(g: UniformSubsetGraph, r: int) -> frozenset[int]:
    """Ranks of the vertices whose subset contains entry ``r``."""
    if not isinstance(r, int) or not 1 <= r <= g.params.n:
        raise InvalidEntryError(f"entry {r!r} outside 1..{g.params.n}")
    bit = 1 << (r - 1)
    return frozenset(i for i, v in enumerate(g.vertices) if v.bits & bit)


class EntryDeletion(NamedTuple):
    graph: UniformSubsetGraph
    mapping: dict[int, int]  # old rank -> new rank


def _drop_entry(v: SubsetVertex, r: int) -> SubsetVertex:
    low = v.bits & ((1 << (r - 1)) - 1)
    high = v.bits >> r
    return SubsetVertex(low | high << (r - 1))


def delete_entry_subgraph(g: UniformSubsetGraph, r: int, verify: bool = True) -> EntryDeletion:
    """Remove every vertex containing ``r`` and relabel entries above ``r`` down by one.

    The result lives on ground set ``[n - 1]`` and its adjacency is induced
    from ``g``.  With ``verify`` the identity on surviving subsets is checked
    to be an isomorphism onto ``build_graph(n - 1, k, t)``.
    """
    p = g.params
    if p.n < p.k + 1:
        raise UnsupportedError(f"entry deletion needs n >= k+1, got n={p.n}, k={p.k}")
    drop = vertices_containing_entry(g, r)
    survivors = [i for i in range(len(g)) if i not in drop]
    mapping = {old: new for new, old in enumerate(survivors)}
    vertices = tuple(_drop_entry(g.vertices[i], r) for i in survivors)
    adjacency = tuple(
        tuple(mapping[j] for j in g.adjacency[i] if j in mapping) for i in survivors
    )
    params = GraphParams(p.n - 1, p.k, p.t)
    sub = UniformSubsetGraph(params, vertices, adjacency)
    if verify:
        ref = build_graph(params)
        ident = [ref.rank(v) for v in sub.vertices]
        if not is_isomorphism(sub, ref, ident):
            raise AssertionError(f"deleting entry {r} from {p.label()} is not isomorphic to {params.label()}")
    return EntryDeletion(sub, mapping)


def complement_isomorphism(params: GraphParams) -> list[int]:
    """Rank map J(n, k) -> J(n, n - k) induced by ``x -> [n] - x``."""
    if not params.is_johnson:
        raise UnsupportedError("the complement map is an isomorphism only in Johnson mode")
    if params.n == params.k:
        raise UnsupportedError("J(n, n) has no complement graph with k >= 1")
    target = GraphParams.johnson(params.n, params.n - params.k)
    full = (1 << params.n) - 1
    index = {v.bits: i for i, v in enumerate(enumerate_vertices(target))}
    return [index[full & ~v.bits] for v in enumerate_vertices(params)]


def is_isomorphism(g: UniformSubsetGraph, h: UniformSubsetGraph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` (rank in g -> rank in h) is a graph isomorphism."""
    if len(g) != len(h) or len(mapping) != len(g):
        return False
    if sorted(mapping) != list(range(len(h))):
        return False
    if g.edge_count != h.edge_count:
        return False
    return all(h.has_edge(mapping[a], mapping[b]) for a, b in g.edges())


def relabel(v: SubsetVertex, perm: Sequence[int] | None) -> SubsetVertex:
    """Apply the entry permutation ``perm`` (1-based: entry ``i`` -> ``perm[i-1]``)."""
    if perm is None:
        return v
    return SubsetVertex.of(perm[r - 1] for r in v)
