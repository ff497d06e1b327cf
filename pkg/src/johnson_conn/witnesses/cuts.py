"""Explicit super vertex-cuts of Johnson graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..connectivity import VertexCut
from ..errors import InvalidVertexError, UnsupportedError
from ..subset_graph import MAX_N, SubsetVertex, UniformSubsetGraph, johnson_graph, relabel


def johnson_neighbours(x: SubsetVertex, n: int) -> frozenset[SubsetVertex]:
    """Vertices at Hamming distance one from ``x`` inside ``[n]``."""
    inside = x.entries()
    outside = [j for j in range(1, n + 1) if j not in x]
    return frozenset(SubsetVertex(x.bits & ~(1 << (i - 1)) | 1 << (j - 1)) for i in inside for j in outside)


def cut_jn2(n: int, triple: Sequence[int] = (1, 2, 3), graph: UniformSubsetGraph | None = None) -> VertexCut:
    """Pairs meeting ``triple`` in exactly one entry; a super cut of J(n, 2).

    Removing it leaves the triangle on ``triple`` and the pairs inside the
    complement, so both sides have order at least two once ``n >= 6``.
    """
    if n < 6:
        raise UnsupportedError(f"J({n},2) has no super vertex-cut for n < 6")
    tri = set(triple)
    if len(tri) != 3 or len(triple) != 3 or not tri <= set(range(1, n + 1)):
        raise InvalidVertexError(f"triple must be three distinct entries of 1..{n}")
    g = graph or johnson_graph(n, 2)
    rest = [b for b in range(1, n + 1) if b not in tri]
    return VertexCut.of(g.rank(SubsetVertex.of((a, b))) for a in sorted(tri) for b in rest)


@dataclass(frozen=True)
class EdgeNeighborhoodCut:
    """Neighbourhood of an edge ``x ~ partner`` split by which end it touches.

    ``s1`` holds common neighbours, ``s2`` neighbours of ``x`` only and ``s3``
    neighbours of ``partner`` only.
    """

    n: int
    k: int
    x: SubsetVertex
    partner: SubsetVertex
    s1: frozenset[SubsetVertex]
    s2: frozenset[SubsetVertex]
    s3: frozenset[SubsetVertex]

    @property
    def vertices(self) -> frozenset[SubsetVertex]:
        return self.s1 | self.s2 | self.s3

    def __len__(self) -> int:
        return len(self.s1) + len(self.s2) + len(self.s3)

    def cut(self, g: UniformSubsetGraph) -> VertexCut:
        return VertexCut.of(g.rank(v) for v in self.vertices)


def cut_edge_neighborhood(
    n: int,
    k: int,
    edge: tuple[SubsetVertex, SubsetVertex] | None = None,
    perm: Sequence[int] | None = None,
) -> EdgeNeighborhoodCut:
    """Open neighbourhood of an edge of J(n, k), of size (2k-1)(n-k) - k.

    By default the edge is ``{1..k} ~ {1..k-1, k+1}``; ``perm`` relabels
    entries of the default edge.  An explicit ``edge`` is used as given.
    """
    if k < 3 or n < k + 3:
        raise UnsupportedError(f"edge-neighbourhood cut needs k >= 3 and n >= k + 3, got n={n}, k={k}")
    if n > MAX_N:
        raise UnsupportedError(f"n={n} exceeds {MAX_N}")
    if edge is None:
        x = SubsetVertex.of(range(1, k + 1))
        y = SubsetVertex.of(list(range(1, k)) + [k + 1])
        x, y = relabel(x, perm), relabel(y, perm)
    else:
        x, y = edge
        if len(x) != k or len(y) != k or (x.bits & y.bits).bit_count() != k - 1:
            raise InvalidVertexError(f"{x!r} and {y!r} are not adjacent vertices of J({n},{k})")
        if max(x.entries() + y.entries()) > n:
            raise InvalidVertexError(f"edge uses entries outside 1..{n}")
    nx = johnson_neighbours(x, n) - {y}
    ny = johnson_neighbours(y, n) - {x}
    return EdgeNeighborhoodCut(n, k, x, y, nx & ny, nx - ny, ny - nx)
