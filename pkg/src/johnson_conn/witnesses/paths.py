"""Labelled path families and their certificate checker."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..subset_graph import SubsetVertex, UniformSubsetGraph


def collapse(path: Iterable[SubsetVertex]) -> tuple[SubsetVertex, ...]:
    """Drop consecutive repeats, which arise when two template steps coincide."""
    out: list[SubsetVertex] = []
    for v in path:
        if not out or out[-1] != v:
            out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class PathFamily:
    """Ordered, labelled collection of vertex sequences.

    ``required_entry`` (when set) must lie in every internal vertex and no
    internal vertex may belong to ``forbidden_vertices``.
    """

    paths: tuple[tuple[SubsetVertex, ...], ...]
    labels: tuple[str, ...]
    required_entry: int | None = None
    forbidden_vertices: frozenset[SubsetVertex] = frozenset()
    sources: frozenset[SubsetVertex] = frozenset()
    targets: frozenset[SubsetVertex] = frozenset()
    case_id: str | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.paths) != len(self.labels):
            raise ValueError("one label per path is required")

    def __len__(self) -> int:
        return len(self.paths)

    def by_label(self, prefix: str) -> list[tuple[SubsetVertex, ...]]:
        return [p for p, lab in zip(self.paths, self.labels) if lab == prefix or lab.startswith(prefix + "_")]

    @property
    def endpoints(self) -> tuple[frozenset[SubsetVertex], frozenset[SubsetVertex]]:
        return self.sources, self.targets


@dataclass(frozen=True)
class PathCheck:
    adjacent: bool
    disjoint: bool
    entry: bool
    forbidden: bool
    endpoints: bool
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.adjacent and self.disjoint and self.entry and self.forbidden and self.endpoints

    def as_dict(self) -> dict:
        return {
            "adjacent": self.adjacent,
            "disjoint": self.disjoint,
            "required_entry": self.entry,
            "forbidden_avoided": self.forbidden,
            "endpoints": self.endpoints,
            "ok": self.ok,
            "failures": list(self.failures),
        }


def verify_path_family(
    g: UniformSubsetGraph,
    fam: PathFamily,
    endpoints: tuple[Iterable[SubsetVertex], Iterable[SubsetVertex]] | None = None,
) -> PathCheck:
    """Check a path family against ``g``; failures are reported, never raised.

    Checks
    ------
    adjacent
        every vertex is in ``g``, consecutive vertices are adjacent and each
        path has at least one edge.
    disjoint
        internal vertices are pairwise distinct across the whole family,
        never repeat inside a path and never coincide with an endpoint.
    entry
        every internal vertex contains ``fam.required_entry``.
    forbidden
        no internal vertex lies in ``fam.forbidden_vertices``.
    endpoints
        each path starts in the source set and ends in the target set.
    """
    if endpoints is None:
        sources, targets = fam.sources, fam.targets
    else:
        sources, targets = frozenset(endpoints[0]), frozenset(endpoints[1])
    fails: list[str] = []
    ok_adj = ok_dis = ok_ent = ok_forb = ok_end = True
    terminals = sources | targets
    seen: dict[SubsetVertex, str] = {}
    for path, label in zip(fam.paths, fam.labels):
        if len(path) < 2:
            ok_adj = False
            fails.append(f"{label}: fewer than two vertices")
            continue
        ranks = []
        for v in path:
            try:
                ranks.append(g.rank(v))
            except ValueError:
                ranks.append(None)
                ok_adj = False
                fails.append(f"{label}: {v!r} is not a vertex")
        for (a, ra), (b, rb) in zip(zip(path, ranks), zip(path[1:], ranks[1:])):
            if ra is not None and rb is not None and not g.has_edge(ra, rb):
                ok_adj = False
                fails.append(f"{label}: {a!r} and {b!r} are not adjacent")
        if path[0] not in sources or path[-1] not in targets:
            ok_end = False
            fails.append(f"{label}: runs {path[0]!r} -> {path[-1]!r} outside the endpoint sets")
        for v in path[1:-1]:
            if v in terminals:
                ok_dis = False
                fails.append(f"{label}: internal vertex {v!r} is an endpoint")
            elif v in seen:
                ok_dis = False
                fails.append(f"{label}: internal vertex {v!r} already used by {seen[v]}")
            else:
                seen[v] = label
            if fam.required_entry is not None and fam.required_entry not in v:
                ok_ent = False
                fails.append(f"{label}: {v!r} lacks entry {fam.required_entry}")
            if v in fam.forbidden_vertices:
                ok_forb = False
                fails.append(f"{label}: {v!r} is forbidden")
    return PathCheck(ok_adj, ok_dis, ok_ent, ok_forb, ok_end, tuple(fails))


def family_to_ranks(g: UniformSubsetGraph, fam: PathFamily) -> list[list[int]]:
    return [[g.rank(v) for v in p] for p in fam.paths]


def entries(v: SubsetVertex) -> list[int]:
    return list(v.entries())


def make_family(
    labelled: Sequence[tuple[str, Sequence[SubsetVertex]]],
    **kwargs,
) -> PathFamily:
    paths = tuple(collapse(p) for _, p in labelled)
    return PathFamily(paths, tuple(lab for lab, _ in labelled), **kwargs)
