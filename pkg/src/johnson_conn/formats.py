"""Byte-deterministic graph files and JSON certificates.

Graph formats
-------------
dimacs
    ``c`` comment lines recording n, k, t and the rank -> subset map, then
    ``p edge N M`` and one ``e a b`` line per edge with 1-based ranks.
json
    ``{"graph": {"n", "k", "t"}, "vertices": [[...], ...], "edges": [[a, b], ...]}``
    with 0-based ranks.
edge-list
    a ``# n k t`` header followed by one ``a b`` line per edge (1-based ranks).

Every writer sorts edges and emits fixed key order, so re-serialising a parsed
file reproduces it byte for byte.
"""
from __future__ import annotations

import json
import math
from typing import Any, Iterable

from .connectivity import CutCertificate, ExhaustionProof, VertexCut
from .errors import InvalidVertexError, SubsetGraphError
from .subset_graph import GraphParams, SubsetVertex, UniformSubsetGraph, enumerate_vertices
from .witnesses.paths import PathFamily

FORMATS = ("dimacs", "json", "edge-list")


class ParseError(SubsetGraphError):
    """Malformed graph or certificate file."""


def subset(v: SubsetVertex) -> list[int]:
    return list(v.entries())


def subsets(g: UniformSubsetGraph, ranks: Iterable[int]) -> list[list[int]]:
    return [subset(g.vertex(r)) for r in sorted(ranks)]


def infinity_json(value: int | float | None) -> int | str | None:
    if value is None:
        return None
    return "infinity" if value == math.inf else int(value)


def infinity_csv(value: int | float | None) -> str:
    if value is None:
        return ""
    return "inf" if value == math.inf else str(int(value))


def graph_header(params: GraphParams) -> dict:
    return {"n": params.n, "k": params.k, "t": params.t}


def _encode(obj: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(key)}: {_encode(val, depth + 1)}" for key, val in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(json.dumps(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + _encode(v, depth + 1) for v in obj) + "\n" + "  " * depth + "]"
    return json.dumps(obj)


def dumps(obj: Any) -> str:
    """Indented JSON with flat arrays of scalars kept on one line."""
    return _encode(obj, 0) + "\n"


# -- writers ---------------------------------------------------------------------------


def write_graph(g: UniformSubsetGraph, fmt: str) -> str:
    p = g.params
    edges = g.edges()
    if fmt == "dimacs":
        lines = [f"c uniform subset graph n={p.n} k={p.k} t={p.t}", f"c params {p.n} {p.k} {p.t}"]
        lines += [f"c v {i + 1} " + " ".join(map(str, v.entries())) for i, v in enumerate(g.vertices)]
        lines.append(f"p edge {len(g)} {len(edges)}")
        lines += [f"e {a + 1} {b + 1}" for a, b in edges]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {"graph": graph_header(p), "vertices": [subset(v) for v in g.vertices],
               "edges": [[a, b] for a, b in edges]}
        return json.dumps(doc, separators=(",", ":")) + "\n"
    if fmt == "edge-list":
        lines = [f"# {p.n} {p.k} {p.t}"] + [f"{a + 1} {b + 1}" for a, b in edges]
        return "\n".join(lines) + "\n"
    raise ParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


# -- readers ---------------------------------------------------------------------------


def _assemble(params: GraphParams, edges: list[tuple[int, int]], count: int | None = None) -> UniformSubsetGraph:
    vertices = enumerate_vertices(params)
    nv = len(vertices)
    if count is not None and count != nv:
        raise ParseError(f"file declares {count} vertices but C({params.n},{params.k}) = {nv}")
    adj: list[set[int]] = [set() for _ in range(nv)]
    for a, b in edges:
        if not (0 <= a < nv and 0 <= b < nv):
            raise InvalidVertexError(f"edge ({a}, {b}) has a rank outside 0..{nv - 1}")
        if a == b:
            raise ParseError(f"self-loop at rank {a}")
        adj[a].add(b)
        adj[b].add(a)
    return UniformSubsetGraph(params, tuple(vertices), tuple(tuple(sorted(s)) for s in adj))


def _ints(tokens: list[str], line: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers in line {line!r}") from None


def detect_format(text: str) -> str:
    head = text.lstrip()
    if head.startswith("{"):
        return "json"
    if head.startswith("#"):
        return "edge-list"
    return "dimacs"


def read_graph(text: str, fmt: str | None = None) -> UniformSubsetGraph:
    """Parse a graph written by :func:`write_graph` (format auto-detected)."""
    fmt = fmt or detect_format(text)
    try:
        if fmt == "json":
            doc = json.loads(text)
            gh = doc["graph"]
            params = GraphParams(int(gh["n"]), int(gh["k"]), int(gh["t"]))
            verts = [tuple(v) for v in doc["vertices"]]
            if verts != [v.entries() for v in enumerate_vertices(params)]:
                raise ParseError("vertex list is not the canonical rank order")
            return _assemble(params, [(int(a), int(b)) for a, b in doc["edges"]], len(verts))
        if fmt == "edge-list":
            lines = [ln for ln in text.splitlines() if ln.strip()]
            n, k, t = _ints(lines[0].lstrip("#").split(), lines[0])
            edges = [tuple(x - 1 for x in _ints(ln.split(), ln)) for ln in lines[1:]]
            return _assemble(GraphParams(n, k, t), edges)
        if fmt == "dimacs":
            params = None
            count = None
            vmap: dict[int, tuple[int, ...]] = {}
            edges = []
            for ln in text.splitlines():
                tok = ln.split()
                if not tok:
                    continue
                if tok[0] == "c":
                    if len(tok) >= 5 and tok[1] == "params":
                        params = GraphParams(*_ints(tok[2:5], ln))
                    elif len(tok) >= 3 and tok[1] == "v":
                        vals = _ints(tok[2:], ln)
                        vmap[vals[0] - 1] = tuple(vals[1:])
                elif tok[0] == "p":
                    if len(tok) != 4 or tok[1] != "edge":
                        raise ParseError(f"bad problem line {ln!r}")
                    count, _ = _ints(tok[2:], ln)
                elif tok[0] == "e":
                    a, b = _ints(tok[1:3], ln)
                    edges.append((a - 1, b - 1))
                else:
                    raise ParseError(f"unrecognised line {ln!r}")
            if params is None:
                raise ParseError("missing 'c params n k t' comment")
            canon = [v.entries() for v in enumerate_vertices(params)]
            if vmap and [vmap.get(i) for i in range(len(canon))] != canon:
                raise ParseError("rank -> subset map is not the canonical order")
            return _assemble(params, edges, count)
    except (KeyError, IndexError, TypeError, json.JSONDecodeError) as err:
        raise ParseError(f"malformed {fmt} graph: {err}") from None
    raise ParseError(f"unknown format {fmt!r}")


# -- certificates ------------------------------------------------------------------------


def cut_document(g: UniformSubsetGraph, cert: CutCertificate, **extra) -> dict:
    doc = {"kind": "cut", "graph": graph_header(g.params), "size": len(cert.cut),
           "cut": subsets(g, cert.cut.removed),
           "components": [subsets(g, c) for c in cert.components],
           "min_component_order": cert.min_component_order,
           "is_disconnecting": cert.is_disconnecting, "is_super": cert.is_super}
    doc.update(extra)
    return doc


def witness_json(g: UniformSubsetGraph, cert: CutCertificate | None) -> dict | None:
    if cert is None:
        return None
    return {"cut": subsets(g, cert.cut.removed), "components": [subsets(g, c) for c in cert.components]}


def exhaustion_json(proof: ExhaustionProof | None) -> dict | None:
    if proof is None:
        return None
    return {"vertex_count": proof.vertex_count, "max_cut_size": proof.max_cut_size,
            "subsets_examined": proof.subsets_examined}


def family_document(g: UniformSubsetGraph, fam: PathFamily, **extra) -> dict:
    def vs(items):
        return [subset(v) for v in sorted(items, key=SubsetVertex.sort_key)]

    doc = {"kind": "paths", "graph": graph_header(g.params), "case_id": fam.case_id,
           "count": len(fam), "required_entry": fam.required_entry,
           "sources": vs(fam.sources), "targets": vs(fam.targets),
           "forbidden": vs(fam.forbidden_vertices),
           "paths": [{"label": lab, "vertices": [subset(v) for v in p]} for lab, p in zip(fam.labels, fam.paths)],
           "notes": list(fam.notes)}
    doc.update(extra)
    return doc


def _vertex(g: UniformSubsetGraph, entries: list[int]) -> SubsetVertex:
    if not isinstance(entries, list) or not all(isinstance(e, int) for e in entries):
        raise ParseError(f"subset must be an integer array, got {entries!r}")
    if any(e < 1 or e > g.params.n for e in entries) or len(entries) != g.params.k:
        raise InvalidVertexError(f"subset {entries} is not a {g.params.k}-subset of 1..{g.params.n}")
    return SubsetVertex.of(entries)


def read_certificate(g: UniformSubsetGraph, doc: dict) -> tuple[str, Any]:
    """Decode a certificate against ``g``; returns ``(kind, payload)``.

    Raises :class:`InvalidVertexError` when the certificate names subsets
    outside the graph, including a graph header that does not match.
    """
    try:
        gh = doc["graph"]
        if (gh["n"], gh["k"], gh["t"]) != (g.params.n, g.params.k, g.params.t):
            raise InvalidVertexError(f"certificate is for G({gh['n']},{gh['k']},{gh['t']}) "
                                     f"but the graph is {g.params.label()}")
        kind = doc["kind"]
        if kind == "cut":
            cut = VertexCut.of(g.rank(_vertex(g, v)) for v in doc["cut"])
            comps = tuple(tuple(sorted(g.rank(_vertex(g, v)) for v in c)) for c in doc["components"])
            claims = {key: doc[key] for key in ("size", "min_component_order", "is_disconnecting", "is_super")
                      if key in doc}
            return kind, (cut, comps, claims)
        if kind == "paths":
            paths = tuple(tuple(_vertex(g, v) for v in p["vertices"]) for p in doc["paths"])
            fam = PathFamily(
                paths, tuple(p["label"] for p in doc["paths"]), doc.get("required_entry"),
                frozenset(_vertex(g, v) for v in doc.get("forbidden", [])),
                frozenset(_vertex(g, v) for v in doc["sources"]),
                frozenset(_vertex(g, v) for v in doc["targets"]),
                doc.get("case_id"), tuple(doc.get("notes", ())),
            )
            return kind, (fam, doc.get("minimum_count"))
    except (KeyError, TypeError) as err:
        raise ParseError(f"malformed certificate: {err}") from None
    raise ParseError(f"unknown certificate kind {doc.get('kind')!r}")
