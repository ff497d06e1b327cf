"""Disjoint paths from a vertex two steps away back to an edge-neighbourhood.

Set-up on J(n, k) with k >= 3, n >= k + 3: ``x = {1..k}``, ``w = x`` with
``k-1, k`` replaced by ``k+1, k+2``, and ``s1`` the neighbours of ``x`` that
avoid entry ``n``.  The neighbours of ``w`` outside ``s1`` split into four
classes by their distance to ``x_k^n``; the family below routes one path
through every vertex of the first three classes and one through the fourth,
ending at ``x`` or ``x_k^n`` and avoiding ``s1``.  Its size is (k-1)(n-k).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import InvalidConfigError, UnsupportedError
from ..subset_graph import MAX_N, SubsetVertex, hamming_distance, relabel, swap_many
from .cuts import johnson_neighbours
from .paths import PathFamily, make_family


@dataclass(frozen=True)
class NeighbourClassConfig:
    n: int
    k: int
    x: SubsetVertex
    w: SubsetVertex
    target: SubsetVertex
    s1: frozenset[SubsetVertex]
    a1: frozenset[SubsetVertex]
    a2: frozenset[SubsetVertex]
    a3: frozenset[SubsetVertex]
    a4: frozenset[SubsetVertex]
    perm: tuple[int, ...] | None = None

    @property
    def class_sizes(self) -> tuple[int, int, int, int]:
        return len(self.a1), len(self.a2), len(self.a3), len(self.a4)


def _canonical(n: int, k: int):
    x = SubsetVertex.of(range(1, k + 1))

    def X(rm, ad):
        return swap_many(x, rm, ad)

    w = X((k - 1, k), (k + 1, k + 2))
    xkn = X((k,), (n,))
    s1 = frozenset(v for v in johnson_neighbours(x, n) if n not in v)
    rest = johnson_neighbours(w, n) - s1
    a4 = frozenset(X((k - 1, k), (k + 1, j)) for j in range(k + 3, n))
    a1 = frozenset(v for v in rest if hamming_distance(v, xkn) == 1)
    a2 = frozenset(v for v in rest if hamming_distance(v, xkn) == 2) - a4
    a3 = frozenset(v for v in rest if hamming_distance(v, xkn) == 3)
    if a1 | a2 | a3 | a4 != rest:
        raise AssertionError("neighbour classes do not cover N(w) - s1")
    return x, w, xkn, s1, (a1, a2, a3, a4), X


def neighbour_class_config(n: int, k: int, perm: Sequence[int] | None = None) -> NeighbourClassConfig:
    """Canonical set-up for (n, k), optionally relabelled by ``perm``."""
    if k < 3 or n < k + 3:
        raise UnsupportedError(f"needs k >= 3 and n >= k + 3, got n={n}, k={k}")
    if n > MAX_N:
        raise UnsupportedError(f"n={n} exceeds {MAX_N}")
    if perm is not None and sorted(perm) != list(range(1, n + 1)):
        raise InvalidConfigError(f"perm must be a permutation of 1..{n}")
    x, w, xkn, s1, classes, _ = _canonical(n, k)

    def rl(v):
        return relabel(v, perm)

    def rs(vs):
        return frozenset(map(rl, vs))

    return NeighbourClassConfig(n, k, rl(x), rl(w), rl(xkn), rs(s1), *map(rs, classes),
                        perm=tuple(perm) if perm is not None else None)


def neighbour_class_paths(cfg: NeighbourClassConfig) -> PathFamily:
    """The (k-1)(n-k) internally disjoint paths from ``w`` to ``{x, x_k^n}``.

    At ``n = k + 3`` only (k-1)(n-k) - 1 paths exist (``w`` runs out of
    neighbours); the family then omits ``IV`` and says so in ``notes``.

    Labels name the template: ``I`` (first class, one hop), ``II.i``,
    ``II.ii``, ``II.iii`` (second class), ``III`` (third class) and ``IV``
    (the single path through the fourth class).

    Raises
    ------
    InvalidConfigError
        If ``cfg`` does not match the canonical set-up for its n, k and perm.
    """
    n, k = cfg.n, cfg.k
    if cfg != neighbour_class_config(n, k, cfg.perm):
        raise InvalidConfigError("config does not match the canonical construction")
    x, w, xkn, _, (a1, _, _, _), X = _canonical(n, k)
    fam: list[tuple[str, list[SubsetVertex]]] = []
    for a in sorted(a1, key=SubsetVertex.sort_key):
        fam.append((f"I_{a!r}", [w, a, xkn]))
    for j in range(k + 3, n):
        fam.append((f"II.i_j={j}", [w, X((k - 1, k), (k + 2, j)), X((k - 1, k), (n, j)), xkn]))
    for i in range(1, k - 1):
        fam.append((f"II.ii_i={i}", [w, X((i, k), (k + 1, k + 2)), X((i, k), (k + 1, n)), xkn]))
    for i in range(1, k - 1):
        fam.append((f"II.iii_i={i}", [w, X((i, k - 1, k), (k + 1, k + 2, n)), X((i, k), (k + 2, n)), xkn]))
    for i in range(1, k - 1):
        for j in [k] + list(range(k + 3, n)):
            fam.append((f"III_i={i},j={j}", [w, X((i, k - 1, k), (k + 1, k + 2, j)),
                                              X((i, k - 1, k), (k + 1, n, j)), X((i, k), (n, j)), xkn]))
    notes = ()
    if n > k + 3:
        # the second removed entry is 2 in general; at k = 3 that collides with k - 1, so use 1
        h = 2 if k > 3 else 1
        fam.append(("IV", [w, X((k - 1, k), (k + 1, k + 3)), X((h, k - 1), (k + 1, k + 3)),
                           X((h, k - 1), (k + 3, n)), X((k - 1,), (n,)), x]))
    else:
        notes = (f"n = k + 3: the fourth class is empty and w has only {k * (n - k) - 4} neighbours "
                 f"outside s1, so at most {k * (n - k) - 4} < {(k - 1) * (n - k)} disjoint paths exist",)
    perm = cfg.perm
    fam = [(lab, [relabel(v, perm) for v in p]) for lab, p in fam]
    return make_family(fam, forbidden_vertices=cfg.s1, sources=frozenset({cfg.w}),
                       targets=frozenset({cfg.x, cfg.target}), notes=notes)


lemma7_paths = neighbour_class_paths
Lemma7Config = NeighbourClassConfig
