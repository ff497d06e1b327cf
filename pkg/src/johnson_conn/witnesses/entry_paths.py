"""Disjoint paths inside the entry-r layer between two near components.

Set-up on J(n, k) with k >= 3, n >= k + 3: ``x = {1..k}``, ``r = n``,
``u = x_1^{k+1}`` and ``v = x_2^{k+2}`` (distance two through ``x``), with
``u_bar ~ u`` and ``v_bar ~ v`` avoiding ``r``.  For every admissible shape of
``u_bar`` and ``v_bar`` the family below has 2k - 1 internally disjoint paths
from ``{u, u_bar}`` to ``{v, v_bar}`` whose internal vertices all contain ``r``.

Notation: ``x_{a,b}^{c,d}`` removes ``a, b`` from ``x`` and inserts ``c, d``
with set semantics, so an entry may be removed and put back.  Fresh entries
``k+3`` and ``k+4`` stand for arbitrary entries outside ``x``, ``u``, ``v`` and
must be at most ``n - 1``; shapes that need more fresh entries than the
ground set offers are listed but flagged as omitted.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import InvalidConfigError, InvalidSwapError, UnrealizableCaseError, UnsupportedError
from ..subset_graph import MAX_N, SubsetVertex, hamming_distance, relabel, swap_many
from .paths import PathFamily, make_family

CASES = ("I", "II", "III-A", "III-B", "IV-A", "IV-B", "IV-C")

# sub-parameter choices per shape, as offsets written "k+j" or literal entries
_CHOICES = {
    "I": {"beta": ("2", "k+1"), "alpha": ("1", "k+2")},
    "II": {"beta": ("1", "k+2", "k+3"), "gamma": ("1", "k+2"), "alpha": ("k+3", "k+4")},
    "III-A": {"beta": ("1", "k+2")},
    "III-B": {"alpha": ("2", "k+1", "k+3", "k+4")},
    "IV-A": {"beta": ("1", "k+2")},
    "IV-B": {"alpha": ("2", "k+1"), "beta": ("1", "k+2")},
    "IV-C": {"alpha": ("2", "k+1", "k+3", "k+4")},
}

# fresh entries used by each shape regardless of sub-parameters
_FRESH = {"I": {3, 4}, "II": set(), "III-A": {3}, "III-B": {3}, "IV-A": {3}, "IV-B": set(), "IV-C": {3}}


def parse_entry(token: str, k: int) -> int:
    """Resolve ``"k+2"`` or ``"1"`` against ``k``."""
    m = re.fullmatch(r"\s*k\s*\+\s*(\d+)\s*", token)
    if m:
        return k + int(m.group(1))
    if re.fullmatch(r"\s*\d+\s*", token):
        return int(token)
    raise InvalidConfigError(f"cannot parse entry {token!r}; use an integer or 'k+j'")


def _symbol(token: str, k: int, allowed: Sequence[str]) -> str:
    """Normalise a user token to one of ``allowed`` (e.g. '6' -> 'k+2' at k=4)."""
    value = parse_entry(token, k)
    for sym in allowed:
        if parse_entry(sym, k) == value:
            return sym
    raise InvalidConfigError(f"{token!r} is not one of {', '.join(allowed)}")


@dataclass(frozen=True)
class EntryLayerConfig:
    n: int
    k: int
    r: int
    case_id: str
    params: tuple[tuple[str, str], ...]
    x: SubsetVertex
    u: SubsetVertex
    v: SubsetVertex
    u_bar: SubsetVertex | None
    v_bar: SubsetVertex | None
    omitted: str | None = None
    perm: tuple[int, ...] | None = field(default=None)

    @property
    def label(self) -> str:
        sub = ",".join(f"{a}={b}" for a, b in self.params)
        return f"{self.case_id}({sub})" if sub else self.case_id

    def param(self, name: str) -> int | None:
        for a, b in self.params:
            if a == name:
                return parse_entry(b, self.k)
        return None


def _fresh_needed(case_id: str, params: dict[str, str]) -> set[int]:
    need = set(_FRESH[case_id])
    for sym in params.values():
        if sym in ("k+3", "k+4"):
            need.add(int(sym[2:]))
    return need


def _base(k: int):
    x = SubsetVertex.of(range(1, k + 1))

    def X(rm, ad):
        return swap_many(x, rm, ad)

    return x, X


def _ends(case_id: str, k: int, p: dict[str, int]):
    x, X = _base(k)
    K1, K2, K3, K4 = k + 1, k + 2, k + 3, k + 4
    a, b, c = p.get("alpha"), p.get("beta"), p.get("gamma")
    if case_id == "I":
        return X((1, 2), (b, K3)), X((1, 2), (a, K4))
    if case_id == "II":
        return X((1, 3), (K1, b)), X((1, 2), (c, a))
    if case_id == "III-A":
        return X((1, 3), (K1, b)), X((2, 3), (K2, K3))
    if case_id == "III-B":
        return X((1, 3), (K1, K3)), X((2, 3), (K2, a))
    if case_id == "IV-A":
        return X((1, 3), (K1, b)), X((2, 4), (K2, K3))
    if case_id == "IV-B":
        return X((1, 3), (K1, b)), X((2, 4), (K2, a))
    if case_id == "IV-C":
        return X((1, 3), (K1, K3)), X((2, 4), (K2, a))
    raise InvalidConfigError(f"unknown case {case_id!r}")


def make_entry_layer_config(
    n: int, k: int, case_id: str, perm: Sequence[int] | None = None, **params: str
) -> EntryLayerConfig:
    """Canonical config for one shape; unrealizable shapes come back flagged.

    Sub-parameters are given as strings (``alpha="k+4"``) or integers.
    """
    if k < 3 or n < k + 3:
        raise UnsupportedError(f"needs k >= 3 and n >= k + 3, got n={n}, k={k}")
    if n > MAX_N:
        raise UnsupportedError(f"n={n} exceeds {MAX_N}")
    if case_id not in _CHOICES:
        raise InvalidConfigError(f"unknown case {case_id!r}; expected one of {', '.join(CASES)}")
    if perm is not None and sorted(perm) != list(range(1, n + 1)):
        raise InvalidConfigError(f"perm must be a permutation of 1..{n}")
    choices = _CHOICES[case_id]
    extra = set(params) - set(choices)
    missing = set(choices) - set(params)
    if extra or missing:
        raise InvalidConfigError(f"case {case_id} takes parameters {sorted(choices)}")
    syms = {name: _symbol(str(params[name]), k, choices[name]) for name in choices}
    x, X = _base(k)
    u, v = X((1,), (k + 1,)), X((2,), (k + 2,))
    reasons = []
    if case_id.startswith("IV") and k < 4:
        reasons.append("needs two distinct shared entries z3, z4, so k >= 4")
    fresh = sorted(k + j for j in _fresh_needed(case_id, syms))
    if fresh and fresh[-1] > n - 1:
        reasons.append(f"needs fresh entries {fresh} but only 1..{n - 1} avoid r={n}")
    ub = vb = None
    if not reasons:
        ub, vb = _ends(case_id, k, {a: parse_entry(s, k) for a, s in syms.items()})
    rl = (lambda z: relabel(z, perm)) if perm is not None else (lambda z: z)
    return EntryLayerConfig(
        n, k, perm[n - 1] if perm is not None else n, case_id, tuple(sorted(syms.items())),
        rl(x), rl(u), rl(v), None if ub is None else rl(ub), None if vb is None else rl(vb),
        "; ".join(reasons) or None, tuple(perm) if perm is not None else None,
    )


def enumerate_entry_layer_cases(n: int, k: int, perm: Sequence[int] | None = None) -> list[EntryLayerConfig]:
    """One config per shape and sub-parameter combination, omitted ones flagged."""
    out = []
    for case_id in CASES:
        if case_id.startswith("IV") and k < 4:
            continue
        names = sorted(_CHOICES[case_id])
        combos = [{}]
        for name in names:
            combos = [dict(c, **{name: s}) for c in combos for s in _CHOICES[case_id][name]]
        for combo in combos:
            out.append(make_entry_layer_config(n, k, case_id, perm=perm, **combo))
    return out


def check_config(cfg: EntryLayerConfig) -> list[str]:
    """Problems with ``cfg`` as a hypothesis of the construction (empty if fine)."""
    probs = []
    u, v, ub, vb, r = cfg.u, cfg.v, cfg.u_bar, cfg.v_bar, cfg.r
    if ub is None or vb is None:
        return ["config is flagged as omitted"]
    if hamming_distance(u, v) != 2:
        probs.append("u and v are not at distance two")
    if hamming_distance(u, ub) != 1:
        probs.append("u_bar is not adjacent to u")
    if hamming_distance(v, vb) != 1:
        probs.append("v_bar is not adjacent to v")
    for name, z in (("u", u), ("v", v), ("u_bar", ub), ("v_bar", vb)):
        if r in z:
            probs.append(f"{name} contains r")
    for a, na in ((u, "u"), (ub, "u_bar")):
        for b, nb in ((v, "v"), (vb, "v_bar")):
            if hamming_distance(a, b) <= 1:
                probs.append(f"{na} and {nb} coincide or are adjacent")
    shared = {relabel(SubsetVertex.of([j]), cfg.perm).entries()[0] for j in range(3, cfg.k + 1)}
    miss_u = {e for e in shared if e not in ub}
    miss_v = {e for e in shared if e not in vb}
    shape = {
        "I": not miss_u and not miss_v,
        "II": (len(miss_u) == 1) != (len(miss_v) == 1) and not (miss_u and miss_v),
        "III": len(miss_u) == 1 and miss_u == miss_v,
        "IV": len(miss_u) == 1 and len(miss_v) == 1 and miss_u != miss_v,
    }[cfg.case_id.split("-")[0]]
    if not shape:
        probs.append(f"shared entries missing from u_bar/v_bar do not match case {cfg.case_id}")
    return probs


def _templates(case_id: str, k: int, n: int, p: dict[str, int], omega: str = "auto"):
    x, X = _base(k)
    K1, K2, K3 = k + 1, k + 2, k + 3
    u, v = X((1,), (K1,)), X((2,), (K2,))
    ub, vb = _ends(case_id, k, p)
    a, b, c = p.get("alpha"), p.get("beta"), p.get("gamma")

    def P(j):
        return (f"P_{j}", [u, X((1, j), (K1, n)), X((2, j), (K1, n)), X((2, j), (K2, n)), v])

    def Ps(*js):
        return [P(j) for j in js if 3 <= j <= k]

    def T6():
        return ("T_6", [u, X((1, 3), (K1, n)), X((1, 3), (K2, n)), X((2, 3), (K2, n)), v])

    def T21():
        return ("T_21", [u, X((1, 4), (K1, n)), X((1, 4), (K2, n)), X((2, 4), (K2, n)), v])

    fam = Ps(*range(5, k + 1))
    fam.append(("T_1", [u, X((1,), (n,)), X((1, 2), (K2, n)), v]))
    fam.append(("T_2", [u, X((1, 2), (K1, n)), X((2,), (n,)), v]))

    if case_id == "I":
        for i in range(3, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 2, i), (b, K3, n)), X((1, 2, i), (a, K3, n)),
                                   X((1, 2, i), (a, K3 + 1, n)), vb]))
        fam.append(("T_3", [ub, X((1, 2), (K3, n)), X((1, 2), (K3 + 1, n)), vb]))
        fam += Ps(3, 4)
    elif case_id == "II":
        for i in range(4, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 3, i), (K1, b, n)), X((1, 3, i), (K1, a, n)),
                                   X((1, 2, 3, i), (K1, a, c, n)), X((1, 2, i), (a, c, n)), vb]))
        fam.append(("T_4", [ub, X((1, 3), (b, n)), X((1, 3), (a, n)), X((1, 2, 3), (a, c, n)), vb]))
        fam.append(("T_5", [ub, X((1, 2, 3), (K1, b, n)), X((1, 2, 3), (K1, a, n)), X((1, 2), (a, n)), vb]))
        fam += Ps(3, 4) if b in (K2, K3) else Ps(4) + [T6()]
    elif case_id == "III-A":
        for i in range(4, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 3, i), (K1, b, n)), X((1, 2, 3, i), (K1, K3, b, n)),
                                   X((2, 3, i), (K2, K3, n)), vb]))
        fam.append(("T_7", [ub, X((1, 3), (b, n)), X((1, 3), (K3, n)), X((1, 2, 3), (K2, K3, n)), vb]))
        fam.append(("T_8", [ub, X((1, 2, 3), (K1, b, n)), X((1, 2, 3), (K1, K3, n)), X((2, 3), (K3, n)), vb]))
        fam += Ps(3, 4) if b == K2 else Ps(4) + [T6()]
    elif case_id == "III-B":
        for i in range(4, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 3, i), (K1, K3, n)), X((3, i), (K3, n)), X((2, 3, i), (K2, K3, n)),
                                   X((2, 3, i), (K2, a, n)), vb]))
        if a >= K3:
            fam += Ps(3, 4)
            fam.append(("T_9", [ub, X((1, 3), (K3, n)), X((1, 3), (a, n)), X((1, 2, 3), (K2, a, n)), vb]))
            fam.append(("T_10", [ub, X((1, 2, 3), (K1, K3, n)), X((1, 2, 3), (K1, a, n)), X((2, 3), (a, n)), vb]))
        else:
            ab = K1 if a == 2 else 2
            fam += Ps(4)
            fam.append(("T_11", [ub, X((1, 2, 3), (K3, a, n)), X((1, 2, 3), (K2, a, n)), vb]))
            fam.append(("T_12", [ub, X((1, 2, 3), (K3, ab, n)), X((2, 3), (K3, n)), X((2, 3), (a, n)), vb]))
            fam.append(("T_13", [u, X((1, 3), (K1, n)), X((2, 3), (ab, n)), X((2, 3), (K2, n)), v]))
    elif case_id == "IV-A":
        for i in range(5, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 3, i), (K1, b, n)), X((1, 2, 3, i), (K1, K3, b, n)),
                                   X((1, 2, i), (K3, b, n)), X((2, 4, i), (K2, K3, n)), vb]))
        fam.append(("T_14", [ub, X((1, 3, 4), (K1, b, n)), X((1, 3, 4), (K3, b, n)),
                             X((2, 3, 4), (K2, K3, n)), vb]))
        fam.append(("T_15", [ub, X((1, 3), (b, n)), X((3,), (n,)), X((4,), (n,)), X((2, 4), (K3, n)), vb]))
        fam.append(("T_16", [ub, X((1, 2, 3), (K1, b, n)), X((1, 2, 3), (K3, b, n)), X((1, 2, 3), (K2, K3, n)),
                             X((1, 2, 4), (K2, K3, n)), vb]))
        fam += Ps(3, 4) if b == K2 else Ps(4) + [T6()]
    elif case_id == "IV-B":
        for i in range(5, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 3, i), (K1, b, n)), X((1, 3, i), (K1, K2, n)),
                                   X((1, 4, i), (K1, K2, n)), X((2, 4, i), (K2, a, n)), vb]))
        fam.append(("T_17", [ub, X((1, 3, 4), (K1, b, n)), X((1, 3, 4), (K1, K2, n)),
                             X((2, 3, 4), (K2, a, n)), vb]))
        fam.append(("T_18", [ub, X((1, 2, 3), (K1, b, n)), X((1, 2, 3), (K1, K2, n)), X((1, 2, 4), (K1, K2, n)),
                             X((1, 2, 4), (K2, a, n)), vb]))
        fam.append(("T_19", [ub, X((1, 3), (b, n)), X((3,), (n,)), X((4,), (n,)), X((2, 4), (a, n)), vb]))
        if a == 2:
            choice = omega if omega != "auto" else ("beta=1" if b == 1 else "beta=k+2")
            w = X((1, 3), (K2, n)) if choice == "beta=1" else X((2, 3), (K1, n))
            fam += Ps(4)
            fam.append(("T_20", [u, X((1, 3), (K1, n)), w, X((2, 3), (K2, n)), v]))
        elif b == K2:
            fam += Ps(3) + [T21()]
        else:
            fam += [T6(), T21()]
    elif case_id == "IV-C":
        for i in range(5, k + 1):
            fam.append((f"Q_{i}", [ub, X((1, 3, i), (K1, K3, n)), X((1, 3, i), (K2, K3, n)),
                                   X((1, 4, i), (K2, K3, n)), X((2, 4, i), (K2, K3, n)),
                                   X((2, 4, i), (K2, a, n)), vb]))
        fam.append(("T_22", [ub, X((1, 3), (K3, n)), X((2, 3), (K3, n)), X((2, 3), (a, n)),
                             X((2, 4), (a, n)), vb]))
        if a >= K3:
            fam += Ps(3, 4)
            fam.append(("T_23", [ub, *_t23_head(X, K1, K3, n), X((2, 3, 4), (K1, a, n)),
                                 X((2, 3, 4), (K2, a, n)), vb]))
            fam.append(("T_24", [ub, X((1, 2, 3), (K1, K3, n)), X((1, 2, 3), (K1, a, n)),
                                 X((1, 2, 4), (K1, a, n)), X((1, 2, 4), (K2, a, n)), vb]))
        else:
            T25 = ("T_25", [ub, *_t23_head(X, K1, K3, n), X((2, 3, 4), (K3, a, n)),
                            X((2, 3, 4), (K2, a, n)), vb])
            T26 = ("T_26", [ub, X((1, 2, 3), (K1, K3, n)), X((1, 2), (K3, n)), X((1, 2, 4), (K3, a, n)),
                            X((1, 2, 4), (K2, a, n)), vb])
            fam += (Ps(3, 4) if a == 2 else [T6(), T21()]) + [T25, T26]
    return u, v, ub, vb, fam


def _t23_head(X, K1, K3, n):
    # x_{2,3,4}^{k+1,k+3,n} is two swaps from u_bar; the step through
    # x_{1,3,4}^{k+1,k+3,n} joins them
    return [X((1, 3, 4), (K1, K3, n)), X((2, 3, 4), (K1, K3, n))]


def entry_layer_paths(cfg: EntryLayerConfig, omega: str = "auto") -> PathFamily:
    """The 2k - 1 internally disjoint ``{u, u_bar}``-``{v, v_bar}`` paths.

    Parameters
    ----------
    cfg : EntryLayerConfig
        A config from :func:`enumerate_entry_layer_cases` or
        :func:`make_entry_layer_config`.
    omega : {"auto", "beta=1", "beta=k+2"}
        Middle vertex of ``T_20`` (shape IV-B with alpha = 2).  ``"auto"``
        picks the choice matching beta.

    Raises
    ------
    UnrealizableCaseError
        For configs flagged as omitted.
    InvalidConfigError
        If ``cfg`` differs from the canonical config for its shape.
    """
    if cfg.omitted:
        raise UnrealizableCaseError(f"{cfg.label} at (n={cfg.n}, k={cfg.k}) is omitted: {cfg.omitted}")
    canon = make_entry_layer_config(cfg.n, cfg.k, cfg.case_id, perm=cfg.perm, **dict(cfg.params))
    if canon != cfg:
        raise InvalidConfigError(f"config for {cfg.label} does not match the canonical construction")
    probs = check_config(cfg)
    if probs:
        raise InvalidConfigError(f"{cfg.label}: " + "; ".join(probs))
    p = {a: parse_entry(s, cfg.k) for a, s in cfg.params}
    try:
        u, v, ub, vb, fam = _templates(cfg.case_id, cfg.k, cfg.n, p, omega)
    except InvalidSwapError as err:  # pragma: no cover - templates are checked by the tests
        raise InvalidConfigError(f"{cfg.label}: template produced an invalid swap ({err})") from err
    perm = cfg.perm
    fam = [(lab, [relabel(z, perm) for z in path]) for lab, path in fam]
    return make_family(fam, required_entry=cfg.r, sources=frozenset({cfg.u, cfg.u_bar}),
                       targets=frozenset({cfg.v, cfg.v_bar}), case_id=cfg.label)


lemma8_paths = entry_layer_paths
Lemma8Config = EntryLayerConfig
make_lemma8_config = make_entry_layer_config
enumerate_lemma8_cases = enumerate_entry_layer_cases
