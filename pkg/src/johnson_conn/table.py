"""Closed-form connectivity values for J(n, k) and the formula-versus-computed table."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .connectivity import (
    DEFAULT_BUDGET,
    DEFAULT_ORACLE_CAP,
    INFINITY,
    ConnectivityReport,
    super_connectivity_exact,
    super_cut_oracle,
)
from .subset_graph import johnson_graph

METHODS = ("auto", "oracle", "oracle-capped", "flow", "formula")


@dataclass(frozen=True)
class FormulaValue:
    value: int | float
    clause: str
    ambiguous: bool = False


def kappa_formula(n: int, k: int) -> int:
    """Vertex connectivity of J(n, k): the degree k(n - k)."""
    return k * (n - k)


def kappa_prime_formula(n: int, k: int) -> FormulaValue:
    """Piecewise closed form for the super-connectivity of J(n, k).

    The clause ``3(k-1)`` for ``n = k + 2`` is flagged ambiguous at ``k = 3``:
    J(5, 3) is isomorphic to J(5, 2), which has no super vertex-cut at all.
    """
    if k == 2 and n >= 6:
        return FormulaValue(3 * (n - 3), "3(n-3)")
    if k >= 3 and n == k + 2:
        return FormulaValue(3 * (k - 1), "3(k-1)", ambiguous=k == 3)
    if k >= 3 and n >= k + 3:
        return FormulaValue((2 * k - 1) * (n - k) - k, "(2k-1)(n-k)-k")
    return FormulaValue(INFINITY, "infinity")


def ambiguity_note(n: int, k: int, computed) -> str:
    return (f"J({n},{k}): the closed form gives 3(k-1) = {3 * (k - 1)} for n = k + 2, but J({n},{k}) is "
            f"isomorphic to J({n},{n - k}) which has no super vertex-cut; computed value "
            f"{'infinity' if computed == INFINITY else computed}")


@dataclass
class TableRow:
    n: int
    k: int
    kappa_formula: int
    kappa_computed: int | None
    kappa_prime_formula: int | float
    kappa_prime_computed: int | float | None
    method: str
    agreement: bool
    elapsed: float = 0.0
    ambiguous: bool = False
    status: str = "ok"
    notes: list[str] = field(default_factory=list)


def compute(
    n: int,
    k: int,
    method: str = "auto",
    max_oracle_vertices: int = DEFAULT_ORACLE_CAP,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = 1,
) -> ConnectivityReport | None:
    """Run the requested engine on J(n, k); ``None`` when the method declines."""
    g = johnson_graph(n, k)
    small = len(g) <= max_oracle_vertices
    if method == "oracle" or (method in ("auto", "oracle-capped") and small):
        return super_cut_oracle(g, max_vertices=max_oracle_vertices)
    if method in ("flow", "auto"):
        return super_connectivity_exact(g, budget=budget, workers=workers)
    return None


def table_row(
    n: int,
    k: int,
    method: str = "auto",
    max_oracle_vertices: int = DEFAULT_ORACLE_CAP,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = 1,
) -> TableRow:
    t0 = time.perf_counter()
    kf = kappa_formula(n, k)
    pf = kappa_prime_formula(n, k)
    row = TableRow(n, k, kf, None, pf.value, None, method, True, ambiguous=pf.ambiguous)
    if method != "formula":
        try:
            rep = compute(n, k, method, max_oracle_vertices, budget, workers)
        except ValueError as err:
            rep = None
            row.status = "error"
            row.notes.append(f"{type(err).__name__}: {err}")
        if rep is not None:
            row.method = rep.method
            row.kappa_computed = rep.kappa
            if rep.status == "exact":
                row.kappa_prime_computed = rep.kappa_prime
            else:
                row.status = rep.status
                row.notes += rep.notes
        elif row.status == "ok":
            row.status = "not-computed"
    else:
        row.status = "not-computed"
    pairs = [(kf, row.kappa_computed), (pf.value, row.kappa_prime_computed)]
    row.agreement = all(c is None or c == f for f, c in pairs)
    if pf.ambiguous:
        row.notes.append(ambiguity_note(n, k, row.kappa_prime_computed))
    row.elapsed = time.perf_counter() - t0
    return row


def compute_table(
    k_values,
    n_max: int,
    n_min: int | None = None,
    method: str = "auto",
    max_oracle_vertices: int = DEFAULT_ORACLE_CAP,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = 1,
) -> list[TableRow]:
    """One row per (n, k) with ``max(k, n_min) <= n <= n_max``."""
    rows = []
    for k in k_values:
        lo = k if n_min is None else max(k, n_min)
        for n in range(lo, n_max + 1):
            rows.append(table_row(n, k, method, max_oracle_vertices, budget, workers))
    return rows


def summarize(rows: list[TableRow]) -> dict:
    computed = [r for r in rows if r.kappa_prime_computed is not None]
    return {
        "cells": len(rows),
        "computed": len(computed),
        "agree": sum(r.agreement for r in computed),
        "disagree": sum(not r.agreement and not r.ambiguous for r in rows),
        "ambiguous": sum(r.ambiguous for r in rows),
        "not_computed": len(rows) - len(computed),
    }


def is_finite(value) -> bool:
    return value is not None and value != math.inf
