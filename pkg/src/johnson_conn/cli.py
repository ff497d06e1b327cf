"""Command-line interface: ``usg <command> ...`` (or ``python -m johnson_conn``).

Exit codes: 0 success, 1 invalid certificate or disagreement, 2 usage / parse /
rank error, 3 capacity or budget exceeded, 4 path family omitted because the
requested case is unrealizable at the given (n, k).

Defaults for the shared options come from ``USG_*`` environment variables when
set (``USG_WORKERS``, ``USG_BUDGET``, ``USG_MAX_ORACLE_VERTICES``,
``USG_TIMING``); explicit flags win.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Sequence

from . import formats
from .connectivity import (
    DEFAULT_BUDGET,
    DEFAULT_ORACLE_CAP,
    components,
    global_vertex_connectivity,
    is_super_vertex_cut,
    super_connectivity_exact,
    super_cut_oracle,
)
from .errors import (
    CapacityError,
    NotConnectedError,
    NoVertexCutError,
    SubsetGraphError,
    TooLargeError,
    UnrealizableCaseError,
)
from .subset_graph import GraphParams, build_graph
from .table import METHODS, compute_table, kappa_formula, kappa_prime_formula, summarize, ambiguity_note
from .witnesses import (
    cut_edge_neighborhood,
    cut_jn2,
    entry_layer_paths,
    enumerate_entry_layer_cases,
    make_entry_layer_config,
    neighbour_class_config,
    neighbour_class_paths,
    verify_path_family,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_CAPACITY, EXIT_OMITTED = 0, 1, 2, 3, 4


def _env(name: str, default, cast=int):
    raw = os.environ.get(f"USG_{name}")
    if raw is None or raw == "":
        return default
    try:
        if cast is bool:
            return raw.strip().lower() in ("1", "true", "yes", "on")
        return cast(raw)
    except ValueError:
        raise SystemExit(f"error: USG_{name}={raw!r} is not a valid value") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--timing", action="store_true", default=_env("TIMING", False, bool),
                   help="add elapsed-time fields (output is then not byte-deterministic)")
    p.add_argument("--workers", type=int, default=_env("WORKERS", os.cpu_count() or 1),
                   help="worker processes for the flow search (result does not depend on it)")
    p.add_argument("--max-oracle-vertices", type=int, default=_env("MAX_ORACLE_VERTICES", DEFAULT_ORACLE_CAP),
                   help="largest graph the brute-force oracle accepts (default 24)")
    p.add_argument("--budget", type=int, default=_env("BUDGET", DEFAULT_BUDGET),
                   help="flow evaluations allowed in the super-connectivity search (default 1e7)")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def _graph_args(p: argparse.ArgumentParser, need_k: bool = True) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=need_k)
    p.add_argument("--t", type=int, default=None, help="intersection size (default k-1, the Johnson graph)")


def _params(a) -> GraphParams:
    return GraphParams(a.n, a.k, a.t)


def _emit(a, text: str) -> None:
    if a.output:
        with open(a.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _perm(raw: str | None):
    if raw is None:
        return None
    return [int(x) for x in raw.split(",")]


# -- commands -------------------------------------------------------------------------------


def cmd_gen(a) -> int:
    g = build_graph(_params(a))
    _emit(a, formats.write_graph(g, a.format))
    return EXIT_OK


def cmd_kappa(a) -> int:
    t0 = time.perf_counter()
    g = build_graph(_params(a))
    notes = []
    try:
        kappa, cut = global_vertex_connectivity(g)
        witness = formats.witness_json(g, is_super_vertex_cut(g, cut))
    except NoVertexCutError as err:
        kappa, witness = err.kappa, None
        notes.append(f"complete graph: kappa = |V| - 1 = {kappa}, no vertex cut exists")
    except NotConnectedError:
        kappa = 0
        witness = {"cut": [], "components": [formats.subsets(g, c) for c in components(g, ())]}
        notes.append("graph is disconnected")
    doc = {"graph": formats.graph_header(g.params), "kappa": kappa, "witness": witness, "method": "flow",
           "notes": notes}
    if g.params.is_johnson:
        doc["agreement"] = kappa == kappa_formula(a.n, a.k)
        if not doc["agreement"]:
            notes.append(f"degree formula k(n-k) = {kappa_formula(a.n, a.k)} disagrees")
    if a.timing:
        doc["elapsed"] = round(time.perf_counter() - t0, 6)
    _emit(a, formats.dumps(doc))
    return EXIT_OK if doc.get("agreement", True) else EXIT_INVALID


def _run_engine(g, a, prefer: str):
    if prefer == "oracle" or (prefer == "auto" and len(g) <= a.max_oracle_vertices):
        return super_cut_oracle(g, max_vertices=a.max_oracle_vertices)
    return super_connectivity_exact(g, budget=a.budget, workers=a.workers)


def _value(rep):
    if rep is None:
        return None
    return rep.kappa_prime if rep.status == "exact" else None


def cmd_superkappa(a) -> int:
    t0 = time.perf_counter()
    params = _params(a)
    g = build_graph(params)
    notes: list[str] = []
    formula = kappa_prime_formula(a.n, a.k) if params.is_johnson else None
    doc = {"graph": formats.graph_header(params)}
    code = EXIT_OK
    if a.method == "formula":
        if formula is None:
            raise SubsetGraphError("the closed form only covers Johnson graphs (t = k - 1)")
        if formula.ambiguous:
            notes.append(ambiguity_note(a.n, a.k, "not computed"))
        doc.update(kappa=kappa_formula(a.n, a.k), kappa_prime=formats.infinity_json(formula.value),
                   witness=None, method="formula", agreement=None)
    elif a.method == "auto" and formula is not None and not formula.ambiguous:
        rep = _run_engine(g, a, "auto")
        computed = _value(rep)
        agree = None if computed is None else computed == formula.value
        if rep.status != "exact":
            notes += rep.notes
        doc.update(kappa=kappa_formula(a.n, a.k), kappa_prime=formats.infinity_json(formula.value),
                   witness=formats.witness_json(g, rep.kappa_prime_witness), method="formula", agreement=agree)
        doc["cross_check"] = {"method": rep.method, "status": rep.status, "kappa": rep.kappa,
                              "kappa_prime": formats.infinity_json(computed),
                              "exhaustion": formats.exhaustion_json(rep.exhaustion)}
        if agree is False:
            notes.append(f"computed value {formats.infinity_json(computed)} disagrees with the closed form")
            code = EXIT_INVALID
        elif rep.status == "budget-exceeded":
            code = EXIT_CAPACITY
    else:
        prefer = {"auto": "auto", "oracle": "oracle", "flow": "flow"}[a.method]
        rep = _run_engine(g, a, prefer)
        computed = _value(rep)
        agree = None
        if formula is not None and computed is not None:
            agree = computed == formula.value
            if formula.ambiguous:
                notes.append(ambiguity_note(a.n, a.k, computed))
            elif not agree:
                notes.append(f"computed value disagrees with the closed form {formats.infinity_json(formula.value)}")
                code = EXIT_INVALID
        notes += rep.notes
        doc.update(kappa=rep.kappa, kappa_prime=formats.infinity_json(computed),
                   witness=formats.witness_json(g, rep.kappa_prime_witness), method=rep.method, agreement=agree)
        doc["status"] = rep.status
        doc["exhaustion"] = formats.exhaustion_json(rep.exhaustion)
        if rep.status == "budget-exceeded":
            doc["bounds"] = {"lower": rep.lower_bound, "upper": rep.upper_bound}
            code = EXIT_CAPACITY
        elif rep.status == "none-found":
            notes.append("raise --max-oracle-vertices to let the oracle settle infinity")
            code = EXIT_CAPACITY
    if formula is not None:
        doc["formula"] = {"value": formats.infinity_json(formula.value), "clause": formula.clause,
                          "ambiguous": formula.ambiguous}
    doc["notes"] = notes
    if a.timing:
        doc["elapsed"] = round(time.perf_counter() - t0, 6)
    _emit(a, formats.dumps(doc))
    return code


def cmd_witness(a) -> int:
    if a.kind == "jn2":
        k = 2 if a.k is None else a.k
        if k != 2:
            raise SubsetGraphError("the jn2 cut is defined for k = 2 only")
        g = build_graph(GraphParams(a.n, 2))
        triple = [int(x) for x in a.triple.split(",")]
        cert = is_super_vertex_cut(g, cut_jn2(a.n, triple, graph=g))
        doc = formats.cut_document(g, cert, construction="jn2", triple=sorted(triple))
    else:
        if a.k is None:
            raise SubsetGraphError("--k is required for the edge-neighborhood cut")
        enc = cut_edge_neighborhood(a.n, a.k, perm=_perm(a.perm))
        g = build_graph(GraphParams(a.n, a.k))
        cert = is_super_vertex_cut(g, enc.cut(g))

        def vs(items):
            return formats.subsets(g, (g.rank(v) for v in items))

        doc = formats.cut_document(g, cert, construction="edge-neighborhood",
                                   edge=[formats.subset(enc.x), formats.subset(enc.partner)],
                                   s1=vs(enc.s1), s2=vs(enc.s2), s3=vs(enc.s3))
    _emit(a, formats.dumps(doc))
    return EXIT_OK if cert.is_super else EXIT_INVALID


def cmd_paths(a) -> int:
    family = a.family or {"7": "neighbour-classes", "8": "entry-layer"}.get(a.lemma)
    if family is None:
        raise SubsetGraphError("choose --family neighbour-classes|entry-layer (or --lemma 7|8)")
    g = build_graph(GraphParams(a.n, a.k))
    perm = _perm(a.perm)
    if family == "neighbour-classes":
        fam = neighbour_class_paths(neighbour_class_config(a.n, a.k, perm))
        need = (a.k - 1) * (a.n - a.k)
        exact = True
    else:
        if a.case is None:
            raise SubsetGraphError("--case is required for the entry-layer family")
        params = {name: getattr(a, name) for name in ("alpha", "beta", "gamma") if getattr(a, name) is not None}
        same = [c for c in enumerate_entry_layer_cases(a.n, a.k, perm) if c.case_id == a.case]
        if same and all(c.omitted for c in same) and len(params) < len(same[0].params):
            # without sub-parameters, report the case as omitted when no choice is realizable
            cfg = same[0]
        else:
            cfg = make_entry_layer_config(a.n, a.k, a.case, perm=perm, **params)
        if cfg.omitted:
            doc = {"kind": "paths", "graph": formats.graph_header(g.params), "case_id": cfg.case_id,
                   "status": "omitted", "reason": cfg.omitted}
            _emit(a, formats.dumps(doc))
            return EXIT_OMITTED
        fam = entry_layer_paths(cfg, omega=a.omega)
        need = 2 * a.k - 1
        exact = False
    check = verify_path_family(g, fam)
    count_ok = len(fam) == need if exact else len(fam) >= need
    doc = formats.family_document(g, fam, family=family, minimum_count=need, count_ok=count_ok,
                                  check=check.as_dict())
    _emit(a, formats.dumps(doc))
    return EXIT_OK if check.ok and count_ok else EXIT_INVALID


def cmd_verify(a) -> int:
    with open(a.graph, encoding="utf-8") as fh:
        g = formats.read_graph(fh.read())
    with open(a.certificate, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as err:
            raise formats.ParseError(f"certificate is not JSON: {err}") from None
    kind, payload = formats.read_certificate(g, doc)
    violations = []
    if kind == "cut":
        cut, comps, claims = payload
        cert = is_super_vertex_cut(g, cut)
        if comps != cert.components:
            violations.append("components: stored partition differs from the components of G - S")
        recomputed = {"size": len(cut), "min_component_order": cert.min_component_order,
                      "is_disconnecting": cert.is_disconnecting, "is_super": cert.is_super}
        for key, claimed in claims.items():
            if recomputed[key] != claimed:
                violations.append(f"{key}: claimed {json.dumps(claimed)}, recomputed {json.dumps(recomputed[key])}")
        if claims.get("is_super", True) and not cert.is_disconnecting:
            violations.append("is_disconnecting: G - S is connected")
        elif claims.get("is_super", True) and cert.min_component_order < 2:
            violations.append("no isolated vertex: G - S has an isolated vertex")
        out = {"kind": "cut", "valid": not violations, "violations": violations, "recomputed": recomputed}
    else:
        fam, minimum = payload
        check = verify_path_family(g, fam)
        violations = list(check.failures)
        if minimum is not None and len(fam) < minimum:
            violations.append(f"count: {len(fam)} paths, at least {minimum} required")
        out = {"kind": "paths", "valid": not violations, "violations": violations, "check": check.as_dict()}
    _emit(a, formats.dumps(out))
    return EXIT_OK if not violations else EXIT_INVALID


def _int_range(raw: str) -> list[int]:
    out = []
    for part in raw.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out += range(int(lo), int(hi) + 1)
        else:
            out.append(int(part))
    return out


def cmd_table(a) -> int:
    rows = compute_table(_int_range(a.k), a.n_max, a.n_min, a.method, a.max_oracle_vertices, a.budget, a.workers)
    summary = summarize(rows)
    if a.format == "json":
        items = []
        for r in rows:
            item = {"n": r.n, "k": r.k, "kappa_formula": r.kappa_formula, "kappa_computed": r.kappa_computed,
                    "kappa_prime_formula": formats.infinity_json(r.kappa_prime_formula),
                    "kappa_prime_computed": formats.infinity_json(r.kappa_prime_computed),
                    "method": r.method, "agreement": r.agreement, "ambiguous": r.ambiguous,
                    "status": r.status, "notes": r.notes}
            if a.timing:
                item["elapsed"] = round(r.elapsed, 6)
            items.append(item)
        text = formats.dumps({"rows": items, "summary": summary})
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        head = ["n", "k", "kappa_formula", "kappa_computed", "kappa_prime_formula", "kappa_prime_computed",
                "method", "agreement", "ambiguous", "status"]
        w.writerow(head + (["elapsed_s"] if a.timing else []))
        for r in rows:
            row = [r.n, r.k, r.kappa_formula, "" if r.kappa_computed is None else r.kappa_computed,
                   formats.infinity_csv(r.kappa_prime_formula), formats.infinity_csv(r.kappa_prime_computed),
                   r.method, str(r.agreement).lower(), str(r.ambiguous).lower(), r.status]
            w.writerow(row + ([f"{r.elapsed:.6f}"] if a.timing else []))
        for r in rows:
            for note in r.notes:
                buf.write(f"# note J({r.n},{r.k}): {note}\n")
        buf.write("# summary " + " ".join(f"{key}={val}" for key, val in summary.items()) + "\n")
        text = buf.getvalue()
    _emit(a, text)
    return EXIT_INVALID if summary["disagree"] else EXIT_OK


# -- parser -------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="usg", description="Connectivity toolkit for uniform subset graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write G(n,k,t) as dimacs, json or edge-list")
    _graph_args(p)
    p.add_argument("--format", choices=formats.FORMATS, default="dimacs")
    _common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("kappa", help="vertex connectivity with a minimum cut")
    _graph_args(p)
    _common(p)
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("superkappa", help="super-connectivity report")
    _graph_args(p)
    p.add_argument("--method", choices=("auto", "formula", "flow", "oracle"), default="auto")
    _common(p)
    p.set_defaults(func=cmd_superkappa)

    p = sub.add_parser("witness", help="explicit super vertex-cut with certificate")
    p.add_argument("--kind", choices=("jn2", "edge-neighborhood"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--triple", default="1,2,3", help="three entries for the jn2 cut")
    p.add_argument("--perm", help="entry relabelling for the edge-neighborhood cut, e.g. 3,1,2,...")
    _common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("paths", help="build and check a disjoint path family")
    p.add_argument("--family", choices=("neighbour-classes", "entry-layer"))
    p.add_argument("--lemma", choices=("7", "8"), help="alias: 7 = neighbour-classes, 8 = entry-layer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--case", help="entry-layer shape: I, II, III-A, III-B, IV-A, IV-B, IV-C")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.add_argument("--gamma")
    p.add_argument("--omega", choices=("auto", "beta=1", "beta=k+2"), default="auto")
    p.add_argument("--perm")
    _common(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="re-check a stored cut or path certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="closed form versus computed super-connectivity")
    p.add_argument("--k", default="1-4", help="k values, e.g. 1-4 or 2,3")
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--n-min", type=int, default=None, help="smallest n (default: k for each row)")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _common(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return EXIT_USAGE
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (CapacityError, TooLargeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CAPACITY
    except UnrealizableCaseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_OMITTED
    except (SubsetGraphError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
