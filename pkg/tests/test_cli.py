import json
import subprocess
import sys

import pytest

from johnson_conn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


# -- gen -------------------------------------------------------------------------------------


def test_gen_octahedron(capsys):
    code, out, _ = run(capsys, "gen", "--n", "4", "--k", "2", "--format", "dimacs")
    assert code == 0 and "p edge 6 12" in out.splitlines()


def test_gen_triangle(capsys):
    code, out, _ = run(capsys, "gen", "--n", "3", "--k", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 3 and len(doc["edges"]) == 3


def test_gen_petersen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "5", "--k", "2", "--t", "0")
    assert code == 0 and "p edge 10 15" in out.splitlines()


def test_gen_is_deterministic_and_round_trips(capsys, tmp_path):
    for fmt in ("dimacs", "json", "edge-list"):
        _, first, _ = run(capsys, "gen", "--n", "6", "--k", "3", "--format", fmt)
        _, second, _ = run(capsys, "gen", "--n", "6", "--k", "3", "--format", fmt)
        assert first == second
        from johnson_conn import formats

        assert formats.write_graph(formats.read_graph(first), fmt) == first


def test_gen_errors(capsys):
    assert run(capsys, "gen", "--n", "70", "--k", "1")[0] == 3
    assert run(capsys, "gen", "--n", "3", "--k", "5")[0] == 2
    assert run(capsys, "gen", "--n", "3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "g.txt"
    code, out, _ = run(capsys, "gen", "--n", "4", "--k", "2", "-o", str(target))
    assert code == 0 and out == "" and "p edge 6 12" in target.read_text()


# -- kappa / superkappa -------------------------------------------------------------------------


@pytest.mark.parametrize("n,k,want", [(6, 2, 8), (9, 4, 20)])
def test_kappa(capsys, n, k, want):
    code, doc = run_json(capsys, "kappa", "--n", str(n), "--k", str(k))
    assert code == 0 and doc["kappa"] == want and len(doc["witness"]["cut"]) == want


def test_kappa_complete_graph(capsys):
    code, doc = run_json(capsys, "kappa", "--n", "5", "--k", "1")
    assert code == 0 and doc["kappa"] == 4 and doc["witness"] is None and doc["notes"]


def test_superkappa_examples(capsys):
    code, doc = run_json(capsys, "superkappa", "--n", "7", "--k", "2")
    assert code == 0 and doc["kappa_prime"] == 12 and doc["agreement"] is True
    code, doc = run_json(capsys, "superkappa", "--n", "8", "--k", "3")
    assert code == 0 and doc["kappa_prime"] == 22 and len(doc["witness"]["cut"]) == 22
    code, doc = run_json(capsys, "superkappa", "--n", "5", "--k", "2")
    assert code == 0 and doc["kappa_prime"] == "infinity"
    assert doc["cross_check"]["exhaustion"]["max_cut_size"] == 6


def test_superkappa_j53_computes_and_notes(capsys):
    code, doc = run_json(capsys, "superkappa", "--n", "5", "--k", "3")
    assert code == 0 and doc["kappa_prime"] == "infinity"
    assert doc["agreement"] is False and doc["formula"]["ambiguous"] is True
    assert any("J(5,2)" in note for note in doc["notes"])


def test_superkappa_methods(capsys):
    _, doc = run_json(capsys, "superkappa", "--n", "6", "--k", "2", "--method", "formula")
    assert doc["kappa_prime"] == 9 and doc["witness"] is None
    _, doc = run_json(capsys, "superkappa", "--n", "6", "--k", "2", "--method", "flow")
    assert doc["kappa_prime"] == 9 and doc["method"] == "flow-search"
    _, doc = run_json(capsys, "superkappa", "--n", "5", "--k", "2", "--t", "0", "--method", "oracle")
    assert doc["kappa_prime"] == 4 and "formula" not in doc


def test_superkappa_exit_codes(capsys):
    assert run(capsys, "superkappa", "--n", "7", "--k", "3", "--method", "oracle")[0] == 3
    assert run(capsys, "superkappa", "--n", "7", "--k", "3", "--method", "flow", "--budget", "4")[0] == 3
    assert run(capsys, "superkappa", "--n", "5", "--k", "2", "--method", "flow")[0] == 3
    assert run(capsys, "superkappa", "--n", "5", "--k", "2", "--t", "0", "--method", "formula")[0] == 2


def test_superkappa_is_byte_deterministic(capsys):
    outs = {run(capsys, "superkappa", "--n", "7", "--k", "2", "--workers", str(w))[1] for w in (1, 2)}
    assert len(outs) == 1
    _, doc = run_json(capsys, "superkappa", "--n", "6", "--k", "2", "--timing")
    assert "elapsed" in doc


def test_env_defaults_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("USG_MAX_ORACLE_VERTICES", "5")
    assert run(capsys, "superkappa", "--n", "5", "--k", "2", "--method", "oracle")[0] == 3
    code, doc = run_json(capsys, "superkappa", "--n", "5", "--k", "2", "--method", "oracle",
                         "--max-oracle-vertices", "10")
    assert code == 0 and doc["kappa_prime"] == "infinity"
    monkeypatch.setenv("USG_TIMING", "1")
    _, doc = run_json(capsys, "kappa", "--n", "5", "--k", "2")
    assert "elapsed" in doc
    monkeypatch.setenv("USG_BUDGET", "lots")
    assert run(capsys, "kappa", "--n", "5", "--k", "2")[0] == 2


# -- witness / paths -------------------------------------------------------------------------------


def test_witness_examples(capsys):
    code, doc = run_json(capsys, "witness", "--kind", "jn2", "--n", "6")
    assert code == 0 and doc["size"] == 9 and doc["is_super"]
    code, doc = run_json(capsys, "witness", "--kind", "edge-neighborhood", "--n", "7", "--k", "3")
    assert code == 0 and doc["size"] == 17 and len(doc["s1"]) == 5
    assert run(capsys, "witness", "--kind", "edge-neighborhood", "--n", "5", "--k", "3")[0] == 2


def test_paths_examples(capsys):
    code, doc = run_json(capsys, "paths", "--lemma", "7", "--n", "7", "--k", "3")
    assert code == 0 and doc["count"] == 8 and doc["check"]["ok"]
    code, doc = run_json(capsys, "paths", "--family", "entry-layer", "--n", "8", "--k", "4",
                         "--case", "IV-C", "--alpha", "k+1")
    assert code == 0 and doc["count"] >= 7 and doc["required_entry"] == 8


def test_paths_omitted_cases(capsys):
    code, doc = run_json(capsys, "paths", "--lemma", "8", "--n", "6", "--k", "3", "--case", "I")
    assert code == 4 and doc["status"] == "omitted"
    code, doc = run_json(capsys, "paths", "--lemma", "8", "--n", "8", "--k", "4", "--case", "IV-C",
                         "--alpha", "k+4")
    assert code == 4 and doc["status"] == "omitted"


def test_paths_bad_omega_choice_fails(capsys):
    code, doc = run_json(capsys, "paths", "--lemma", "8", "--n", "10", "--k", "4", "--case", "IV-B",
                         "--alpha", "2", "--beta", "1", "--omega", "beta=k+2")
    assert code == 1 and not doc["check"]["ok"] and doc["check"]["failures"]


def test_paths_usage_errors(capsys):
    assert run(capsys, "paths", "--n", "7", "--k", "3")[0] == 2
    assert run(capsys, "paths", "--lemma", "8", "--n", "9", "--k", "4")[0] == 2
    assert run(capsys, "paths", "--lemma", "8", "--n", "9", "--k", "4", "--case", "I")[0] == 2


# -- verify -------------------------------------------------------------------------------------------


@pytest.fixture
def files(tmp_path, capsys):
    g6 = tmp_path / "j62.dimacs"
    g7 = tmp_path / "j72.json"
    cut = tmp_path / "cut.json"
    fam = tmp_path / "paths.json"
    main(["gen", "--n", "6", "--k", "2", "-o", str(g6)])
    main(["gen", "--n", "7", "--k", "2", "--format", "json", "-o", str(g7)])
    main(["witness", "--kind", "jn2", "--n", "6", "-o", str(cut)])
    g8 = tmp_path / "j83.edges"
    main(["gen", "--n", "8", "--k", "3", "--format", "edge-list", "-o", str(g8)])
    main(["paths", "--lemma", "7", "--n", "8", "--k", "3", "-o", str(fam)])
    capsys.readouterr()
    return {"g6": g6, "g7": g7, "g8": g8, "cut": cut, "fam": fam, "dir": tmp_path}


def test_verify_stored_cut(capsys, files):
    code, doc = run_json(capsys, "verify", str(files["g6"]), str(files["cut"]))
    assert code == 0 and doc["valid"]


def test_verify_tampered_cut(capsys, files):
    doc = json.loads(files["cut"].read_text())
    doc["cut"] = doc["cut"][1:]
    bad = files["dir"] / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out = run_json(capsys, "verify", str(files["g6"]), str(bad))
    assert code == 1 and not out["valid"]
    assert any(v.startswith("is_disconnecting") for v in out["violations"])


def test_verify_mismatched_graph(capsys, files):
    code, _, err = run(capsys, "verify", str(files["g7"]), str(files["cut"]))
    assert code == 2 and "J(7,2)" in err


def test_verify_path_family(capsys, files):
    code, doc = run_json(capsys, "verify", str(files["g8"]), str(files["fam"]))
    assert code == 0 and doc["valid"]
    fam = json.loads(files["fam"].read_text())
    fam["paths"][1]["vertices"][1] = fam["paths"][0]["vertices"][1]
    bad = files["dir"] / "bad_paths.json"
    bad.write_text(json.dumps(fam))
    code, doc = run_json(capsys, "verify", str(files["g8"]), str(bad))
    assert code == 1 and not doc["check"]["disjoint"]


def test_verify_parse_errors(capsys, files):
    junk = files["dir"] / "junk.json"
    junk.write_text("not json")
    assert run(capsys, "verify", str(files["g6"]), str(junk))[0] == 2
    assert run(capsys, "verify", str(files["dir"] / "missing"), str(files["cut"]))[0] == 2


# -- table ----------------------------------------------------------------------------------------------


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--k", "2,3", "--n-min", "4", "--n-max", "7", "--method", "oracle-capped")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("n,k,kappa_formula")
    assert "5,3,6,6,6,inf,oracle,false,true,ok" in lines
    assert "6,2,8,8,9,9,oracle,true,false,ok" in lines
    assert any(ln.startswith("# note J(5,3)") for ln in lines)
    assert lines[-1].startswith("# summary cells=8")


def test_table_json(capsys):
    code, doc = run_json(capsys, "table", "--k", "1", "--n-max", "4", "--format", "json")
    assert code == 0 and doc["summary"]["cells"] == 4
    assert all(r["kappa_prime_computed"] == "infinity" for r in doc["rows"])


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "johnson_conn", "gen", "--n", "3", "--k", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "p edge 3 3" in res.stdout
