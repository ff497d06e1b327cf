import math

import pytest

from johnson_conn.table import (
    compute_table,
    kappa_formula,
    kappa_prime_formula,
    summarize,
    table_row,
)


@pytest.mark.parametrize("n,k,value,clause", [
    (6, 2, 9, "3(n-3)"),
    (9, 2, 18, "3(n-3)"),
    (5, 2, math.inf, "infinity"),
    (6, 4, 9, "3(k-1)"),
    (7, 5, 12, "3(k-1)"),
    (7, 3, 17, "(2k-1)(n-k)-k"),
    (9, 4, 31, "(2k-1)(n-k)-k"),
    (4, 3, math.inf, "infinity"),
    (9, 1, math.inf, "infinity"),
])
def test_closed_form(n, k, value, clause):
    f = kappa_prime_formula(n, k)
    assert f.value == value and f.clause == clause and not f.ambiguous


def test_closed_form_flags_j53():
    f = kappa_prime_formula(5, 3)
    assert f.value == 6 and f.ambiguous


def test_kappa_formula():
    assert kappa_formula(9, 4) == 20 and kappa_formula(5, 1) == 4


def test_row_j53_reports_the_discrepancy():
    row = table_row(5, 3, method="oracle-capped")
    assert row.kappa_prime_computed == math.inf and row.ambiguous
    assert not row.agreement
    assert any("isomorphic to J(5,2)" in note for note in row.notes)


def test_row_formula_only():
    row = table_row(8, 3, method="formula")
    assert row.kappa_prime_computed is None and row.agreement and row.status == "not-computed"


def test_row_records_engine_failure():
    row = table_row(8, 3, method="flow", budget=3)
    assert row.status == "budget-exceeded" and row.kappa_prime_computed is None and row.agreement


def test_small_table_oracle_capped():
    rows = compute_table([2, 3], n_max=8, n_min=4, method="oracle-capped")
    by = {(r.n, r.k): r for r in rows}
    assert len(rows) == 5 + 5
    assert by[(8, 2)].kappa_prime_computed is None  # 28 vertices exceed the oracle cap
    assert by[(6, 2)].kappa_prime_computed == 9 and by[(6, 3)].kappa_prime_computed == 12
    assert by[(4, 3)].kappa_prime_computed == math.inf  # J(k+1, k) is complete
    s = summarize(rows)
    assert s["disagree"] == 0 and s["ambiguous"] == 1
    assert s["cells"] == s["computed"] + s["not_computed"]
