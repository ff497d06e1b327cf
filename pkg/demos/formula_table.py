"""
Closed form versus computation
==============================

Compare the piecewise closed form for the super-connectivity of J(n, k) with
computed values.  The cell J(5, 3) is the interesting one: the closed form
says 6, but J(5, 3) is isomorphic to J(5, 2), which has no super vertex-cut.
"""

from johnson_conn.table import compute_table, summarize

rows = compute_table([2, 3], n_max=7, n_min=4, method="oracle-capped")
print(f"{'J(n,k)':8s} {'formula':>8s} {'computed':>9s}  agree")
for r in rows:
    print(f"J({r.n},{r.k})   {r.kappa_prime_formula!s:>8s} {r.kappa_prime_computed!s:>9s}  {r.agreement}")
    for note in r.notes:
        print("   note:", note)
print(summarize(rows))
