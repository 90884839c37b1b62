"""The closed-form count, its lattice ingredients, and the reference tables.

For semisimple even part the count is
    a0 * (chi + 1) * k^(n-L) * |W_f| / |W_sigma|  -  chi
where chi marks a long node; the prefactor is exactly the index of one
translation lattice in another, computed here from explicit bases and
cross-checked by Smith normal form.  With a center the count becomes
    (|W_f| / |W_sigma|) * (1 + ell_sigma / ell_f).
"""

from z2abelian import (
    FiniteKind,
    build_report,
    coroot_lattices,
    graded_data,
    lattice_index,
    make_spec,
)
from z2abelian.golden import rows

for fam, rank, k, kw in [("F", 4, 1, {"p": 1}), ("E", 8, 1, {"p": 1}),
                         ("A", 4, 2, {"p": 2}), ("E", 6, 1, {"q": 1})]:
    spec = make_spec(FiniteKind(fam, rank), k, **kw)
    report = build_report(spec, methods=("formula", "minuscule"))
    ing = report.ingredients
    print(f"{spec.label()}: formula {report.count_formula}, "
          f"minuscule {report.count_minuscule}, agree={report.agree}")
    print(f"   ingredients: {ing}")
    if spec.case != "hermitian":
        idx = lattice_index(coroot_lattices(graded_data(spec)))
        print(f"   lattice index [M:M_sigma] = {idx}")
    print()

print("embedded reference table, rank <= 4:")
for row in rows(4):
    print(f"  {row['affine_type']:8s} {row['case']:14s} "
          f"p/q={row['p_or_q']}  g0={row['g0_type']:10s} count={row['count']}")
