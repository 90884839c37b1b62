"""The bijection between affine Weyl elements and abelian stable subalgebras.

An element w is grading-minuscule when every inversion of w sits in the
height-1 layer of the grading.  Its inversion set then spans an abelian
subalgebra of the odd part, stable under the even Borel — and every such
subalgebra arises this way, exactly once.
"""

from z2abelian import (
    FiniteKind,
    enumerate_abelian_subalgebras,
    enumerate_sigma_minuscule,
    graded_data,
    make_spec,
)

gd = graded_data(make_spec(FiniteKind("G", 2), 1, p=1))
print("G2, inner grading: height-1 layer has", len(gd.delta1), "roots")
print()
elements = enumerate_sigma_minuscule(gd)
for w in elements:
    print(f"  length {w.length}: inversions {sorted(w.inversions)}")
print()

families = enumerate_abelian_subalgebras(gd)
inversion_families = sorted(
    (tuple(sorted(w.inversions)) for w in elements), key=lambda f: (len(f), f)
)
print("oracle families equal inversion families:",
      inversion_families == list(families))
print()

print("counts across the three methods never disagree:")
for fam, rank, k, kw in [("F", 4, 1, {"p": 1}), ("E", 6, 1, {"q": 1}),
                         ("A", 4, 2, {"p": 2})]:
    gd = graded_data(make_spec(FiniteKind(fam, rank), k, **kw))
    n_min = len(enumerate_sigma_minuscule(gd))
    n_orc = len(enumerate_abelian_subalgebras(gd))
    print(f"  {gd.spec.label()}: minuscule {n_min}, oracle {n_orc}")
