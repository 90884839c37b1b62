"""Classifying the order-2 gradings of each simple type.

A grading is recorded by a 0/1 marking s of the affine diagram of X_N^(k)
with k * sum(a_i s_i) = 2, taken up to diagram symmetry.  Three shapes
occur: two marked unit labels (hermitian: the even part has a center), one
marked label-2 node (inner, semisimple even part), and one marked unit node
on a twisted diagram (outer, semisimple even part).
"""

from z2abelian import FiniteKind, classify_involutions, graded_data

for fam, rank in [("A", 3), ("B", 4), ("D", 5), ("G", 2), ("F", 4), ("E", 6)]:
    print(f"=== {fam}{rank} ===")
    for spec in classify_involutions(FiniteKind(fam, rank)):
        gd = graded_data(spec)
        g0 = " x ".join(f"{f}{r}" for f, r in gd.g0_atoms()) or "(torus)"
        if spec.case == "hermitian":
            g0 += " + center"
        print(f"  {str(spec.affine):8s} s={spec.s}  {spec.case:14s} "
              f"even part {g0:16s} |odd weights| = {len(gd.delta1)}")
    print()
