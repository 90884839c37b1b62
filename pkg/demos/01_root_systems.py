"""Tour of the exact root-system machinery.

Finite root systems are built from Cartan matrices by reflection closure,
with all arithmetic over integers and Fractions.  Affine systems extend them
with a node for the lowest root and enumerate every real root inside a
delta-coefficient window.
"""

from z2abelian import AffineKind, FiniteKind, affine_system, finite_system

print("=== finite systems ===")
for fam, rank in [("A", 2), ("B", 3), ("G", 2), ("F", 4), ("E", 6)]:
    frs = finite_system(FiniteKind(fam, rank))
    print(f"{fam}{rank}: {len(frs.positive_roots)} positive roots, "
          f"|W| = {frs.weyl_order}, connection index {frs.connection_index}, "
          f"highest root {frs.highest_root}")

print()
print("=== affine extensions ===")
for fam, rank, k in [("G", 2, 1), ("F", 4, 1), ("A", 4, 2), ("E", 6, 2)]:
    ars = affine_system(AffineKind(FiniteKind(fam, rank), k))
    print(f"{ars.kind}: labels {ars.labels}, delta = {ars.delta}, "
          f"{len(ars.positive_real)} positive real roots in the window")

print()
print("=== root classification in A2^(1) ===")
ars = affine_system(AffineKind(FiniteKind("A", 2), 1))
for v in [(0, 1, 0), (1, 1, 1), (2, 2, 2), (0, 2, 1), (0, -1, 0)]:
    print(f"  {v}: {ars.classify(v)}")
