"""Order-2 gradings of simple Lie algebras and abelian stable subalgebras.

The package classifies the gradings, enumerates the abelian subalgebras of
the odd part that are stable under the even Borel, and cross-checks three
independent counting methods: a closed-form product formula, a search for
grading-minuscule affine Weyl elements, and a brute-force subset oracle.
"""

from .rootsys import (
    AffineKind,
    AffineRootSystem,
    FiniteKind,
    FiniteRootSystem,
    OutOfWindowError,
    RootSystemError,
    affine_system,
    finite_system,
)
from .involution import (
    HERMITIAN,
    SEMISIMPLE_K1,
    SEMISIMPLE_K2,
    GradedData,
    InvolutionSpec,
    classify_involutions,
    graded_data,
    ht_sigma,
    make_spec,
)
from .weyl import AffineWeylElement, enumerate_sigma_minuscule
from .oracle import enumerate_abelian_subalgebras, is_abelian_stable
from .census import (
    CorootLattices,
    CountReport,
    PolytopeDescription,
    build_report,
    closed_form_count,
    coroot_lattices,
    lattice_index,
    polytope_description,
)
from .golden import reference_counts, rows as golden_rows

__all__ = [
    "AffineKind",
    "AffineRootSystem",
    "AffineWeylElement",
    "CorootLattices",
    "CountReport",
    "FiniteKind",
    "FiniteRootSystem",
    "GradedData",
    "HERMITIAN",
    "InvolutionSpec",
    "OutOfWindowError",
    "PolytopeDescription",
    "RootSystemError",
    "SEMISIMPLE_K1",
    "SEMISIMPLE_K2",
    "affine_system",
    "build_report",
    "classify_involutions",
    "closed_form_count",
    "coroot_lattices",
    "enumerate_abelian_subalgebras",
    "enumerate_sigma_minuscule",
    "finite_system",
    "golden_rows",
    "graded_data",
    "ht_sigma",
    "is_abelian_stable",
    "lattice_index",
    "make_spec",
    "polytope_description",
    "reference_counts",
]
