"""Closed-form counts, translation-lattice indices, polytope walls, reports.

Three independent counting methods meet here: the closed-form product
formula, the minuscule-element search, and the brute-force oracle.  A report
records all requested counts together with the formula ingredients and an
agreement verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import smith_normal_form

from .rootsys import RootSystemError, frac_det, frac_solve
from .involution import (
    HERMITIAN,
    GradedData,
    InvolutionSpec,
    graded_data,
)
from .weyl import enumerate_sigma_minuscule
from .oracle import enumerate_abelian_subalgebras


def _is_doubled_node(ars) -> bool:
    """True for the affine family whose node-0 label is 2 (three root lengths)."""
    return ars.labels[0] == 2


def _beta0(ars):
    """The finite root beta_0 with alpha_0 = (delta - beta_0)/t, in slice coords."""
    frs = ars.slice_frs
    if ars.kind.k == 1 or _is_doubled_node(ars):
        return frs.highest_root
    return frs.highest_short_root


@dataclass(frozen=True)
class CorootLattices:
    """Bases (rows, rational coordinates over the slice root basis)."""

    M: tuple
    Msigma: tuple
    Qcheck: tuple


def coroot_lattices(gd: GradedData) -> CorootLattices:
    """Translation lattices of the full affine Weyl group and of the
    wall-subgroup product, for a semisimple-case grading."""
    if gd.spec.case == HERMITIAN:
        raise RootSystemError("translation-lattice comparison needs the semisimple case")
    ars = gd.ars
    frs = ars.slice_frs
    n = frs.rank
    k = ars.kind.k
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    qcheck = tuple(tuple(frs.coroot(u)) for u in units)

    if k == 1 or _is_doubled_node(ars):
        m_basis = qcheck
    else:
        m_basis = tuple(
            tuple((1 if frs.sq(u) < 2 else k) * c for c in frs.coroot(u))
            for u in units
        )

    if _is_doubled_node(ars):
        theta = frs.highest_root
        rows = [tuple(4 * c for c in frs.coroot(theta))]
        rows += [tuple(2 * c for c in frs.coroot(units[i])) for i in range(n - 1)]
        msigma = tuple(rows)
    else:
        rows = []
        for i in gd.pi0:
            v = _beta0(ars) if i == 0 else units[i - 1]
            rows.append(tuple(k * c for c in frs.coroot(v)))
        msigma = tuple(rows)
    return CorootLattices(M=m_basis, Msigma=msigma, Qcheck=qcheck)


def lattice_index(lat: CorootLattices) -> int:
    """Index of the sublattice, by determinant ratio, cross-checked against
    the product of Smith elementary divisors of the change of basis."""
    det_m = frac_det([list(r) for r in lat.M])
    det_s = frac_det([list(r) for r in lat.Msigma])
    if det_m == 0 or det_s == 0:
        raise RootSystemError("lattice basis is singular")
    ratio = abs(det_s / det_m)
    if ratio.denominator != 1 or ratio < 1:
        raise RootSystemError(f"index {ratio} is not a positive integer")
    index = int(ratio)

    n = len(lat.M)
    mt = [[lat.M[j][i] for j in range(n)] for i in range(n)]
    change = []
    for row in lat.Msigma:
        coeffs = frac_solve([r[:] for r in mt], list(row))
        assert all(c.denominator == 1 for c in coeffs), "sublattice not contained in lattice"
        change.append([int(c) for c in coeffs])
    snf = smith_normal_form(sympy.Matrix(change))
    divisors = [abs(snf[i, i]) for i in range(n)]
    assert index == sympy.prod(divisors), "determinant ratio disagrees with Smith form"
    return index


@dataclass(frozen=True)
class PolytopeDescription:
    """Wall systems (each root alpha stands for the inequality (alpha, x) >= 0)."""

    d_walls: tuple  # cut the region tiled by the minuscule alcoves
    p_walls: tuple  # cut its fundamental-domain enlargement
    correction: bool | None  # semisimple: the two regions differ by one alcove


def polytope_description(gd: GradedData) -> PolytopeDescription:
    ars = gd.ars
    k = ars.kind.k
    delta = ars.delta
    simples = ars.simple_roots()
    p_walls = [simples[i] for i in gd.pi0]
    p_walls += [
        tuple(k * d - h for d, h in zip(delta, comp.highest))
        for comp in gd.components
    ]
    p_walls = tuple(sorted(p_walls))

    correction = None
    if gd.spec.case != HERMITIAN:
        p = gd.spec.p
        correction = ars.sq(simples[p]) == 2
        extra = set(gd.phi_sigma) - set(p_walls)
        expected = tuple(
            ci + gd.epsilons[p] * di for ci, di in zip(simples[p], delta)
        )
        assert extra == {expected}, f"unexpected extra walls {extra}"
    return PolytopeDescription(
        d_walls=tuple(sorted(gd.phi_sigma)), p_walls=p_walls, correction=correction
    )


def closed_form_count(gd: GradedData):
    """The product-formula count and its ingredients."""
    ars = gd.ars
    frs = ars.slice_frs
    n = frs.rank
    k = ars.kind.k
    a0 = ars.labels[0]
    wf = frs.weyl_order
    wsig = gd.w_sigma_order
    assert wf % wsig == 0, "wall subgroup order does not divide the full order"
    ell_f = frs.connection_index
    ell_sig = gd.ell_sigma
    ingredients = {
        "a0": a0,
        "k": k,
        "n": n,
        "L": frs.long_simple_count,
        "chi": None,
        "W_f": wf,
        "W_sigma": wsig,
        "ell_f": ell_f,
        "ell_sigma": ell_sig,
        "index_M_Msigma": None,
    }
    if gd.spec.case == HERMITIAN:
        value = Fraction(wf, wsig) * (1 + Fraction(ell_sig, ell_f))
        assert value.denominator == 1, f"non-integral count {value}"
        count = int(value)
    else:
        chi = 1 if ars.sq(ars.simple_roots()[gd.spec.p]) == 2 else 0
        ingredients["chi"] = chi
        ingredients["index_M_Msigma"] = lattice_index(coroot_lattices(gd))
        count = a0 * (chi + 1) * k ** (n - ingredients["L"]) * (wf // wsig) - chi
    assert count >= 1
    return count, ingredients


@dataclass(frozen=True)
class CountReport:
    spec: InvolutionSpec
    g0_factors: tuple
    g0_has_center: bool
    count_formula: int
    count_minuscule: int | None
    count_oracle: int | None
    ingredients: dict
    agree: bool

    def to_dict(self):
        spec = self.spec
        return {
            "base_type": str(spec.affine.base),
            "affine_type": str(spec.affine),
            "s": list(spec.s),
            "k": spec.k,
            "case": spec.case,
            "p": spec.p,
            "q": spec.q,
            "g0": {
                "factors": [f"{fam}{rank}" for fam, rank in self.g0_factors],
                "center": self.g0_has_center,
            },
            "count_formula": self.count_formula,
            "count_minuscule": self.count_minuscule,
            "count_oracle": self.count_oracle,
            "ingredients": dict(self.ingredients),
            "agree": self.agree,
        }


def build_report(spec: InvolutionSpec, methods=("formula", "minuscule", "oracle"),
                 oracle_max_rank: int = 6) -> CountReport:
    gd = graded_data(spec)
    count_formula, ingredients = closed_form_count(gd)

    count_minuscule = None
    elements = None
    if "minuscule" in methods or "all" in methods:
        elements = enumerate_sigma_minuscule(gd)
        count_minuscule = len(elements)

    count_oracle = None
    if ("oracle" in methods or "all" in methods) and spec.affine.base.rank <= oracle_max_rank:
        families = enumerate_abelian_subalgebras(gd)
        count_oracle = len(families)
        if elements is not None:
            inv = sorted(
                (tuple(sorted(w.inversions)) for w in elements),
                key=lambda f: (len(f), f),
            )
            assert inv == list(families), "inversion sets differ from oracle subsets"

    counts = [c for c in (count_formula, count_minuscule, count_oracle) if c is not None]
    return CountReport(
        spec=spec,
        g0_factors=gd.g0_atoms(),
        g0_has_center=spec.case == HERMITIAN,
        count_formula=count_formula,
        count_minuscule=count_minuscule,
        count_oracle=count_oracle,
        ingredients=ingredients,
        agree=all(c == counts[0] for c in counts),
    )
