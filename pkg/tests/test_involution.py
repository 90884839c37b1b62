"""Classification of order-2 gradings and the derived graded data."""

import pytest

from z2abelian import FiniteKind, RootSystemError, classify_involutions, graded_data, make_spec
from z2abelian.involution import HERMITIAN, SEMISIMPLE_K1, SEMISIMPLE_K2, canonical_atoms


@pytest.mark.parametrize("fam,rank,expected", [
    ("A", 1, 1),   # one grading: the hermitian one
    ("A", 2, 2),   # hermitian + outer
    ("A", 3, 4),
    ("B", 3, 3),
    ("C", 3, 2),
    ("D", 4, 4),
    ("G", 2, 1),
    ("F", 4, 2),
    ("E", 6, 4),
    ("E", 7, 3),
    ("E", 8, 2),
])
def test_class_counts(fam, rank, expected):
    assert len(classify_involutions(FiniteKind(fam, rank))) == expected


def test_case_tags_and_normalization():
    for spec in classify_involutions(FiniteKind("D", 5)):
        a = graded_data(spec).ars.labels
        total = spec.k * sum(si * ai for si, ai in zip(spec.s, a))
        assert total == 2
        if spec.case == HERMITIAN:
            assert spec.k == 1 and spec.p == 0 and spec.s[0] == 1 and spec.s[spec.q] == 1
            assert a[spec.q] == 1
        elif spec.case == SEMISIMPLE_K1:
            assert spec.k == 1 and a[spec.p] == 2 and spec.s[spec.p] == 1
        else:
            assert spec.k == 2 and a[spec.p] == 1 and spec.s[spec.p] == 1


def test_diagram_symmetry_dedup():
    # the two C3 middle nodes with label 2 give equivalent gradings
    c3 = [s for s in classify_involutions(FiniteKind("C", 3)) if s.case == SEMISIMPLE_K1]
    assert len(c3) == 1
    # A5 hermitian: q and 6-q coincide, leaving q = 1, 2, 3
    a5 = [s.q for s in classify_involutions(FiniteKind("A", 5)) if s.case == HERMITIAN]
    assert sorted(a5) == [1, 2, 3]


def test_make_spec_validation():
    with pytest.raises(RootSystemError):
        make_spec(FiniteKind("A", 3), 1, p=1)   # label 1, not a k=1 semisimple node
    with pytest.raises(RootSystemError):
        make_spec(FiniteKind("B", 3), 2, p=1)   # no order-2 twist of B
    with pytest.raises(RootSystemError):
        make_spec(FiniteKind("B", 3), 1, q=2)   # hermitian index must carry label 1
    spec = make_spec(FiniteKind("B", 3), 1, p=2)
    assert spec.case == SEMISIMPLE_K1


@pytest.mark.parametrize("fam,rank,k,pq,atoms", [
    ("G", 2, 1, ("p", 1), (("A", 1), ("A", 1))),
    ("F", 4, 1, ("p", 1), (("A", 1), ("C", 3))),
    ("F", 4, 1, ("p", 4), (("B", 4),)),
    ("E", 6, 1, ("q", 1), (("D", 5),)),
    ("E", 6, 2, ("p", 0), (("F", 4),)),
    ("A", 4, 2, ("p", 2), (("B", 2),)),
    ("D", 5, 2, ("p", 3), (("A", 1), ("B", 3))),
])
def test_even_part_types(fam, rank, k, pq, atoms):
    kwarg = {pq[0]: pq[1]}
    gd = graded_data(make_spec(FiniteKind(fam, rank), k, **kwarg))
    assert gd.g0_atoms() == atoms


def test_graded_layers_g2():
    gd = graded_data(make_spec(FiniteKind("G", 2), 1, p=1))
    assert len(gd.delta1) == 8          # dim of the odd part
    assert gd.w_sigma_order == 4
    assert gd.ell_sigma == 4
    delta = gd.ars.delta
    simples = gd.ars.simple_roots()
    walls = {simples[0], simples[2],
             tuple(d - s for d, s in zip(delta, simples[0])),
             tuple(d - s for d, s in zip(delta, simples[2])),
             tuple(d + s for d, s in zip(delta, simples[1]))}
    assert set(gd.phi_sigma) == walls


def test_graded_layers_smallest_twisted():
    gd = graded_data(make_spec(FiniteKind("A", 2), 2, p=1))
    assert len(gd.delta1) == 4
    assert len(gd.delta0_pos) == 1
    assert gd.g0_atoms() == (("A", 1),)


def test_hermitian_rank_drop():
    gd = graded_data(make_spec(FiniteKind("A", 1), 1, q=1))
    assert gd.components == ()
    assert gd.w_sigma_order == 1 and gd.ell_sigma == 1
    assert gd.delta1 == ((0, 1), (1, 0))


def test_canonical_atoms_folding():
    assert canonical_atoms([("C", 2), ("D", 3), ("D", 2), ("B", 1)]) == \
        (("A", 1), ("A", 1), ("A", 1), ("A", 3), ("B", 2))
