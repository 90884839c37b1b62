"""Affine Weyl elements and the minuscule search."""

import pytest

from z2abelian import FiniteKind, enumerate_sigma_minuscule, graded_data, make_spec
from z2abelian.rootsys import AffineKind, affine_system
from z2abelian.weyl import act, extend_by_simple, identity


@pytest.fixture(scope="module")
def a2():
    return affine_system(AffineKind(FiniteKind("A", 2), 1))


def test_identity_and_reflection(a2):
    e = identity(a2)
    assert e.length == 0 and e.inversions == frozenset()
    for i in range(3):
        assert act(e, a2.simple_roots()[i]) == a2.simple_roots()[i]
    w = extend_by_simple(a2, e, 1)
    assert w.length == 1
    assert w.inversions == {a2.simple_roots()[1]}
    assert act(w, a2.simple_roots()[1]) == tuple(-c for c in a2.simple_roots()[1])


def test_descent_rejected(a2):
    w = extend_by_simple(a2, identity(a2), 1)
    assert extend_by_simple(a2, w, 1) is None  # would shorten


def test_inversion_count_matches_length(a2):
    w = identity(a2)
    for i in (0, 1, 2, 1, 0):
        w = extend_by_simple(a2, w, i)
        assert w is not None
        assert len(w.inversions) == w.length


@pytest.mark.parametrize("fam,rank,k,pq,expected", [
    ("G", 2, 1, ("p", 1), 5),
    ("F", 4, 1, ("p", 4), 3),
    ("A", 1, 1, ("q", 1), 3),
    ("A", 2, 2, ("p", 1), 3),
    ("E", 6, 1, ("q", 1), 63),
])
def test_minuscule_counts(fam, rank, k, pq, expected):
    gd = graded_data(make_spec(FiniteKind(fam, rank), k, **{pq[0]: pq[1]}))
    elements = enumerate_sigma_minuscule(gd)
    assert len(elements) == expected
    # every inversion lies in the height-1 layer, and lengths are consistent
    layer = set(gd.delta1)
    for w in elements:
        assert len(w.inversions) == w.length
        assert set(w.inversions) <= layer
    # output order is canonical: by length, then by images
    keys = [(w.length, w.images) for w in elements]
    assert keys == sorted(keys)


def test_minuscule_inversion_sets_distinct():
    gd = graded_data(make_spec(FiniteKind("F", 4), 1, p=1))
    elements = enumerate_sigma_minuscule(gd)
    families = {tuple(sorted(w.inversions)) for w in elements}
    assert len(families) == len(elements) == 23
