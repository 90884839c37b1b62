"""Brute-force enumeration of abelian stable subsets."""

from z2abelian import (
    FiniteKind,
    enumerate_abelian_subalgebras,
    enumerate_sigma_minuscule,
    graded_data,
    is_abelian_stable,
    make_spec,
)


def test_g2_families():
    gd = graded_data(make_spec(FiniteKind("G", 2), 1, p=1))
    families = enumerate_abelian_subalgebras(gd)
    assert len(families) == 5
    assert families[0] == ()
    sizes = [len(f) for f in families]
    assert sizes == sorted(sizes)


def test_membership_checker_witnesses():
    gd = graded_data(make_spec(FiniteKind("G", 2), 1, p=1))
    families = enumerate_abelian_subalgebras(gd)
    for fam in families:
        ok, witness = is_abelian_stable(gd, fam)
        assert ok and witness is None
    # the full layer is far from abelian
    ok, witness = is_abelian_stable(gd, gd.delta1)
    assert not ok and witness is not None
    # a root outside the layer is rejected with itself as witness
    ok, witness = is_abelian_stable(gd, [gd.delta0_pos[0]])
    assert not ok and witness[0] == gd.delta0_pos[0]


def test_stability_without_abelian_gives_more():
    gd = graded_data(make_spec(FiniteKind("B", 3), 1, p=2))
    abelian = enumerate_abelian_subalgebras(gd)
    stable = enumerate_abelian_subalgebras(gd, require_abelian=False)
    assert set(abelian) <= set(stable)
    assert len(stable) > len(abelian)


def test_zero_weight_exclusion_in_doubled_family():
    # the two lifts of negative weights can never join a stable subset here
    gd = graded_data(make_spec(FiniteKind("A", 2), 2, p=1))
    families = enumerate_abelian_subalgebras(gd)
    assert len(families) == 3
    used = {mu for fam in families for mu in fam}
    assert used == {(0, 1), (1, 1)}


def test_matches_minuscule_inversion_sets():
    for fam, rank, k, pq in [("C", 3, 1, ("q", 3)), ("D", 4, 1, ("p", 2)),
                             ("A", 5, 2, ("p", 3))]:
        gd = graded_data(make_spec(FiniteKind(fam, rank), k, **{pq[0]: pq[1]}))
        inv = sorted(
            (tuple(sorted(w.inversions)) for w in enumerate_sigma_minuscule(gd)),
            key=lambda f: (len(f), f),
        )
        assert inv == list(enumerate_abelian_subalgebras(gd))
