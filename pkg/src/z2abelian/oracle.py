"""Brute-force enumeration of abelian stable subsets of the height-1 layer.

A subset S of the height-1 positive roots corresponds to an abelian
subalgebra stable under the height-0 Borel action iff
  * stability: for mu in S and beta a height-0 positive root,
    mu - beta a root implies mu - beta in S;
  * abelian: for mu, nu in S, mu + nu is never a root.
Both conditions only involve root-or-not queries inside the window.
"""

from __future__ import annotations

import random

from .involution import GradedData


def _tables(gd: GradedData):
    """Predecessor lists (stability), zero-weight blocks, addable-pair table.

    Stability closure acts by mu -> mu - beta for beta a positive height-0
    root.  When mu - beta is a positive imaginary root the action lands in
    the zero-weight space of the odd part, which no root-vector subset can
    contain, so mu is excluded outright.
    """
    ars = gd.ars
    delta1 = gd.delta1
    index = {mu: i for i, mu in enumerate(delta1)}
    preds = []
    blocked = []
    for mu in delta1:
        pm = []
        dead = False
        for beta in gd.delta0_pos:
            nu = tuple(a - b for a, b in zip(mu, beta))
            j = index.get(nu)
            if j is not None:
                pm.append(j)
            elif ars.classify(nu) == "imaginary" and ars.is_positive(nu):
                dead = True
        preds.append(tuple(pm))
        blocked.append(dead)
    m = len(delta1)
    sum_is_root = [[False] * m for _ in range(m)]
    for i, mu in enumerate(delta1):
        for j in range(i, m):
            s = tuple(a + b for a, b in zip(mu, delta1[j]))
            if ars.is_root_or_zero(s):
                sum_is_root[i][j] = sum_is_root[j][i] = True
    return index, preds, blocked, sum_is_root


def is_abelian_stable(gd: GradedData, members):
    """Check a candidate subset; returns (ok, witness) with a failing pair."""
    index, preds, blocked, sum_is_root = _tables(gd)
    chosen = set()
    for mu in members:
        i = index.get(tuple(mu))
        if i is None:
            return False, (tuple(mu), None)
        chosen.add(i)
    for i in chosen:
        if blocked[i]:
            return False, (gd.delta1[i], None)
        for j in preds[i]:
            if j not in chosen:
                return False, (gd.delta1[i], gd.delta1[j])
        for j in chosen:
            if sum_is_root[i][j]:
                return False, (gd.delta1[i], gd.delta1[j])
    return True, None


def enumerate_abelian_subalgebras(gd: GradedData, order_seed: int | None = None,
                                  require_abelian: bool = True):
    """All abelian stable subsets, canonically ordered by (size, members).

    With require_abelian=False the abelian condition is dropped, leaving all
    stable subsets (lower ideals of the layer's dominance order).
    """
    _, preds, blocked, sum_is_root = _tables(gd)
    m = len(gd.delta1)
    idx = list(range(m))
    rng = random.Random(order_seed) if order_seed is not None else None

    empty = frozenset()
    seen = {empty}
    frontier = [empty]
    while frontier:
        nxt = []
        for s in frontier:
            order = idx if rng is None else rng.sample(idx, m)
            for i in order:
                if i in s or blocked[i]:
                    continue
                if any(j not in s for j in preds[i]):
                    continue
                if require_abelian and (sum_is_root[i][i]
                                        or any(sum_is_root[i][j] for j in s)):
                    continue
                s2 = s | {i}
                if s2 not in seen:
                    seen.add(s2)
                    nxt.append(s2)
        frontier = nxt

    families = [tuple(sorted(gd.delta1[i] for i in s)) for s in seen]
    families.sort(key=lambda fam: (len(fam), fam))
    return families
