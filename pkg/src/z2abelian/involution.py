"""Order-2 gradings of the simple Lie algebras and their graded root data.

An involution is encoded by a tuple (s_0, ..., s_n; k) on the affine diagram
X_N^(k) with k * sum(a_i s_i) = 2 and gcd of the nonzero s_i equal to 1.
Conjugacy classes are obtained by reducing the tuples modulo the diagram
automorphism group.  Three shapes occur: two unit labels s_p = s_q = 1 with
a_p = a_q = 1 (hermitian; normalized so p = 0), one s_p = 1 with a_p = 2 and
k = 1, or one s_p = 1 with a_p = 1 and k = 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod

import networkx as nx

from .rootsys import (
    AffineKind,
    AffineRootSystem,
    FiniteKind,
    Root,
    RootSystemError,
    _closure,
    _root_key,
    affine_system,
    frac_det,
    pairing,
    weyl_order,
)

HERMITIAN = "hermitian"
SEMISIMPLE_K1 = "semisimple-k1"
SEMISIMPLE_K2 = "semisimple-k2"


@dataclass(frozen=True)
class InvolutionSpec:
    affine: AffineKind
    s: tuple[int, ...]
    case: str
    p: int
    q: int | None = None

    @property
    def k(self):
        return self.affine.k

    def label(self):
        tag = f"q{self.q}" if self.case == HERMITIAN else f"p{self.p}"
        return f"{self.affine.base}k{self.k}{tag}"

    def __str__(self):
        return f"{self.affine} s={self.s}"


def make_spec(base: FiniteKind, k: int, p: int | None = None, q: int | None = None) -> InvolutionSpec:
    """Build a validated involution tuple with the grading supported at p (and q)."""
    kind = AffineKind(base, k)
    ars = affine_system(kind)
    a = ars.labels
    m = len(a)
    if k == 1 and q is not None:
        if p is None:
            p = 0
        if not (0 <= p < m and 0 <= q < m) or p == q:
            raise RootSystemError(f"invalid hermitian indices p={p}, q={q}")
        if a[p] != 1 or a[q] != 1:
            raise RootSystemError(f"hermitian indices need label 1: a_{p}={a[p]}, a_{q}={a[q]}")
        s = tuple(int(i in (p, q)) for i in range(m))
        return InvolutionSpec(kind, s, HERMITIAN, p, q)
    if p is None:
        raise RootSystemError("an index p is required")
    if not 0 <= p < m:
        raise RootSystemError(f"index p={p} out of range")
    want = 2 if k == 1 else 1
    if a[p] != want:
        raise RootSystemError(f"k={k} grading needs a_p={want}, got a_{p}={a[p]}")
    s = tuple(int(i == p) for i in range(m))
    return InvolutionSpec(kind, s, SEMISIMPLE_K1 if k == 1 else SEMISIMPLE_K2, p)


def _check_spec(spec: InvolutionSpec, ars: AffineRootSystem):
    total = spec.k * sum(a * s for a, s in zip(ars.labels, spec.s))
    if total != 2:
        raise RootSystemError(f"order-2 condition failed for {spec}: k*sum = {total}")


# ---------------------------------------------------------------------------
# diagram automorphisms and conjugacy classes

@lru_cache(maxsize=None)
def diagram_automorphisms(kind: AffineKind):
    """All permutations of the affine diagram preserving the Cartan matrix."""
    ars = affine_system(kind)
    m = len(ars.labels)
    g = nx.DiGraph()
    for i in range(m):
        g.add_node(i, a=ars.labels[i])
    for i in range(m):
        for j in range(m):
            if i != j and ars.cartan[i][j]:
                g.add_edge(i, j, c=ars.cartan[i][j])
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        g,
        g,
        node_match=lambda x, y: x["a"] == y["a"],
        edge_match=lambda x, y: x["c"] == y["c"],
    )
    perms = []
    for iso in matcher.isomorphisms_iter():
        perms.append(tuple(iso[i] for i in range(m)))
    return tuple(sorted(set(perms)))


def _orbit(s, perms):
    # s'[g(i)] = s[i], i.e. s'[j] = s[g^{-1}(j)]
    return {tuple(s[perm.index(i)] for i in range(len(s))) for perm in perms}


def classify_involutions(base: FiniteKind) -> list[InvolutionSpec]:
    """One representative per conjugacy class of involutions of the type-`base` algebra."""
    out = []
    kinds = [AffineKind(base, 1)]
    try:
        kinds.append(AffineKind(base, 2))
    except RootSystemError:
        pass
    seen_orbits = []
    for kind in kinds:
        ars = affine_system(kind)
        a = ars.labels
        m = len(a)
        perms = diagram_automorphisms(kind)
        candidates = []
        if kind.k == 1:
            for p in range(m):
                for q in range(p + 1, m):
                    if a[p] == a[q] == 1:
                        candidates.append(tuple(int(i in (p, q)) for i in range(m)))
            for p in range(m):
                if a[p] == 2:
                    candidates.append(tuple(int(i == p) for i in range(m)))
        else:
            for p in range(m):
                if a[p] == 1:
                    candidates.append(tuple(int(i == p) for i in range(m)))
        orbits = []
        for s in candidates:
            orb = _orbit(s, perms)
            if not any(orb == o for o in orbits):
                orbits.append(orb)
        for orb in orbits:
            # prefer a hermitian representative with support at vertex 0
            reps = sorted(orb)
            herm = [s for s in reps if sum(s) == 2]
            if herm:
                with0 = [s for s in herm if s[0] == 1]
                assert with0, "no diagram automorphism moves a unit vertex to 0"
                s = min(with0, key=lambda t: t.index(1, 1))
                q = s.index(1, 1)
                out.append(InvolutionSpec(kind, s, HERMITIAN, 0, q))
            else:
                s = reps[0]
                p = s.index(1)
                case = SEMISIMPLE_K1 if kind.k == 1 else SEMISIMPLE_K2
                out.append(InvolutionSpec(kind, s, case, p))
    return out


# ---------------------------------------------------------------------------
# graded data

def ht_sigma(spec: InvolutionSpec, v) -> int:
    return sum(si * ci for si, ci in zip(spec.s, v) if ci)


@dataclass(frozen=True)
class Component:
    indices: tuple[int, ...]  # vertices of the affine diagram
    family: str
    rank: int
    pos_roots: tuple
    highest: Root
    weyl_order: int
    cartan_det: int

    def type_name(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class GradedData:
    spec: InvolutionSpec
    ars: AffineRootSystem
    pi0: tuple[int, ...]
    delta0_pos: tuple
    delta1: tuple
    components: tuple[Component, ...]
    phi_sigma: tuple
    epsilons: tuple[int, ...]
    w_sigma_order: int
    ell_sigma: int

    def ht(self, v):
        return ht_sigma(self.spec, v)

    def g0_atoms(self):
        return canonical_atoms([(c.family, c.rank) for c in self.components])


def canonical_atoms(atoms):
    """Canonical multiset of simple factors, folding low-rank coincidences."""
    out = []
    for fam, rank in atoms:
        if rank == 0:
            continue
        if rank == 1:
            out.append(("A", 1))
        elif (fam, rank) == ("C", 2):
            out.append(("B", 2))
        elif (fam, rank) == ("D", 2):
            out.extend([("A", 1), ("A", 1)])
        elif (fam, rank) == ("D", 3):
            out.append(("A", 3))
        else:
            out.append((fam, rank))
    return tuple(sorted(out))


def classify_component(indices, cartan, d):
    """Identify the finite type of an irreducible diagram on the given vertices."""
    idx = list(indices)
    r = len(idx)
    if r == 1:
        return ("A", 1)
    edges = [
        (i, j, cartan[a][b] * cartan[b][a])
        for i, a in enumerate(idx)
        for j, b in enumerate(idx)
        if i < j and cartan[a][b]
    ]
    deg = [0] * r
    for i, j, _ in edges:
        deg[i] += 1
        deg[j] += 1
    mult = max(w for _, _, w in edges)
    if mult == 3:
        return ("G", 2)
    if mult == 2:
        if r == 2:
            return ("B", 2)
        i, j, _ = next(e for e in edges if e[2] == 2)
        if deg[i] == 2 and deg[j] == 2:
            assert r == 4
            return ("F", 4)
        end = i if deg[i] == 1 else j
        # B: short root at the hanging end; C: long root there
        other = j if end == i else i
        short_end = d[idx[end]] < d[idx[other]]
        return ("B" if short_end else "C", r)
    if max(deg) <= 2:
        return ("A", r)
    hub = deg.index(3)
    adj = {i: set() for i in range(r)}
    for i, j, _ in edges:
        adj[i].add(j)
        adj[j].add(i)
    leg_lengths = []
    for start in adj[hub]:
        ln, prev, cur = 1, hub, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        leg_lengths.append(ln)
    leg_lengths.sort()
    if leg_lengths[:2] == [1, 1]:
        return ("D", r)
    assert leg_lengths[0] == 1 and leg_lengths[1] == 2 and r in (6, 7, 8)
    return ("E", r)


def _component_data(ars: AffineRootSystem, indices):
    cartan = ars.cartan
    m = len(ars.labels)
    fam, rank = classify_component(indices, cartan, ars.d)
    seeds = [tuple(int(i == j) for j in range(m)) for i in indices]
    sub = set(indices)

    def keep(v):
        return all(c == 0 or i in sub for i, c in enumerate(v))

    # reflections at outside vertices are pruned by keep(), so this is the
    # closure of the component subsystem inside the ambient coordinates
    pos = _closure(cartan, seeds, keep)
    highest = max(pos, key=_root_key)
    assert all(pairing(cartan, highest, i) >= 0 for i in indices)
    det = frac_det([[cartan[a][b] for b in indices] for a in indices])
    return Component(
        indices=tuple(indices),
        family=fam,
        rank=rank,
        pos_roots=tuple(sorted(pos, key=_root_key)),
        highest=highest,
        weyl_order=weyl_order(fam, rank),
        cartan_det=abs(int(det)),
    )


def graded_data(spec: InvolutionSpec) -> GradedData:
    ars = affine_system(spec.affine)
    _check_spec(spec, ars)
    s = spec.s
    m = len(s)
    pi0 = tuple(i for i in range(m) if s[i] == 0)

    delta0 = tuple(v for v in ars.positive_real if ht_sigma(spec, v) == 0)
    delta1 = tuple(v for v in ars.positive_real if ht_sigma(spec, v) == 1)
    if s[0] == 1:
        assert all(v[0] == 0 for v in delta0), "ht 0 roots left the finite slice"

    # connected components of the diagram on pi0
    adj = {i: [] for i in pi0}
    for i in pi0:
        for j in pi0:
            if i != j and ars.cartan[i][j]:
                adj[i].append(j)
    comps = []
    left = set(pi0)
    while left:
        start = min(left)
        blob = {start}
        todo = [start]
        while todo:
            x = todo.pop()
            for y in adj[x]:
                if y not in blob:
                    blob.add(y)
                    todo.append(y)
        left -= blob
        comps.append(_component_data(ars, sorted(blob)))
    components = tuple(comps)
    covered = set()
    for c in components:
        covered.update(c.pos_roots)
    assert covered == set(delta0), "component roots do not partition the ht 0 slice"

    eps = tuple(
        2 if spec.k == 2 and ars.is_long(tuple(int(i == j) for j in range(m))) else 1
        for i in range(m)
    )
    delta_v = ars.labels
    phi = []
    for i in range(m):
        wall = tuple(c + eps[i] * s[i] * a for c, a in zip(
            (int(i == j) for j in range(m)), delta_v))
        phi.append(wall)
    for c in components:
        phi.append(tuple(spec.k * a - h for a, h in zip(delta_v, c.highest)))
    phi = tuple(sorted(set(phi), key=_root_key))
    for wall in phi:
        assert ars.classify(wall) == "positive-real", f"wall {wall} not a positive root"
        assert ht_sigma(spec, wall) != 1, f"wall {wall} has grading height 1"

    return GradedData(
        spec=spec,
        ars=ars,
        pi0=pi0,
        delta0_pos=delta0,
        delta1=delta1,
        components=components,
        phi_sigma=phi,
        epsilons=eps,
        w_sigma_order=prod(c.weyl_order for c in components),
        ell_sigma=prod(c.cartan_det for c in components),
    )
