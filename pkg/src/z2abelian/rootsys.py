"""Finite and affine root systems in exact integer coordinates.

Roots are integer tuples over the simple-root basis.  The invariant form is
carried by a rational symmetrizer d with (alpha_i, alpha_j) = d_i * C[i][j],
normalized so that the maximal squared root length is 2.  Only length ratios
are ever consumed downstream, so the overall scale is immaterial.

Affine systems are realized uniformly: the degree-zero slice is a finite
system, and the extra node alpha_0 is (delta - beta0) / t for the appropriate
finite root beta0 (highest root, highest short root, or highest long root
halved).  Real roots are generated by reflection closure within a window
|delta-coefficient| <= B.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

Root = tuple[int, ...]

_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RootSystemError(ValueError):
    pass


class OutOfWindowError(RootSystemError):
    """A vector was queried outside the generated real-root window."""


@dataclass(frozen=True, order=True)
class FiniteKind:
    family: str
    rank: int

    def __post_init__(self):
        lo_hi = _RANK_RANGES.get(self.family)
        if lo_hi is None:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo, hi = lo_hi
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise RootSystemError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class AffineKind:
    base: FiniteKind
    k: int

    def __post_init__(self):
        if self.k not in (1, 2):
            raise RootSystemError(f"twist must be 1 or 2, got {self.k}")
        if self.k == 2:
            fam, N = self.base.family, self.base.rank
            ok = (fam == "A" and N >= 2) or (fam == "D") or (fam == "E" and N == 6)
            if not ok:
                raise RootSystemError(f"no order-2 twisted diagram on base {self.base}")

    def __str__(self):
        return f"{self.base}^({self.k})"


# ---------------------------------------------------------------------------
# basic linear algebra over Fractions (small dense matrices)

def frac_det(mat):
    n = len(mat)
    m = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def frac_solve(mat, rhs):
    """Solve mat @ x = rhs (square, nonsingular), all Fractions."""
    n = len(mat)
    m = [[Fraction(x) for x in row] + [Fraction(rhs[r])] for r, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise RootSystemError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col]
        m[col] = [x / inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def frac_inv(mat):
    n = len(mat)
    cols = []
    for i in range(n):
        e = [Fraction(int(j == i)) for j in range(n)]
        cols.append(frac_solve(mat, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def int_kernel_vector(cartan):
    """Primitive positive integer vector a with cartan @ a = 0 (1-dim kernel)."""
    n = len(cartan)
    # row reduce [C | 0]; free variable expected in exactly one column
    m = [[Fraction(x) for x in row] for row in cartan]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        raise RootSystemError("affine Cartan matrix kernel is not one-dimensional")
    f = free[0]
    sol = [Fraction(0)] * n
    sol[f] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -m[r][f]
    from math import lcm
    den = 1
    for x in sol:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in sol]
    if all(v < 0 for v in ints):
        ints = [-v for v in ints]
    if not all(v > 0 for v in ints):
        raise RootSystemError("kernel vector is not positive")
    from math import gcd
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


# ---------------------------------------------------------------------------
# Cartan matrices

def finite_cartan(kind: FiniteKind):
    """Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>; 0-based indices.

    Conventions: B_n has the short root last, C_n the long root last, G_2 the
    long root first; E-types use the Bourbaki layout with the branch node at
    index 1 hanging off index 3.
    """
    fam, n = kind.family, kind.rank
    C = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        C[i][j] = cij
        C[j][i] = cji

    if fam == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif fam == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # alpha_{n-1} short
    elif fam == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # alpha_{n-1} long
    elif fam == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif fam == "E":
        # chain 0-2-3-4-...-(n-1), branch node 1 attached to 3
        link(0, 2)
        for i in range(2, n - 1):
            link(i, i + 1)
        link(1, 3)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_2, alpha_3 short
        link(2, 3)
    elif fam == "G":
        link(0, 1, -1, -3)  # alpha_0 long, alpha_1 short
    return [tuple(r) for r in C]


def symmetrizer(cartan):
    """Rational d with d_i C[i][j] = d_j C[j][i], normalized so max(d) = 1."""
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        todo = [start]
        while todo:
            i = todo.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    todo.append(j)
    top = max(d)
    return tuple(x / top for x in d)


def pairing(cartan, v, i):
    """<v, alpha_i^vee>."""
    return sum(v[j] * cartan[i][j] for j in range(len(v)) if v[j])


def reflect(cartan, v, i):
    c = pairing(cartan, v, i)
    if c == 0:
        return tuple(v)
    w = list(v)
    w[i] -= c
    return tuple(w)


def _closure(cartan, seeds, keep):
    """Upward reflection closure of positive roots from the given seeds.

    Every positive real root descends to a simple root through componentwise
    smaller positive roots, so growing only in the increasing direction and
    pruning with ``keep`` yields exactly the positive roots passing ``keep``.
    """
    n = len(cartan)
    found = set(seeds)
    frontier = list(seeds)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                c = pairing(cartan, v, i)
                if c < 0:
                    w = list(v)
                    w[i] -= c
                    w = tuple(w)
                    if w not in found and keep(w):
                        found.add(w)
                        nxt.append(w)
        frontier = nxt
    return found


def _root_key(v):
    return (sum(v), v)


WEYL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}


def weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return WEYL_ORDERS[f"{family}{rank}"]


@dataclass(frozen=True)
class FiniteRootSystem:
    kind: FiniteKind
    cartan: tuple
    d: tuple  # symmetrizer, max 1 (so squared lengths peak at 2)
    positive_roots: tuple
    highest_root: Root
    highest_short_root: Root  # == highest_root when only one length occurs
    weyl_order: int
    connection_index: int
    long_simple_count: int
    fundamental_coweights: tuple  # rows of rational coefficients over alpha basis

    @property
    def rank(self):
        return self.kind.rank

    def form(self, u, v):
        n = self.rank
        return sum(
            Fraction(u[i]) * self.d[i] * self.cartan[i][j] * v[j]
            for i in range(n)
            for j in range(n)
            if u[i] and v[j]
        )

    def sq(self, v):
        return self.form(v, v)

    def coroot(self, v):
        s = self.sq(v)
        return tuple(Fraction(2 * c) / s for c in v)


def build_finite(kind: FiniteKind) -> FiniteRootSystem:
    cartan = finite_cartan(kind)
    n = kind.rank
    d = symmetrizer(cartan)
    simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pos = sorted(_closure(cartan, simples, lambda w: True), key=_root_key)

    def sq(v):
        return sum(
            Fraction(v[i]) * d[i] * cartan[i][j] * v[j]
            for i in range(n)
            for j in range(n)
            if v[i] and v[j]
        )

    theta = pos[-1]
    assert all(pairing(cartan, theta, i) >= 0 for i in range(n))
    minsq = min(sq(v) for v in simples)
    if minsq == 2:
        theta_s = theta
    else:
        shorts = [v for v in pos if sq(v) == minsq]
        theta_s = max(shorts, key=_root_key)
        assert all(pairing(cartan, theta_s, i) >= 0 for i in range(n))
    L = sum(1 for v in simples if sq(v) == 2)
    gram = [[d[i] * Fraction(cartan[i][j]) for j in range(n)] for i in range(n)]
    coweights = frac_inv(gram)
    det = frac_det(cartan)
    assert det.denominator == 1
    return FiniteRootSystem(
        kind=kind,
        cartan=tuple(cartan),
        d=d,
        positive_roots=tuple(pos),
        highest_root=theta,
        highest_short_root=theta_s,
        weyl_order=weyl_order(kind.family, n),
        connection_index=abs(int(det)),
        long_simple_count=L,
        fundamental_coweights=tuple(tuple(row) for row in coweights),
    )


# cached: systems are immutable and reused heavily
finite_system = lru_cache(maxsize=None)(build_finite)


def slice_kind(kind: AffineKind) -> FiniteKind:
    """Type of the finite system Delta_f sitting in the delta-coefficient-0 slice."""
    if kind.k == 1:
        return kind.base
    fam, N = kind.base.family, kind.base.rank
    if fam == "A":
        m = (N + 1) // 2 if N % 2 else N // 2
        return FiniteKind("A", 1) if m == 1 else FiniteKind("C", m) if m >= 2 else None
    if fam == "D":
        m = N - 1
        return FiniteKind("C", 2) if m == 2 else FiniteKind("B", m)
    return FiniteKind("F", 4)


@dataclass(frozen=True)
class AffineRootSystem:
    kind: AffineKind
    cartan: tuple
    labels: Root  # (a_0, ..., a_n)
    d: tuple
    window: int  # bound B on |delta-coefficient|
    positive_real: tuple  # sorted
    slice_frs: FiniteRootSystem
    _pos_set: frozenset = field(repr=False)

    @property
    def n(self):
        """Rank of g_0 (affine diagram has n + 1 nodes)."""
        return len(self.labels) - 1

    @property
    def delta(self):
        return self.labels

    def form(self, u, v):
        m = len(u)
        return sum(
            Fraction(u[i]) * self.d[i] * self.cartan[i][j] * v[j]
            for i in range(m)
            for j in range(m)
            if u[i] and v[j]
        )

    def sq(self, v):
        return self.form(v, v)

    def is_long(self, v):
        return self.sq(v) == 2

    def pairing(self, v, i):
        return pairing(self.cartan, v, i)

    def reflect(self, v, i):
        return reflect(self.cartan, v, i)

    def delta_coeff(self, v):
        return Fraction(v[0], self.labels[0])

    def is_positive(self, v):
        return any(v) and all(c >= 0 for c in v)

    def classify(self, v):
        """One of 'positive-real', 'negative-real', 'imaginary', 'not-a-root'."""
        if not any(v):
            return "not-a-root"
        a0 = self.labels[0]
        if v[0] % a0 == 0 and v[0] != 0:
            m = v[0] // a0
            if all(c == m * a for c, a in zip(v, self.labels)):
                return "imaginary"
        if v in self._pos_set:
            return "positive-real"
        if tuple(-c for c in v) in self._pos_set:
            return "negative-real"
        pos_signs = all(c >= 0 for c in v)
        neg_signs = all(c <= 0 for c in v)
        if not pos_signs and not neg_signs:
            return "not-a-root"
        if abs(v[0]) > self.window * a0:
            raise OutOfWindowError(f"{v} outside generated window |m| <= {self.window}")
        return "not-a-root"

    def is_root_or_zero(self, v):
        return not any(v) or self.classify(v) != "not-a-root"

    def simple_roots(self):
        m = len(self.labels)
        return [tuple(int(i == j) for j in range(m)) for i in range(m)]


def _affine_cartan(kind: AffineKind):
    """(cartan, slice FiniteRootSystem, t) with alpha_0 = (delta - beta0)/t."""
    frs = finite_system(slice_kind(kind))
    n = frs.rank
    fam, N = kind.base.family, kind.base.rank
    if kind.k == 1:
        beta0, t = frs.highest_root, 1
    elif fam == "A" and N % 2 == 0:
        beta0, t = frs.highest_root, 2  # A_{2n}^(2): halve the long root
    else:
        beta0, t = frs.highest_short_root, 1
    C = [[0] * (n + 1) for _ in range(n + 1)]
    C[0][0] = 2
    b0_sq = frs.sq(beta0)
    for j in range(n):
        ej = tuple(int(i == j) for i in range(n))
        cij = -t * 2 * frs.form(beta0, ej) / b0_sq
        cji = Fraction(-pairing(frs.cartan, beta0, j), t)
        assert cij.denominator == 1 and cji.denominator == 1
        C[0][j + 1] = int(cij)
        C[j + 1][0] = int(cji)
        for i in range(n):
            C[i + 1][j + 1] = frs.cartan[i][j]
    return [tuple(r) for r in C], frs, t


def build_affine(kind: AffineKind, window: int | None = None) -> AffineRootSystem:
    if window is None:
        window = 3 * kind.k
    if window < 3 * kind.k:
        raise RootSystemError(f"window {window} below the safe bound {3 * kind.k}")
    cartan, frs, t = _affine_cartan(kind)
    labels = int_kernel_vector(cartan)
    assert labels[0] == t
    d = symmetrizer(cartan)
    m = len(labels)
    simples = [tuple(int(i == j) for j in range(m)) for i in range(m)]
    bound0 = window * labels[0]
    pos = _closure(cartan, simples, lambda w: w[0] <= bound0)
    ars = AffineRootSystem(
        kind=kind,
        cartan=tuple(cartan),
        labels=labels,
        d=d,
        window=window,
        positive_real=tuple(sorted(pos, key=_root_key)),
        slice_frs=frs,
        _pos_set=frozenset(pos),
    )
    # sanity: slice of the window agrees with the finite system Delta_f
    slice_pos = {v[1:] for v in pos if v[0] == 0}
    assert slice_pos == set(frs.positive_roots)
    return ars


affine_system = lru_cache(maxsize=None)(build_affine)
