"""Affine Weyl group elements and the search for grading-minuscule elements.

An element is stored by the images of the n+1 simple roots, which is a
faithful canonical key.  Inversion sets grow one root at a time along reduced
words: N(w s_i) = N(w) + {w(alpha_i)} whenever w(alpha_i) is positive.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .rootsys import AffineRootSystem, OutOfWindowError, Root
from .involution import GradedData


@dataclass(frozen=True)
class AffineWeylElement:
    images: tuple[Root, ...]
    length: int
    inversions: frozenset


def identity(ars: AffineRootSystem) -> AffineWeylElement:
    return AffineWeylElement(tuple(ars.simple_roots()), 0, frozenset())


def act(w: AffineWeylElement, v) -> Root:
    m = len(w.images)
    out = [0] * m
    for i, c in enumerate(v):
        if c:
            img = w.images[i]
            for j in range(m):
                out[j] += c * img[j]
    return tuple(out)


def extend_by_simple(ars: AffineRootSystem, w: AffineWeylElement, i: int):
    """w * s_i if that increases length, else None."""
    new_inv = w.images[i]
    if not ars.is_positive(new_inv):
        return None
    if abs(new_inv[0]) > ars.window * ars.labels[0]:
        raise OutOfWindowError(f"inversion root {new_inv} left the window")
    row = ars.cartan[i]
    images = tuple(
        tuple(a - row[j] * b for a, b in zip(img, w.images[i])) if row[j] else img
        for j, img in enumerate(w.images)
    )
    return AffineWeylElement(images, w.length + 1, w.inversions | {new_inv})


def enumerate_sigma_minuscule(gd: GradedData, order_seed: int | None = None):
    """All w with N(w) inside the height-1 layer, by breadth-first search."""
    ars = gd.ars
    m = len(ars.labels)
    cap = len(gd.delta1)
    idx = list(range(m))
    rng = random.Random(order_seed) if order_seed is not None else None
    start = identity(ars)
    seen = {start.images: start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            order = idx if rng is None else rng.sample(idx, m)
            for i in order:
                img = w.images[i]
                if ars.is_positive(img) and gd.ht(img) == 1:
                    w2 = extend_by_simple(ars, w, i)
                    if w2.images not in seen:
                        if w2.length > cap:
                            raise AssertionError("minuscule search exceeded |Delta_1|")
                        seen[w2.images] = w2
                        nxt.append(w2)
        frontier = nxt
    out = sorted(seen.values(), key=lambda w: (w.length, w.images))
    return out
