"""Model neighborhoods of points of Z^n and of the orthant D_+^n.

A model class is keyed by (n, l, k): the neighborhood, inside D_+^n and
under kappa_l, of the representative point with k zero coordinates and
all other coordinates equal to 2.  Neighbors change a coordinate by at
most 1, so a coordinate equal to 2 never meets the constraint m_j >= 0,
and k = 0 reproduces the unconstrained Z^n neighborhood exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .lattice import Adjacency, AdjacencyGraph, DigitalImage, Point
from .morphisms import graph_isomorphism

INTERIOR_COORD = 2


@dataclass(frozen=True)
class ModelClass:
    n: int
    l: int
    zero_count: int
    representative: Point
    image: DigitalImage

    @property
    def graph(self) -> AdjacencyGraph:
        return self.image.graph

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def is_boundary(self) -> bool:
        return self.zero_count >= 1

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.n, self.l, self.zero_count)


def _validate(n: int, l: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"model dimension must be non-negative, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"zero count k={k} outside [0, {n}]")
    if n > 0 and not 1 <= l <= n:
        raise ValueError(f"model adjacency l={l} outside [1, {n}]")


def class_size(n: int, l: int, k: int) -> int:
    """Number of kappa_l neighbors of the k-zero representative inside D_+^n.

    Zero coordinates may only move up (+1), free ones either way.
    """
    _validate(n, l, k)
    total = 0
    for j in range(1, min(l, n) + 1):
        for a in range(0, j + 1):
            total += comb(k, a) * comb(n - k, j - a) * 2 ** (j - a)
    return total


def representative(n: int, k: int) -> Point:
    return (0,) * k + (INTERIOR_COORD,) * (n - k)


def _neighbor_points(n: int, l: int, k: int) -> list[Point]:
    s = representative(n, k)
    out = []
    for j in range(1, min(l, n) + 1):
        for positions in itertools.combinations(range(n), j):
            choices = [(1,) if pos < k else (-1, 1) for pos in positions]
            for signs in itertools.product(*choices):
                q = list(s)
                for pos, sign in zip(positions, signs):
                    q[pos] += sign
                out.append(tuple(q))
    return out


@lru_cache(maxsize=512)
def model_neighborhood(n: int, l: int, k: int) -> ModelClass:
    _validate(n, l, k)
    if n == 0:
        image = DigitalImage((), Adjacency(0, 0))
    else:
        image = DigitalImage(tuple(_neighbor_points(n, l, k)), Adjacency(l, n))
    return ModelClass(n, l, k, representative(n, k), image)


def enumerate_model_classes(n: int, l: int, with_boundary: bool) -> list[ModelClass]:
    """Model classes for (n, kappa_l), deduplicated up to isomorphism, ascending k."""
    ks = range(n + 1) if with_boundary else range(1)
    classes: list[ModelClass] = []
    for k in ks:
        cls = model_neighborhood(n, l, k)
        if any(graph_isomorphism(c.graph, cls.graph) is not None for c in classes):
            continue
        classes.append(cls)
    return classes


def model_sizes(n: int, l: int, with_boundary: bool) -> dict[int, int]:
    """Map k -> class size, without building any graph.

    Sizes strictly decrease in k (each zero coordinate loses its -1 move),
    so within one (n, l) every class is identified by its size.
    """
    ks = range(n + 1) if with_boundary else range(1)
    return {k: class_size(n, l, k) for k in ks}
