"""Integer lattice points, kappa_l adjacency and finite digital images.

A digital image is a finite set of points of Z^d together with one
adjacency relation from the kappa_l family.  Everything here is exact
integer arithmetic; no floating point is involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]

# Coordinates must fit a signed 64-bit integer.
COORD_LIMIT = 2**63 - 1


def _check_coord(value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"lattice coordinates must be integers, got {value!r}")
    if not -COORD_LIMIT <= value <= COORD_LIMIT:
        raise OverflowError(f"coordinate {value} exceeds the 64-bit range")
    return value


def as_point(coords: Iterable[int]) -> Point:
    return tuple(_check_coord(c) for c in coords)


def neighbor_count(d: int, l: int) -> int:
    """Number of kappa_l neighbors of a point of the full lattice Z^d."""
    return sum(comb(d, j) * 2**j for j in range(1, l + 1))


@dataclass(frozen=True, order=True)
class Adjacency:
    """The kappa_l adjacency on Z^d.

    ``l = d = 0`` is accepted as the degenerate adjacency of Z^0, which has
    a single point and no neighbors.
    """

    l: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"dimension must be non-negative, got {self.d}")
        if self.d == 0:
            if self.l != 0:
                raise ValueError("Z^0 only carries the trivial adjacency l = 0")
        elif not 1 <= self.l <= self.d:
            raise ValueError(f"adjacency parameter l={self.l} outside [1, {self.d}]")

    @property
    def count(self) -> int:
        """Conventional name of the adjacency, e.g. 4 or 8 in Z^2."""
        return neighbor_count(self.d, self.l)

    @classmethod
    def named(cls, count: int, d: int) -> Adjacency:
        """Resolve a conventional name (2; 4, 8; 6, 18, 26; ...) in Z^d."""
        for l in range(1, d + 1):
            if neighbor_count(d, l) == count:
                return cls(l, d)
        valid = [neighbor_count(d, l) for l in range(1, d + 1)]
        raise ValueError(f"{count}-adjacency does not exist in Z^{d} (valid: {valid})")

    @classmethod
    def parse(cls, value: int, d: int) -> Adjacency:
        """Accept either the parameter l (1..d) or a conventional name.

        The two vocabularies never collide: every name in Z^d is at least 2d.
        """
        if 1 <= value <= d:
            return cls(value, d)
        return cls.named(value, d)

    def __str__(self) -> str:
        return f"kappa_{self.l}({self.count}-adjacency in Z^{self.d})"


def adjacent(p: Sequence[int], q: Sequence[int], adj: Adjacency) -> bool:
    """True iff p and q are distinct and kappa_l-adjacent."""
    if len(p) != adj.d or len(q) != adj.d:
        raise ValueError(
            f"dimension mismatch: {len(p)}-point, {len(q)}-point, adjacency in Z^{adj.d}"
        )
    differing = 0
    for a, b in zip(p, q):
        diff = a - b
        if diff == 0:
            continue
        if diff != 1 and diff != -1:
            return False
        differing += 1
    return 1 <= differing <= adj.l


@lru_cache(maxsize=None)
def offsets(adj: Adjacency) -> tuple[Point, ...]:
    """All displacement vectors from a point to its kappa_l neighbors, sorted."""
    out = []
    for delta in itertools.product((-1, 0, 1), repeat=adj.d):
        nz = sum(1 for c in delta if c)
        if 1 <= nz <= adj.l:
            out.append(delta)
    return tuple(sorted(out))


@dataclass(frozen=True)
class AdjacencyGraph:
    """Graph induced by an adjacency on an indexed vertex list."""

    vertices: tuple[Point, ...]
    edges: frozenset[tuple[int, int]]

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in self.vertices]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return len(self.neighbors[i])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(n) for n in self.neighbors))

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.neighbors[i]


@dataclass(frozen=True)
class DigitalImage:
    """A finite digital image (M, kappa_l).

    ``points`` is kept in sorted (canonical) order.  ``rim`` optionally
    flags points of a finite truncation of an infinite image whose full
    lattice neighborhood was cut off; it is metadata only and never
    changes any neighborhood computation.
    """

    points: tuple[Point, ...]
    adjacency: Adjacency
    rim: frozenset[Point] = field(default=frozenset(), compare=False)

    def __post_init__(self) -> None:
        pts = [as_point(p) for p in self.points]
        for p in pts:
            if len(p) != self.adjacency.d:
                raise ValueError(
                    f"point {p} has dimension {len(p)}, image lives in Z^{self.adjacency.d}"
                )
        ordered = tuple(sorted(pts))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate point {a}")
        object.__setattr__(self, "points", ordered)
        rim = frozenset(as_point(p) for p in self.rim)
        if not rim <= set(ordered):
            raise ValueError("rim points must belong to the image")
        object.__setattr__(self, "rim", rim)

    @classmethod
    def from_points(cls, points: Iterable[Iterable[int]], l: int, d: int | None = None,
                    rim: Iterable[Iterable[int]] = ()) -> DigitalImage:
        pts = [as_point(p) for p in points]
        if d is None:
            if not pts:
                raise ValueError("dimension of an empty image must be given explicitly")
            d = len(pts[0])
        return cls(tuple(pts), Adjacency(l, d), frozenset(as_point(p) for p in rim))

    @property
    def dim(self) -> int:
        return self.adjacency.d

    @property
    def l(self) -> int:
        return self.adjacency.l

    @cached_property
    def index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.index

    @cached_property
    def graph(self) -> AdjacencyGraph:
        """The induced adjacency graph on the image's points."""
        edges = set()
        idx = self.index
        if 3**self.dim - 1 <= len(self.points):
            deltas = offsets(self.adjacency)
            for i, p in enumerate(self.points):
                for delta in deltas:
                    j = idx.get(tuple(a + b for a, b in zip(p, delta)))
                    if j is not None and i < j:
                        edges.add((i, j))
        else:
            for i, j in itertools.combinations(range(len(self.points)), 2):
                if adjacent(self.points[i], self.points[j], self.adjacency):
                    edges.add((i, j))
        return AdjacencyGraph(self.points, frozenset(edges))

    def restrict(self, subset: Iterable[Sequence[int]]) -> DigitalImage:
        """Sub-image on ``subset`` with the same adjacency."""
        sub = {as_point(p) for p in subset}
        missing = sub - self.point_set
        if missing:
            raise ValueError(f"points not in image: {sorted(missing)}")
        return DigitalImage(tuple(sub), self.adjacency, self.rim & sub)

    def with_adjacency(self, l: int) -> DigitalImage:
        return DigitalImage(self.points, Adjacency(l, self.dim), self.rim)


def _require_member(M: DigitalImage, p: Sequence[int]) -> Point:
    pt = as_point(p)
    if pt not in M.index:
        raise ValueError(f"point {pt} is not in the image")
    return pt


def neighborhood(M: DigitalImage, p: Sequence[int]) -> frozenset[Point]:
    """Points of M adjacent to p (computed inside M, not in all of Z^d)."""
    pt = _require_member(M, p)
    i = M.index[pt]
    return frozenset(M.points[j] for j in M.graph.neighbors[i])


def neighborhood_star(M: DigitalImage, p: Sequence[int]) -> frozenset[Point]:
    return neighborhood(M, p) | {as_point(p)}


def neighborhood_image(M: DigitalImage, p: Sequence[int]) -> DigitalImage:
    return M.restrict(neighborhood(M, p))


def components(M: DigitalImage) -> list[frozenset[Point]]:
    """Connected components, each block sorted, blocks ordered by least point."""
    g = M.graph
    seen = [False] * g.order
    blocks = []
    for start in range(g.order):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        block = []
        while stack:
            v = stack.pop()
            block.append(v)
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        blocks.append(frozenset(M.points[v] for v in block))
    return blocks


def is_connected(M: DigitalImage) -> bool:
    return len(components(M)) <= 1


def is_totally_disconnected(M: DigitalImage) -> bool:
    return not M.graph.edges


def is_connected_subset(M: DigitalImage, subset: Iterable[Sequence[int]]) -> bool:
    return is_connected(M.restrict(subset))


@dataclass(frozen=True)
class SimplexCensus:
    """``counts[r]`` is the number of r-dimensional simplices (cliques of r+1 points)."""

    counts: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        return self.counts[r] if 0 <= r < len(self.counts) else 0

    @property
    def top_dimension(self) -> int:
        return len(self.counts) - 1

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.counts))


def simplex_census(M: DigitalImage) -> SimplexCensus:
    """Count all cliques of every size in the adjacency graph."""
    g = M.graph
    counts: list[int] = []

    # Each clique is produced once: vertices are added in increasing index order.
    def expand(size: int, candidates: list[int]) -> None:
        while len(counts) < size:
            counts.append(0)
        counts[size - 1] += 1
        for pos, v in enumerate(candidates):
            nbrs = g.neighbors[v]
            expand(size + 1, [w for w in candidates[pos + 1:] if w in nbrs])

    for v in range(g.order):
        expand(1, sorted(w for w in g.neighbors[v] if w > v))
    return SimplexCensus(tuple(counts))


def np_adjacent(pair1: tuple[Sequence[int], Sequence[int]],
                pair2: tuple[Sequence[int], Sequence[int]],
                adj_m: Adjacency, adj_n: Adjacency) -> bool:
    """Normal product adjacency of (p, p') and (q, q') in M x N."""
    (p, p2), (q, q2) = pair1, pair2
    first_eq, second_eq = tuple(p) == tuple(q), tuple(p2) == tuple(q2)
    first_adj = adjacent(p, q, adj_m)
    second_adj = adjacent(p2, q2, adj_n)
    return ((first_eq and second_adj) or (first_adj and second_eq)
            or (first_adj and second_adj))


def product(M: DigitalImage, N: DigitalImage, l: int | None = None) -> DigitalImage:
    """Cartesian product embedded in Z^(d1+d2), by default with kappa_(l+s)."""
    if l is None:
        l = M.l + N.l
    pts = [p + q for p in M.points for q in N.points]
    return DigitalImage(tuple(pts), Adjacency(l, M.dim + N.dim))


# Generators ----------------------------------------------------------------

def _check_bounds(a: int, b: int) -> None:
    _check_coord(a)
    _check_coord(b)
    if a > b:
        raise ValueError(f"empty interval [{a}, {b}]")


def gen_interval(a: int, b: int, l: int = 1) -> DigitalImage:
    _check_bounds(a, b)
    return DigitalImage(tuple((x,) for x in range(a, b + 1)), Adjacency(l, 1))


def gen_box(intervals: Sequence[tuple[int, int]], l: int = 1) -> DigitalImage:
    if not intervals:
        raise ValueError("a box needs at least one interval")
    for a, b in intervals:
        _check_bounds(a, b)
    pts = itertools.product(*(range(a, b + 1) for a, b in intervals))
    return DigitalImage(tuple(pts), Adjacency(l, len(intervals)))


def gen_sphere(n: int, l: int = 1) -> DigitalImage:
    """The digital n-sphere: [-1, 1]^(n+1) without the origin."""
    if n < 0:
        raise ValueError(f"sphere dimension must be non-negative, got {n}")
    origin = (0,) * (n + 1)
    pts = (p for p in itertools.product((-1, 0, 1), repeat=n + 1) if p != origin)
    return DigitalImage(tuple(pts), Adjacency(l, n + 1))


def gen_cross(k: int, l: int = 1) -> DigitalImage:
    """The two coordinate axes of Z^2 truncated to [-k, k].

    Points at distance k from the origin are flagged as rim.
    """
    if k < 1:
        raise ValueError(f"cross half-width must be at least 1, got {k}")
    _check_bounds(-k, k)
    pts = {(x, 0) for x in range(-k, k + 1)} | {(0, y) for y in range(-k, k + 1)}
    rim = {(k, 0), (-k, 0), (0, k), (0, -k)}
    return DigitalImage(tuple(pts), Adjacency(l, 2), frozenset(rim))


def remove_points(M: DigitalImage, S: Iterable[Sequence[int]]) -> DigitalImage:
    drop = {as_point(p) for p in S}
    keep = [p for p in M.points if p not in drop]
    return DigitalImage(tuple(keep), M.adjacency, M.rim - drop)
