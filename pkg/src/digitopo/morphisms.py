"""Maps between digital images: continuity, isomorphisms, embeddings, homotopies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .lattice import (
    AdjacencyGraph,
    DigitalImage,
    Point,
    adjacent,
    as_point,
    gen_interval,
)


@dataclass(frozen=True, eq=False)
class DigitalMap:
    """A total map from ``source.points`` into ``target.points``."""

    source: DigitalImage
    target: DigitalImage
    table: Mapping[Point, Point]

    def __post_init__(self) -> None:
        table = {as_point(k): as_point(v) for k, v in self.table.items()}
        extra = set(table) - self.source.point_set
        if extra:
            raise ValueError(f"map defined outside its source: {sorted(extra)}")
        missing = [p for p in self.source.points if p not in table]
        if missing:
            raise ValueError(f"map is not total, missing {missing}")
        outside = sorted({v for v in table.values() if v not in self.target.index})
        if outside:
            raise ValueError(f"map values outside the target: {outside}")
        object.__setattr__(self, "table", table)

    def __call__(self, p: Sequence[int]) -> Point:
        return self.table[as_point(p)]

    def items(self) -> list[tuple[Point, Point]]:
        return [(p, self.table[p]) for p in self.source.points]

    def image_points(self) -> frozenset[Point]:
        return frozenset(self.table.values())

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.table)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.table) == len(self.target)

    def inverse(self) -> DigitalMap:
        if not self.is_bijective():
            raise ValueError("only bijections can be inverted")
        return DigitalMap(self.target, self.source, {v: k for k, v in self.table.items()})

    def compose(self, other: DigitalMap) -> DigitalMap:
        """``other`` after ``self``."""
        return DigitalMap(self.source, other.target,
                          {p: other.table[q] for p, q in self.table.items()})


def identity(M: DigitalImage) -> DigitalMap:
    return DigitalMap(M, M, {p: p for p in M.points})


def is_continuous(f: DigitalMap) -> bool:
    """Adjacent points must go to equal or adjacent points."""
    src, tgt = f.source, f.target
    for i, j in src.graph.edges:
        a, b = f.table[src.points[i]], f.table[src.points[j]]
        if a != b and not adjacent(a, b, tgt.adjacency):
            return False
    return True


def is_isomorphism(f: DigitalMap) -> bool:
    if not f.is_bijective():
        return False
    return is_continuous(f) and is_continuous(f.inverse())


def _refine(g: AdjacencyGraph) -> list[tuple]:
    """Vertex invariants: degree, then the sorted degrees of the neighbors."""
    deg = [g.degree(v) for v in range(g.order)]
    return [(deg[v], tuple(sorted(deg[w] for w in g.neighbors[v]))) for v in range(g.order)]


def graph_isomorphism(g1: AdjacencyGraph, g2: AdjacencyGraph) -> list[int] | None:
    """Find ``m`` with ``m[i]`` the vertex of g2 assigned to vertex i of g1.

    Backtracking over g1's vertices in index order, trying g2's vertices in
    index order; candidates are pruned by the degree/neighbor-degree
    invariant and by consistency with the partial assignment.  The first
    witness in lexicographic order is returned, so results are reproducible.
    """
    n = g1.order
    if n != g2.order or len(g1.edges) != len(g2.edges):
        return None
    if g1.degree_sequence() != g2.degree_sequence():
        return None
    inv1, inv2 = _refine(g1), _refine(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    candidates = [[w for w in range(n) if inv2[w] == inv1[v]] for v in range(n)]
    assign = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if g1.has_edge(u, v) != g2.has_edge(assign[u], w):
                    ok = False
                    break
            if not ok:
                continue
            assign[v], used[w] = w, True
            if extend(v + 1):
                return True
            assign[v], used[w] = -1, False
        return False

    return assign if extend(0) else None


def find_isomorphism(A: DigitalImage, B: DigitalImage) -> DigitalMap | None:
    m = graph_isomorphism(A.graph, B.graph)
    if m is None:
        return None
    return DigitalMap(A, B, {A.points[i]: B.points[m[i]] for i in range(len(A))})


def is_embedding(gamma: DigitalMap) -> bool:
    """Isomorphism onto its image, the image carrying the target's adjacency."""
    if not gamma.is_injective():
        return False
    onto = gamma.target.restrict(gamma.image_points())
    return is_isomorphism(DigitalMap(gamma.source, onto, gamma.table))


@dataclass(frozen=True, eq=False)
class HomotopyTable:
    """A candidate homotopy H : source x [0, steps] -> target."""

    source: DigitalImage
    target: DigitalImage
    steps: int
    table: Mapping[tuple[Point, int], Point]

    def __post_init__(self) -> None:
        if self.steps < 0:
            raise ValueError("number of steps must be non-negative")
        table = {(as_point(p), int(t)): as_point(q) for (p, t), q in self.table.items()}
        missing = [(p, t) for p in self.source.points for t in range(self.steps + 1)
                   if (p, t) not in table]
        if missing:
            raise ValueError(f"homotopy table is not total, missing {missing[:5]}")
        extra = [k for k in table if k[0] not in self.source.index
                 or not 0 <= k[1] <= self.steps]
        if extra:
            raise ValueError(f"homotopy defined outside source x [0,{self.steps}]: {extra[:5]}")
        outside = sorted({q for q in table.values() if q not in self.target.index})
        if outside:
            raise ValueError(f"homotopy values outside the target: {outside}")
        object.__setattr__(self, "table", table)

    def stage(self, t: int) -> DigitalMap:
        return DigitalMap(self.source, self.target,
                          {p: self.table[p, t] for p in self.source.points})

    def track(self, p: Point) -> DigitalMap:
        time = gen_interval(0, self.steps)
        return DigitalMap(time, self.target,
                          {(t,): self.table[p, t] for t in range(self.steps + 1)})


@dataclass(frozen=True)
class HomotopyCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_homotopy(H: HomotopyTable, f: DigitalMap, g: DigitalMap) -> HomotopyCheck:
    """Check that H is a homotopy from f to g.

    Endpoint failures and continuity failures carry distinct reasons
    (prefixes ``endpoint:`` and ``continuity:``).
    """
    for m in (f, g):
        if m.source != H.source or m.target != H.target:
            raise ValueError("f, g and H must share source and target")
    for p in H.source.points:
        if H.table[p, 0] != f.table[p]:
            return HomotopyCheck(False, f"endpoint: H({p}, 0) != f({p})")
        if H.table[p, H.steps] != g.table[p]:
            return HomotopyCheck(False, f"endpoint: H({p}, {H.steps}) != g({p})")
    for p in H.source.points:
        if not is_continuous(H.track(p)):
            return HomotopyCheck(False, f"continuity: t -> H({p}, t) is not continuous")
    for t in range(H.steps + 1):
        if not is_continuous(H.stage(t)):
            return HomotopyCheck(False, f"continuity: stage t={t} is not continuous")
    return HomotopyCheck(True)


def translation(M: DigitalImage, shift: Sequence[int]) -> DigitalMap:
    """Translate M by ``shift``; the target is the translated image."""
    moved = {p: tuple(a + b for a, b in zip(p, shift)) for p in M.points}
    target = DigitalImage(tuple(moved.values()), M.adjacency)
    return DigitalMap(M, target, moved)
