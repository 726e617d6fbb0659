"""Golden corpus of worked examples and counterexamples.

Each case recomputes a result with the library and compares it with a
frozen expected value.  Cases whose published claim disagrees with what
an independent oracle computes are marked ``discrepancy``: they pass when
the oracle value is reproduced, and print the claimed value alongside.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable

from .analysis import (
    LatticeFunction,
    connected_ray_orders,
    euler_characteristic,
    ramp_partition,
    support_algebra_check,
    verify_partition_of_unity,
)
from .lattice import (
    Adjacency,
    DigitalImage,
    adjacent,
    components,
    gen_box,
    gen_cross,
    gen_interval,
    gen_sphere,
    neighborhood,
    np_adjacent,
    remove_points,
)
from .manifold import check_dimension, classify_point, is_submanifold, manifold_report
from .morphisms import DigitalMap, find_isomorphism

PASS, FAIL, DISCREPANCY = "PASS", "FAIL", "DISCREPANCY-EXPECTED"


@dataclass(frozen=True)
class CorpusCase:
    name: str
    provenance: str
    compute: Callable[[], Any]
    expected: Any
    claimed: Any = None  # set only for discrepancy cases

    @property
    def is_discrepancy(self) -> bool:
        return self.claimed is not None


@dataclass(frozen=True)
class CaseResult:
    case: CorpusCase
    observed: Any

    @property
    def status(self) -> str:
        if self.observed != self.case.expected:
            return FAIL
        return DISCREPANCY if self.case.is_discrepancy else PASS

    def line(self) -> str:
        text = f"{self.status:<21} {self.case.name:<24} observed={self.observed!r}"
        if self.case.is_discrepancy:
            text += f" claimed={self.case.claimed!r}"
        if self.status == FAIL:
            text += f" expected={self.case.expected!r}"
        return f"{text}  [{self.case.provenance}]"


CASES: list[CorpusCase] = []


def case(name: str, provenance: str, expected: Any, claimed: Any = None):
    def register(fn: Callable[[], Any]) -> Callable[[], Any]:
        CASES.append(CorpusCase(name, provenance, fn, expected, claimed))
        return fn
    return register


def _summary(M: DigitalImage, l: int = 1, with_boundary: bool = False) -> tuple:
    r = manifold_report(M, l, with_boundary)
    return (r.verdict, r.dimension, tuple(sorted(r.boundary)))


def ring_and_diagonal() -> tuple[DigitalImage, DigitalImage]:
    ring = ({(x, 0) for x in range(5)} | {(4, y) for y in range(1, 5)}
            | {(x, 4) for x in range(4)} | {(0, y) for y in range(1, 4)})
    diagonal = {(i, i) for i in range(5)}
    return (DigitalImage.from_points(ring, 1), DigitalImage.from_points(diagonal, 1))


FOUR_CYCLE = ((0, 0), (0, 1), (1, 0), (1, 1))
CORNERS = tuple(sorted(itertools.product((-1, 1), repeat=3)))


@case("s0", "manifold examples: digital 0-sphere", (True, 0, ()))
def _s0():
    return _summary(gen_sphere(0))


@case("interval-0-4", "interval proposition: two boundary points", (True, 1, ((0,), (4,))))
def _interval():
    return _summary(gen_interval(0, 4), with_boundary=True)


@case("z-window", "manifold examples: Z, interior of a window of Z", True)
def _z_window():
    M = gen_interval(-5, 5)
    return check_dimension(M, 1, 1, False, [(x,) for x in range(-4, 5)]).passed


@case("s1-4", "manifold examples: S^1 with 4-adjacency", (True, 1, ()))
def _s1_4():
    return _summary(gen_sphere(1, 1))


@case("s1-8", "manifold examples: S^1 with 8-adjacency", (False, None, ()),
      claimed=(True, 1, ()))
def _s1_8():
    return _summary(gen_sphere(1, 2))


@case("cross-points-4", "cross counterexample: neighborhood sizes 4 vs 2", ((4, False), (2, True)))
def _cross_points_4():
    M = gen_cross(3, 1)
    a, b = classify_point(M, (0, 0), 1, 1, False), classify_point(M, (2, 0), 1, 1, False)
    return ((a.neighborhood_size, a.matched), (b.neighborhood_size, b.matched))


@case("cross-points-8", "cross counterexample with 8-adjacency", (4, 2, False))
def _cross_points_8():
    M = gen_cross(3, 2)
    A, B = (M.restrict(neighborhood(M, p)) for p in ((0, 0), (2, 0)))
    return (len(A), len(B), find_isomorphism(A, B) is not None)


@case("cross-no-manifold", "cross counterexample: no manifold of any dimension",
      (False, False))
def _cross():
    M = gen_cross(3, 1)
    return (manifold_report(M).verdict, manifold_report(M, with_boundary=True).verdict)


@case("ring-diagonal", "union of two manifolds is not a manifold", (1, 0, False, False))
def _ring_diag():
    ring, diag = ring_and_diagonal()
    union = DigitalImage.from_points(set(ring.points) | set(diag.points), 1)
    return (manifold_report(ring).dimension, manifold_report(diag).dimension,
            manifold_report(union).verdict, manifold_report(union, with_boundary=True).verdict)


@case("four-cycle", "connected 1-manifold that is neither sphere nor interval",
      (True, 1, False, False))
def _four_cycle_case():
    M = DigitalImage.from_points(FOUR_CYCLE, 1)
    r = manifold_report(M)
    spheres = any(find_isomorphism(M, gen_sphere(1, l)) for l in (1, 2))
    intervals = any(find_isomorphism(M, gen_interval(0, k)) for k in range(8))
    return (r.verdict, r.dimension, spheres, intervals)


@case("unit-square", "[0,1]x[0,1] with 4-adjacency: 1-manifold without boundary", (True, 1, ()))
def _unit_square():
    return _summary(gen_box([(0, 1), (0, 1)]))


@case("square-1-3", "worked example on [1,3]x[1,3]: single interior point",
      (2, ((2, 2),), 0, 1))
def _square():
    M = gen_box([(1, 3), (1, 3)])
    r = manifold_report(M, with_boundary=True)
    inner = manifold_report(M.restrict(r.interior)).dimension
    rim = manifold_report(M.restrict(r.boundary)).dimension
    return (r.dimension, r.interior, inner, rim)


@case("fig2", "punctured 5x5 square: interior is disconnected",
      (2, ((1, 1), (1, 3), (3, 1), (3, 3)), 4, 1))
def _punctured_square():
    M = remove_points(gen_box([(0, 4), (0, 4)]), [(2, 2)])
    r = manifold_report(M, with_boundary=True)
    return (r.dimension, r.interior, len(components(M.restrict(r.interior))), len(components(M)))


@case("sphere2-6", "2-sphere, 6-adjacency, 4-adjacent models: boundary = 8 corners",
      (True, 2, CORNERS))
def _sphere6():
    return _summary(gen_sphere(2, 1), with_boundary=True)


@case("sphere2-6-boundary", "boundary of the 6-adjacent 2-sphere is a 0-manifold", 0)
def _sphere6_boundary():
    return manifold_report(gen_sphere(2, 1).restrict(CORNERS)).dimension


@case("sphere2-18", "2-sphere, 18-adjacency, 4-adjacent models",
      (False, None, ()), claimed=(True, 2, ()))
def _sphere18():
    return _summary(gen_sphere(2, 2))


@case("sphere2-26", "2-sphere, 26-adjacency, 4-adjacent models",
      (False, None, ()), claimed=(True, 2, ()))
def _sphere26():
    return _summary(gen_sphere(2, 3))


@case("sphere2-model8", "2-sphere is no 2-manifold with 8-adjacent models",
      (False, False, False))
def _sphere_k2():
    return tuple(check_dimension(gen_sphere(2, l), 2, 2, True).passed for l in (1, 2, 3))


@case("nbhd-star", "N*_4((0,0)) is not a manifold; N_4 of a lattice point is a 0-manifold",
      (False, 0))
def _nbhd_star():
    star = DigitalImage.from_points([(0, 0), (0, 1), (-1, 0), (0, -1), (1, 0)], 1)
    plain = star.restrict([(0, 1), (-1, 0), (0, -1), (1, 0)])
    return (manifold_report(star, with_boundary=True).verdict, manifold_report(plain).dimension)


@case("submanifold-axis", "Z embedded as the first axis of Z^2", True)
def _axis():
    S = gen_interval(-3, 3)
    M = gen_box([(-3, 3), (-3, 3)])
    return is_submanifold(S, M, DigitalMap(S, M, {(x,): (x, 0) for x in range(-3, 4)}), 1)


@case("sphere-submanifold-dims", "dimension of S^(n-1) for n = 2, 3 (4-/6-adjacency)",
      (1, 2), claimed=(2, 3))
def _sphere_dims():
    return tuple(manifold_report(gen_sphere(n - 1, 1), with_boundary=True).dimension
                 for n in (2, 3))


@case("chi-interval", "Euler characteristic of [0,1] is 2 - 1", 1)
def _chi_interval():
    return euler_characteristic(gen_interval(0, 1))


@case("chi-product", "Euler characteristic of the 4-adjacent unit square", 0, claimed=-4)
def _chi_product():
    return euler_characteristic(gen_box([(0, 1), (0, 1)]))


@case("chi-disjoint-union", "Euler characteristic of {(0,0),(1,0)} union {(0,1),(1,1)}",
      0, claimed=-4)
def _chi_union():
    return euler_characteristic(DigitalImage.from_points(FOUR_CYCLE, 1))


@case("chi-sphere-18", "Euler characteristic of the 18-adjacent 2-sphere", 2, claimed=-2)
def _chi_sphere():
    return euler_characteristic(gen_sphere(2, 2))


@case("orders-interval", "a digital interval has exactly two linear orders", 2)
def _orders_interval():
    return len(connected_ray_orders(gen_interval(0, 5)))


@case("orders-four-cycle", "derived: connected-ray orders of the four-cycle", 16)
def _orders_cycle():
    return len(connected_ray_orders(DigitalImage.from_points(FOUR_CYCLE, 1)))


@case("pou-ramps", "partition of unity by two ramps, m = 3, on the overlap",
      (True, True, True, True))
def _pou():
    P = ramp_partition(gen_box([(-2, 5), (-2, 2)]), 3)
    overlap = [p for p in P.domain.points if 0 < p[0] < 3]
    r = verify_partition_of_unity(P, overlap)
    return (r.nonnegative, r.neighborhoods_meet_supports, r.sums_to_target, r.subordinate)


@case("pou-whole-window", "derived: neighborhood condition fails off the overlap",
      (-2, -1, 4, 5))
def _pou_whole():
    P = ramp_partition(gen_box([(-2, 5), (-2, 2)]), 3)
    r = verify_partition_of_unity(P)
    return tuple(sorted({p[0] for p, _ in r.neighborhood_failures}))


@case("support-sum", "support of a sum versus the union of supports", ((0,),),
      claimed=())
def _support_sum():
    M = gen_interval(0, 0)
    f = LatticeFunction(M, {(0,): 1})
    g = LatticeFunction(M, {(0,): -1})
    return support_algebra_check(f, g).cancellations


@case("np-law", "normal product versus kappa_(l+s): first counterexample (d1, l, d2, s)",
      (1, 1, 2, 1), claimed="no counterexample")
def _np_law():
    # smallest (d1, l, d2, s) by lexicographic scan with NP != kappa_(l+s)
    for d1, d2 in sorted(itertools.product(range(1, 4), repeat=2), key=lambda t: (sum(t), t)):
        for l, s in itertools.product(range(1, d1 + 1), range(1, d2 + 1)):
            am, an, ap = Adjacency(l, d1), Adjacency(s, d2), Adjacency(l + s, d1 + d2)
            for p, q in itertools.product(itertools.product((0, 1), repeat=d1), repeat=2):
                for p2, q2 in itertools.product(itertools.product((0, 1), repeat=d2), repeat=2):
                    if np_adjacent((p, p2), (q, q2), am, an) != adjacent(p + p2, q + q2, ap):
                        return (d1, l, d2, s)
    return None


def run_corpus(name_filter: str | None = None) -> list[CaseResult]:
    out = []
    for c in CASES:
        if name_filter and name_filter not in c.name:
            continue
        out.append(CaseResult(c, c.compute()))
    return out
