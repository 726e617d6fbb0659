"""Invariants and function-level constructions on digital images.

Euler characteristic, 0-manifold orientations, connected-ray linear
orders, supports of integer-valued functions, and verification of
partitions of unity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .lattice import (
    DigitalImage,
    Point,
    as_point,
    gen_interval,
    is_connected_subset,
    neighborhood,
    simplex_census,
)
from .manifold import manifold_report
from .morphisms import DigitalMap, is_continuous, is_isomorphism


def euler_characteristic(M: DigitalImage) -> int:
    census = simplex_census(M)
    return sum((-1) ** r * a for r, a in enumerate(census.counts))


def _require_zero_manifold(M: DigitalImage) -> None:
    report = manifold_report(M, 1, with_boundary=False)
    if report.dimension != 0:
        raise ValueError("orientations of this kind need a digital 0-manifold")


def count_orientations_0(M: DigitalImage) -> int:
    """Number of maps M -> {-1, +1}, for a digital 0-manifold M."""
    _require_zero_manifold(M)
    return 2 ** len(M)


def orientations_0(M: DigitalImage) -> list[dict[Point, int]]:
    _require_zero_manifold(M)
    return [dict(zip(M.points, signs))
            for signs in itertools.product((-1, 1), repeat=len(M))]


@dataclass(frozen=True)
class LinearOrder:
    sequence: tuple[Point, ...]

    def rank(self, p: Point) -> int:
        return self.sequence.index(p)

    def reversed(self) -> LinearOrder:
        return LinearOrder(self.sequence[::-1])


ORDER_BOUND = 8


def has_connected_rays(M: DigitalImage, sequence: Sequence[Point]) -> bool:
    """Every down-ray and up-ray of the order is empty or digitally connected."""
    for i in range(len(sequence)):
        below, above = sequence[:i], sequence[i + 1:]
        if below and not is_connected_subset(M, below):
            return False
        if above and not is_connected_subset(M, above):
            return False
    return True


def connected_ray_orders(M: DigitalImage, bound: int = ORDER_BOUND) -> list[LinearOrder]:
    """All total orders of M whose rays are all connected, in lexicographic order.

    Built by growing a prefix: the prefix before each new element is its
    down-ray, the rest after it is its up-ray, so both are checked as the
    element is placed.
    """
    if len(M) > bound:
        raise ValueError(f"image has {len(M)} points, enumeration bound is {bound}")
    orders: list[LinearOrder] = []

    def grow(prefix: list[Point], rest: list[Point]) -> None:
        if not rest:
            orders.append(LinearOrder(tuple(prefix)))
            return
        if prefix and not is_connected_subset(M, prefix):
            return
        for i, p in enumerate(rest):
            remaining = rest[:i] + rest[i + 1:]
            if remaining and not is_connected_subset(M, remaining):
                continue
            grow(prefix + [p], remaining)

    grow([], list(M.points))
    return orders


@dataclass(frozen=True, eq=False)
class LatticeFunction:
    """An integer-valued function on the points of a digital image."""

    domain: DigitalImage
    values: Mapping[Point, int]

    def __post_init__(self) -> None:
        values = {as_point(p): int(v) for p, v in self.values.items()}
        missing = [p for p in self.domain.points if p not in values]
        if missing:
            raise ValueError(f"function is not total, missing {missing[:5]}")
        extra = [p for p in values if p not in self.domain.index]
        if extra:
            raise ValueError(f"function defined outside its domain: {extra[:5]}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_rule(cls, domain: DigitalImage, rule: Callable[[Point], int]) -> LatticeFunction:
        return cls(domain, {p: rule(p) for p in domain.points})

    def __call__(self, p: Sequence[int]) -> int:
        return self.values[as_point(p)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeFunction):
            return NotImplemented
        return self.domain == other.domain and self.values == other.values

    def _check_same_domain(self, other: LatticeFunction) -> None:
        if self.domain != other.domain:
            raise ValueError("functions live on different domains")

    def __add__(self, other: LatticeFunction) -> LatticeFunction:
        self._check_same_domain(other)
        return LatticeFunction(self.domain, {p: v + other.values[p] for p, v in self.values.items()})

    def __mul__(self, other: LatticeFunction) -> LatticeFunction:
        self._check_same_domain(other)
        return LatticeFunction(self.domain, {p: v * other.values[p] for p, v in self.values.items()})

    def pullback(self, alpha: DigitalMap) -> LatticeFunction:
        """f o alpha, for alpha mapping into this function's domain."""
        if alpha.target != self.domain:
            raise ValueError("map target differs from the function's domain")
        return LatticeFunction(alpha.source, {p: self.values[q] for p, q in alpha.table.items()})

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values.values())

    def is_continuous(self) -> bool:
        """Continuity into (Z, 2-adjacency): adjacent points differ by at most 1."""
        line = gen_interval(min(self.values.values(), default=0),
                            max(self.values.values(), default=0))
        return is_continuous(DigitalMap(self.domain, line,
                                        {p: (v,) for p, v in self.values.items()}))


def support(f: LatticeFunction) -> frozenset[Point]:
    return frozenset(p for p, v in f.values.items() if v != 0)


@dataclass(frozen=True)
class SupportAlgebraReport:
    product_is_intersection: bool
    sum_within_union: bool
    sum_equals_union: bool
    both_nonnegative: bool
    # points of sp(f) | sp(g) where f + g cancels to zero
    cancellations: tuple[Point, ...]

    @property
    def laws_hold(self) -> bool:
        """The laws valid over Z: product law, sum inclusion, equality if f, g >= 0."""
        ok = self.product_is_intersection and self.sum_within_union
        if self.both_nonnegative:
            ok = ok and self.sum_equals_union
        return ok


def support_algebra_check(f: LatticeFunction, g: LatticeFunction) -> SupportAlgebraReport:
    if f.domain != g.domain:
        raise ValueError("functions live on different domains")
    sf, sg = support(f), support(g)
    s_prod, s_sum = support(f * g), support(f + g)
    union = sf | sg
    return SupportAlgebraReport(
        product_is_intersection=s_prod == sf & sg,
        sum_within_union=s_sum <= union,
        sum_equals_union=s_sum == union,
        both_nonnegative=f.is_nonnegative() and g.is_nonnegative(),
        cancellations=tuple(sorted(union - s_sum)),
    )


def support_pullback_check(f: LatticeFunction, alpha: DigitalMap) -> bool:
    """sp(f o alpha) equals the preimage of sp(f) under an isomorphism alpha."""
    if not is_isomorphism(alpha):
        raise ValueError("alpha must be a digital isomorphism")
    sp = support(f)
    preimage = frozenset(p for p, q in alpha.table.items() if q in sp)
    return support(f.pullback(alpha)) == preimage


@dataclass(frozen=True, eq=False)
class PartitionCandidate:
    functions: tuple[LatticeFunction, ...]
    target: int
    cover: tuple[frozenset[Point], ...] | None = None

    def __post_init__(self) -> None:
        if not self.functions:
            raise ValueError("a partition needs at least one function")
        dom = self.functions[0].domain
        if any(f.domain != dom for f in self.functions):
            raise ValueError("all functions must share one domain")
        if self.cover is not None:
            cover = tuple(frozenset(as_point(p) for p in block) for block in self.cover)
            if len(cover) != len(self.functions):
                raise ValueError("the cover needs one set per function")
            object.__setattr__(self, "cover", cover)

    @property
    def domain(self) -> DigitalImage:
        return self.functions[0].domain


@dataclass(frozen=True)
class PartitionReport:
    nonnegative: bool
    neighborhoods_meet_supports: bool
    sums_to_target: bool
    subordinate: bool | None
    continuous: bool | None = None
    # (point, function index) pairs where a neighborhood misses a support
    neighborhood_failures: tuple[tuple[Point, int], ...] = ()
    sum_failures: tuple[Point, ...] = ()
    negative_values: tuple[tuple[Point, int], ...] = ()
    subordination_failures: tuple[int, ...] = field(default=())

    @property
    def passed(self) -> bool:
        checks = [self.nonnegative, self.neighborhoods_meet_supports, self.sums_to_target]
        checks += [c for c in (self.subordinate, self.continuous) if c is not None]
        return all(checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "nonnegative": self.nonnegative,
            "neighborhoods_meet_supports": self.neighborhoods_meet_supports,
            "sums_to_target": self.sums_to_target,
            "subordinate": self.subordinate,
            "continuous": self.continuous,
            "neighborhood_failures": [{"point": list(p), "function": i}
                                      for p, i in self.neighborhood_failures],
            "sum_failures": [list(p) for p in self.sum_failures],
            "negative_values": [{"point": list(p), "function": i}
                                for p, i in self.negative_values],
            "subordination_failures": list(self.subordination_failures),
        }


def verify_partition_of_unity(P: PartitionCandidate,
                              check_domain: Iterable[Sequence[int]] | None = None,
                              check_continuity: bool = False) -> PartitionReport:
    """Check each partition-of-unity condition separately.

    The neighborhood condition is only evaluated on ``check_domain``
    (default: the whole domain); the other conditions always cover the
    whole domain.
    """
    M = P.domain
    points = M.points if check_domain is None else sorted({as_point(p) for p in check_domain})
    outside = [p for p in points if p not in M.index]
    if outside:
        raise ValueError(f"check domain leaves the function domain: {outside[:5]}")

    negative = tuple((p, i) for i, f in enumerate(P.functions)
                     for p in M.points if f.values[p] < 0)
    supports = [support(f) for f in P.functions]
    nb_fail = tuple((p, i) for p in points for i, sp in enumerate(supports)
                    if not neighborhood(M, p) & sp)
    sum_fail = tuple(p for p in M.points
                     if sum(f.values[p] for f in P.functions) != P.target)
    sub_fail: tuple[int, ...] = ()
    if P.cover is not None:
        sub_fail = tuple(i for i, (sp, block) in enumerate(zip(supports, P.cover))
                         if not sp <= block)
    return PartitionReport(
        nonnegative=not negative,
        neighborhoods_meet_supports=not nb_fail,
        sums_to_target=not sum_fail,
        subordinate=None if P.cover is None else not sub_fail,
        continuous=(all(f.is_continuous() for f in P.functions)
                    if check_continuity else None),
        neighborhood_failures=nb_fail,
        sum_failures=sum_fail,
        negative_values=negative,
        subordination_failures=sub_fail,
    )


def ramp_partition(domain: DigitalImage, m: int, axis: int = 0) -> PartitionCandidate:
    """Two complementary ramps along one axis, summing to m everywhere.

    The first is m left of 0, falls linearly to 0 at m; the second is its
    complement.  The cover is {x < m} and {x > 0} (restricted to the domain).
    """
    def falling(p: Point) -> int:
        x = p[axis]
        return m if x <= 0 else (m - x if x < m else 0)

    f1 = LatticeFunction.from_rule(domain, falling)
    f2 = LatticeFunction.from_rule(domain, lambda p: m - falling(p))
    cover = (frozenset(p for p in domain.points if p[axis] < m),
             frozenset(p for p in domain.points if p[axis] > 0))
    return PartitionCandidate((f1, f2), m, cover)
