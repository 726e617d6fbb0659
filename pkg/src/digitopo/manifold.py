"""Digital manifold classification.

Every point's neighborhood (computed inside the image) is compared, up to
digital isomorphism, with the model classes of a fixed (n, kappa_l).  The
dimension of an image is the least n at which every point finds a model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lattice import DigitalImage, Point, as_point, neighborhood_image
from .models import ModelClass, model_neighborhood, model_sizes
from .morphisms import DigitalMap, find_isomorphism, is_embedding


@dataclass(frozen=True)
class PointMatch:
    point: Point
    neighborhood_size: int
    matches: tuple[tuple[ModelClass, DigitalMap], ...]

    @property
    def matched(self) -> bool:
        return bool(self.matches)

    @property
    def is_interior(self) -> bool:
        return any(not cls.is_boundary for cls, _ in self.matches)

    @property
    def is_boundary(self) -> bool:
        # interior wins when a point matches both kinds of class
        return self.matched and not self.is_interior


def _has_models(n: int, l: int) -> bool:
    return n == 0 or l <= n


def classify_point(M: DigitalImage, p: Sequence[int], n: int, l: int,
                   with_boundary: bool) -> PointMatch:
    """Match the neighborhood of p against every model class of (n, kappa_l)."""
    nb = neighborhood_image(M, p)
    pt = as_point(p)
    if not _has_models(n, l):
        return PointMatch(pt, len(nb), ())
    found = []
    for k, size in model_sizes(n, l, with_boundary).items():
        if size != len(nb):
            continue
        cls = model_neighborhood(n, l, k)
        chart = find_isomorphism(nb, cls.image)
        if chart is not None:
            found.append((cls, chart))
    return PointMatch(pt, len(nb), tuple(found))


@dataclass(frozen=True)
class DimensionCheck:
    n: int
    l: int
    with_boundary: bool
    matches: dict[Point, PointMatch]

    @property
    def failures(self) -> list[Point]:
        return [p for p, m in self.matches.items() if not m.matched]

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def interior(self) -> list[Point]:
        return [p for p, m in self.matches.items() if m.is_interior]

    @property
    def boundary(self) -> list[Point]:
        return [p for p, m in self.matches.items() if m.is_boundary]


def check_dimension(M: DigitalImage, n: int, l: int = 1, with_boundary: bool = False,
                    points: Iterable[Sequence[int]] | None = None) -> DimensionCheck:
    """Classify the given points (default: all of M) at one fixed dimension."""
    judged = M.points if points is None else sorted(as_point(p) for p in points)
    return DimensionCheck(n, l, with_boundary,
                          {p: classify_point(M, p, n, l, with_boundary) for p in judged})


@dataclass(frozen=True)
class ManifoldReport:
    l: int
    with_boundary: bool
    n_cap: int
    verdict: bool
    dimension: int | None
    # dimension whose classification is shown: the passing one, or else the
    # tested dimension with the fewest failing points
    probe_dimension: int | None
    interior: tuple[Point, ...]
    boundary: tuple[Point, ...]
    failures: tuple[tuple[Point, int], ...]
    rim: tuple[Point, ...] = ()
    excluded: tuple[Point, ...] = ()
    matches: dict[Point, PointMatch] = field(default_factory=dict, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "dimension": self.dimension,
            "model_adjacency": self.l,
            "with_boundary": self.with_boundary,
            "n_cap": self.n_cap,
            "probe_dimension": self.probe_dimension,
            "interior": [list(p) for p in self.interior],
            "boundary": [list(p) for p in self.boundary],
            "failures": [{"point": list(p), "neighborhood_size": s} for p, s in self.failures],
            "rim": [list(p) for p in self.rim],
            "excluded": [list(p) for p in self.excluded],
        }


def default_cap(M: DigitalImage) -> int:
    return max((M.graph.degree(i) for i in range(len(M))), default=0)


def manifold_report(M: DigitalImage, l: int = 1, with_boundary: bool = False,
                    n_cap: int | None = None,
                    points: Iterable[Sequence[int]] | None = None) -> ManifoldReport:
    """Search n = 0, 1, ... up to the cap for the least dimension that fits.

    ``points`` restricts which points are judged (neighborhoods are still
    taken in all of M); the remaining points are listed as excluded.
    """
    judged = list(M.points) if points is None else sorted({as_point(p) for p in points})
    judged_set = set(judged)
    excluded = tuple(p for p in M.points if p not in judged_set)
    cap = default_cap(M) if n_cap is None else n_cap
    sizes = {p: len(neighborhood_image(M, p)) for p in judged}
    largest = max(sizes.values(), default=0)

    best: DimensionCheck | None = None
    passing: DimensionCheck | None = None
    for n in range(cap + 1):
        if not _has_models(n, l):
            continue
        available = set(model_sizes(n, l, with_boundary).values())
        if n > 0 and min(available) > largest:
            break  # class sizes only grow with n
        if any(s not in available for s in sizes.values()):
            # fast path: wrong neighborhood size, no isomorphism test needed
            check = DimensionCheck(n, l, with_boundary, {
                p: (classify_point(M, p, n, l, with_boundary) if sizes[p] in available
                    else PointMatch(p, sizes[p], ()))
                for p in judged})
        else:
            check = check_dimension(M, n, l, with_boundary, judged)
        if check.passed:
            passing = check
            break
        if best is None or len(check.failures) < len(best.failures):
            best = check

    shown = passing or best
    return ManifoldReport(
        l=l,
        with_boundary=with_boundary,
        n_cap=cap,
        verdict=passing is not None,
        dimension=passing.n if passing else None,
        probe_dimension=shown.n if shown else None,
        interior=tuple(shown.interior) if shown else (),
        boundary=tuple(shown.boundary) if shown else (),
        failures=tuple((p, sizes[p]) for p in shown.failures) if shown else
        tuple((p, sizes[p]) for p in judged),
        rim=tuple(sorted(M.rim)),
        excluded=excluded,
        matches=shown.matches if shown else {},
    )


def sweep(M: DigitalImage, with_boundary: bool = False,
          n_cap: int | None = None) -> list[tuple[int, int]]:
    """All (l, n) with n the least dimension passing under model kappa_l."""
    cap = default_cap(M) if n_cap is None else n_cap
    found = []
    for l in range(1, max(cap, 1) + 1):
        report = manifold_report(M, l, with_boundary, cap)
        if report.verdict:
            found.append((l, report.dimension))
    return found


def is_manifold_of_dimension(M: DigitalImage, r: int, l: int = 1) -> bool:
    """True if M is a digital r-manifold, with or without boundary."""
    cap = max(r, default_cap(M))
    return any(manifold_report(M, l, wb, cap).dimension == r for wb in (False, True))


def is_submanifold(S: DigitalImage, M: DigitalImage, gamma: DigitalMap, r: int,
                   l: int = 1) -> bool:
    if gamma.source != S or gamma.target != M:
        raise ValueError("gamma must map S into M")
    return is_manifold_of_dimension(S, r, l) and is_embedding(gamma)


def render_text(report: ManifoldReport) -> str:
    mode = "with boundary" if report.with_boundary else "without boundary"
    lines = [f"model adjacency kappa_{report.l}, {mode}, dimensions 0..{report.n_cap}"]
    if report.verdict:
        lines.append(f"digital {report.dimension}-manifold: yes")
        lines.append(f"interior ({len(report.interior)}): {_fmt(report.interior)}")
        lines.append(f"boundary ({len(report.boundary)}): {_fmt(report.boundary)}")
    else:
        lines.append("digital manifold: no")
        if report.probe_dimension is not None:
            lines.append(f"closest dimension tried: {report.probe_dimension}")
        for p, s in report.failures:
            lines.append(f"  no model for {p} (neighborhood size {s})")
    if report.rim:
        lines.append(f"rim points of a truncation ({len(report.rim)}): {_fmt(report.rim)}")
    if report.excluded:
        lines.append(f"excluded from verdict: {_fmt(report.excluded)}")
    return "\n".join(lines) + "\n"


def _fmt(points: Sequence[Point]) -> str:
    return ", ".join("(" + ",".join(str(c) for c in p) + ")" for p in points) or "-"
