"""Separation verdicts at desk scale plus the example-set generators.

A certified foreground set should split its complement into exactly two
pieces, be the common boundary of both, and contain no removable point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .adjacency import AdjacencyPair, Region, complement_components, neighbors
from .lattice import Point
from .manifold import (
    ManifoldReport,
    NotCertifiedError,
    Verdict,
    check_manifold,
    is_simple_point,
)


@dataclass(frozen=True)
class JordanReport:
    two_components: bool
    component_count: int
    inside_size: int
    outside_flagged: bool
    common_boundary: Verdict
    no_simple_points: Verdict

    @property
    def all_true(self) -> bool:
        return (
            self.two_components
            and self.outside_flagged
            and self.common_boundary.holds
            and self.no_simple_points.holds
        )

    def witnesses(self) -> list[dict]:
        out = []
        if not self.two_components:
            out.append({"kind": "component-count", "count": self.component_count})
        for v in (self.common_boundary, self.no_simple_points):
            if not v.holds and v.witness:
                out.append(v.witness)
        return out

    def to_json(self) -> dict:
        return {
            "all_true": self.all_true,
            "two_components": self.two_components,
            "component_count": self.component_count,
            "inside_size": self.inside_size,
            "outside_flagged": self.outside_flagged,
            "common_boundary": self.common_boundary.to_json(),
            "no_simple_points": self.no_simple_points.to_json(),
        }


def jordan_check(
    m: Iterable[Point],
    pair: AdjacencyPair,
    margin: int = 2,
    report: ManifoldReport | None = None,
) -> JordanReport:
    """Two complement components, common boundary, no removable points.

    Refuses uncertified input: the conclusion is only claimed for certified
    manifolds, and silent evaluation invites misreading.
    """
    if margin < 2:
        raise ValueError("margin must be at least 2")
    mset = frozenset(m)
    if report is None:
        report = check_manifold(mset, pair)
    if not report.certified:
        raise NotCertifiedError("jordan check requires a certified manifold")
    region = Region.around(mset, margin)
    labeling = complement_components(pair.beta, mset, region)
    comps = labeling.components()
    two = len(comps) == 2
    inside_size = 0
    outside_flagged = False
    for cid, pts in comps.items():
        if cid in labeling.infinite_ids:
            outside_flagged = True
        else:
            inside_size = len(pts)

    common = Verdict(True)
    if two:
        ids = sorted(comps)
        for p in sorted(mset):
            reached = {labeling.labels[q] for q in neighbors(pair.beta, p) if q in labeling.labels}
            missing = [cid for cid in ids if cid not in reached]
            if missing:
                common = Verdict(
                    False,
                    {
                        "kind": "not-common-boundary",
                        "point": list(p),
                        "missing_component": list(missing[0]),
                    },
                )
                break

    no_simple = Verdict(True)
    for p in sorted(mset):
        if is_simple_point(p, mset, pair, region):
            no_simple = Verdict(False, {"kind": "simple-point", "point": list(p)})
            break

    return JordanReport(
        two_components=two,
        component_count=len(comps),
        inside_size=inside_size,
        outside_flagged=outside_flagged,
        common_boundary=common,
        no_simple_points=no_simple,
    )


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str  # rect_boundary | box_surface | sphere_shell
    params: tuple[int, ...]


def rect_boundary(w: int, h: int) -> frozenset[Point]:
    """Boundary lattice points of a w-by-h box in the plane."""
    if w < 3 or h < 3:
        raise ValueError("sides must be at least 3 so the interior is nonempty")
    return frozenset(
        (x, y)
        for x in range(w)
        for y in range(h)
        if x in (0, w - 1) or y in (0, h - 1)
    )


def box_surface(w: int, h: int, d: int) -> frozenset[Point]:
    """Surface lattice points of a w-by-h-by-d box in space."""
    if min(w, h, d) < 3:
        raise ValueError("sides must be at least 3 so the interior is nonempty")
    return frozenset(
        (x, y, z)
        for x in range(w)
        for y in range(h)
        for z in range(d)
        if x in (0, w - 1) or y in (0, h - 1) or z in (0, d - 1)
    )


def sphere_shell(radius: int, n: int) -> frozenset[Point]:
    """Digitized sphere: points with radius - 1 < |p| <= radius + 1/2.

    Certification is not guaranteed; the checker decides.
    """
    if radius < 2:
        raise ValueError("radius must be at least 2")
    if n < 2:
        raise ValueError("dimension must be at least 2")
    top = radius + 1
    out = []
    for p in itertools.product(range(-top, top + 1), repeat=n):
        sq = sum(c * c for c in p)
        if sq > (radius - 1) ** 2 and 4 * sq <= (2 * radius + 1) ** 2:
            out.append(p)
    return frozenset(out)


def generate(spec: GeneratorSpec) -> frozenset[Point]:
    if spec.kind == "rect_boundary":
        return rect_boundary(*spec.params)
    if spec.kind == "box_surface":
        return box_surface(*spec.params)
    if spec.kind == "sphere_shell":
        return sphere_shell(*spec.params)
    raise ValueError(f"unknown generator kind {spec.kind!r}")
