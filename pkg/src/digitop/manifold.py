"""Digital manifold certification, global sides, simple points, good pairs.

A finite foreground set is certified as a digital (n-1)-manifold when it is
alpha-connected and satisfies four properties: cube-wise alpha-connectivity,
exactly two local background components around every point, two-sidedness of
every alpha-neighbor, and the separation property.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Literal, Mapping, Optional

from .adjacency import (
    AdjacencyPair,
    AdjacencySpec,
    Region,
    complement_components,
    components,
    full_adjacency,
    n_simply_connected_bounded,
    neighbors,
)
from .lattice import (
    Point,
    Translation,
    bounding_box,
    cube_vertices,
    cubes_meeting_box,
    vec_add,
    vec_sub,
)
from .separation import SeparationVerdict, has_separation_property

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class ManifoldReport:
    """Per-property verdicts plus the local side pair of every point."""

    alpha_connected: Verdict
    cube_connectivity: Verdict
    local_two_components: Verdict
    two_sidedness: Verdict
    separation: SeparationVerdict
    local_sides: Optional[Mapping[Point, tuple[frozenset[Point], frozenset[Point]]]]

    @property
    def certified(self) -> bool:
        return (
            self.alpha_connected.holds
            and self.cube_connectivity.holds
            and self.local_two_components.holds
            and self.two_sidedness.holds
            and self.separation.holds
        )

    def witnesses(self) -> list[dict]:
        out = []
        for verdict in (
            self.alpha_connected,
            self.cube_connectivity,
            self.local_two_components,
            self.two_sidedness,
        ):
            if not verdict.holds and verdict.witness:
                out.append(verdict.witness)
        if not self.separation.holds and self.separation.witness:
            out.append(self.separation.witness.to_json())
        return out

    def to_json(self) -> dict:
        return {
            "certified": self.certified,
            "alpha_connected": self.alpha_connected.to_json(),
            "cube_connectivity": self.cube_connectivity.to_json(),
            "local_two_components": self.local_two_components.to_json(),
            "two_sidedness": self.two_sidedness.to_json(),
            "separation": self.separation.to_json(),
        }


@dataclass(frozen=True)
class GlobalSides:
    """The two background components of the neighborhood shell of the set."""

    c_side: frozenset[Point]
    d_side: frozenset[Point]


@dataclass(frozen=True)
class DoublePointWitness:
    """A foreground edge crossing a background edge inside one square."""

    z: Point
    p: Point
    q: Point
    r: Point
    tau: Translation

    def to_json(self) -> dict:
        return {
            "kind": "double-point",
            "z": list(self.z),
            "p": list(self.p),
            "q": list(self.q),
            "r": list(self.r),
            "tau": list(self.tau),
        }

    def verify(self, pair: AdjacencyPair) -> bool:
        """Replay every defining condition of the configuration."""
        alpha, beta = pair.alpha, pair.beta
        return (
            beta.adjacent(self.z, self.p)
            and axis_adjacent(self.z, self.q)
            and alpha.adjacent(self.p, self.q)
            and beta.adjacent(self.z, self.r)
            and axis_adjacent(self.p, self.r)
            and vec_add(self.p, self.tau) == self.q
            and vec_add(self.r, self.tau) == self.z
            and alpha.adjacent(self.r, self.q)
            and is_simple_translation(self.tau)
        )


def axis_adjacent(p: Point, q: Point) -> bool:
    return sum(abs(a - b) for a, b in zip(p, q)) == 1


def is_simple_translation(tau: Translation) -> bool:
    """True iff tau is no nontrivial power of another translation."""
    g = 0
    for c in tau:
        g = math.gcd(g, abs(c))
    return g == 1


def local_components(p: Point, m: Iterable[Point], pair: AdjacencyPair) -> list[frozenset[Point]]:
    """Background components of the punctured neighborhood of p, sorted."""
    mset = frozenset(m)
    if p not in mset:
        raise ValueError(f"{p} is not a foreground point")
    shell = neighbors(_omega(pair.n), p) - mset
    comps = components(pair.beta, shell).components()
    return [comps[cid] for cid in sorted(comps)]


def _omega(n: int) -> AdjacencySpec:
    return full_adjacency(n)


def check_manifold(
    m: Iterable[Point], pair: AdjacencyPair, region: Region | None = None
) -> ManifoldReport:
    """Evaluate all certification properties of a finite foreground set."""
    mset = frozenset(m)
    if not mset:
        raise ValueError("the foreground set must be nonempty")
    n = pair.n

    lab = components(pair.alpha, mset)
    if lab.count == 1:
        alpha_connected = Verdict(True)
    else:
        reps = sorted(set(lab.labels.values()))[:2]
        alpha_connected = Verdict(
            False,
            {"kind": "alpha-disconnected", "components": [list(r) for r in reps]},
        )

    cube_connectivity = Verdict(True)
    lo, hi = bounding_box(mset)
    for c in cubes_meeting_box(lo, hi, n, n):
        cut = [v for v in cube_vertices(c) if v in mset]
        if cut and components(pair.alpha, cut).count > 1:
            cube_connectivity = Verdict(
                False,
                {
                    "kind": "cube-intersection-disconnected",
                    "cube": {"base": list(c.base), "axes": list(c.axes)},
                },
            )
            break

    omega = _omega(n)
    local_two = Verdict(True)
    sides: dict[Point, tuple[frozenset[Point], frozenset[Point]]] = {}
    for p in sorted(mset):
        shell = neighbors(omega, p) - mset
        comps = sorted(components(pair.beta, shell).components().values(), key=min)
        if len(comps) != 2:
            local_two = Verdict(
                False,
                {"kind": "local-component-count", "point": list(p), "count": len(comps)},
            )
            sides.clear()
            break
        sides[p] = (comps[0], comps[1])

    two_sided = Verdict(True)
    if local_two.holds:
        for p in sorted(mset):
            for q in sorted(neighbors(pair.alpha, p) & mset):
                for side in sides[p]:
                    if not any(pair.beta.adjacent(q, x) for x in side):
                        two_sided = Verdict(
                            False,
                            {
                                "kind": "one-sided-neighbor",
                                "p": list(p),
                                "q": list(q),
                                "side": sorted(map(list, side)),
                            },
                        )
                        break
                if not two_sided.holds:
                    break
            if not two_sided.holds:
                break

    separation = has_separation_property(mset, pair, region)

    return ManifoldReport(
        alpha_connected=alpha_connected,
        cube_connectivity=cube_connectivity,
        local_two_components=local_two,
        two_sidedness=two_sided,
        separation=separation,
        local_sides=sides if local_two.holds else None,
    )


class NotCertifiedError(ValueError):
    """Raised when an operation requires a certified manifold input."""


def global_sides(
    m: Iterable[Point], pair: AdjacencyPair, report: ManifoldReport | None = None
) -> GlobalSides:
    """Split the neighborhood shell of a certified set into its two sides.

    The shell components are computed by flood fill; every point's local
    side pair must land in distinct shell components, otherwise the
    certification was inconsistent.  The side containing the smallest
    first-local-component point of the smallest foreground point is
    returned first.
    """
    mset = frozenset(m)
    if report is None:
        report = check_manifold(mset, pair)
    if not report.certified or report.local_sides is None:
        raise NotCertifiedError("global sides are defined only for certified manifolds")
    omega = _omega(pair.n)
    shell = set()
    for p in mset:
        shell |= neighbors(omega, p)
    shell -= mset
    comps = sorted(components(pair.beta, shell).components().values(), key=min)
    if len(comps) != 2:
        raise RuntimeError(
            f"certified set has {len(comps)} shell components; certification inconsistent"
        )
    by_point: dict[Point, frozenset[Point]] = {}
    for comp in comps:
        for x in comp:
            by_point[x] = comp
    for p in sorted(mset):
        c_p, d_p = report.local_sides[p]
        if by_point[min(c_p)] is by_point[min(d_p)]:
            raise RuntimeError(
                f"local sides of {p} fall into one shell component; certification inconsistent"
            )
    anchor = report.local_sides[min(mset)][0]
    first = by_point[min(anchor)]
    second = comps[0] if first is comps[1] else comps[1]
    return GlobalSides(first, second)


def is_simple_point(
    p: Point, m: Iterable[Point], pair: AdjacencyPair, region: Region | None = None
) -> bool:
    """True iff deleting p changes neither side's component count."""
    mset = frozenset(m)
    if p not in mset:
        raise ValueError(f"{p} is not a foreground point")
    if region is None:
        region = Region.around(mset, margin=2)
    smaller = mset - {p}
    before_fg = components(pair.alpha, mset).count
    after_fg = components(pair.alpha, smaller).count
    if before_fg != after_fg:
        return False
    before_bg = complement_components(pair.beta, mset, region).count
    after_bg = complement_components(pair.beta, smaller, region).count
    return before_bg == after_bg


def double_points(z: Point, pair: AdjacencyPair) -> list[DoublePointWitness]:
    """Exhaustive search for crossing configurations around one point."""
    alpha, beta = pair.alpha, pair.beta
    out = []
    for p in sorted(neighbors(beta, z)):
        for q in sorted(neighbors(alpha, p)):
            if not axis_adjacent(z, q):
                continue
            tau = vec_sub(q, p)
            if not any(tau) or not is_simple_translation(tau):
                continue
            r = vec_sub(z, tau)
            if (
                beta.adjacent(z, r)
                and axis_adjacent(p, r)
                and alpha.adjacent(r, q)
            ):
                out.append(DoublePointWitness(z, p, q, r, tau))
    return out


@dataclass(frozen=True)
class GoodPairReport:
    verdict: Literal["yes", "no", "unknown"]
    separating: Literal["yes", "no", "unknown"]
    contractibility: Literal["yes", "unknown", "skipped"]
    double_point_witnesses: tuple[DoublePointWitness, ...]
    sphere_report: Optional[ManifoldReport]

    def witnesses(self) -> list[dict]:
        out = [w.to_json() for w in self.double_point_witnesses]
        if self.sphere_report is not None and not self.sphere_report.certified:
            out.extend(self.sphere_report.witnesses())
        return out

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "separating": self.separating,
            "contractibility": self.contractibility,
            "double_points": [w.to_json() for w in self.double_point_witnesses],
            "sphere_certified": (
                self.sphere_report.certified if self.sphere_report else None
            ),
        }


def is_separating_pair(
    pair: AdjacencyPair, bound: int = 2, budget: int = DEFAULT_BUDGET
) -> Literal["yes", "no", "unknown"]:
    """Is the background neighborhood of the origin a digital sphere?

    Translation invariance of the offset sets makes the origin check
    sufficient.  "unknown" means the manifold part certified but the bounded
    contractibility search was inconclusive.
    """
    verdict, _, _ = _sphere_check(pair, bound, budget)
    return verdict


def _sphere_check(
    pair: AdjacencyPair, bound: int, budget: int
) -> tuple[Literal["yes", "no", "unknown"], ManifoldReport, str]:
    origin = (0,) * pair.n
    sphere = frozenset(vec_add(origin, v) for v in pair.beta.offsets)
    report = check_manifold(sphere, pair)
    if not report.certified:
        return "no", report, "skipped"
    contractible = n_simply_connected_bounded(pair.alpha, sphere, bound, budget)
    if contractible == "yes":
        return "yes", report, "yes"
    return "unknown", report, "unknown"


def is_good_pair(
    pair: AdjacencyPair, bound: int = 2, budget: int = DEFAULT_BUDGET
) -> GoodPairReport:
    """Separating pair with no double points; "unknown" only propagates
    from the bounded contractibility search."""
    origin = (0,) * pair.n
    doubles = tuple(double_points(origin, pair))
    separating, sphere_report, contractibility = _sphere_check(pair, bound, budget)
    if doubles or separating == "no":
        verdict: Literal["yes", "no", "unknown"] = "no"
    elif separating == "yes":
        verdict = "yes"
    else:
        verdict = "unknown"
    return GoodPairReport(verdict, separating, contractibility, doubles, sphere_report)


def is_regular_rotation(spec: AdjacencySpec) -> bool:
    """Offset-set invariance under every signed axis permutation."""
    import itertools as _it

    offsets = spec.offsets
    for perm in _it.permutations(range(spec.n)):
        for signs in _it.product((1, -1), repeat=spec.n):
            image = frozenset(
                tuple(signs[i] * v[perm[i]] for i in range(spec.n)) for v in offsets
            )
            if image != offsets:
                return False
    return True
