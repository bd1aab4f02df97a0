"""Simplicial complex built from a foreground set via the barycenter test.

Vertices live on the half-integer grid and are stored with doubled integer
coordinates.  Every lattice point of the foreground is a vertex; a cube
contributes its barycenter exactly when the barycenter test passes.  Each
passing cube cones its barycenter over every already-built simplex inside
its closed hull, so every simplex is a flag of nested cube barycenters,
optionally rooted at a lattice point.

The reduction removes barycenters of cubes whose in-cube background is
connected, together with every simplex using them; what remains
triangulates a strong deformation retract of the full complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from ._exact import integer_rank, open_simplices_intersect, point_in_closed_simplex
from .adjacency import AdjacencyPair, ComponentLabeling, Region, components
from .lattice import (
    Cube,
    HalfPoint,
    Point,
    barycenter,
    bounding_box,
    cube_vertices,
    cubes_meeting_box,
    double,
    is_lattice2,
    subcubes,
)

Simplex = tuple[HalfPoint, ...]  # canonical: vertices sorted, distinct


def _canonical(vertices: Iterable[HalfPoint]) -> Simplex:
    return tuple(sorted(vertices))


@dataclass(frozen=True)
class SimplicialComplex:
    """A face-closed set of canonical simplices on the half-integer grid."""

    n: int
    simplices: frozenset[Simplex]
    provenance: Mapping[HalfPoint, Cube] = field(default_factory=dict)

    def vertices(self) -> tuple[HalfPoint, ...]:
        return tuple(sorted({v for s in self.simplices for v in s}))

    def by_dim(self) -> dict[int, list[Simplex]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: sorted(ss) for d, ss in sorted(out.items())}

    def dim(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def lattice_vertices(self) -> tuple[Point, ...]:
        return tuple(
            sorted(tuple(c // 2 for c in v) for v in self.vertices() if is_lattice2(v))
        )

    def __len__(self) -> int:
        return len(self.simplices)


def _in_cube_background_split(c: Cube, mset: frozenset[Point], pair: AdjacencyPair) -> bool:
    """Some antipodal background pair falls in different in-cube components."""
    verts = cube_vertices(c)
    free = [v for v in verts if v not in mset]
    if len(free) < 2:
        return False
    labeling = components(pair.beta, free)
    ind = tuple(1 if i in c.axes else 0 for i in range(c.n))
    span = tuple(2 * b + i for b, i in zip(c.base, ind))
    for v in free:
        opposite = tuple(s - x for s, x in zip(span, v))
        if opposite > v and opposite not in mset:
            if not labeling.same_component(v, opposite):
                return True
    return False


def barycenter_test(c: Cube, m: Iterable[Point], pair: AdjacencyPair) -> bool:
    """Barycenter test: does the cube contribute a vertex to the complex?

    True when an antipodal vertex pair is foreground and alpha-adjacent,
    when the whole cube is foreground, or when an antipodal background pair
    is split between two in-cube background components.
    """
    if c.dim < 1:
        raise ValueError("the barycenter test needs a cube of dimension >= 1")
    mset = frozenset(m)
    verts = cube_vertices(c)
    if all(v in mset for v in verts):
        return True
    ind = tuple(1 if i in c.axes else 0 for i in range(c.n))
    span = tuple(2 * b + i for b, i in zip(c.base, ind))
    for v in verts:
        opposite = tuple(s - x for s, x in zip(span, v))
        if opposite <= v:
            continue
        if v in mset and opposite in mset and pair.alpha.adjacent(v, opposite):
            return True
    return _in_cube_background_split(c, mset, pair)


def _box_contains(box: tuple[HalfPoint, HalfPoint], simplex: Simplex) -> bool:
    lo, hi = box
    return all(all(a <= c <= b for a, c, b in zip(lo, v, hi)) for v in simplex)


def build_complex_in_cube(cn: Cube, m: Iterable[Point], pair: AdjacencyPair) -> SimplicialComplex:
    """Complex of the foreground restricted to one covering n-cube."""
    mset = frozenset(m) & frozenset(cube_vertices(cn))
    built: list[Simplex] = [(double(p),) for p in sorted(mset)]
    provenance: dict[HalfPoint, Cube] = {}
    for k in range(1, cn.dim + 1):
        for c in subcubes(cn, k):
            if not barycenter_test(c, mset, pair):
                continue
            center = barycenter(c)
            provenance[center] = c
            box = c.box2()
            new = [(center,)]
            for s in built:
                if center not in s and _box_contains(box, s):
                    new.append(_canonical(s + (center,)))
            built.extend(new)
    return SimplicialComplex(cn.n, frozenset(built), provenance)


def build_complex(m: Iterable[Point], pair: AdjacencyPair) -> SimplicialComplex:
    """Union of the per-cube complexes over all n-cubes near the set."""
    mset = frozenset(m)
    n = pair.n
    if not mset:
        return SimplicialComplex(n, frozenset())
    lo, hi = bounding_box(mset)
    lo = tuple(c - 1 for c in lo)
    hi = tuple(c + 1 for c in hi)
    simplices: set[Simplex] = set()
    provenance: dict[HalfPoint, Cube] = {}
    for cn in cubes_meeting_box(lo, hi, n, n):
        if all(v not in mset for v in cube_vertices(cn)):
            continue
        part = build_complex_in_cube(cn, mset, pair)
        simplices |= part.simplices
        provenance.update(part.provenance)
    return SimplicialComplex(n, frozenset(simplices), provenance)


def _background_component_count(c: Cube, mset: frozenset[Point], pair: AdjacencyPair) -> int:
    free = [v for v in cube_vertices(c) if v not in mset]
    if not free:
        return 0
    return components(pair.beta, free).count


def reduce_complex(
    k: SimplicialComplex, m: Iterable[Point], pair: AdjacencyPair
) -> SimplicialComplex:
    """Drop barycenters of cubes whose in-cube background is one piece."""
    mset = frozenset(m)
    removed = {
        center
        for center, cube in k.provenance.items()
        if _background_component_count(cube, mset, pair) == 1
    }
    simplices = frozenset(s for s in k.simplices if not any(v in removed for v in s))
    provenance = {c: cube for c, cube in k.provenance.items() if c not in removed}
    return SimplicialComplex(k.n, simplices, provenance)


@dataclass(frozen=True)
class CubeTrace:
    """Per-cube record of the test verdict and the reduction decision."""

    cube: Cube
    test_passed: bool
    background_components: int
    barycenter_kept: Optional[bool]  # None when the test failed


def reduction_trace(
    k: SimplicialComplex, m: Iterable[Point], pair: AdjacencyPair
) -> tuple[CubeTrace, ...]:
    mset = frozenset(m)
    out = []
    for center, cube in sorted(k.provenance.items()):
        count = _background_component_count(cube, mset, pair)
        out.append(CubeTrace(cube, True, count, count != 1))
    return tuple(out)


def euler_characteristic(k: SimplicialComplex) -> int:
    """Alternating sum of simplex counts by dimension."""
    chi = 0
    for s in k.simplices:
        chi += 1 if (len(s) - 1) % 2 == 0 else -1
    return chi


def skeleton_components(k: SimplicialComplex) -> ComponentLabeling:
    """Components of the vertex-edge graph of the complex."""
    vertices = set(k.vertices())
    edges: dict[HalfPoint, set[HalfPoint]] = {v: set() for v in vertices}
    for s in k.simplices:
        if len(s) == 2:
            edges[s[0]].add(s[1])
            edges[s[1]].add(s[0])
    labels: dict[HalfPoint, HalfPoint] = {}
    for start in sorted(vertices):
        if start in labels:
            continue
        comp = {start}
        stack = [start]
        while stack:
            p = stack.pop()
            for q in edges[p]:
                if q not in comp:
                    comp.add(q)
                    stack.append(q)
        cid = min(comp)
        for p in comp:
            labels[p] = cid
    return ComponentLabeling(labels)


def _bbox2(s: Simplex) -> tuple[HalfPoint, HalfPoint]:
    n = len(s[0])
    lo = tuple(min(v[i] for v in s) for i in range(n))
    hi = tuple(max(v[i] for v in s) for i in range(n))
    return lo, hi


def _bboxes_overlap(a: tuple[HalfPoint, HalfPoint], b: tuple[HalfPoint, HalfPoint]) -> bool:
    return all(al <= bh and bl <= ah for al, ah, bl, bh in zip(a[0], a[1], b[0], b[1]))


def verify_complex_axioms(
    k: SimplicialComplex,
) -> tuple[bool, Optional[dict]]:
    """Check affine independence, face closure and open disjointness.

    Returns (True, None) or (False, witness).  Disjointness runs the exact
    rational intersection test on every simplex pair whose closed bounding
    boxes overlap, which is sufficient at half-integer granularity.
    """
    simplices = sorted(k.simplices)
    sset = k.simplices
    for s in simplices:
        if len(set(s)) != len(s):
            return False, {"kind": "repeated-vertex", "simplex": [list(v) for v in s]}
        if len(s) > 1:
            rows = [[v[i] - s[0][i] for i in range(len(s[0]))] for v in s[1:]]
            if integer_rank(rows) != len(s) - 1:
                return False, {
                    "kind": "affinely-dependent",
                    "simplex": [list(v) for v in s],
                }
    for s in simplices:
        for size in range(1, len(s)):
            for face in itertools.combinations(s, size):
                if face not in sset:
                    return False, {
                        "kind": "missing-face",
                        "simplex": [list(v) for v in s],
                        "face": [list(v) for v in face],
                    }
    boxes = {s: _bbox2(s) for s in simplices}
    for i, s in enumerate(simplices):
        for t in simplices[i + 1 :]:
            if not _bboxes_overlap(boxes[s], boxes[t]):
                continue
            if open_simplices_intersect(s, t):
                return False, {
                    "kind": "open-intersection",
                    "simplex": [list(v) for v in s],
                    "other": [list(v) for v in t],
                }
    return True, None


def lattice_correspondence(k: SimplicialComplex, m: Iterable[Point]) -> tuple[bool, Optional[dict]]:
    """The lattice points of the realization are exactly the foreground.

    Checks that lattice vertices equal the set and that no simplex of
    dimension >= 1 passes through any other lattice point.
    """
    mset = frozenset(m)
    if set(k.lattice_vertices()) != mset:
        return False, {
            "kind": "lattice-vertex-mismatch",
            "vertices": [list(v) for v in k.lattice_vertices()],
        }
    for s in sorted(k.simplices):
        if len(s) < 2:
            continue
        lo, hi = _bbox2(s)
        ranges = [
            range((l + 1) // 2, h // 2 + 1) for l, h in zip(lo, hi)
        ]  # lattice points inside the doubled box
        for p in itertools.product(*ranges):
            h = double(p)
            if h in s:
                continue
            if point_in_closed_simplex(s, [Fraction(c) for c in h]):
                return False, {
                    "kind": "lattice-point-inside-simplex",
                    "simplex": [list(v) for v in s],
                    "point": list(p),
                }
    return True, None


def realization_chambers(k: SimplicialComplex, region: Region) -> int:
    """Chambers of the complement of the realization on the half-step grid.

    A grid point of step one half is blocked when it lies on some closed
    simplex; chambers are the axis-connected components of the unblocked
    points.  Any half-step crossing of the realization passes exactly
    through a blocked point, so the count matches the complement's
    chambers.  Exact arithmetic throughout.
    """
    simplices = sorted(k.simplices)
    boxes = [_bbox2(s) for s in simplices]
    n = region.n
    lo2 = [2 * c for c in region.lo]
    hi2 = [2 * c for c in region.hi]

    free: set[tuple[int, ...]] = set()
    for x2 in itertools.product(*(range(a, b + 1) for a, b in zip(lo2, hi2))):
        blocked = False
        for s, (lo, hi) in zip(simplices, boxes):
            if all(l <= c <= h for l, c, h in zip(lo, x2, hi)):
                if point_in_closed_simplex(s, [Fraction(c) for c in x2]):
                    blocked = True
                    break
        if not blocked:
            free.add(x2)
    seen: set[tuple[int, ...]] = set()
    chambers = 0
    for cell in sorted(free):
        if cell in seen:
            continue
        chambers += 1
        stack = [cell]
        seen.add(cell)
        while stack:
            cur = stack.pop()
            for axis in range(n):
                for delta in (-1, 1):
                    nxt = tuple(
                        c + (delta if i == axis else 0) for i, c in enumerate(cur)
                    )
                    if nxt in free and nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
    return chambers


def complex_to_json(k: SimplicialComplex) -> dict:
    """Stable JSON form: doubled-integer vertices, index lists, provenance."""
    vertices = k.vertices()
    index = {v: i for i, v in enumerate(vertices)}
    simplices = sorted(sorted(index[v] for v in s) for s in k.simplices)
    provenance = {
        str(index[c]): {"base": list(cube.base), "axes": list(cube.axes)}
        for c, cube in sorted(k.provenance.items())
        if c in index
    }
    return {
        "n": k.n,
        "vertices": [list(v) for v in vertices],
        "simplices": simplices,
        "provenance": provenance,
    }


def complex_to_off(k: SimplicialComplex) -> tuple[str, int]:
    """OFF text for the triangles of a three-dimensional complex.

    Returns the file text and the number of 0/1-simplices it omits.
    """
    if k.n != 3:
        raise ValueError("OFF export is defined for three-dimensional complexes only")
    vertices = k.vertices()
    index = {v: i for i, v in enumerate(vertices)}
    triangles = sorted(
        tuple(sorted(index[v] for v in s)) for s in k.simplices if len(s) == 3
    )
    skipped = sum(1 for s in k.simplices if len(s) < 3)
    lines = ["OFF", f"{len(vertices)} {len(triangles)} 0"]
    for v in vertices:
        lines.append(" ".join(f"{c / 2:.1f}" for c in v))
    for t in triangles:
        lines.append("3 " + " ".join(str(i) for i in t))
    return "\n".join(lines) + "\n", skipped
