"""Adjacency relations on Z^n and connectivity machinery.

An adjacency is a translation-invariant, symmetric, finitary relation given
by its offset set.  Every relation considered here is sandwiched between the
axis relation (2n neighbors) and the full relation (3^n - 1 neighbors).
Pairs (alpha, beta) carry alpha as the foreground relation and beta as the
background relation.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Literal, Mapping, Sequence

from .lattice import Point, Translation, bounding_box, vec_add

Path = Sequence[Point]


def _axis_offsets(n: int) -> frozenset[Translation]:
    out = set()
    for i in range(n):
        for s in (1, -1):
            v = [0] * n
            v[i] = s
            out.add(tuple(v))
    return frozenset(out)


def _full_offsets(n: int) -> frozenset[Translation]:
    return frozenset(v for v in itertools.product((-1, 0, 1), repeat=n) if any(v))


@dataclass(frozen=True)
class AdjacencySpec:
    """A symmetric offset set defining a translation-invariant adjacency."""

    n: int
    offsets: frozenset[Translation]
    label: str = field(default="custom", compare=False)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("dimension must be at least 2")
        axis = _axis_offsets(self.n)
        full = _full_offsets(self.n)
        for v in self.offsets:
            if len(v) != self.n:
                raise ValueError(f"offset {v} has wrong dimension (expected {self.n})")
            if tuple(-c for c in v) not in self.offsets:
                raise ValueError(f"offset set is not symmetric: missing {tuple(-c for c in v)}")
        if not axis <= self.offsets:
            raise ValueError("offset set must contain all axis unit offsets")
        if not self.offsets <= full:
            raise ValueError("offset set must be contained in the full (king-move) offsets")

    @property
    def sorted_offsets(self) -> tuple[Translation, ...]:
        return tuple(sorted(self.offsets))

    def adjacent(self, p: Point, q: Point) -> bool:
        return tuple(a - b for a, b in zip(q, p)) in self.offsets


@lru_cache(maxsize=None)
def axis_adjacency(n: int) -> AdjacencySpec:
    """The 2n-neighbor relation generated by the unit translations."""
    return AdjacencySpec(n, _axis_offsets(n), label="axis")


@lru_cache(maxsize=None)
def full_adjacency(n: int) -> AdjacencySpec:
    """The (3^n - 1)-neighbor king-move relation."""
    return AdjacencySpec(n, _full_offsets(n), label="full")


def custom_adjacency(n: int, offsets: Iterable[Translation]) -> AdjacencySpec:
    return AdjacencySpec(n, frozenset(tuple(v) for v in offsets))


@dataclass(frozen=True)
class AdjacencyPair:
    """Foreground relation alpha, background relation beta."""

    alpha: AdjacencySpec
    beta: AdjacencySpec

    def __post_init__(self) -> None:
        if self.alpha.n != self.beta.n:
            raise ValueError("alpha and beta must share one dimension")

    @property
    def n(self) -> int:
        return self.alpha.n


@dataclass(frozen=True)
class Region:
    """Axis-aligned box lo..hi (inclusive), the finite analysis window."""

    lo: Point
    hi: Point

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi) or any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError(f"degenerate region {self.lo}..{self.hi}")

    @property
    def n(self) -> int:
        return len(self.lo)

    def contains(self, p: Point) -> bool:
        return all(a <= c <= b for a, c, b in zip(self.lo, p, self.hi))

    def strictly_contains(self, p: Point, margin: int = 1) -> bool:
        return all(a + margin <= c <= b - margin for a, c, b in zip(self.lo, p, self.hi))

    def on_boundary(self, p: Point) -> bool:
        return self.contains(p) and any(
            c == a or c == b for a, c, b in zip(self.lo, p, self.hi)
        )

    def points(self) -> Iterator[Point]:
        yield from itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def dilate(self, k: int) -> "Region":
        return Region(tuple(a - k for a in self.lo), tuple(b + k for b in self.hi))

    @staticmethod
    def around(points: Iterable[Point], margin: int = 2) -> "Region":
        lo, hi = bounding_box(points)
        return Region(lo, hi).dilate(margin)


@dataclass(frozen=True)
class ComponentLabeling:
    """Partition of a point set into connected components.

    Each point maps to its component id, the lexicographically smallest
    member.  Ids in ``infinite_ids`` belong to components that touch the
    analysis-region boundary and therefore stand in for the one infinite
    component of the complement.
    """

    labels: Mapping[Point, Point]
    infinite_ids: frozenset[Point] = frozenset()

    @property
    def count(self) -> int:
        return len(set(self.labels.values()))

    def id_of(self, p: Point) -> Point:
        return self.labels[p]

    def same_component(self, p: Point, q: Point) -> bool:
        return self.labels[p] == self.labels[q]

    def components(self) -> dict[Point, frozenset[Point]]:
        acc: dict[Point, set[Point]] = {}
        for p, cid in self.labels.items():
            acc.setdefault(cid, set()).add(p)
        return {cid: frozenset(pts) for cid, pts in sorted(acc.items())}


def neighbors(spec: AdjacencySpec, p: Point) -> set[Point]:
    """The neighborhood {p + v : v in offsets}."""
    if len(p) != spec.n:
        raise ValueError(f"point {p} has wrong dimension (expected {spec.n})")
    return {vec_add(p, v) for v in spec.offsets}


def components(spec: AdjacencySpec, points: Iterable[Point]) -> ComponentLabeling:
    """Exact connected components of a finite set under the adjacency."""
    todo = set(points)
    labels: dict[Point, Point] = {}
    for start in sorted(todo):
        if start in labels:
            continue
        comp = {start}
        stack = [start]
        while stack:
            p = stack.pop()
            for v in spec.sorted_offsets:
                q = vec_add(p, v)
                if q in todo and q not in comp:
                    comp.add(q)
                    stack.append(q)
        cid = min(comp)
        for p in comp:
            labels[p] = cid
    return ComponentLabeling(labels)


def complement_components(
    spec: AdjacencySpec, m: Iterable[Point], region: Region
) -> ComponentLabeling:
    """Components of region \\ m, with boundary-touching components merged.

    Components containing a point on the topological boundary of the region
    are all part of the one infinite component of the full complement, so
    they are merged under one id and flagged.  Requires every point of m to
    sit at least one step inside the region.
    """
    mset = set(m)
    for p in mset:
        if not region.strictly_contains(p, 1):
            raise ValueError(f"region too small: {p} touches the margin zone")
    free = {p for p in region.points() if p not in mset}
    labeling = components(spec, free)
    comps = labeling.components()
    infinite = sorted(
        cid for cid, pts in comps.items() if any(region.on_boundary(p) for p in pts)
    )
    if not infinite:
        return ComponentLabeling(dict(labeling.labels), frozenset())
    merged_id = infinite[0]
    merged = set(infinite)
    labels = {
        p: (merged_id if cid in merged else cid) for p, cid in labeling.labels.items()
    }
    return ComponentLabeling(labels, frozenset({merged_id}))


def is_path(spec: AdjacencySpec, seq: Path) -> bool:
    """True iff consecutive members are adjacent (single points count)."""
    return all(spec.adjacent(p, q) for p, q in zip(seq, seq[1:]))


def elementary_equivalent(w: Path, w_other: Path, bound: int) -> bool:
    """Single bounded middle-run replacement between two paths.

    True iff the paths decompose as common prefix + middle + common suffix
    where the two middles have lengths k and n with 1 <= k + n <= bound + 2.
    Both inputs are assumed to be valid paths under one adjacency.
    """
    a, b = list(w), list(w_other)
    la, lb = len(a), len(b)
    for p in range(min(la, lb) + 1):
        if p > 0 and a[p - 1] != b[p - 1]:
            break
        for s in range(min(la, lb) - p + 1):
            if s > 0 and a[la - s] != b[lb - s]:
                continue
            k, n = la - p - s, lb - p - s
            if 1 <= k + n <= bound + 2:
                return True
    return False


def _bounded_paths(
    spec: AdjacencySpec,
    allowed: frozenset[Point],
    first: tuple[str, Point] | None,
    last_adjacent_to: Point | None,
    max_len: int,
) -> Iterator[tuple[Point, ...]]:
    """Nonempty point sequences inside ``allowed`` usable as a replacement run."""

    def starts() -> Iterator[Point]:
        if first is None:
            yield from sorted(allowed)
        elif first[0] == "eq":
            if first[1] in allowed:
                yield first[1]
        else:
            for q in sorted(neighbors(spec, first[1]) & allowed):
                yield q

    def extend(prefix: tuple[Point, ...]) -> Iterator[tuple[Point, ...]]:
        if last_adjacent_to is None or spec.adjacent(prefix[-1], last_adjacent_to):
            yield prefix
        if len(prefix) < max_len:
            for q in sorted(neighbors(spec, prefix[-1]) & allowed):
                yield from extend(prefix + (q,))

    if max_len >= 1:
        for s in starts():
            yield from extend((s,))


def _cycle_rewrites(
    spec: AdjacencySpec,
    allowed: frozenset[Point],
    w: tuple[Point, ...],
    bound: int,
    max_len: int,
) -> Iterator[tuple[Point, ...]]:
    length = len(w)
    for i in range(length + 1):
        for j in range(i, length + 1):
            k = j - i
            nmax = bound + 2 - k
            if nmax < 0:
                continue
            nmax = min(nmax, max_len - (length - k))
            before = w[i - 1] if i > 0 else None
            after = w[j] if j < length else None
            # empty replacement: the kept pieces must join up directly
            if k >= 1 and (
                before is None
                or after is None
                or spec.adjacent(before, after)
            ):
                w2 = w[:i] + w[j:]
                if w2 and (len(w2) == 1 or w2[0] == w2[-1]):
                    yield w2
            if before is not None:
                first = ("adj", before)
            elif after is not None:
                # replacement includes the basepoint: pin it to keep a cycle
                first = ("eq", w[0])
            else:
                first = None
            for run in _bounded_paths(spec, allowed, first, after, max(nmax, 0)):
                if k + len(run) < 1 or k + len(run) > bound + 2:
                    continue
                w2 = w[:i] + run + w[j:]
                if not w2 or len(w2) > max_len:
                    continue
                if len(w2) > 1 and w2[0] != w2[-1]:
                    continue
                yield w2


def _contract_cycle(
    spec: AdjacencySpec,
    allowed: frozenset[Point],
    cycle: Sequence[Point],
    bound: int,
    budget: int,
) -> bool:
    start = tuple(cycle)
    if len(start) <= 1:
        return True
    max_len = len(start) + bound + 2
    seen = {start}
    counter = itertools.count()
    heap: list[tuple[int, int, tuple[Point, ...]]] = [(len(start), next(counter), start)]
    pushes = 0
    while heap:
        _, _, w = heapq.heappop(heap)
        for w2 in _cycle_rewrites(spec, allowed, w, bound, max_len):
            if w2 in seen:
                continue
            seen.add(w2)
            if len(w2) == 1:
                return True
            pushes += 1
            if pushes > budget:
                return False
            heapq.heappush(heap, (len(w2), next(counter), w2))
    return False


def n_simply_connected_bounded(
    spec: AdjacencySpec,
    s: Iterable[Point],
    bound: int,
    budget: int = 100_000,
) -> Literal["yes", "unknown"]:
    """Bounded search: does every cycle in s contract to a point?

    The generator cycles are the fundamental cycles of a spanning tree
    rooted at the smallest point; every other cycle reduces to products of
    these by backtrack insertions and deletions, which are themselves legal
    bounded replacements.  Each generator cycle is contracted by best-first
    search over middle-run rewrites; ``budget`` caps the states explored per
    cycle.  Returns "unknown" on budget exhaustion, never "no".
    """
    pts = frozenset(s)
    if not pts:
        return "yes"
    lab = components(spec, pts)
    if lab.count != 1:
        raise ValueError("the set must be connected under the given adjacency")
    root = min(pts)
    parent: dict[Point, Point | None] = {root: None}
    queue = [root]
    while queue:
        p = queue.pop(0)
        for v in spec.sorted_offsets:
            q = vec_add(p, v)
            if q in pts and q not in parent:
                parent[q] = p
                queue.append(q)

    def root_path(p: Point) -> list[Point]:
        out = [p]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])  # type: ignore[arg-type]
        out.reverse()
        return out

    tree_edges = {frozenset((p, q)) for p, q in parent.items() if q is not None}
    non_tree = sorted(
        (p, q)
        for p in pts
        for q in neighbors(spec, p) & pts
        if p < q and frozenset((p, q)) not in tree_edges
    )
    for p, q in non_tree:
        cycle = root_path(p) + list(reversed(root_path(q)))
        if not _contract_cycle(spec, pts, cycle, bound, budget):
            return "unknown"
    return "yes"
