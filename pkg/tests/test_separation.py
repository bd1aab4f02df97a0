import pytest

from digitop.adjacency import AdjacencyPair, axis_adjacency, full_adjacency
from digitop.jordan import rect_boundary
from digitop.lattice import Cube
from digitop.separation import (
    beta_neighbor_lower_bound,
    component_count_bounds_hold,
    has_separation_property,
    not_separated_in_cube,
    replay_separation_witness,
)

FULL_AXIS_3 = AdjacencyPair(full_adjacency(3), axis_adjacency(3))
AXIS_FULL_3 = AdjacencyPair(axis_adjacency(3), full_adjacency(3))

# four foreground points forming a diagonal plate through a unit cube;
# the two white edge pairs are globally connected around the outside
PLATE = frozenset({(0, 0, 0), (1, 0, 0), (0, 1, 1), (1, 1, 1)})
UNIT_CUBE = Cube((0, 0, 0), (0, 1, 2))


def test_empty_intersection_holds_vacuously():
    verdict = not_separated_in_cube(frozenset(), UNIT_CUBE, FULL_AXIS_3)
    assert verdict.holds and verdict.witness is None


def test_diagonal_plate_splits_its_complement():
    verdict = not_separated_in_cube(PLATE, UNIT_CUBE, FULL_AXIS_3)
    assert not verdict.holds
    w = verdict.witness
    assert w is not None and w.cube == UNIT_CUBE
    # the witness replays to a violation
    assert replay_separation_witness(w, PLATE, FULL_AXIS_3)


def test_full_bottom_face_is_not_a_separation():
    face = frozenset({(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)})
    verdict = not_separated_in_cube(face, UNIT_CUBE, FULL_AXIS_3)
    assert verdict.holds


def test_dimension_range_enforced():
    with pytest.raises(ValueError):
        not_separated_in_cube(PLATE, Cube((0, 0, 0), (0,)), FULL_AXIS_3)


def test_single_point_has_separation_property():
    verdict = has_separation_property({(0, 0)}, AdjacencyPair(full_adjacency(2), axis_adjacency(2)))
    assert verdict.holds


def test_square_ring_has_separation_property():
    ring = rect_boundary(4, 4)
    pair = AdjacencyPair(full_adjacency(2), axis_adjacency(2))
    assert has_separation_property(ring, pair).holds


def test_plate_configuration_fails_globally():
    verdict = has_separation_property(PLATE, FULL_AXIS_3)
    assert not verdict.holds
    assert verdict.witness is not None
    assert replay_separation_witness(verdict.witness, PLATE, FULL_AXIS_3)
    # the enclosing unit cube is itself a violating cube
    assert not not_separated_in_cube(PLATE, UNIT_CUBE, FULL_AXIS_3).holds


def test_separation_is_translation_invariant():
    shift = (3, -2, 5)
    moved = frozenset(tuple(a + b for a, b in zip(p, shift)) for p in PLATE)
    assert not has_separation_property(moved, FULL_AXIS_3).holds


def test_separation_is_permutation_invariant():
    swapped = frozenset((z, y, x) for x, y, z in PLATE)
    assert not has_separation_property(swapped, FULL_AXIS_3).holds


@pytest.mark.parametrize(
    "k,l,expected",
    [
        (3, 1, 3),
        (2, 2, 2),
        (2, 4, 0),
        (4, 1, 4),
        (3, 2, 4),
    ],
)
def test_beta_neighbor_lower_bound(k, l, expected):
    assert beta_neighbor_lower_bound(k, l) == expected


def test_beta_neighbor_lower_bound_rejects_bad_sizes():
    with pytest.raises(ValueError):
        beta_neighbor_lower_bound(2, 5)
    with pytest.raises(ValueError):
        beta_neighbor_lower_bound(2, 0)


def test_component_count_bounds_diagonal_square():
    pair = AdjacencyPair(full_adjacency(2), axis_adjacency(2))
    square = Cube((0, 0), (0, 1))
    assert component_count_bounds_hold({(0, 0), (1, 1)}, square, pair)


def test_component_count_bounds_antipodal_cube():
    pair = AdjacencyPair(full_adjacency(3), axis_adjacency(3))
    cube = Cube((0, 0, 0), (0, 1, 2))
    m = set(cube.vertices()) - {(0, 0, 0), (1, 1, 1)}
    assert component_count_bounds_hold(m, cube, pair)


def test_component_count_bounds_precondition():
    pair = AdjacencyPair(full_adjacency(2), axis_adjacency(2))
    square = Cube((0, 0), (0, 1))
    with pytest.raises(ValueError):
        component_count_bounds_hold(set(), square, pair)


def test_subcube_components_never_split_across_dimensions():
    # no background component of a cube may hold two components of a subcube
    ring = rect_boundary(5, 5)
    pair = AdjacencyPair(axis_adjacency(2), full_adjacency(2))
    assert has_separation_property(ring, pair).holds
    from digitop.adjacency import components
    from digitop.lattice import cube_vertices, cubes_meeting_box, subcubes

    for c in cubes_meeting_box((0, 0), (4, 4), 2, 2):
        free = [v for v in cube_vertices(c) if v not in ring]
        outer = components(pair.beta, free)
        for sub in subcubes(c, 1):
            sub_free = [v for v in cube_vertices(sub) if v not in ring]
            inner = components(pair.beta, sub_free)
            for outer_id in set(outer.labels.values()):
                inner_ids = {
                    inner.labels[p] for p in sub_free if outer.labels[p] == outer_id
                }
                assert len(inner_ids) <= 1


def test_worker_cap_env_var_gives_same_results(monkeypatch):
    ring = rect_boundary(5, 5)
    pair = AdjacencyPair(axis_adjacency(2), full_adjacency(2))
    sequential = has_separation_property(ring, pair)
    monkeypatch.setenv("DIGITOP_THREADS", "4")
    threaded = has_separation_property(ring, pair)
    assert sequential.holds == threaded.holds
    bad = has_separation_property(PLATE, FULL_AXIS_3)
    monkeypatch.setenv("DIGITOP_THREADS", "1")
    assert bad.witness == has_separation_property(PLATE, FULL_AXIS_3).witness
