import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digitop.adjacency import AdjacencyPair, Region, axis_adjacency, full_adjacency
from digitop.jordan import box_surface, rect_boundary
from digitop.lattice import Cube
from digitop.simplicial import (
    SimplicialComplex,
    build_complex,
    build_complex_in_cube,
    complex_to_json,
    complex_to_off,
    euler_characteristic,
    lattice_correspondence,
    realization_chambers,
    reduce_complex,
    reduction_trace,
    skeleton_components,
    barycenter_test,
    verify_complex_axioms,
)

AXIS_FULL_2 = AdjacencyPair(axis_adjacency(2), full_adjacency(2))
FULL_AXIS_2 = AdjacencyPair(full_adjacency(2), axis_adjacency(2))
AXIS_FULL_3 = AdjacencyPair(axis_adjacency(3), full_adjacency(3))

UNIT_SQUARE = Cube((0, 0), (0, 1))
UNIT_EDGE = Cube((0, 0), (0,))


def test_edge_in_foreground_passes():
    assert barycenter_test(UNIT_EDGE, {(0, 0), (1, 0)}, FULL_AXIS_2)
    assert barycenter_test(UNIT_EDGE, {(0, 0), (1, 0)}, AXIS_FULL_2)


def test_square_with_foreground_diagonal_passes_under_full():
    assert barycenter_test(UNIT_SQUARE, {(0, 0), (1, 1)}, FULL_AXIS_2)


def test_empty_square_fails():
    assert not barycenter_test(UNIT_SQUARE, set(), FULL_AXIS_2)
    assert not barycenter_test(UNIT_SQUARE, set(), AXIS_FULL_2)


def test_square_with_background_diagonal_split():
    # foreground diagonal isolates the two background corners from each other
    m = {(0, 0), (1, 1)}
    assert barycenter_test(UNIT_SQUARE, m, FULL_AXIS_2)
    pair = AdjacencyPair(axis_adjacency(2), axis_adjacency(2))
    # under an axis background the white diagonal is split inside the square
    assert barycenter_test(UNIT_SQUARE, m, pair)


def test_square_contained_in_foreground_passes_with_axis_alpha():
    m = {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert barycenter_test(UNIT_SQUARE, m, AXIS_FULL_2)


def test_T_rejects_points():
    with pytest.raises(ValueError):
        barycenter_test(Cube((0, 0), ()), {(0, 0)}, FULL_AXIS_2)


def test_build_in_square_two_points():
    m = {(0, 0), (1, 0)}
    k = build_complex_in_cube(UNIT_SQUARE, m, FULL_AXIS_2)
    verts = {v for s in k.simplices for v in s}
    assert verts == {(0, 0), (2, 0), (1, 0)}  # doubled: two points and the edge center
    assert sum(1 for s in k.simplices if len(s) == 2) == 2
    assert sum(1 for s in k.simplices if len(s) == 3) == 0


def test_build_in_square_three_points_has_triangles():
    m = {(0, 0), (1, 0), (1, 1)}
    k = build_complex_in_cube(UNIT_SQUARE, m, FULL_AXIS_2)
    dims = {d: len(s) for d, s in k.by_dim().items()}
    assert ((1, 1),) in k.simplices  # the square's center joins
    assert dims[2] == 4


def test_build_empty_is_empty():
    assert len(build_complex(set(), FULL_AXIS_2)) == 0


def test_build_single_point():
    k = build_complex({(7, 7)}, FULL_AXIS_2)
    assert set(k.simplices) == {((14, 14),)}


def test_shared_edge_contributed_once():
    m = {(0, 0), (1, 0)}
    k = build_complex(m, FULL_AXIS_2)
    edge_center = ((1, 0),)
    occurrences = [s for s in k.simplices if s == edge_center]
    assert len(occurrences) == 1


def test_reduce_drops_filled_square_center():
    m = {(0, 0), (1, 0), (1, 1)}
    k = build_complex(m, FULL_AXIS_2)
    reduced = reduce_complex(k, m, FULL_AXIS_2)
    assert ((1, 1),) in k.simplices
    assert ((1, 1),) not in reduced.simplices
    assert all(len(s) <= 2 for s in reduced.simplices)
    # the reduction preserves the homotopy surrogates
    assert euler_characteristic(k) == euler_characteristic(reduced) == 1
    assert skeleton_components(k).count == skeleton_components(reduced).count == 1


def test_reduce_keeps_split_squares():
    ring = rect_boundary(5, 5)
    k = build_complex(ring, AXIS_FULL_2)
    reduced = reduce_complex(k, ring, AXIS_FULL_2)
    assert k.simplices == reduced.simplices


def test_reduction_trace_invariant():
    m = {(0, 0), (1, 0), (1, 1)}
    k = build_complex(m, FULL_AXIS_2)
    for record in reduction_trace(k, m, FULL_AXIS_2):
        assert record.barycenter_kept == (record.background_components != 1)


def test_ring_complex_is_a_circle():
    ring = rect_boundary(5, 5)
    k = build_complex(ring, AXIS_FULL_2)
    reduced = reduce_complex(k, ring, AXIS_FULL_2)
    dims = {d: len(s) for d, s in reduced.by_dim().items()}
    assert dims == {0: 32, 1: 32}
    assert euler_characteristic(reduced) == 0


def test_verify_axioms_on_built_complexes():
    for m, pair in [
        (rect_boundary(5, 5), AXIS_FULL_2),
        ({(0, 0), (1, 0), (1, 1)}, FULL_AXIS_2),
    ]:
        k = build_complex(m, pair)
        ok, witness = verify_complex_axioms(k)
        assert ok, witness


def test_verify_axioms_empty():
    ok, _ = verify_complex_axioms(SimplicialComplex(2, frozenset()))
    assert ok


def test_verify_axioms_catches_crossing_edges():
    bad = SimplicialComplex(
        2,
        frozenset(
            [
                ((0, 0),),
                ((2, 2),),
                ((0, 2),),
                ((2, 0),),
                ((0, 0), (2, 2)),
                ((0, 2), (2, 0)),
            ]
        ),
    )
    ok, witness = verify_complex_axioms(bad)
    assert not ok and witness["kind"] == "open-intersection"


def test_verify_axioms_catches_missing_face():
    bad = SimplicialComplex(2, frozenset([((0, 0), (2, 0))]))
    ok, witness = verify_complex_axioms(bad)
    assert not ok and witness["kind"] == "missing-face"


def test_euler_characteristic_values():
    assert euler_characteristic(build_complex({(0, 0)}, FULL_AXIS_2)) == 1
    ring = rect_boundary(5, 5)
    k = reduce_complex(build_complex(ring, AXIS_FULL_2), ring, AXIS_FULL_2)
    assert euler_characteristic(k) == 0
    box = box_surface(3, 3, 3)
    kb = reduce_complex(build_complex(box, AXIS_FULL_3), box, AXIS_FULL_3)
    assert euler_characteristic(kb) == 2


def test_skeleton_components_counts():
    one = build_complex(rect_boundary(4, 4), AXIS_FULL_2)
    assert skeleton_components(one).count == 1
    two = build_complex({(0, 0), (5, 5)}, AXIS_FULL_2)
    assert skeleton_components(two).count == 2
    assert skeleton_components(SimplicialComplex(2, frozenset())).count == 0


def test_lattice_correspondence_ring():
    ring = rect_boundary(5, 5)
    k = build_complex(ring, AXIS_FULL_2)
    ok, witness = lattice_correspondence(k, ring)
    assert ok, witness


def test_complement_chambers_match_background_components():
    ring = rect_boundary(5, 5)
    k = build_complex(ring, AXIS_FULL_2)
    region = Region.around(ring, 2)
    from digitop.adjacency import complement_components

    expected = complement_components(AXIS_FULL_2.beta, ring, region).count
    assert realization_chambers(k, region) == expected == 2


@given(st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
@settings(max_examples=20, deadline=None)
def test_build_is_translation_equivariant(shift):
    m = {(0, 0), (1, 0), (1, 1)}
    moved = {tuple(a + b for a, b in zip(p, shift)) for p in m}
    base = build_complex(m, FULL_AXIS_2)
    translated = build_complex(moved, FULL_AXIS_2)
    d = tuple(2 * c for c in shift)
    expected = {
        tuple(tuple(a + b for a, b in zip(v, d)) for v in s) for s in base.simplices
    }
    assert translated.simplices == frozenset(expected)


def test_complex_json_shape():
    m = {(0, 0), (1, 0)}
    payload = complex_to_json(build_complex(m, FULL_AXIS_2))
    assert payload["n"] == 2
    assert payload["vertices"] == [[0, 0], [1, 0], [2, 0]]
    assert [0] in payload["simplices"] and [0, 1] in payload["simplices"]
    assert payload["provenance"]["1"] == {"base": [0, 0], "axes": [0]}


def test_off_export():
    box = box_surface(3, 3, 3)
    k = reduce_complex(build_complex(box, AXIS_FULL_3), box, AXIS_FULL_3)
    text, skipped = complex_to_off(k)
    lines = text.splitlines()
    assert lines[0] == "OFF"
    nv, nf, ne = map(int, lines[1].split())
    assert nv == len(k.vertices())
    assert nf == sum(1 for s in k.simplices if len(s) == 3)
    assert skipped == len(k) - nf
    with pytest.raises(ValueError):
        complex_to_off(build_complex({(0, 0)}, FULL_AXIS_2))


def test_no_top_dimension_simplices_in_reduced_corpus():
    ring = rect_boundary(5, 5)
    k2 = reduce_complex(build_complex(ring, AXIS_FULL_2), ring, AXIS_FULL_2)
    assert all(len(s) <= 2 for s in k2.simplices)
    box = box_surface(3, 3, 3)
    k3 = reduce_complex(build_complex(box, AXIS_FULL_3), box, AXIS_FULL_3)
    assert all(len(s) <= 3 for s in k3.simplices)
