import pytest
from hypothesis import given, settings, strategies as st

from knotoids.core import (
    CrossingNode,
    Kind,
    KnotoidDiagram,
    crossing_sign,
    faces,
    mirror,
    reflect,
    validate,
    writhe,
)
from knotoids.corpus import enumerate_diagrams, random_diagram
from knotoids.errors import CrossingKindError, InvalidDiagramError

X = Kind.CLASSICAL


def kink(slots=(0, 1, 1, 2), kind=X):
    return KnotoidDiagram("sphere", (CrossingNode(kind, slots),), 3)


def codes(v):
    return {x.code for x in validate(v).violations}


def test_trivial_is_valid_with_one_face():
    d = KnotoidDiagram.trivial()
    assert validate(d).ok
    assert len(faces(d)) == 1
    assert d.leg_face == d.head_face


def test_edge_used_three_times():
    d = KnotoidDiagram("sphere", (CrossingNode(X, (0, 1, 1, 2)), CrossingNode(X, (1, 3, 2, 4))), 5)
    assert "edge multiplicity" in codes(d)


def test_slot_invariants_are_enforced():
    assert "strand" in codes(kink((0, 1, 2, 1)))
    assert "edge count" in codes(KnotoidDiagram("sphere", (CrossingNode(X, (0, 1, 1, 2)),), 5))
    assert "edge range" in codes(kink((0, 1, 1, 7)))


def test_singular_slot_zero_must_be_first_pass():
    assert validate(kink((0, 1, 1, 2), Kind.SINGULAR)).ok
    # the slot-0 strand is the second pass here
    assert "first pass" in codes(kink((1, 1, 2, 0), Kind.SINGULAR))
    assert validate(kink((1, 1, 2, 0), Kind.CLASSICAL)).ok


def test_nonplanar_gauss_code_is_rejected():
    # passes 0 1 0 1 with equal rotations cannot be drawn in the sphere
    from knotoids.core import GaussCode
    g = GaussCode((0, 1, 0, 1), (X, X), (False, False), (1, 1))
    d = KnotoidDiagram.from_gauss(g)
    assert "planarity" in codes(d)
    with pytest.raises(InvalidDiagramError):
        faces(d)


def test_plane_surface_needs_outer_face():
    assert "outer face" in codes(KnotoidDiagram("plane", (), 1, None))
    assert "outer face" in codes(KnotoidDiagram("plane", (), 1, 3))
    assert validate(KnotoidDiagram.trivial("plane")).ok


def test_kink_faces_and_sign():
    d = kink()
    assert len(faces(d)) == 2
    assert crossing_sign(d, 0) == -1
    assert crossing_sign(mirror(d), 0) == 1


def test_example_faces(affine_example, bracket_example):
    assert len(faces(affine_example)) == 5
    assert writhe(bracket_example) == -2
    assert [crossing_sign(bracket_example, c) for c in range(2)] == [-1, -1]


def test_every_dart_in_exactly_one_face(affine_example):
    seen = [inc for f in faces(affine_example) for inc in f.boundary]
    assert len(seen) == len(set(seen)) == 2 * affine_example.edge_count


def test_writhe_refuses_singular():
    with pytest.raises(CrossingKindError):
        writhe(kink(kind=Kind.SINGULAR))
    with pytest.raises(CrossingKindError):
        crossing_sign(kink(kind=Kind.SINGULAR), 0)


def test_mirror_examples(bracket_example):
    t = KnotoidDiagram.trivial()
    assert mirror(t) == t
    assert writhe(mirror(bracket_example)) == 2


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_enumerated_diagrams_satisfy_euler(n):
    for d in enumerate_diagrams(n):
        assert validate(d).ok
        assert len(d.face_list) == n + 1
        assert (n + 2) - d.edge_count + len(d.face_list) == 2


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.integers(0, 10**6))
def test_random_diagram_properties(n, seed):
    d = random_diagram(n, seed)
    assert validate(d).ok
    assert len(d.face_list) == n + 1
    m = mirror(d)
    assert mirror(m) == d
    assert all(crossing_sign(m, c) == -crossing_sign(d, c) for c in range(n))
    assert writhe(m) == -writhe(d)
    r = reflect(d)
    assert validate(r).ok and reflect(r) == d


def test_traversal_reaches_head_after_all_edges():
    d = random_diagram(7, 5)
    g = d.gauss
    assert len(g.passes) == d.edge_count - 1
    assert sorted(g.passes) == sorted(list(range(d.n)) * 2)
