import pytest

from knotoids.chord import (
    ChordDiagram1,
    chord_multiply,
    chord_of_singular,
    regular_diagram,
    singular_height,
    surgery,
    winding_of_loop,
)
from knotoids.closure import dual_paths, height_of_diagram
from knotoids.codec import parse_ktd
from knotoids.core import Kind, validate
from knotoids.corpus import random_diagram, random_singular
from knotoids.errors import CrossingKindError
from knotoids.moves import is_descending, nodify, random_walk


def test_nodified_kink_has_winding_zero():
    d = nodify(parse_ktd("knotoid sphere\nX 0 1 1 2\n"), 0)
    assert winding_of_loop(d, 0) == 0
    assert chord_of_singular(d) == ChordDiagram1(0)


@pytest.mark.parametrize("w", range(-6, 7))
def test_regular_diagrams(w):
    d = regular_diagram(w)
    assert validate(d).ok
    assert d.count(Kind.CLASSICAL) == max(2 * abs(w) - 1, 0)
    assert d.count(Kind.SINGULAR) == 1
    assert d.gauss.passes[0] == 0  # singular crossing next to the leg
    assert is_descending(d)
    assert chord_of_singular(d).w == w
    assert height_of_diagram(d) == abs(w)


@pytest.mark.parametrize("w", range(-4, 5))
def test_surgery_round_trip(w):
    d = surgery(ChordDiagram1(w))
    assert validate(d).ok
    assert chord_of_singular(d).w == w


def test_surgery_zero_is_singular_kink():
    d = surgery(ChordDiagram1(0))
    assert d.n == 1 and d.gauss.kinds == (Kind.SINGULAR,)


def test_knot_type_singular_diagram_has_zero_winding():
    # a nodified crossing of a height-0 diagram: the loop cannot separate leg and head
    for seed in range(40):
        d = random_singular(5, 1, seed)
        if height_of_diagram(d) == 0:
            assert chord_of_singular(d).w == 0


@pytest.mark.parametrize("seed", range(8))
def test_winding_independent_of_dual_path(seed):
    d = random_singular(6, 1, seed)
    (s,) = [c for c, k in enumerate(d.gauss.kinds) if k is Kind.SINGULAR]
    values = {winding_of_loop(d, s, p) for p in dual_paths(d, max_length=6)}
    assert len(values) == 1


@pytest.mark.parametrize("seed", range(10))
def test_chord_constant_under_moves_and_switches(seed):
    d = random_singular(5, 1, seed)
    c = chord_of_singular(d)
    e = random_walk(d, 500, seed, max_crossings=10, switches=True)
    assert chord_of_singular(e) == c


def test_group_law_and_height():
    a = ChordDiagram1
    assert chord_multiply(a(1), a(-1)) == a(0)
    assert chord_multiply(a(0), a(5)) == a(5)
    assert chord_multiply(a(2), a(3)) == a(5)
    assert [singular_height(a(w)) for w in (0, 3, -2)] == [0, 3, 2]


def test_chord_needs_one_singular_crossing():
    with pytest.raises(CrossingKindError):
        chord_of_singular(random_diagram(3, 0))
