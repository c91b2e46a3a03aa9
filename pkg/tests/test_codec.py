import json

import pytest
from hypothesis import given, settings, strategies as st

from knotoids.codec import coeff_envelope, emit_ktd, parse_ktd, poly_envelope, poly_from_envelope
from knotoids.core import Kind, KnotoidDiagram
from knotoids.corpus import random_diagram
from knotoids.errors import InvalidDiagramError, KtdSyntaxError
from knotoids.invariants import normalized_bracket, turaev_extended_bracket
from knotoids.moves import nodify


def test_trivial_document():
    d = parse_ktd("knotoid sphere\n")
    assert d == KnotoidDiagram.trivial()
    assert emit_ktd(d) == "knotoid sphere\n"


def test_one_kink():
    d = parse_ktd("knotoid sphere\nX 0 1 1 2\n")
    assert d.n == 1 and d.edge_count == 3


def test_inconsistent_kink_code_is_rejected():
    with pytest.raises(InvalidDiagramError):
        parse_ktd("knotoid sphere\nX 0 1 2 1\n")


def test_comments_and_blank_lines():
    d = parse_ktd("# a kink\n\nknotoid sphere   # header\nX 0 1 1 2\n\n")
    assert d.n == 1


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("knotoid sphere\nX 0 1 1\n", 2, 8),
        ("knotoid sphere\nX 0 1 1 2 3\n", 2, 11),
        ("knotoid sphere\nQ 0 1 1 2\n", 2, 1),
        ("knotoid sphere\nX 0 a 1 2\n", 2, 5),
        ("knotoid torus\n", 1, 9),
        ("X 0 1 1 2\n", 1, 1),
        ("", 1, 1),
    ],
)
def test_syntax_errors_are_positioned(text, line, col):
    with pytest.raises(KtdSyntaxError) as err:
        parse_ktd(text)
    assert (err.value.line, err.value.column) == (line, col)


def test_plane_header():
    d = parse_ktd("knotoid plane 1\nX 0 1 1 2\n")
    assert d.surface == "plane" and d.outer_face == 1
    assert emit_ktd(d).startswith("knotoid plane 1\n")


def test_round_trip_example(bracket_example):
    text = emit_ktd(bracket_example)
    assert parse_ktd(text) == bracket_example
    assert emit_ktd(parse_ktd(text)) == text


def test_emit_sorts_by_smallest_edge():
    d = parse_ktd("knotoid sphere\nX 1 3 2 4\nX 2 0 3 1\n")
    assert emit_ktd(d) == "knotoid sphere\nX 2 0 3 1\nX 1 3 2 4\n"


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10**6), st.integers(0, 3))
def test_round_trip_random(n, seed, nodes):
    d = random_diagram(n, seed, kinds=(Kind.CLASSICAL, Kind.VIRTUAL))
    for c in [c for c, k in enumerate(d.gauss.kinds) if k is Kind.CLASSICAL][:nodes]:
        d = nodify(d, c)
    text = emit_ktd(d)
    back = parse_ktd(text)
    assert back == d
    assert back.gauss == d.gauss
    assert emit_ktd(back) == text


def test_json_envelopes(bracket_example):
    env = poly_envelope("f", normalized_bracket(bracket_example))
    assert env == {"invariant": "f", "terms": [[[4], 1], [[6], 1], [[10], -1]]}
    assert poly_from_envelope(json.loads(json.dumps(env))) == normalized_bracket(bracket_example)
    t = turaev_extended_bracket(bracket_example)
    assert poly_from_envelope(poly_envelope("turaev", t)) == t


def test_rational_envelope():
    from fractions import Fraction
    env = coeff_envelope("vcoeff", {(3,): Fraction(1, 6), (2,): Fraction(-24)})
    assert env["terms"] == [[[2], -24], [[3], "1/6"]]
