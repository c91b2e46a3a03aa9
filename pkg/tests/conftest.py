from pathlib import Path

import pytest

from knotoids.codec import parse_ktd

DATA = Path(__file__).parent / "data"


def load(name: str):
    return parse_ktd((DATA / name).read_text())


@pytest.fixture
def bracket_example():
    return load("two_crossing_bracket.ktd")


@pytest.fixture
def affine_example():
    return load("affine_weights_four_crossing.ktd")


@pytest.fixture
def double_closure_example():
    return load("height_two_two_closures.ktd")
