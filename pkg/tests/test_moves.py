import pytest
from hypothesis import given, settings, strategies as st

from knotoids.codec import parse_ktd
from knotoids.core import Kind, KnotoidDiagram, crossing_sign, validate, writhe
from knotoids.corpus import random_diagram, random_singular
from knotoids.errors import CrossingKindError, InapplicableMoveError
from knotoids.invariants import (
    affine_index_polynomial,
    kauffman_bracket,
    normalized_bracket,
    skein_extend,
    turaev_extended_bracket,
    vbar,
)
from knotoids.poly import LaurentPoly1
from knotoids.moves import (
    MoveSite,
    addition_sites,
    apply_move,
    enumerate_move_sites,
    is_descending,
    make_descending,
    nodify,
    random_walk,
    resolve,
    switch_crossing,
    walk,
)

KINK = "knotoid sphere\nX 0 1 1 2\n"


def kinds_of(sites):
    return {s.kind for s in sites}


def test_trivial_has_only_additions():
    assert kinds_of(enumerate_move_sites(KnotoidDiagram.trivial())) <= {"R1+", "R2+"}


def test_kink_removal():
    d = parse_ktd(KINK)
    sites = [s for s in enumerate_move_sites(d) if s.kind == "R1-"]
    assert sites == [MoveSite("R1-", (1,))]
    assert apply_move(d, sites[0]) == KnotoidDiagram.trivial()


def test_r1_addition_signs():
    t = KnotoidDiagram.trivial()
    for side in (1, -1):
        for sign in (1, -1):
            k = apply_move(t, MoveSite("R1+", (0, side), (sign,)))
            assert crossing_sign(k, 0) == sign
            assert kauffman_bracket(k) == LaurentPoly1.monomial(3 * sign, -1)


def test_no_removal_sites_on_affine_example(affine_example):
    # one triangle face whose over/under pattern is cyclic, one twisted bigon
    assert kinds_of(enumerate_move_sites(affine_example, additions=False)) == set()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 10**6), st.data())
def test_r2_add_then_remove_is_identity(n, seed, data):
    d = random_diagram(n, seed)
    sites = addition_sites(d, ("R2+",))
    if not sites:
        return
    s = data.draw(st.sampled_from(sites))
    e = apply_move(d, s)
    assert validate(e).ok and e.n == n + 2
    removals = [r for r in enumerate_move_sites(e, additions=False) if r.kind == "R2-"]
    assert any(apply_move(e, r) == d for r in removals)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 10**6), st.data())
def test_r1_add_then_remove_is_identity(n, seed, data):
    d = random_diagram(n, seed)
    s = data.draw(st.sampled_from(addition_sites(d, ("R1+",))))
    e = apply_move(d, s)
    assert any(apply_move(e, r) == d for r in enumerate_move_sites(e, False) if r.kind == "R1-")


def test_r3_twice_is_identity():
    found = 0
    for seed in range(200):
        d = random_walk(random_diagram(5, seed), 20, seed, max_crossings=8)
        for s in enumerate_move_sites(d, additions=False):
            if s.kind != "R3":
                continue
            e = apply_move(d, s)
            back = [r for r in enumerate_move_sites(e, False) if r.kind == "R3" and apply_move(e, r) == d]
            assert back
            found += 1
    assert found > 10


def test_stale_sites_raise():
    d = parse_ktd(KINK)
    with pytest.raises(InapplicableMoveError):
        apply_move(d, MoveSite("R1-", (0,)))
    with pytest.raises(InapplicableMoveError):
        apply_move(d, MoveSite("R2-", (1, 2)))
    with pytest.raises(InapplicableMoveError):
        apply_move(d, MoveSite("R2+", (7, 0, 1), (0, 1, 1, 1, True)))
    with pytest.raises(InapplicableMoveError):
        apply_move(d, MoveSite("teleport", ()))


def test_switch_crossing():
    d = parse_ktd(KINK)
    s = switch_crossing(d, 0)
    assert crossing_sign(s, 0) == -crossing_sign(d, 0)
    assert switch_crossing(s, 0) == d
    assert writhe(s) - writhe(d) == 2
    with pytest.raises(CrossingKindError):
        switch_crossing(nodify(d, 0), 0)


def test_nodify_and_resolve():
    pos = switch_crossing(parse_ktd(KINK), 0)
    node = nodify(pos, 0)
    assert node.gauss.kinds == (Kind.SINGULAR,)
    assert resolve(node, 0, 1) == pos
    assert crossing_sign(resolve(node, 0, -1), 0) == -1
    assert node.face_list == pos.face_list
    with pytest.raises(CrossingKindError):
        resolve(pos, 0, 1)
    with pytest.raises(CrossingKindError):
        nodify(node, 0)


def test_resolve_nodify_round_trip(bracket_example):
    for c in range(bracket_example.n):
        sgn = crossing_sign(bracket_example, c)
        assert resolve(nodify(bracket_example, c), c, sgn) == bracket_example


def test_make_descending():
    d = parse_ktd(KINK)  # negative kink met as under first
    out, rec = make_descending(d)
    assert is_descending(out)
    assert [(c, s) for c, s, _ in rec] == [(0, -1)]
    assert rec.entries[0][2].gauss.kinds == (Kind.SINGULAR,)
    again, rec2 = make_descending(out)
    assert again == out and len(rec2) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10), st.integers(0, 10**6))
def test_make_descending_replay(n, seed):
    d = random_diagram(n, seed)
    out, rec = make_descending(d)
    assert is_descending(out)
    cur = d
    for c, sgn, snap in rec:
        assert crossing_sign(cur, c) == sgn
        assert snap == nodify(cur, c)
        cur = switch_crossing(cur, c)
    assert cur == out


def test_random_walk_determinism():
    d = random_diagram(4, 1)
    assert random_walk(d, 0, 5) == d
    assert random_walk(d, 50, 5) == random_walk(d, 50, 5)


def test_walk_respects_crossing_cap():
    d = random_diagram(3, 2)
    for _, _, after in walk(d, 300, 9, max_crossings=6):
        assert after.n <= 6


def test_walk_preserves_invariants_and_bracket_units():
    d = random_diagram(5, 11)
    ref = (normalized_bracket(d), turaev_extended_bracket(d), affine_index_polynomial(d), vbar(d))
    for site, before, after in walk(d, 150, 11, max_crossings=9):
        assert validate(after).ok
        ratio = [LaurentPoly1.monomial(3 * s, -1) for s in (1, -1)]
        if site.kind in ("R1+", "R1-"):
            assert any(kauffman_bracket(after) == kauffman_bracket(before) * r for r in ratio)
        elif site.kind in ("R2+", "R2-", "R3"):
            assert kauffman_bracket(after) == kauffman_bracket(before)
    assert (normalized_bracket(after), turaev_extended_bracket(after),
            affine_index_polynomial(after), vbar(after)) == ref


@pytest.mark.parametrize("seed", range(6))
def test_singular_moves_preserve_skein_values(seed):
    d = random_singular(5, 1, seed)
    invs = (normalized_bracket, affine_index_polynomial, vbar)
    ref = [skein_extend(i, d) for i in invs]
    seen = set()
    for site, before, after in walk(d, 200, seed, max_crossings=9):
        seen.add(site.kind)
        if site.kind in ("flip", "R3"):
            assert [skein_extend(i, after) for i in invs] == ref
    assert [skein_extend(i, after) for i in invs] == ref


@pytest.mark.parametrize("seed", range(6))
def test_plane_walk_stays_valid(seed):
    d = random_diagram(4, seed)
    plane = KnotoidDiagram.from_gauss(d.gauss, "plane", d.face_list[-1].id)
    for _, _, after in walk(plane, 200, seed, max_crossings=9):
        assert validate(after).ok
        assert after.surface == "plane"
    assert affine_index_polynomial(after) == affine_index_polynomial(plane)
    assert normalized_bracket(after) == normalized_bracket(plane)


def test_plane_outer_face_tracks_through_kink_moves():
    t = KnotoidDiagram.trivial("plane")
    k = apply_move(t, MoveSite("R1+", (0, 1), (1,)))
    # the monogon is not the outer face
    assert len(k.face_list[k.outer_face].boundary) > 1
    assert apply_move(k, MoveSite("R1-", (1,))) == t


@pytest.mark.parametrize("seed", range(8))
def test_plane_inverse_moves_restore_outer_face(seed):
    d = random_walk(random_diagram(4, seed), 30, seed, max_crossings=8)
    for outer in range(len(d.face_list)):
        plane = KnotoidDiagram.from_gauss(d.gauss, "plane", outer)
        for s in addition_sites(plane)[::7]:
            e = apply_move(plane, s)
            inverse = [r for r in enumerate_move_sites(e, False) if r.kind in ("R1-", "R2-")]
            back = [apply_move(e, r) for r in inverse]
            back = [b for b in back if b.gauss == plane.gauss]
            assert back and all(b.outer_face == outer for b in back)
        for s in enumerate_move_sites(plane, False):
            if s.kind == "R3":
                e = apply_move(plane, s)
                back = [apply_move(e, r) for r in enumerate_move_sites(e, False) if r.kind == "R3"]
                assert plane in back
