"""Diagram generators: exhaustive enumeration and seeded random diagrams."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .core import GaussCode, Kind, KnotoidDiagram, _layout, canonical_gauss, classical_crossings
from .moves import nodify


def _pairings(n: int) -> Iterator[tuple[int, ...]]:
    """Pass sequences with crossings numbered by first visit."""
    seq = [-1] * (2 * n)

    def rec(pos, used):
        while pos < 2 * n and seq[pos] != -1:
            pos += 1
        if pos == 2 * n:
            yield tuple(seq)
            return
        c = used
        seq[pos] = c
        for q in range(pos + 1, 2 * n):
            if seq[q] == -1:
                seq[q] = c
                yield from rec(pos + 1, used + 1)
                seq[q] = -1
        seq[pos] = -1

    yield from rec(0, 0)


def _flat_face_count(pairs, rot, E: int) -> int:
    """Number of faces of the flat diagram, counted as cycles of the dart walk."""
    nxt = list(range(2 * E))
    nxt[2 * (E - 1)] = 2 * (E - 1) + 1  # turn back at the head
    nxt[1] = 0  # and at the leg
    for (p1, p2), r in zip(pairs, rot):
        lay = _layout(Kind.SINGULAR, False, r, p1, p2)
        for i, (e, is_out) in enumerate(lay):
            x, x_out = lay[(i + 1) % 4]
            nxt[2 * e + (1 if is_out else 0)] = 2 * x if x_out else 2 * x + 1
    seen = [False] * (2 * E)
    count = 0
    for d in range(2 * E):
        if not seen[d]:
            count += 1
            while not seen[d]:
                seen[d] = True
                d = nxt[d]
    return count


def enumerate_diagrams(n: int, kinds=(Kind.CLASSICAL,)) -> Iterator[KnotoidDiagram]:
    """Every valid spherical diagram with ``n`` crossings of the given kinds."""
    E = 2 * n + 1
    for passes in _pairings(n):
        pairs = [[] for _ in range(n)]
        for p, c in enumerate(passes):
            pairs[c].append(p)
        planar = []
        for rot in itertools.product((1, -1), repeat=n):
            if rot and rot[0] < 0:
                continue
            # reflecting flips every rotation and keeps planarity
            if _flat_face_count(pairs, rot, E) == n + 1:
                planar.append(rot)
                if n:
                    planar.append(tuple(-r for r in rot))
        planar.sort(reverse=True)
        for rot in planar:
            for ks in itertools.product(kinds, repeat=n):
                over_choices = [(True, False) if k is Kind.CLASSICAL else (False,) for k in ks]
                for over in itertools.product(*over_choices):
                    yield KnotoidDiagram.from_gauss(GaussCode(passes, tuple(ks), over, rot))


def random_diagram(n: int, seed, kinds=(Kind.CLASSICAL,)) -> KnotoidDiagram:
    """Grow a diagram from the trivial one by letting the head cross ``n`` edges.

    Each step picks a uniformly random edge on the boundary of the head's face
    and pushes the head across it.
    """
    rng = random.Random(seed)
    passes: list[int] = []
    kind_l, over_l, rot_l = [], [], []
    d = KnotoidDiagram.trivial()
    for c in range(n):
        head = d.head_face
        darts = [(e, s) for e, s in d.face_list[head].boundary]
        e, side = rng.choice(darts)
        passes.insert(e, c)
        passes.append(c)
        kind = rng.choice(kinds)
        kind_l.append(kind)
        over_l.append(kind is Kind.CLASSICAL and rng.random() < 0.5)
        # crossing from the right of e to its left means rotation +1
        rot_l.append(1 if side == "R" else -1)
        d = KnotoidDiagram.from_gauss(canonical_gauss(passes, kind_l, over_l, rot_l))
        g = d.gauss
        passes, kind_l, over_l, rot_l = list(g.passes), list(g.kinds), list(g.over_first), list(g.rot)
    return d


def random_singular(n: int, singular: int, seed) -> KnotoidDiagram:
    """Random diagram with ``n`` crossings of which ``singular`` are nodified."""
    if singular > n:
        raise ValueError("more singular crossings than crossings")
    rng = random.Random(seed)
    d = random_diagram(n, rng.randrange(2**63))
    for c in rng.sample(classical_crossings(d), singular):
        d = nodify(d, c)
    return d
