"""Order-1 linear chord diagrams on the sphere, i.e. winding numbers of loops."""

from __future__ import annotations

from dataclasses import dataclass

from .closure import Shortcut, minimal_shortcut
from .core import GaussCode, Kind, KnotoidDiagram, canonical_gauss, singular_crossings
from .errors import CrossingKindError


@dataclass(frozen=True, order=True)
class ChordDiagram1:
    """The chord class ``a**w``; the group law is addition of ``w``."""

    w: int

    def __mul__(self, other: ChordDiagram1) -> ChordDiagram1:
        return ChordDiagram1(self.w + other.w)

    def __str__(self):
        return str(self.w)


def chord_multiply(c1: ChordDiagram1, c2: ChordDiagram1) -> ChordDiagram1:
    return c1 * c2


def singular_height(c: ChordDiagram1) -> int:
    return abs(c.w)


def winding_of_loop(d: KnotoidDiagram, c: int, alpha: Shortcut | None = None) -> int:
    """Counterclockwise winding of the loop at crossing ``c`` around the leg.

    The loop is the sub-walk between the two visits of ``c``.  Its winding is
    the algebraic intersection number with any dual path from the leg face to
    the head face.
    """
    if d.gauss.kinds[c] is Kind.VIRTUAL:
        raise CrossingKindError(f"crossing {c} is virtual")
    p1, p2 = d.gauss.pass_pairs()[c]
    alpha = alpha if alpha is not None else minimal_shortcut(d)
    return sum(s for e, s in alpha.steps if p1 < e <= p2)


def chord_of_singular(d: KnotoidDiagram) -> ChordDiagram1:
    sing = singular_crossings(d)
    if len(sing) != 1:
        raise CrossingKindError(f"need exactly one singular crossing, found {len(sing)}")
    return ChordDiagram1(winding_of_loop(d, sing[0]))


def _reflected(g: GaussCode) -> GaussCode:
    return GaussCode(g.passes, g.kinds, g.over_first, tuple(-r for r in g.rot))


def _singular_kink() -> GaussCode:
    return GaussCode((0, 0), (Kind.SINGULAR,), (False,), (1,))


def regular_gauss(w: int) -> GaussCode:
    """Descending diagram whose singular loop, starting at the leg, winds ``w`` times.

    For ``w > 0`` the loop spirals outwards around the leg through crossings
    ``H_1 .. H_w`` (where the tail of the curve escapes) and ``R_1 .. R_{w-1}``
    (self crossings of the spiral).
    """
    if w == 0:
        return _singular_kink()
    if w < 0:
        return _reflected(regular_gauss(-w))
    S, H, R = "s", "h", "r"
    seq = [(S, 0)]
    for i in range(1, w):
        seq += [(H, i), (R, i)]
    seq.append((H, w))
    seq += [(R, i) for i in range(w - 1, 0, -1)]
    seq.append((S, 0))
    seq += [(H, i) for i in range(1, w + 1)]
    ids = {key: i for i, key in enumerate(dict.fromkeys(seq))}
    kinds, over, rot = [], [], []
    for key in ids:
        kinds.append(Kind.SINGULAR if key[0] == S else Kind.CLASSICAL)
        over.append(key[0] != S)
        rot.append(-1 if key[0] == H else 1)
    return canonical_gauss([ids[k] for k in seq], kinds, over, rot)


def regular_diagram(w: int) -> KnotoidDiagram:
    return KnotoidDiagram.from_gauss(regular_gauss(w))


def surgery_gauss(w: int) -> GaussCode:
    """Band-surgery realisation of the chord ``a**w``.

    The chord is doubled into a band whose loop winds ``w`` times around the
    leg; its two sides cross at the ``Q`` crossings, and the loop passes over
    the initial strand at the ``L`` crossings.
    """
    if w == 0:
        return _singular_kink()
    if w < 0:
        return _reflected(surgery_gauss(-w))
    seq = [("L", i) for i in range(w, 0, -1)] + [("s", 0)]
    for i in range(1, w + 1):
        seq += [("Q", i), ("L", i)]
    seq += [("Q", i) for i in range(w, 0, -1)] + [("s", 0)]
    ids = {key: i for i, key in enumerate(dict.fromkeys(seq))}
    kinds, over, rot = [], [], []
    for key in ids:
        kinds.append(Kind.SINGULAR if key[0] == "s" else Kind.CLASSICAL)
        over.append(key[0] != "s")
        rot.append(-1 if key[0] == "Q" else 1)
    return canonical_gauss([ids[k] for k in seq], kinds, over, rot)


def surgery(c: ChordDiagram1) -> KnotoidDiagram:
    return KnotoidDiagram.from_gauss(surgery_gauss(c.w))
