"""Reidemeister and rigid-vertex moves, crossing changes and random walks.

All moves are edits of the signed Gauss code (see :mod:`knotoids.core`):

* R1 inserts or deletes a pair of consecutive passes of one crossing;
* R2 inserts or deletes two crossings met consecutively by two strands;
* R3 (and its singular slide) reverses the two passes on each side of a
  triangular face;
* the rigid-vertex flip moves a twist from one side of a singular crossing to
  the other.

Endpoints are 1-valent vertices of the face structure, so a move site whose
local disc would contain an endpoint simply never shows up in the face data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .core import (
    GaussCode,
    Kind,
    KnotoidDiagram,
    canonical_gauss,
    classical_crossings,
)
from .errors import CrossingKindError, InapplicableMoveError


@dataclass(frozen=True)
class MoveSite:
    kind: str  # R1+, R1-, R2+, R2-, R3, flip, switch
    location: tuple
    variant: tuple = ()


@dataclass
class SwitchRecord:
    entries: list[tuple[int, int, KnotoidDiagram]] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


ADDITIONS = ("R1+", "R2+")


class _Edit:
    """Mutable Gauss code whose passes remember their origin."""

    def __init__(self, g: GaussCode):
        self.tokens = [("old", p) for p in range(len(g.passes))]
        self.cross = list(g.passes)
        self.kinds = list(g.kinds)
        self.over = list(g.over_first)
        self.rot = list(g.rot)

    def new_crossing(self, kind, over_first, r) -> int:
        self.kinds.append(kind)
        self.over.append(over_first)
        self.rot.append(r)
        return len(self.kinds) - 1

    def insert(self, index, crossings):
        for off, c in enumerate(crossings):
            self.tokens.insert(index + off, ("new", c))
            self.cross.insert(index + off, c)

    def delete(self, indices):
        for i in sorted(indices, reverse=True):
            del self.tokens[i]
            del self.cross[i]

    def gauss(self) -> GaussCode:
        return canonical_gauss(self.cross, self.kinds, self.over, self.rot)

    def edge_image(self, old_edge_count) -> dict[int, int]:
        """Old edge -> new edge, for edges whose outer sides keep their faces."""
        pos = {t[1]: i for i, t in enumerate(self.tokens) if t[0] == "old"}
        new_last = len(self.tokens)
        out = {}
        merged = 0  # edge leaving the last surviving pass
        for e in range(old_edge_count):
            if e > 0 and e - 1 in pos:
                merged = pos[e - 1] + 1
            if e == old_edge_count - 1:
                out[e] = new_last if e in pos or e == 0 else merged
            else:
                out[e] = pos[e] if e in pos else merged
        return out


def _over_at_pass(g: GaussCode, p: int) -> bool | None:
    c = g.passes[p]
    if g.kinds[c] is not Kind.CLASSICAL:
        return None
    first = g.pass_pairs()[c][0] == p
    return first == g.over_first[c]


def _finish(d: KnotoidDiagram, ed: _Edit, local_edges=()) -> KnotoidDiagram:
    g = ed.gauss()
    if d.surface != "plane":
        return KnotoidDiagram.from_gauss(g)
    out = KnotoidDiagram.from_gauss(g, "plane", 0)
    image = ed.edge_image(d.edge_count)
    for dart, f in enumerate(d.dart_face):
        e = dart >> 1
        if f == d.outer_face and e in image and e not in local_edges:
            return KnotoidDiagram.from_gauss(g, "plane", out.dart_face[2 * image[e] + (dart & 1)])
    raise InapplicableMoveError("outer face does not survive the move")


def _interior(d: KnotoidDiagram, e: int) -> bool:
    return 0 < e < d.edge_count - 1


def _triangle_sites(d: KnotoidDiagram):
    g = d.gauss
    for face in d.face_list:
        if len(face.boundary) != 3 or face.id == d.outer_face:
            continue
        edges = [e for e, _ in face.boundary]
        if len(set(edges)) != 3 or not all(_interior(d, e) for e in edges):
            continue
        corners = [g.passes[e - 1] for e in edges] + [g.passes[e] for e in edges]
        if len(set(corners)) != 3 or any(corners.count(c) != 2 for c in set(corners)):
            continue
        kinds = [g.kinds[c] for c in set(corners)]
        if Kind.VIRTUAL in kinds:
            continue
        n_sing = kinds.count(Kind.SINGULAR)
        if n_sing > 1:
            continue
        ok = False
        for e in edges:
            a, b = _over_at_pass(g, e - 1), _over_at_pass(g, e)
            if n_sing == 0 and a and b:
                ok = True
            if n_sing == 1 and a is not None and b is not None and a == b:
                ok = True
        if ok:
            yield MoveSite("R3", (face.id,), tuple(sorted(edges)))


def _bigons(d: KnotoidDiagram):
    g = d.gauss
    for face in d.face_list:
        if len(face.boundary) != 2 or face.id == d.outer_face:
            continue
        a, b = sorted(e for e, _ in face.boundary)
        if a == b or not (_interior(d, a) and _interior(d, b)):
            continue
        ps = [a - 1, a, b - 1, b]
        if len(set(ps)) != 4:
            continue
        x, y = g.passes[a - 1], g.passes[a]
        if x == y or sorted([g.passes[b - 1], g.passes[b]]) != sorted([x, y]):
            continue
        yield face.id, a, b, x, y


def enumerate_move_sites(d: KnotoidDiagram, additions: bool = True) -> list[MoveSite]:
    g = d.gauss
    sites: list[MoveSite] = []
    # R1 removals: monogon faces
    for face in d.face_list:
        if len(face.boundary) != 1 or face.id == d.outer_face:
            continue
        (e, _), = face.boundary
        if _interior(d, e) and g.passes[e - 1] == g.passes[e] and g.kinds[g.passes[e]] is Kind.CLASSICAL:
            sites.append(MoveSite("R1-", (e,)))
    for fid, a, b, x, y in _bigons(d):
        if g.kinds[x] is Kind.CLASSICAL and g.kinds[y] is Kind.CLASSICAL:
            o1, o2 = _over_at_pass(g, a - 1), _over_at_pass(g, a)
            if o1 == o2:
                sites.append(MoveSite("R2-", (a, b)))
        elif {g.kinds[x], g.kinds[y]} == {Kind.CLASSICAL, Kind.SINGULAR}:
            sites.append(MoveSite("flip", (a, b)))
    sites.extend(_triangle_sites(d))
    if additions:
        sites.extend(addition_sites(d))
    return sites


def addition_sites(d: KnotoidDiagram, kinds=ADDITIONS) -> list[MoveSite]:
    sites = []
    if "R1+" in kinds:
        for e in range(d.edge_count):
            for side in (1, -1):
                for sign in (1, -1):
                    sites.append(MoveSite("R1+", (e, side), (sign,)))
    if "R2+" in kinds:
        for face in d.face_list:
            if face.id == d.outer_face:
                continue
            darts = [(e, 1 if s == "R" else -1) for e, s in face.boundary]
            for i, (e1, s1) in enumerate(darts):
                for j, (e2, s2) in enumerate(darts):
                    if e1 == e2:
                        continue
                    for finger_over in (True, False):
                        sites.append(MoveSite("R2+", (face.id, i, j), (e1, s1, e2, s2, finger_over)))
    return sites


def _has_r2_addition(d: KnotoidDiagram) -> bool:
    return any(
        face.id != d.outer_face and len({e for e, _ in face.boundary}) > 1
        for face in d.face_list
    )


def _r1_add(d, site):
    (e, side), (sign,) = site.location, site.variant
    if not 0 <= e < d.edge_count:
        raise InapplicableMoveError(f"no edge {e}")
    ed = _Edit(d.gauss)
    c = ed.new_crossing(Kind.CLASSICAL, sign == side, side)
    ed.insert(e, [c, c])
    return _finish(d, ed)


def _r1_remove(d, site):
    (e,) = site.location
    g = d.gauss
    if not (_interior(d, e) and g.passes[e - 1] == g.passes[e]):
        raise InapplicableMoveError(f"edge {e} is not a kink loop")
    if g.kinds[g.passes[e]] is not Kind.CLASSICAL:
        raise InapplicableMoveError("kink crossing is not classical")
    ed = _Edit(g)
    ed.delete([e - 1, e])
    return _finish(d, ed, local_edges=(e,))


def _r2_add(d, site):
    fid, i, j = site.location
    e1, s1, e2, s2, finger_over = site.variant
    bnd = d.face_list[fid].boundary if 0 <= fid < len(d.face_list) else ()
    darts = [(e, 1 if s == "R" else -1) for e, s in bnd]
    if not (0 <= i < len(darts) and 0 <= j < len(darts)) or darts[i] != (e1, s1) or darts[j] != (e2, s2) or e1 == e2:
        raise InapplicableMoveError("stale R2 site")
    ed = _Edit(d.gauss)
    finger_first = e1 < e2
    cx, cy = -s2, s2  # rotation of e2 relative to the finger at X and Y
    x = ed.new_crossing(Kind.CLASSICAL, finger_over == finger_first, cx if finger_first else -cx)
    y = ed.new_crossing(Kind.CLASSICAL, finger_over == finger_first, cy if finger_first else -cy)
    on_e2 = [x, y] if s1 != s2 else [y, x]
    if e1 > e2:
        ed.insert(e1, [x, y])
        ed.insert(e2, on_e2)
    else:
        ed.insert(e2, on_e2)
        ed.insert(e1, [x, y])
    return _finish(d, ed)


def _find_bigon(d, site):
    a, b = site.location
    for fid, a2, b2, x, y in _bigons(d):
        if (a2, b2) == (a, b):
            return x, y
    raise InapplicableMoveError(f"edges {a}, {b} do not bound a bigon")


def _r2_remove(d, site):
    a, b = site.location
    g = d.gauss
    x, y = _find_bigon(d, site)
    if g.kinds[x] is not Kind.CLASSICAL or g.kinds[y] is not Kind.CLASSICAL:
        raise InapplicableMoveError("bigon corners are not both classical")
    if _over_at_pass(g, a - 1) != _over_at_pass(g, a):
        raise InapplicableMoveError("bigon is a twist, not a removable R2 pair")
    ed = _Edit(g)
    ed.delete([a - 1, a, b - 1, b])
    return _finish(d, ed, local_edges=(a, b))


def _r3(d, site):
    edges = site.variant
    if site not in list(_triangle_sites(d)):
        raise InapplicableMoveError("stale R3 site")
    ed = _Edit(d.gauss)
    for e in edges:
        # edge labels outside the local disc are unchanged, so tokens stay put
        ed.cross[e - 1], ed.cross[e] = ed.cross[e], ed.cross[e - 1]
    return _finish(d, ed, local_edges=edges)


def _flip(d, site):
    a, b = site.location
    g = d.gauss
    x, y = _find_bigon(d, site)
    kinds = {g.kinds[x], g.kinds[y]}
    if kinds != {Kind.CLASSICAL, Kind.SINGULAR}:
        raise InapplicableMoveError("flip needs one singular and one classical corner")
    c = x if g.kinds[x] is Kind.CLASSICAL else y
    v = y if c == x else x
    ed = _Edit(g)
    for e in (a, b):
        # edge labels outside the local disc are unchanged, so tokens stay put
        ed.cross[e - 1], ed.cross[e] = ed.cross[e], ed.cross[e - 1]
    ed.rot[v] = -ed.rot[v]
    ed.rot[c] = -ed.rot[c]
    ed.over[c] = not ed.over[c]
    return _finish(d, ed, local_edges=(a, b))


def _switch_site(d, site):
    return switch_crossing(d, site.location[0])


_APPLY = {
    "R1+": _r1_add,
    "R1-": _r1_remove,
    "R2+": _r2_add,
    "R2-": _r2_remove,
    "R3": _r3,
    "flip": _flip,
    "switch": _switch_site,
}


def apply_move(d: KnotoidDiagram, site: MoveSite) -> KnotoidDiagram:
    try:
        fn = _APPLY[site.kind]
    except KeyError:
        raise InapplicableMoveError(f"unknown move kind {site.kind!r}") from None
    return fn(d, site)


def _replace(d: KnotoidDiagram, kinds=None, over=None, rot=None) -> KnotoidDiagram:
    g = d.gauss
    ng = GaussCode(g.passes, tuple(kinds or g.kinds), tuple(over or g.over_first), tuple(rot or g.rot))
    return KnotoidDiagram.from_gauss(ng, d.surface, d.outer_face)


def switch_crossing(d: KnotoidDiagram, c: int) -> KnotoidDiagram:
    g = d.gauss
    if not 0 <= c < g.n or g.kinds[c] is not Kind.CLASSICAL:
        raise CrossingKindError(f"crossing {c} is not classical")
    over = list(g.over_first)
    over[c] = not over[c]
    return _replace(d, over=over)


def nodify(d: KnotoidDiagram, c: int) -> KnotoidDiagram:
    g = d.gauss
    if not 0 <= c < g.n or g.kinds[c] is not Kind.CLASSICAL:
        raise CrossingKindError(f"crossing {c} is not classical")
    kinds, over = list(g.kinds), list(g.over_first)
    kinds[c], over[c] = Kind.SINGULAR, False
    return _replace(d, kinds=kinds, over=over)


def resolve(d: KnotoidDiagram, s: int, eps: int) -> KnotoidDiagram:
    """Replace singular crossing ``s`` by the classical crossing of sign ``eps``."""
    g = d.gauss
    if not 0 <= s < g.n or g.kinds[s] is not Kind.SINGULAR:
        raise CrossingKindError(f"crossing {s} is not singular")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    kinds, over = list(g.kinds), list(g.over_first)
    kinds[s], over[s] = Kind.CLASSICAL, eps == g.rot[s]
    return _replace(d, kinds=kinds, over=over)


def is_descending(d: KnotoidDiagram) -> bool:
    g = d.gauss
    return all(g.over_first[c] for c in classical_crossings(d))


def make_descending(d: KnotoidDiagram) -> tuple[KnotoidDiagram, SwitchRecord]:
    """Walk from the leg, switching every classical crossing first met as under."""
    if any(k is Kind.SINGULAR for k in d.gauss.kinds):
        raise CrossingKindError("make_descending needs a diagram without singular crossings")
    record = SwitchRecord()
    cur = d
    for c in range(d.gauss.n):  # crossing ids follow first visit order
        g = cur.gauss
        if g.kinds[c] is Kind.CLASSICAL and not g.over_first[c]:
            record.entries.append((c, g.sign(c), nodify(cur, c)))
            cur = switch_crossing(cur, c)
    return cur, record


def walk(d: KnotoidDiagram, steps: int, seed, max_crossings: int | None = None,
         switches: bool = False):
    """Yield ``(site, before, after)`` for a seeded random walk.

    Each step first picks a move kind uniformly among the applicable ones, then
    a site of that kind uniformly.
    """
    rng = random.Random(seed)
    cur = d
    for _ in range(steps):
        by_kind: dict[str, list[MoveSite]] = {}
        for s in enumerate_move_sites(cur, additions=False):
            by_kind.setdefault(s.kind, []).append(s)
        room = None if max_crossings is None else max_crossings - cur.n
        for k, need in (("R1+", 1), ("R2+", 2)):
            if room is None or room >= need:
                by_kind[k] = None  # generated only if chosen
        if switches:
            by_kind["switch"] = [MoveSite("switch", (c,)) for c in classical_crossings(cur)]
        if by_kind.get("R2+", ()) is None and not _has_r2_addition(cur):
            del by_kind["R2+"]
        kinds = sorted(k for k, v in by_kind.items() if v is None or v)
        if not kinds:
            yield None, cur, cur
            continue
        kind = rng.choice(kinds)
        sites = by_kind[kind]
        if sites is None:
            sites = addition_sites(cur, (kind,))
        site = rng.choice(sites)
        nxt = apply_move(cur, site)
        yield site, cur, nxt
        cur = nxt


def random_walk(d: KnotoidDiagram, steps: int, seed, max_crossings: int | None = None,
                switches: bool = False) -> KnotoidDiagram:
    cur = d
    for _, _, cur in walk(d, steps, seed, max_crossings, switches):
        pass
    return cur
