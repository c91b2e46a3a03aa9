"""Combinatorial model of knotoid diagrams.

A diagram with ``n`` crossings has ``E = 2n + 1`` oriented edges numbered in
traversal order from the leg (edge 0 leaves it) to the head (edge ``E - 1``
enters it).  Walking the curve visits ``2n`` crossing passes; pass ``k`` is
entered along edge ``k`` and left along edge ``k + 1``.

Two encodings are kept in sync:

* the public one, a tuple of :class:`CrossingNode` whose four slots list edge
  labels counterclockwise around the crossing;
* a signed Gauss code (:class:`GaussCode`): the crossing met at each pass, plus
  per crossing its kind, whether the first pass is the over strand, and a
  rotation bit ``rot`` which is ``+1`` when the second strand crosses the first
  one from its right to its left.

The Gauss form is what moves and closures manipulate; the slot form is what
faces, parsing and emitting use.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Sequence

from .errors import CrossingKindError, InvalidDiagramError


class Kind(str, Enum):
    CLASSICAL = "classical"
    SINGULAR = "singular"
    VIRTUAL = "virtual"


KIND_LETTER = {Kind.CLASSICAL: "X", Kind.SINGULAR: "S", Kind.VIRTUAL: "V"}
LETTER_KIND = {v: k for k, v in KIND_LETTER.items()}


@dataclass(frozen=True)
class CrossingNode:
    kind: Kind
    slots: tuple[int, int, int, int]


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[tuple[int, str], ...]  # (edge, "R" | "L")


@dataclass(frozen=True)
class Violation:
    code: str
    message: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, code, message):
        self.violations.append(Violation(code, message))


@dataclass(frozen=True)
class GaussCode:
    """Signed Gauss code; crossing ids are numbered in order of first visit."""

    passes: tuple[int, ...]
    kinds: tuple[Kind, ...]
    over_first: tuple[bool, ...]
    rot: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.kinds)

    def pass_pairs(self) -> list[tuple[int, int]]:
        return self._pairs

    @cached_property
    def _pairs(self) -> list[tuple[int, int]]:
        seen: list[list[int]] = [[] for _ in range(self.n)]
        for p, c in enumerate(self.passes):
            seen[c].append(p)
        return [(a[0], a[1]) for a in seen]

    def sign(self, c: int) -> int:
        if self.kinds[c] is not Kind.CLASSICAL:
            raise CrossingKindError(f"crossing {c} is {self.kinds[c].value}, not classical")
        return self.rot[c] if self.over_first[c] else -self.rot[c]


def canonical_gauss(passes, kinds, over_first, rot) -> GaussCode:
    """Renumber crossings by first visit; crossings never visited are dropped."""
    order: dict[int, int] = {}
    for c in passes:
        if c not in order:
            order[c] = len(order)
    inv = sorted(order, key=order.get)
    return GaussCode(
        tuple(order[c] for c in passes),
        tuple(Kind(kinds[c]) for c in inv),
        tuple(bool(over_first[c]) and Kind(kinds[c]) is Kind.CLASSICAL for c in inv),
        tuple(int(rot[c]) for c in inv),
    )


def _layout(kind, over_first, r, p1, p2, modulus=None):
    """Counterclockwise slots as ``(edge, is_outgoing)`` pairs."""
    out1, out2 = p1 + 1, p2 + 1
    if modulus is not None:
        out1 %= modulus
        out2 %= modulus
    if kind is Kind.CLASSICAL and over_first:
        if r > 0:
            return ((p2, False), (out1, True), (out2, True), (p1, False))
        return ((p2, False), (p1, False), (out2, True), (out1, True))
    if r > 0:
        return ((p1, False), (p2, False), (out1, True), (out2, True))
    return ((p1, False), (out2, True), (out1, True), (p2, False))


def layouts_of_gauss(g: GaussCode, modulus=None):
    return [
        _layout(g.kinds[c], g.over_first[c], g.rot[c], p1, p2, modulus)
        for c, (p1, p2) in enumerate(g.pass_pairs())
    ]


def _transversal_in_slot(s, modulus=None):
    """Slot (1 or 3) where the transversal strand enters, or None if inconsistent."""
    s0, s1, _, s3 = s
    nxt = (lambda x: (x + 1) % modulus) if modulus else (lambda x: x + 1)
    at1 = nxt(s1) == s3
    at3 = nxt(s3) == s1
    if at1 and at3:
        # only possible for two closed edges; the transversal enters on the edge slot 0 leaves by
        return 1 if s1 != s0 else 3
    if at1:
        return 1
    if at3:
        return 3
    return None


def gauss_from_nodes(nodes: Sequence[CrossingNode], modulus=None) -> GaussCode:
    """Inverse of :func:`layouts_of_gauss`; assumes a structurally valid diagram."""
    n = len(nodes)
    passes = [-1] * (2 * n)
    kinds, over, rot = [], [], []
    for c, node in enumerate(nodes):
        s = node.slots
        t = _transversal_in_slot(s, modulus)
        t_in = s[t]
        passes[s[0]] = c
        passes[t_in] = c
        kinds.append(node.kind)
        if s[0] < t_in:
            over.append(False)
            rot.append(1 if t == 1 else -1)
        else:
            over.append(node.kind is Kind.CLASSICAL)
            rot.append(1 if t == 3 else -1)
    return canonical_gauss(passes, kinds, over, rot)


def trace_faces(layouts, edge_count: int, closed: bool = False):
    """Face id of every dart, plus the list of faces.

    Dart ``2e`` runs along edge ``e`` forwards and belongs to the face on the
    right of ``e``; dart ``2e + 1`` runs backwards and belongs to the face on
    its left.  Arriving at slot ``i`` the walk leaves through slot ``i + 1``.
    """
    E = edge_count
    in_at: dict[int, tuple[int, int]] = {}
    out_at: dict[int, tuple[int, int]] = {}
    for c, lay in enumerate(layouts):
        for i, (e, is_out) in enumerate(lay):
            (out_at if is_out else in_at)[e] = (c, i)

    def step(d):
        e, back = d >> 1, d & 1
        if not back:
            if e not in in_at:  # head, or a crossingless closed curve
                return 2 * e + (0 if closed else 1)
            c, i = in_at[e]
        else:
            if e not in out_at:
                return 2 * e + (1 if closed else 0)
            c, i = out_at[e]
        x, is_out = layouts[c][(i + 1) % 4]
        return 2 * x if is_out else 2 * x + 1

    dart_face = [-1] * (2 * E)
    faces = []
    for start in range(2 * E):
        if dart_face[start] != -1:
            continue
        fid = len(faces)
        bnd = []
        d = start
        while dart_face[d] == -1:
            dart_face[d] = fid
            bnd.append((d >> 1, "L" if d & 1 else "R"))
            d = step(d)
        faces.append(Face(fid, tuple(bnd)))
    return dart_face, faces


def _slot_key(node: CrossingNode):
    return (min(node.slots), node.slots)


@dataclass(frozen=True)
class KnotoidDiagram:
    surface: str
    crossings: tuple[CrossingNode, ...]
    edge_count: int
    outer_face: int | None = None

    def __post_init__(self):
        nodes = tuple(
            c if isinstance(c, CrossingNode) else CrossingNode(Kind(c[0]), tuple(c[1]))
            for c in self.crossings
        )
        object.__setattr__(self, "crossings", tuple(sorted(nodes, key=_slot_key)))

    @classmethod
    def trivial(cls, surface="sphere") -> KnotoidDiagram:
        return cls(surface, (), 1, 0 if surface == "plane" else None)

    @classmethod
    def from_gauss(cls, g: GaussCode, surface="sphere", outer_face=None) -> KnotoidDiagram:
        g = canonical_gauss(g.passes, g.kinds, g.over_first, g.rot)
        nodes = tuple(
            CrossingNode(g.kinds[c], tuple(e for e, _ in lay))
            for c, lay in enumerate(layouts_of_gauss(g))
        )
        d = cls(surface, nodes, 2 * g.n + 1, outer_face)
        d.__dict__["gauss"] = g
        return d

    @property
    def n(self) -> int:
        return len(self.crossings)

    @cached_property
    def gauss(self) -> GaussCode:
        return gauss_from_nodes(self.crossings)

    @cached_property
    def _faces(self):
        return trace_faces(layouts_of_gauss(self.gauss), self.edge_count)

    @property
    def dart_face(self) -> list[int]:
        return self._faces[0]

    @property
    def face_list(self) -> list[Face]:
        return self._faces[1]

    def right_face(self, e: int) -> int:
        return self._faces[0][2 * e]

    def left_face(self, e: int) -> int:
        return self._faces[0][2 * e + 1]

    @property
    def leg_face(self) -> int:
        return self._faces[0][0]

    @property
    def head_face(self) -> int:
        return self._faces[0][2 * (self.edge_count - 1)]

    def kinds(self) -> tuple[Kind, ...]:
        return self.gauss.kinds

    def count(self, kind: Kind) -> int:
        return sum(1 for k in self.gauss.kinds if k is kind)

    def is_classical(self) -> bool:
        return all(k is Kind.CLASSICAL for k in self.gauss.kinds)


def validate(d: KnotoidDiagram) -> ValidationReport:
    rep = ValidationReport()
    if d.surface not in ("sphere", "plane"):
        rep.add("surface", f"unknown surface {d.surface!r}")
    if d.surface == "plane" and d.outer_face is None:
        rep.add("outer face", "plane diagram needs an outer face")
    if d.surface == "sphere" and d.outer_face is not None:
        rep.add("outer face", "sphere diagram must not mark an outer face")
    n, E = d.n, d.edge_count
    if E != 2 * n + 1:
        rep.add("edge count", f"edge_count {E} != 2*{n}+1")
        return rep
    labels = Counter(e for node in d.crossings for e in node.slots)
    for e in labels:
        if not 0 <= e < E:
            rep.add("edge range", f"edge label {e} outside 0..{E - 1}")
    for e in range(E):
        want = 1 if e in (0, E - 1) else 2
        if n == 0:
            want = 0
        if labels.get(e, 0) != want:
            rep.add("edge multiplicity", f"edge {e} used {labels.get(e, 0)} times, expected {want}")
    if not rep.ok:
        return rep
    ins = []
    for c, node in enumerate(d.crossings):
        s = node.slots
        if s[2] != s[0] + 1:
            rep.add("strand", f"crossing {c}: slot 2 edge must follow slot 0 edge")
            continue
        t = _transversal_in_slot(s)
        if t is None:
            rep.add("strand", f"crossing {c}: slots 1 and 3 are not consecutive edges")
            continue
        ins += [s[0], s[t]]
        if node.kind is not Kind.CLASSICAL and s[t] < s[0]:
            rep.add("first pass", f"crossing {c}: slot 0 must carry the first traversed strand")
    if not rep.ok:
        return rep
    if sorted(ins) != list(range(E - 1)):
        rep.add("traversal", "walk from the leg does not visit every crossing twice")
        return rep
    faces = d.face_list
    if 2 * n + 1 != E or (n + 2) - E + len(faces) != 2:
        rep.add("planarity", f"Euler characteristic {(n + 2) - E + len(faces)} != 2")
    if d.surface == "plane" and d.outer_face is not None and not 0 <= d.outer_face < len(faces):
        rep.add("outer face", f"outer face {d.outer_face} does not exist")
    return rep


def check(d: KnotoidDiagram) -> KnotoidDiagram:
    rep = validate(d)
    if not rep.ok:
        raise InvalidDiagramError(rep)
    return d


def faces(d: KnotoidDiagram) -> list[Face]:
    check(d)
    return list(d.face_list)


def crossing_sign(d: KnotoidDiagram, c: int) -> int:
    """+1 when the over strand enters at slot 3, -1 when it enters at slot 1."""
    return d.gauss.sign(c)


def writhe(d: KnotoidDiagram) -> int:
    g = d.gauss
    for c, k in enumerate(g.kinds):
        if k is not Kind.CLASSICAL:
            raise CrossingKindError(f"crossing {c} is {k.value}; writhe needs classical crossings")
    return sum(g.sign(c) for c in range(g.n))


def with_gauss(d: KnotoidDiagram, g: GaussCode, outer_face=None) -> KnotoidDiagram:
    return KnotoidDiagram.from_gauss(g, d.surface, outer_face if d.surface == "plane" else None)


def mirror(d: KnotoidDiagram) -> KnotoidDiagram:
    g = d.gauss
    over = tuple((not o) if k is Kind.CLASSICAL else False for k, o in zip(g.kinds, g.over_first))
    return with_gauss(d, GaussCode(g.passes, g.kinds, over, g.rot), d.outer_face)


def reflect(d: KnotoidDiagram) -> KnotoidDiagram:
    """Reflection of the underlying surface: every rotation reverses."""
    g = d.gauss
    out = KnotoidDiagram.from_gauss(
        GaussCode(g.passes, g.kinds, g.over_first, tuple(-r for r in g.rot)), d.surface)
    if d.surface == "plane":
        dart = d.dart_face.index(d.outer_face)
        out = KnotoidDiagram.from_gauss(out.gauss, "plane", out.dart_face[dart ^ 1])
    return out


def classical_crossings(d: KnotoidDiagram) -> list[int]:
    return [c for c, k in enumerate(d.gauss.kinds) if k is Kind.CLASSICAL]


def singular_crossings(d: KnotoidDiagram) -> list[int]:
    return [c for c, k in enumerate(d.gauss.kinds) if k is Kind.SINGULAR]


@dataclass(frozen=True)
class ClosedDiagram:
    """Closed curve diagram; edge ``k`` enters pass ``k``, cyclically."""

    surface: str
    gauss: GaussCode

    @property
    def n(self) -> int:
        return self.gauss.n

    @property
    def edge_count(self) -> int:
        return max(2 * self.gauss.n, 1)

    @cached_property
    def crossings(self) -> tuple[CrossingNode, ...]:
        M = self.edge_count
        return tuple(
            CrossingNode(self.gauss.kinds[c], tuple(e for e, _ in lay))
            for c, lay in enumerate(layouts_of_gauss(self.gauss, M))
        )

    @cached_property
    def face_list(self) -> list[Face]:
        return trace_faces(layouts_of_gauss(self.gauss, self.edge_count), self.edge_count, closed=True)[1]

    def count(self, kind: Kind) -> int:
        return sum(1 for k in self.gauss.kinds if k is kind)
