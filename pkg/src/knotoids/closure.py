"""Dual graph, diagram height, shortcuts, and closures of knotoid diagrams."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .core import ClosedDiagram, Kind, KnotoidDiagram, canonical_gauss
from .errors import HeightNotOneError


@dataclass(frozen=True)
class Shortcut:
    """A dual path from the leg face to the head face.

    ``steps[i] = (edge, sign)``: the path crosses ``edge`` going from ``faces[i]``
    to ``faces[i + 1]``.  The sign is +1 when it steps from the left face of the
    edge to its right face (the edge then passes the path from right to left).
    """

    steps: tuple[tuple[int, int], ...]
    faces: tuple[int, ...]

    def __len__(self):
        return len(self.steps)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.steps)


def _dual_adjacency(d: KnotoidDiagram):
    adj: dict[int, list[tuple[int, int, int]]] = {f.id: [] for f in d.face_list}
    for e in range(d.edge_count):
        left, right = d.left_face(e), d.right_face(e)
        if left == right:
            continue
        adj[left].append((right, e, +1))
        adj[right].append((left, e, -1))
    return adj


def minimal_shortcut(d: KnotoidDiagram) -> Shortcut:
    """Breadth-first dual path; ties are broken by the smallest edge label."""
    adj = _dual_adjacency(d)
    src, dst = d.leg_face, d.head_face
    prev: dict[int, tuple[int, int, int] | None] = {src: None}
    queue = deque([src])
    while queue and dst not in prev:
        f = queue.popleft()
        for g, e, s in adj[f]:
            if g not in prev:
                prev[g] = (f, e, s)
                queue.append(g)
    steps, faces = [], [dst]
    f = dst
    while prev[f] is not None:
        f0, e, s = prev[f]
        steps.append((e, s))
        faces.append(f0)
        f = f0
    return Shortcut(tuple(reversed(steps)), tuple(reversed(faces)))


def height_of_diagram(d: KnotoidDiagram) -> int:
    return len(minimal_shortcut(d))


def dual_paths(d: KnotoidDiagram, max_length: int | None = None) -> Iterator[Shortcut]:
    """Every simple dual path from the leg face to the head face (depth first)."""
    adj = _dual_adjacency(d)
    src, dst = d.leg_face, d.head_face
    limit = max_length if max_length is not None else len(adj)

    def rec(f, faces, steps):
        if f == dst:
            yield Shortcut(tuple(steps), tuple(faces))
            return
        if len(steps) >= limit:
            return
        for g, e, s in adj[f]:
            if g in faces:
                continue
            faces.append(g)
            steps.append((e, s))
            yield from rec(g, faces, steps)
            faces.pop()
            steps.pop()

    yield from rec(src, [src], [])


def brute_force_height(d: KnotoidDiagram) -> int:
    """Minimum length over all simple dual paths; used as an oracle for BFS."""
    return min(len(p) for p in dual_paths(d))


def _close(d: KnotoidDiagram, kind: Kind, arc_over: bool, alpha: Shortcut | None = None) -> ClosedDiagram:
    alpha = alpha if alpha is not None else minimal_shortcut(d)
    g = d.gauss
    n = g.n
    on_edge: dict[int, list[int]] = {}
    kinds = list(g.kinds)
    over = list(g.over_first)
    rot = list(g.rot)
    new_ids = []
    for e, s in alpha.steps:
        c = n + len(new_ids)
        new_ids.append(c)
        on_edge.setdefault(e, []).append(c)
        kinds.append(kind)
        # the diagram strand is met first; the arc runs the shortcut backwards
        over.append(kind is Kind.CLASSICAL and not arc_over)
        rot.append(s)
    passes = []
    for e in range(d.edge_count):
        passes += on_edge.get(e, [])
        if e < len(g.passes):
            passes.append(g.passes[e])
    passes += reversed(new_ids)
    return ClosedDiagram(d.surface, canonical_gauss(passes, kinds, over, rot))


def underpass_closure(d: KnotoidDiagram) -> ClosedDiagram:
    return _close(d, Kind.CLASSICAL, arc_over=False)


def overpass_closure(d: KnotoidDiagram) -> ClosedDiagram:
    return _close(d, Kind.CLASSICAL, arc_over=True)


def virtual_closure(d: KnotoidDiagram) -> ClosedDiagram:
    return _close(d, Kind.VIRTUAL, arc_over=False)


def singular_closure(d: KnotoidDiagram) -> ClosedDiagram:
    """Close along a height-realizing shortcut with the single new crossing singular.

    Only well defined for prime diagrams of height one; primality is assumed.
    """
    h = height_of_diagram(d)
    if h != 1:
        raise HeightNotOneError(f"singular closure needs height 1, diagram height is {h}")
    return _close(d, Kind.SINGULAR, arc_over=False)


CLOSURES = {
    "u": underpass_closure,
    "o": overpass_closure,
    "v": virtual_closure,
    "s": singular_closure,
}
