"""Knotoid invariants: brackets, affine index polynomial, v-bar, skein extensions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .chord import winding_of_loop
from .closure import Shortcut, minimal_shortcut
from .core import ClosedDiagram, GaussCode, Kind, KnotoidDiagram, layouts_of_gauss, singular_crossings, writhe
from .errors import CrossingKindError, StateSumLimitError
from .moves import make_descending, resolve
from .poly import LaurentPoly1, LaurentPoly2, exp_coeff, exp_coeff2

MAX_STATE_CROSSINGS = 24
_CHUNK = 1 << 14

A = LaurentPoly1.monomial(1)
LOOP = LaurentPoly1({2: -1, -2: -1})  # -A^2 - A^-2


def _require_classical(d: KnotoidDiagram, what: str):
    for c, k in enumerate(d.gauss.kinds):
        if k is not Kind.CLASSICAL:
            raise CrossingKindError(f"{what} needs classical crossings; crossing {c} is {k.value}")


def _end_table(d: KnotoidDiagram):
    """Per crossing, the four edge ends at slots 0..3.

    Edge ``e`` has tail end ``2e`` and head end ``2e + 1``.
    """
    return [
        [2 * e if is_out else 2 * e + 1 for e, is_out in lay]
        for lay in layouts_of_gauss(d.gauss)
    ]


def _state_stats(d: KnotoidDiagram, alpha_signs: np.ndarray | None, n_max: int):
    """Counts of states keyed by (sigma, loops, k_s . alpha)."""
    n = d.n
    if n > n_max:
        raise StateSumLimitError(f"{n} crossings exceeds the state-sum limit of {n_max}")
    ends = _end_table(d)
    m = 2 * d.edge_count
    steps = max(1, int(np.ceil(np.log2(m))) + 1)
    total: dict[tuple[int, int, int], int] = {}
    for start in range(0, 1 << n, _CHUNK):
        states = np.arange(start, min(1 << n, start + _CHUNK), dtype=np.int64)
        N = len(states)
        s = np.empty((N, m), dtype=np.int64)
        s[:, 0] = m - 1  # join the leg to the head
        s[:, m - 1] = 0
        for c, (q0, q1, q2, q3) in enumerate(ends):
            b = ((states >> c) & 1).astype(bool)  # 0: A smoothing, 1: B smoothing
            s[:, q0] = np.where(b, q3, q1)
            s[:, q1] = np.where(b, q2, q0)
            s[:, q2] = np.where(b, q1, q3)
            s[:, q3] = np.where(b, q0, q2)
        f = s ^ 1  # smoothing partner, then along the edge
        label = np.broadcast_to(np.arange(m, dtype=np.int64), (N, m)).copy()
        rows = np.arange(N)[:, None]
        for _ in range(steps):
            label = np.minimum(label, label[rows, f])
            f = f[rows, f]
        loops = (label == np.arange(m)).sum(axis=1) // 2
        popcount = np.zeros(N, dtype=np.int64)
        for c in range(n):
            popcount += (states >> c) & 1
        sigma = n - 2 * popcount
        if alpha_signs is not None:
            # ends in the orbit of end 0 are where the segment enters an edge
            direction = np.where(np.arange(m) % 2 == 0, 1, -1)
            weight = alpha_signs[np.arange(m) // 2] * direction
            ka = ((label == 0) * weight).sum(axis=1)
        else:
            ka = np.zeros(N, dtype=np.int64)
        keys = np.stack([sigma, loops, ka], axis=1)
        uniq, counts = np.unique(keys, axis=0, return_counts=True)
        for (sg, lp, k), cnt in zip(uniq.tolist(), counts.tolist()):
            total[(sg, lp, k)] = total.get((sg, lp, k), 0) + cnt
    return total


@lru_cache(maxsize=None)
def _loop_power(k: int) -> LaurentPoly1:
    return LOOP ** k


def kauffman_bracket(d: KnotoidDiagram, n_max: int = MAX_STATE_CROSSINGS) -> LaurentPoly1:
    _require_classical(d, "the bracket")
    cached = d.__dict__.get("_bracket")
    if cached is not None:
        return cached
    acc: dict[int, int] = {}
    for (sigma, loops, _), cnt in _state_stats(d, None, n_max).items():
        for e, c in _loop_power(loops - 1).terms.items():
            acc[e + sigma] = acc.get(e + sigma, 0) + c * cnt
    out = LaurentPoly1(acc)
    d.__dict__["_bracket"] = out
    return out


def bracket_union_find(d: KnotoidDiagram) -> LaurentPoly1:
    """Reference state sum: one union-find pass per state."""
    _require_classical(d, "the bracket")
    ends = _end_table(d)
    m = 2 * d.edge_count
    out = LaurentPoly1()
    for bits in itertools.product((0, 1), repeat=d.n):
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        for e in range(d.edge_count):
            union(2 * e, 2 * e + 1)
        union(0, m - 1)
        for (q0, q1, q2, q3), b in zip(ends, bits):
            if b:
                union(q1, q2)
                union(q3, q0)
            else:
                union(q0, q1)
                union(q2, q3)
        loops = len({find(x) for x in range(m)})
        sigma = bits.count(0) - bits.count(1)
        out = out + _loop_power(loops - 1).shift(sigma)
    return out


def _writhe_factor(w: int) -> LaurentPoly1:
    # (-A^3)^(-w)
    return LaurentPoly1.monomial(-3 * w, (-1) ** (w % 2))


def normalized_bracket(d: KnotoidDiagram, n_max: int = MAX_STATE_CROSSINGS) -> LaurentPoly1:
    """``f = (-A^3)^(-writhe) <K>``."""
    return _writhe_factor(writhe(d)) * kauffman_bracket(d, n_max)


def _alpha_signs(d: KnotoidDiagram, alpha: Shortcut) -> np.ndarray:
    signs = np.zeros(d.edge_count, dtype=np.int64)
    for e, s in alpha.steps:
        signs[e] += s
    return signs


def turaev_extended_bracket(d: KnotoidDiagram, alpha: Shortcut | None = None,
                            n_max: int = MAX_STATE_CROSSINGS) -> LaurentPoly2:
    _require_classical(d, "the extended bracket")
    alpha = alpha if alpha is not None else minimal_shortcut(d)
    signs = _alpha_signs(d, alpha)
    k_alpha = int(signs.sum())
    acc: dict[tuple[int, int], int] = {}
    for (sigma, loops, ka), cnt in _state_stats(d, signs, n_max).items():
        for e, c in _loop_power(loops - 1).terms.items():
            key = (e + sigma, ka)
            acc[key] = acc.get(key, 0) + c * cnt
    return (LaurentPoly2(acc) * _writhe_factor(writhe(d))).shift(u=-k_alpha)


turaev = turaev_extended_bracket


@dataclass(frozen=True)
class AffineLabels:
    labels: dict[int, int]
    weights: dict[int, tuple[int, int]]  # crossing -> (w+, w-)


def _increasing_first(g: GaussCode, c: int) -> bool:
    # the first strand's label goes up iff the second strand crosses it left to right
    return g.rot[c] < 0


def _affine(g: GaussCode, edge_count: int) -> AffineLabels:
    pairs = g.pass_pairs()
    labels = {0: 0}
    cur = 0
    for p, c in enumerate(g.passes):
        if g.kinds[c] is not Kind.VIRTUAL:
            first = pairs[c][0] == p
            cur += 1 if first == _increasing_first(g, c) else -1
        labels[(p + 1) % edge_count] = cur if (p + 1) % edge_count else labels[0]
    weights = {}
    for c, (p1, p2) in enumerate(pairs):
        if g.kinds[c] is Kind.VIRTUAL:
            continue
        inc, dec = (p1, p2) if _increasing_first(g, c) else (p2, p1)
        a, b = labels[inc], labels[dec]
        wp = b - (a + 1)
        weights[c] = (wp, a - (b - 1))
    return AffineLabels(labels, weights)


def affine_labels(d: KnotoidDiagram | ClosedDiagram) -> AffineLabels:
    return _affine(d.gauss, d.edge_count)


def affine_index_polynomial(d: KnotoidDiagram | ClosedDiagram) -> LaurentPoly1:
    g = d.gauss
    if any(k is Kind.SINGULAR for k in g.kinds):
        raise CrossingKindError("affine index polynomial of a singular diagram: use skein_extend")
    lab = affine_labels(d)
    out = LaurentPoly1(var="t")
    for c, (wp, wm) in lab.weights.items():
        sgn = g.sign(c)
        wk = wp if sgn > 0 else wm
        out = out + (LaurentPoly1.monomial(wk, 1, "t") - 1) * sgn
    return out


def vbar(d: KnotoidDiagram) -> LaurentPoly1:
    _require_classical(d, "v-bar")
    _, record = make_descending(d)
    out = LaurentPoly1(var="t")
    for c, sgn, snap in record:
        w = winding_of_loop(snap, c)
        out = out + (LaurentPoly1.monomial(w, 1, "t") - 1) * sgn
    return out


def vassiliev_coefficients(d: KnotoidDiagram, n_max: int) -> list[Fraction]:
    f = normalized_bracket(d)
    return [exp_coeff(f, n) for n in range(n_max + 1)]


def turaev_coefficients(d: KnotoidDiagram, k_max: int) -> dict[tuple[int, int], Fraction]:
    t = turaev(d)
    out = {}
    for k in range(k_max + 1):
        for l, v in exp_coeff2(t, k).items():
            out[(k, l)] = v
    return out


INVARIANTS: dict[str, Callable] = {
    "bracket": kauffman_bracket,
    "f": normalized_bracket,
    "turaev": turaev,
    "affine": affine_index_polynomial,
    "vbar": vbar,
}


def skein_extend(inv: Callable, d: KnotoidDiagram):
    """Sum of ``(-1)^(#negative) inv(resolution)`` over all resolutions of singular crossings."""
    sing = singular_crossings(d)
    total = None
    for eps in itertools.product((1, -1), repeat=len(sing)):
        r = d
        for s, e in zip(sing, eps):
            r = resolve(r, s, e)
        v = inv(r)
        if eps.count(-1) % 2:
            v = -v
        total = v if total is None else total + v
    return total


def _is_zero(v) -> bool:
    if hasattr(v, "is_zero"):
        return v.is_zero()
    if isinstance(v, (list, tuple)):
        return all(x == 0 for x in v)
    return v == 0


@dataclass
class FiniteTypeReport:
    order: int
    checked: int
    counterexamples: list

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def finite_type_check(inv: Callable, order: int, samples) -> FiniteTypeReport:
    bad = []
    count = 0
    for d in samples:
        if len(singular_crossings(d)) != order + 1:
            raise ValueError(f"sample needs {order + 1} singular crossings")
        v = skein_extend(inv, d)
        count += 1
        if not _is_zero(v):
            bad.append((d, v))
    return FiniteTypeReport(order, count, bad)


def exp_coefficient_invariant(n: int) -> Callable:
    """The order-n coefficient of f after substituting A = e^x."""
    def inv(d):
        return exp_coeff(normalized_bracket(d), n)
    inv.__name__ = f"v{n}"
    return inv
