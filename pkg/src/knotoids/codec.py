"""KTD text format and JSON result envelopes.

KTD::

    knotoid sphere            # or: knotoid plane <outer face id>
    X 0 1 1 2                 # kind letter, four edge labels counterclockwise

``#`` starts a comment.  Closed diagrams use the header ``knot sphere`` and are
emitted only.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import (
    KIND_LETTER,
    LETTER_KIND,
    ClosedDiagram,
    CrossingNode,
    KnotoidDiagram,
    check,
)
from .errors import KtdSyntaxError
from .poly import LaurentPoly1, LaurentPoly2


def _tokens(line: str):
    """Yield (column, token) pairs, 1-based columns."""
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        yield i + 1, line[i:j]
        i = j


def _int(tok, lineno, col):
    try:
        v = int(tok)
    except ValueError:
        raise KtdSyntaxError(f"expected an integer, got {tok!r}", lineno, col) from None
    if v < 0:
        raise KtdSyntaxError(f"negative edge label {v}", lineno, col)
    return v


def parse_ktd(text: str) -> KnotoidDiagram:
    """Parse and validate; raises KtdSyntaxError or InvalidDiagramError."""
    header = None
    nodes = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].rstrip("\r")
        toks = list(_tokens(line))
        if not toks:
            continue
        if header is None:
            words = [t for _, t in toks]
            if words[0] != "knotoid":
                raise KtdSyntaxError("expected header 'knotoid sphere' or 'knotoid plane <face>'",
                                     lineno, toks[0][0])
            if len(words) == 2 and words[1] == "sphere":
                header = ("sphere", None)
            elif len(words) == 3 and words[1] == "plane":
                header = ("plane", _int(words[2], lineno, toks[2][0]))
            else:
                col = toks[1][0] if len(toks) > 1 else len(line) + 1
                raise KtdSyntaxError("header must be 'knotoid sphere' or 'knotoid plane <face>'",
                                     lineno, col)
            continue
        col, letter = toks[0]
        if letter not in LETTER_KIND:
            raise KtdSyntaxError(f"unknown crossing kind {letter!r} (expected X, S or V)", lineno, col)
        if len(toks) != 5:
            raise KtdSyntaxError(f"crossing needs 4 slot labels, got {len(toks) - 1}", lineno,
                                 toks[5][0] if len(toks) > 5 else len(line) + 1)
        slots = tuple(_int(t, lineno, c) for c, t in toks[1:])
        nodes.append(CrossingNode(LETTER_KIND[letter], slots))
    if header is None:
        raise KtdSyntaxError("missing header", 1)
    surface, outer = header
    return check(KnotoidDiagram(surface, tuple(nodes), 2 * len(nodes) + 1, outer))


def emit_ktd(d: KnotoidDiagram) -> str:
    head = "knotoid sphere" if d.surface == "sphere" else f"knotoid plane {d.outer_face}"
    lines = [head]
    for node in d.crossings:
        lines.append(KIND_LETTER[node.kind] + " " + " ".join(map(str, node.slots)))
    return "\n".join(lines) + "\n"


def emit_closed(k: ClosedDiagram) -> str:
    lines = [f"knot {k.surface}"]
    for node in sorted(k.crossings, key=lambda nd: (min(nd.slots), nd.slots)):
        lines.append(KIND_LETTER[node.kind] + " " + " ".join(map(str, node.slots)))
    return "\n".join(lines) + "\n"


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def poly_envelope(name: str, p) -> dict:
    if isinstance(p, LaurentPoly2):
        terms = [[[a, u], c] for (a, u), c in p.items()]
    elif isinstance(p, LaurentPoly1):
        terms = [[[e], c] for e, c in p.items()]
    else:
        raise TypeError(f"not a polynomial: {p!r}")
    return {"invariant": name, "terms": terms}


def coeff_envelope(name: str, values: dict) -> dict:
    """``values`` maps an exponent tuple to a rational."""
    return {"invariant": name, "terms": [[list(k), _num(v)] for k, v in sorted(values.items())]}


def to_json(envelope: dict) -> str:
    return json.dumps(envelope)


def poly_from_envelope(env: dict):
    terms = env["terms"]
    if terms and len(terms[0][0]) == 2:
        return LaurentPoly2({(a, u): c for (a, u), c in terms})
    return LaurentPoly1({e[0]: c for e, c in terms}, "t" if env["invariant"] in ("affine", "vbar") else "A")
