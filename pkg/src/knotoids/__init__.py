"""Knotoid diagrams and their invariants, computed exactly."""

from .chord import (
    ChordDiagram1,
    chord_multiply,
    chord_of_singular,
    regular_diagram,
    singular_height,
    surgery,
    winding_of_loop,
)
from .closure import (
    Shortcut,
    height_of_diagram,
    minimal_shortcut,
    overpass_closure,
    singular_closure,
    underpass_closure,
    virtual_closure,
)
from .codec import emit_ktd, parse_ktd
from .core import (
    ClosedDiagram,
    CrossingNode,
    Face,
    Kind,
    KnotoidDiagram,
    crossing_sign,
    faces,
    mirror,
    validate,
    writhe,
)
from .errors import (
    CrossingKindError,
    HeightNotOneError,
    InapplicableMoveError,
    InvalidDiagramError,
    KnotoidError,
    KtdSyntaxError,
    StateSumLimitError,
)
from .invariants import (
    affine_index_polynomial,
    affine_labels,
    finite_type_check,
    kauffman_bracket,
    normalized_bracket,
    skein_extend,
    turaev_coefficients,
    turaev_extended_bracket,
    vassiliev_coefficients,
    vbar,
)
from .moves import (
    MoveSite,
    apply_move,
    enumerate_move_sites,
    make_descending,
    nodify,
    random_walk,
    resolve,
    switch_crossing,
)
from .poly import LaurentPoly1, LaurentPoly2, exp_coeff, exp_coeff2

__all__ = [name for name in dir() if not name.startswith("_")]
