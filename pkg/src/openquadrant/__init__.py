"""Exact-arithmetic toolkit for the open quadrant as a polynomial image.

The open quadrant Q = {x>0, y>0} of the plane is the image of the
polynomial map f = H∘G∘F built from three simple stages.  This package
expands and measures the maps involved, constructs certified preimages for
any target in Q, pushes seeded samples forward to confirm containment in Q
with exact rational arithmetic, and accounts for the non-scalar cost of the
factored evaluation scheme.
"""

from .catalog import (
    NamedMap,
    build_F,
    build_G,
    build_GF,
    build_H,
    build_f,
    build_g_old,
    get_map,
    named_maps,
)
from .polynomials import (
    MapMetrics,
    Poly,
    PolyMap,
    Rational,
    map_compose,
    map_metrics,
    monomial_count,
    poly_add,
    poly_compose,
    poly_eval,
    poly_eval_float,
    poly_mul,
    total_degree,
)
from .preimage import (
    ContainmentReport,
    PreconditionError,
    PreimageWitness,
    SolveError,
    in_A,
    in_B,
    in_Q,
    invert_F,
    invert_G,
    invert_H,
    preimage,
    sample_forward,
)
from .rootfind import Bracket, RootFindError, RootResult, bisect, grow_bracket
from .slp import (
    SlpProgram,
    factored_programs,
    nonscalar_count,
    parse_slp,
    serialize_slp,
    slp_eval,
    slp_expand,
)
from .textform import MapParseError, parse, parse_table_style, render_table_style, serialize

__version__ = "0.1.0"

__all__ = [
    "Bracket",
    "ContainmentReport",
    "MapMetrics",
    "MapParseError",
    "NamedMap",
    "Poly",
    "PolyMap",
    "PreconditionError",
    "PreimageWitness",
    "Rational",
    "RootFindError",
    "RootResult",
    "SlpProgram",
    "SolveError",
    "bisect",
    "build_F",
    "build_G",
    "build_GF",
    "build_H",
    "build_f",
    "build_g_old",
    "factored_programs",
    "get_map",
    "grow_bracket",
    "in_A",
    "in_B",
    "in_Q",
    "invert_F",
    "invert_G",
    "invert_H",
    "map_compose",
    "map_metrics",
    "monomial_count",
    "named_maps",
    "nonscalar_count",
    "parse",
    "parse_slp",
    "parse_table_style",
    "poly_add",
    "poly_compose",
    "poly_eval",
    "poly_eval_float",
    "poly_mul",
    "preimage",
    "render_table_style",
    "sample_forward",
    "serialize",
    "serialize_slp",
    "slp_eval",
    "slp_expand",
    "total_degree",
]
