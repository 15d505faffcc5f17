"""Exact wall-and-chamber computations for tilt stability on projective 3-space."""

from .chern import (
    ChernCharacter,
    ChernTruncation,
    curve_ideal_ch,
    euler_pairing,
    format_chern,
    from_resolution,
    line_bundle_ch,
    parse_chern,
)
from .stability import (
    INFINITY,
    BridgelandParams,
    ChargeValue,
    TiltPoint,
    bmt_form,
    bridgeland_charge,
    lambda_slope,
    mu_beta,
    nu,
    tilt_charge,
    wall_admissible,
)
from .walls import (
    Circle,
    Empty,
    Everywhere,
    NestedRelation,
    Region,
    SearchBounds,
    VerticalLine,
    WallCandidate,
    WallSearchError,
    bmt_zero_circle,
    brute_force_walls,
    circle_meets_region,
    enumerate_tilt_walls,
    hyperbola_alpha_sq,
    nested,
    on_hyperbola,
    tilt_wall_locus,
    wall_top,
)

__all__ = [
    "ChernCharacter",
    "ChernTruncation",
    "curve_ideal_ch",
    "euler_pairing",
    "format_chern",
    "from_resolution",
    "line_bundle_ch",
    "parse_chern",
    "INFINITY",
    "BridgelandParams",
    "ChargeValue",
    "TiltPoint",
    "bmt_form",
    "bridgeland_charge",
    "lambda_slope",
    "mu_beta",
    "nu",
    "tilt_charge",
    "wall_admissible",
    "Circle",
    "Empty",
    "Everywhere",
    "NestedRelation",
    "Region",
    "SearchBounds",
    "VerticalLine",
    "WallCandidate",
    "WallSearchError",
    "bmt_zero_circle",
    "brute_force_walls",
    "circle_meets_region",
    "enumerate_tilt_walls",
    "hyperbola_alpha_sq",
    "nested",
    "on_hyperbola",
    "tilt_wall_locus",
    "wall_top",
]

__version__ = "0.1.0"
