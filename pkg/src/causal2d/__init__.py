"""Exact causal automorphisms of 1+1 dimensional Minkowski space."""

from .automorphism import (
    FGPair,
    HElement,
    OrientationMismatch,
    SlopeViolation,
    apply,
    componentwise,
    from_fg,
    identity_element,
    omega,
    pi,
    standard_apply,
    star,
    star_inverse,
    to_fg,
    validate_fg,
    z2_act,
)
from .homeo import (
    IDENTITY,
    InvariantError,
    NotMonotoneError,
    Orientation,
    PLFunction,
    PLHomeo,
    canonicalize,
    compose,
    evaluate,
    invert,
    lincomb,
    pl_equal,
)
from .minkowski import Event, NullCoords, causally_precedes, chronologically_precedes, from_null, to_null

__version__ = "0.1.0"
