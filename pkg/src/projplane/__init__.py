"""Exact projective geometry over fields, and machine checks of the
generalized Pappus and Desargues formulas."""

from .errors import (
    CapExceeded,
    CoincidentLines,
    CoincidentPoints,
    DegenerateConfiguration,
    FieldMismatch,
    InversionOfZero,
    NotPrime,
    ParseError,
    ProjPlaneError,
    UnknownIdentity,
    ZeroVector,
)
from .fields import RATIONAL, PrimeField, PrimeFieldElement, field_inv, make_prime_field, parse_field
from .identities import (
    Configuration,
    check_desargues,
    check_pappus,
    derive_points,
    eval_D,
    eval_P,
    four_triples,
)
from .projective import (
    ProjLine,
    ProjPoint,
    collinear,
    concurrent,
    incident,
    join,
    line_from,
    meet,
    point_from,
)
from .symbolic import IDENTITIES, MultiPoly, prove_identity
from .vec3 import Vec3, cross, det3, dot, quadruple_product, scalar_triple, vector_triple

__version__ = "0.1.0"
