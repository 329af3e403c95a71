"""Exact Bernstein-Sato polynomials and multiplier ideals of monomial ideals."""

from .bsengine import BsResult, bernstein_sato, bw_generator, codim, compose_thom_sebastiani
from .conegen import ExponentMatrix, af_generators, af_shifts, g_poly, module_generators
from .errors import (
    BadShiftSum,
    BsatoError,
    EmptyInput,
    InvalidInput,
    NonPositiveCoordinate,
    NonRationalFactor,
    NotPointed,
    ZeroEliminationIdeal,
)
from .exactalg import FactoredBPoly, MultiPoly, UniPoly, expand, factor_rational_roots, shift_variable
from .groebner import GroebnerBasis, buchberger, eliminate_to_univariate, ideal_equal, minimal_polynomial
from .newton import (
    JumpReport,
    NewtonPolyhedron,
    check_roots_and_jumps,
    jump_of_monomial,
    jumping_coefficients,
    lct,
    multiplier_membership,
    newton_polyhedron,
)
from .polyhedra import HRep, PointedCone, VRep, h_to_v, hilbert_basis, v_to_h

__version__ = "0.1.0"

__all__ = [
    "BadShiftSum",
    "BsResult",
    "BsatoError",
    "EmptyInput",
    "ExponentMatrix",
    "FactoredBPoly",
    "GroebnerBasis",
    "HRep",
    "InvalidInput",
    "JumpReport",
    "MultiPoly",
    "NewtonPolyhedron",
    "NonPositiveCoordinate",
    "NonRationalFactor",
    "NotPointed",
    "PointedCone",
    "UniPoly",
    "VRep",
    "ZeroEliminationIdeal",
    "af_generators",
    "af_shifts",
    "bernstein_sato",
    "buchberger",
    "bw_generator",
    "check_roots_and_jumps",
    "codim",
    "compose_thom_sebastiani",
    "eliminate_to_univariate",
    "expand",
    "factor_rational_roots",
    "g_poly",
    "h_to_v",
    "hilbert_basis",
    "ideal_equal",
    "jump_of_monomial",
    "jumping_coefficients",
    "lct",
    "minimal_polynomial",
    "module_generators",
    "multiplier_membership",
    "newton_polyhedron",
    "shift_variable",
    "v_to_h",
]
