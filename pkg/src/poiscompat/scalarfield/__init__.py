"""Scalar-field expression engine: parsing, exact symbolic derivatives,
batch evaluation, and the finite-difference oracle."""

from .backend import BACKEND_NAME, HAVE_EXT
from .expr import (
    COORDS,
    ScalarField,
    X,
    Y,
    Z,
    add,
    const,
    div,
    emit,
    gradient,
    laplacian,
    mul,
    partial,
    power,
    sqrt_of,
    variable,
)
from .numeric import (
    evaluate,
    evaluate_many,
    fd_partial,
    field_scale,
    is_identically_zero,
    scale_many,
)
from .parser import parse
from .poly import Polynomial, Radical, canonical_str, to_polynomial
from .sampling import DEFAULT_FD_STEP, Point3, SampleSpec, sample_points

__all__ = [
    "BACKEND_NAME",
    "COORDS",
    "DEFAULT_FD_STEP",
    "HAVE_EXT",
    "Point3",
    "Polynomial",
    "Radical",
    "SampleSpec",
    "ScalarField",
    "X",
    "Y",
    "Z",
    "add",
    "canonical_str",
    "const",
    "div",
    "emit",
    "evaluate",
    "evaluate_many",
    "fd_partial",
    "field_scale",
    "gradient",
    "is_identically_zero",
    "laplacian",
    "mul",
    "parse",
    "partial",
    "power",
    "sample_points",
    "scale_many",
    "sqrt_of",
    "to_polynomial",
    "variable",
]
