"""poiscompat: decide whether a Poisson bivector on R^3 is compatible
with the canonical metric.

A potential f determines the curl-form bivector (df/dz, -df/dy, df/dx);
the pair is compatible exactly when the compatibility tensor of the
contravariant Levi-Civita connection vanishes, equivalently when f
solves d(<df,df>) - Laplacian(f) df = 0.  This package builds all of
those objects symbolically, checks every identity against sampled
residuals plus a finite-difference derivative oracle, and exposes the
whole suite through the `poiscompat` CLI.
"""

from .errors import (
    ConstraintError,
    EvalDomainError,
    MalformedExponentError,
    NotClosedError,
    ParseError,
    PoiscompatError,
    QuadratureDomainError,
    UnknownIdentifierError,
)
from .geometry import (
    COFRAME,
    DX,
    DY,
    DZ,
    Bivector,
    ChristoffelTable,
    MetricGram,
    OneForm,
    QuadratureField,
    Trivector,
    VectorField,
    bivector_from_potential,
    casimir_field,
    christoffel_table,
    differential,
    divergence_residuals,
    dpi_components,
    equation_e_residual,
    j_map,
    jacobiator,
    koszul_connection,
    lie_bracket_pi,
    modular_field,
    pairing,
    potential_from_bivector,
    quadratic_family,
    scaled_koszul,
    sharp,
    so3_bivector,
    so3_potential,
)
from .scalarfield import (
    BACKEND_NAME,
    Point3,
    SampleSpec,
    ScalarField,
    canonical_str,
    emit,
    evaluate,
    fd_partial,
    gradient,
    is_identically_zero,
    laplacian,
    parse,
    partial,
    sample_points,
)
from .verify import (
    CheckResult,
    Report,
    cross_check,
    run_suite,
    sweep_quadratic,
    theorem_equivalence_check,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "Bivector",
    "COFRAME",
    "CheckResult",
    "ChristoffelTable",
    "ConstraintError",
    "DX",
    "DY",
    "DZ",
    "EvalDomainError",
    "MalformedExponentError",
    "MetricGram",
    "NotClosedError",
    "OneForm",
    "ParseError",
    "Point3",
    "PoiscompatError",
    "QuadratureDomainError",
    "QuadratureField",
    "Report",
    "SampleSpec",
    "ScalarField",
    "Trivector",
    "UnknownIdentifierError",
    "VectorField",
    "bivector_from_potential",
    "canonical_str",
    "casimir_field",
    "christoffel_table",
    "cross_check",
    "differential",
    "divergence_residuals",
    "dpi_components",
    "emit",
    "equation_e_residual",
    "evaluate",
    "fd_partial",
    "gradient",
    "is_identically_zero",
    "j_map",
    "jacobiator",
    "koszul_connection",
    "laplacian",
    "lie_bracket_pi",
    "modular_field",
    "pairing",
    "parse",
    "partial",
    "potential_from_bivector",
    "quadratic_family",
    "run_suite",
    "sample_points",
    "scaled_koszul",
    "sharp",
    "so3_bivector",
    "so3_potential",
    "sweep_quadratic",
    "theorem_equivalence_check",
]
