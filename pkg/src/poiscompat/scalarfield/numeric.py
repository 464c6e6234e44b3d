"""Numeric operations on scalar fields: evaluation, the central-difference
derivative oracle, and the two-tier zero test."""

from __future__ import annotations

import numpy as np

from ..errors import EvalDomainError
from . import poly
from .backend import run
from .expr import ScalarField, axis_index, emit
from .program import ERROR_REASONS, compile_field
from .sampling import DEFAULT_FD_STEP, SampleSpec, as_point, sample_points


def _raise_domain_error(prog, err_code: int, err_instr: int, point) -> None:
    reason = ERROR_REASONS.get(err_code, f"evaluation error {err_code}")
    node = prog.nodes[err_instr] if 0 <= err_instr < len(prog.nodes) else None
    raise EvalDomainError(reason, emit(node) if node is not None else "?", point)


def evaluate(f: ScalarField, p) -> float:
    """Value of `f` at a point; raises EvalDomainError outside the
    validity domain (negative sqrt/fractional-power base, zero divisor)."""
    pt = as_point(p)
    prog = compile_field(f)
    out, err_code, err_instr = run(prog, np.array([pt.as_tuple()]))
    if err_code[0]:
        _raise_domain_error(prog, int(err_code[0]), int(err_instr[0]), pt.as_tuple())
    return float(out[0])


def evaluate_many(f: ScalarField, pts: np.ndarray):
    """Batch values of `f`; returns (values, err_code) with NaN at
    failed points instead of raising."""
    out, err_code, _ = run(compile_field(f), pts)
    return out, err_code


def scale_many(f: ScalarField, pts: np.ndarray):
    """Magnitude accumulated by the positivized copy of `f` (constants
    and coordinates replaced by absolute values): the local field scale
    used by relative tolerances."""
    out, err_code, _ = run(compile_field(f), pts, abs_vars=True)
    return out, err_code


def fd_partial(f: ScalarField, p, axis, h: float = DEFAULT_FD_STEP) -> float:
    """Central difference (f(p+h*e) - f(p-h*e)) / (2h); O(h^2) error.

    Independent of the symbolic differentiation path on purpose: this is
    the oracle every symbolic derivative is cross-checked against.
    """
    if not h > 0:
        raise ValueError(f"step h must be > 0, got {h}")
    k = axis_index(axis)
    pt = list(as_point(p).as_tuple())
    hi = list(pt)
    lo = list(pt)
    hi[k] += h
    lo[k] -= h
    return (evaluate(f, hi) - evaluate(f, lo)) / (2.0 * h)


def is_identically_zero(f: ScalarField, spec: SampleSpec | None = None) -> bool:
    """Two-tier zero test.

    Polynomials (including sqrt-of-rational constants) are expanded to
    monomial form and tested exactly.  Anything else is sampled on
    `spec`: true iff |f(p)| <= abs_tol + rel_tol*scale(p) at every
    sampled point.  Points outside the validity domain are skipped, so
    the sampled tier is probabilistic with confidence growing in
    spec.count.
    """
    expanded = poly.to_polynomial(f)
    if expanded is not None:
        return expanded.is_zero()
    if spec is None:
        spec = SampleSpec()
    pts = sample_points(spec)
    vals, verr = evaluate_many(f, pts)
    scales, serr = scale_many(f, pts)
    ok = (verr == 0) & (serr == 0)
    if not ok.any():
        raise ValueError("no sampled point lies in the field's validity domain")
    bounds = spec.abs_tol + spec.rel_tol * scales[ok]
    return bool(np.all(np.abs(vals[ok]) <= bounds))


def field_scale(f: ScalarField, spec: SampleSpec) -> float:
    """Positivized magnitude of `f` at the worst corner of the box.

    Intentionally independent of the sample count so thresholds do not
    move when a sample is extended.  Returns 0.0 when even the
    positivized copy cannot be evaluated there (quotient artifacts); the
    caller then works with the absolute tolerance alone.
    """
    m = max(abs(spec.box[0]), abs(spec.box[1]))
    out, err, _ = run(compile_field(f), np.array([[m, m, m]]), abs_vars=True)
    if err[0]:
        return 0.0
    return float(out[0])
