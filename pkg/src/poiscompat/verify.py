"""Verification harness: residual suites, the equivalence check between
the compatibility tensor and the characterizing PDE, the quadratic-family
sweep, and the finite-difference gate for symbolic derivatives."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintError
from .geometry import (
    Bivector,
    bivector_from_potential,
    casimir_field,
    divergence_residuals,
    dpi_components,
    equation_e_residual,
    jacobiator,
    modular_field,
    quadratic_family,
)
from .scalarfield import (
    SampleSpec,
    ScalarField,
    emit,
    evaluate_many,
    field_scale,
    is_identically_zero,
    partial,
    sample_points,
)
from .scalarfield.poly import to_polynomial

log = logging.getLogger(__name__)

CHECK_NAMES = ("equation_E", "dpi", "modular", "jacobi", "casimir", "divergence")

# evaluation-error fraction above which a check cannot conclude
INCONCLUSIVE_ERROR_RATE = 0.01


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_abs_residual: float
    points_tested: int
    threshold: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "max_abs_residual": self.max_abs_residual,
            "points_tested": self.points_tested,
            "threshold": self.threshold,
            "passed": self.passed,
        }


@dataclass(frozen=True)
class Report:
    potential_text: str
    spec: SampleSpec
    checks: tuple[CheckResult, ...]
    verdict: str
    inconclusive_checks: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "potential": self.potential_text,
            "spec": self.spec.summary(),
            "checks": [c.to_dict() for c in self.checks],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render_text(self) -> str:
        lines = [f"potential: {self.potential_text}"]
        s = self.spec
        lines.append(
            f"spec: box=[{s.box[0]:g}, {s.box[1]:g}] excluded_radius={s.excluded_radius:g} "
            f"count={s.count} seed={s.seed} abs_tol={s.abs_tol:g} rel_tol={s.rel_tol:g}")
        lines.append(f"{'check':<12} {'max_abs_residual':>18} {'points':>7} "
                     f"{'threshold':>12} {'passed':>7}")
        for c in self.checks:
            flag = "yes" if c.passed else "no"
            if c.name in self.inconclusive_checks:
                flag = "inconclusive"
            lines.append(f"{c.name:<12} {c.max_abs_residual:>18.6e} {c.points_tested:>7} "
                         f"{c.threshold:>12.3e} {flag:>7}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines)


def _run_check(name: str, fields, pts: np.ndarray, spec: SampleSpec) -> tuple[CheckResult, bool]:
    """Sample |field| over pts for every component field of a check.

    Returns the CheckResult and an inconclusive flag (>1% of points had
    evaluation-domain errors without any evaluated point failing).
    """
    n = pts.shape[0]
    ok = np.ones(n, dtype=bool)
    rows = []
    for f in fields:
        vals, errs = evaluate_many(f, pts)
        ok &= errs == 0
        rows.append(vals)
    tested = int(ok.sum())
    if tested:
        stacked = np.abs(np.vstack(rows)[:, ok])
        max_abs = float(stacked.max())
    else:
        max_abs = math.inf
    scale_ref = max((field_scale(f, spec) for f in fields), default=0.0)
    threshold = spec.abs_tol + spec.rel_tol * scale_ref
    passed = max_abs <= threshold
    error_rate = 1.0 - tested / n
    inconclusive = error_rate > INCONCLUSIVE_ERROR_RATE
    return CheckResult(name, max_abs, tested, threshold, passed), inconclusive


def _bivector_is_zero(pi: Bivector, spec: SampleSpec) -> bool:
    return all(is_identically_zero(c, spec) for c in pi.components)


def suite_fields(f: ScalarField) -> dict[str, tuple]:
    """Component fields of the six residual checks for a potential."""
    pi = bivector_from_potential(f)
    d1, d2, d3 = dpi_components(f)
    return {
        "equation_E": equation_e_residual(f).components,
        "dpi": d1.components + d2.components + d3.components,
        "modular": modular_field(pi).components,
        "jacobi": (jacobiator(pi).c,),
        "casimir": casimir_field(f).components,
        "divergence": divergence_residuals(pi),
    }


def run_suite(f: ScalarField, spec: SampleSpec | None = None,
              label: str | None = None) -> Report:
    """Evaluate all six residual checks of `f` on `spec`-sampled points.

    Verdict: degenerate-zero when the bivector of f vanishes identically,
    compatible when every check passes, inconclusive when the only
    failures are checks with >1% evaluation errors, incompatible
    otherwise.
    """
    if spec is None:
        spec = SampleSpec()
    if label is None:
        label = emit(f)
    pts = sample_points(spec)
    checks = []
    inconclusive_names = []
    hard_fail = False
    for name, fields in suite_fields(f).items():
        result, inconclusive = _run_check(name, fields, pts, spec)
        checks.append(result)
        if inconclusive:
            inconclusive_names.append(name)
            log.warning("check %s: >%.0f%% evaluation errors, inconclusive",
                        name, 100 * INCONCLUSIVE_ERROR_RATE)
        elif not result.passed:
            hard_fail = True
    if _bivector_is_zero(bivector_from_potential(f), spec):
        verdict = "degenerate-zero"
    elif hard_fail:
        verdict = "incompatible"
    elif inconclusive_names:
        verdict = "inconclusive"
    elif all(c.passed for c in checks):
        verdict = "compatible"
    else:  # only inconclusive checks failed, already covered above
        verdict = "inconclusive"
    return Report(label, spec, tuple(checks), verdict, tuple(inconclusive_names))


def theorem_equivalence_check(fs, spec: SampleSpec | None = None):
    """For every potential, decide the PDE residual and the compatibility
    tensor independently.  The two flags must agree; a mismatch means the
    harness (not the input) is broken."""
    if spec is None:
        spec = SampleSpec()
    out = []
    for f in fs:
        e_passed = all(is_identically_zero(c, spec)
                       for c in equation_e_residual(f).components)
        dpi_passed = all(is_identically_zero(c, spec)
                         for d in dpi_components(f) for c in d.components)
        out.append((emit(f), e_passed, dpi_passed))
    return out


def _radical_float(rad) -> float:
    return float(sum(float(q) * math.sqrt(r) for r, q in rad.terms.items()))


def sweep_quadratic(grid, spec: SampleSpec | None = None) -> list[CheckResult]:
    """Exact-zero PDE verification of quadratic-family members.

    Each valid (a, b, c) yields a CheckResult whose residual is the
    largest |coefficient| of the expanded PDE residual (0.0 for members,
    which is every valid triple).  Constraint-violating triples are
    skipped and reported through logging.
    """
    results = []
    for a, b, c in grid:
        name = f"quadratic_family({a},{b},{c})"
        try:
            f = quadratic_family(a, b, c)
        except ConstraintError as exc:
            log.warning("skipping %s: %s", name, exc)
            continue
        fp = to_polynomial(f)
        if fp is not None and fp.is_zero():
            results.append(CheckResult(name + "[degenerate-zero]", 0.0, 0, 0.0, True))
            continue
        worst = 0.0
        exact = True
        for comp in equation_e_residual(f).components:
            p = to_polynomial(comp)
            if p is None:
                exact = False
                break
            for rad in p.coeffs.values():
                worst = max(worst, abs(_radical_float(rad)))
        if not exact:
            # family members are polynomial by construction; not reachable
            results.append(CheckResult(name + "[not-expandable]", math.inf, 0, 0.0, False))
            continue
        results.append(CheckResult(name, worst, 0, 0.0, worst <= 0.0))
    return results


def cross_check(f: ScalarField, spec: SampleSpec | None = None, h: float = 1e-4) -> float:
    """Max |symbolic partial - central difference| over sampled points and
    axes; the oracle gate run before trusting any symbolic result.

    Stencil points outside the validity domain are excluded from the max
    (count reported via logging).
    """
    if spec is None:
        spec = SampleSpec()
    if not h > 0:
        raise ValueError(f"step h must be > 0, got {h}")
    pts = sample_points(spec)
    worst = 0.0
    skipped = 0
    for axis in range(3):
        sym_vals, sym_err = evaluate_many(partial(f, axis), pts)
        shift = np.zeros(3)
        shift[axis] = h
        hi_vals, hi_err = evaluate_many(f, pts + shift)
        lo_vals, lo_err = evaluate_many(f, pts - shift)
        ok = (sym_err == 0) & (hi_err == 0) & (lo_err == 0)
        skipped += int((~ok).sum())
        if ok.any():
            fd = (hi_vals[ok] - lo_vals[ok]) / (2.0 * h)
            worst = max(worst, float(np.max(np.abs(sym_vals[ok] - fd))))
    if skipped:
        log.info("cross_check: %d stencil evaluations outside the domain", skipped)
    return worst


def fd_gate_threshold(f: ScalarField, spec: SampleSpec, h: float) -> float:
    """Error budget for cross_check: 10 h^2 * (positivized field scale)."""
    return 10.0 * h * h * field_scale(f, spec)
