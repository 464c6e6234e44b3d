"""Tensor objects on R^3 and the operations the verifier checks.

Everything is symbolic: one-forms, vector fields, and bivectors are
triples of scalar fields, the contravariant Levi-Civita connection is
assembled from its six-term defining identity, and derived objects
(Christoffel entries, the compatibility tensor, the modular field, the
characterizing PDE residual) come out as expression trees that the
verify module samples or expands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConstraintError, NotClosedError, QuadratureDomainError
from .scalarfield import (
    COORDS,
    SampleSpec,
    ScalarField,
    add,
    const,
    evaluate_many,
    gradient,
    is_identically_zero,
    laplacian,
    mul,
    partial,
    power,
    sqrt_of,
)
from .scalarfield.expr import _ZERO
from .scalarfield.poly import to_polynomial
from .scalarfield.sampling import as_point

_HALF = const(Fraction(1, 2))


@dataclass(frozen=True)
class OneForm:
    """a1 dx + a2 dy + a3 dz."""

    a1: ScalarField
    a2: ScalarField
    a3: ScalarField

    @property
    def components(self) -> tuple[ScalarField, ScalarField, ScalarField]:
        return (self.a1, self.a2, self.a3)

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(*[add(a, b) for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(*[a - b for a, b in zip(self.components, other.components)])

    def scaled(self, s) -> "OneForm":
        return OneForm(*[mul(s, a) for a in self.components])


@dataclass(frozen=True)
class VectorField:
    """v1 d/dx + v2 d/dy + v3 d/dz."""

    v1: ScalarField
    v2: ScalarField
    v3: ScalarField

    @property
    def components(self) -> tuple[ScalarField, ScalarField, ScalarField]:
        return (self.v1, self.v2, self.v3)

    def apply_to(self, g: ScalarField) -> ScalarField:
        """Directional derivative: sum_i v_i dg/dx_i."""
        return add(*[mul(v, partial(g, k)) for k, v in enumerate(self.components)])


@dataclass(frozen=True)
class Bivector:
    """p12 dx^dy + p13 dx^dz + p23 dy^dz (coefficients on d/dx etc.)."""

    p12: ScalarField
    p13: ScalarField
    p23: ScalarField

    @property
    def components(self) -> tuple[ScalarField, ScalarField, ScalarField]:
        return (self.p12, self.p13, self.p23)

    def scaled(self, g) -> "Bivector":
        return Bivector(*[mul(g, c) for c in self.components])


@dataclass(frozen=True)
class Trivector:
    """c d/dx ^ d/dy ^ d/dz."""

    c: ScalarField


ZERO_FORM = OneForm(_ZERO, _ZERO, _ZERO)
DX = OneForm(const(1), _ZERO, _ZERO)
DY = OneForm(_ZERO, const(1), _ZERO)
DZ = OneForm(_ZERO, _ZERO, const(1))
COFRAME = (DX, DY, DZ)


def differential(f: ScalarField) -> OneForm:
    """Exterior derivative df."""
    return OneForm(*gradient(f))


class MetricGram:
    """Constant Gram matrix of the coframe inner products.

    The verifier always runs with the identity (the canonical metric);
    the matrix is threaded through the connection anyway so other
    constant metrics can be explored.
    """

    def __init__(self, entries=None):
        if entries is None:
            entries = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
        entries = [[Fraction(e) for e in row] for row in entries]
        for i in range(3):
            for j in range(3):
                if entries[i][j] != entries[j][i]:
                    raise ConstraintError("Gram matrix must be symmetric")
        self.entries = tuple(tuple(row) for row in entries)
        self._inverse = None

    def is_identity(self) -> bool:
        return all(self.entries[i][j] == (1 if i == j else 0)
                   for i in range(3) for j in range(3))

    def inner(self, alpha: OneForm, beta: OneForm) -> ScalarField:
        """<alpha, beta> as a scalar field."""
        terms = []
        for i in range(3):
            for j in range(3):
                g = self.entries[i][j]
                if g != 0:
                    terms.append(mul(const(g), alpha.components[i], beta.components[j]))
        return add(*terms)

    def inverse_entries(self):
        if self._inverse is None:
            m = self.entries
            det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                   - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                   + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
            if det == 0:
                raise ConstraintError("Gram matrix is singular")
            cof = [[Fraction(0)] * 3 for _ in range(3)]
            for i in range(3):
                for j in range(3):
                    r = [k for k in range(3) if k != i]
                    c = [k for k in range(3) if k != j]
                    minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
                    cof[j][i] = (-1) ** (i + j) * minor / det
            self._inverse = tuple(tuple(row) for row in cof)
        return self._inverse


IDENTITY_GRAM = MetricGram()


@dataclass(frozen=True)
class ChristoffelTable:
    """gamma[i][j][k] with D_{dx_i} dx_j = sum_k gamma[i][j][k] dx_k (0-indexed)."""

    gamma: tuple

    def entry(self, i: int, j: int, k: int) -> ScalarField:
        """1-indexed accessor matching the usual Gamma_ij^k notation."""
        return self.gamma[i - 1][j - 1][k - 1]


def bivector_from_potential(f: ScalarField) -> Bivector:
    """Curl-form bivector of a potential: (df/dz, -df/dy, df/dx)."""
    fx, fy, fz = gradient(f)
    return Bivector(fz, mul(-1, fy), fx)


def divergence_residuals(pi: Bivector):
    """The three first-order constraints whose vanishing makes
    p23 dx - p13 dy + p12 dz a closed 1-form."""
    p12, p13, p23 = pi.components
    return (
        add(partial(p12, "y"), partial(p13, "z")),
        add(partial(p12, "x"), mul(-1, partial(p23, "z"))),
        add(partial(p13, "x"), partial(p23, "y")),
    )


def sharp(pi: Bivector, alpha: OneForm) -> VectorField:
    """The bundle map image pi(alpha), fixed by beta[pi(alpha)] = pi(alpha, beta)."""
    a1, a2, a3 = alpha.components
    p12, p13, p23 = pi.components
    return VectorField(
        add(mul(-1, a2, p12), mul(-1, a3, p13)),
        add(mul(a1, p12), mul(-1, a3, p23)),
        add(mul(a1, p13), mul(a2, p23)),
    )


def pairing(pi: Bivector, alpha: OneForm, beta: OneForm) -> ScalarField:
    """pi(alpha, beta) = beta[pi(alpha)]; antisymmetric."""
    v = sharp(pi, alpha)
    return add(*[mul(b, vi) for b, vi in zip(beta.components, v.components)])


def j_map(pi: Bivector, alpha: OneForm) -> OneForm:
    """The skew endomorphism J with pi(alpha, beta) = <J alpha, beta>
    (identity Gram: J has the same component matrix as the bundle map)."""
    a1, a2, a3 = alpha.components
    p12, p13, p23 = pi.components
    return OneForm(
        add(mul(-1, a2, p12), mul(-1, a3, p13)),
        add(mul(a1, p12), mul(-1, a3, p23)),
        add(mul(a1, p13), mul(a2, p23)),
    )


def lie_derivative_oneform(x: VectorField, beta: OneForm) -> OneForm:
    """(L_X beta)_j = X(b_j) + sum_i b_i d(v_i)/dx_j (Cartan on components)."""
    comps = []
    for j in range(3):
        terms = [x.apply_to(beta.components[j])]
        for i in range(3):
            terms.append(mul(beta.components[i], partial(x.components[i], j)))
        comps.append(add(*terms))
    return OneForm(*comps)


def lie_bracket_pi(pi: Bivector, alpha: OneForm, beta: OneForm) -> OneForm:
    """[alpha, beta]_pi = L_{pi(alpha)} beta - L_{pi(beta)} alpha - d(pi(alpha, beta))."""
    la = lie_derivative_oneform(sharp(pi, alpha), beta)
    lb = lie_derivative_oneform(sharp(pi, beta), alpha)
    dp = differential(pairing(pi, alpha, beta))
    return la - lb - dp


def koszul_connection(pi: Bivector, alpha: OneForm, beta: OneForm,
                      gram: MetricGram = IDENTITY_GRAM) -> OneForm:
    """D_alpha beta: the torsion-free metric contravariant connection,
    assembled from its six-term defining identity against `gram`."""
    x_alpha = sharp(pi, alpha)
    x_beta = sharp(pi, beta)
    bracket_ab = lie_bracket_pi(pi, alpha, beta)
    rhs = []
    for k in range(3):
        gamma_form = COFRAME[k]
        x_gamma = sharp(pi, gamma_form)
        terms = [
            x_alpha.apply_to(gram.inner(beta, gamma_form)),
            x_beta.apply_to(gram.inner(alpha, gamma_form)),
            mul(-1, x_gamma.apply_to(gram.inner(alpha, beta))),
            gram.inner(bracket_ab, gamma_form),
            gram.inner(lie_bracket_pi(pi, gamma_form, alpha), beta),
            gram.inner(lie_bracket_pi(pi, gamma_form, beta), alpha),
        ]
        rhs.append(mul(_HALF, add(*terms)))
    if gram.is_identity():
        return OneForm(*rhs)
    inv = gram.inverse_entries()
    comps = [add(*[mul(const(inv[m][k]), rhs[k]) for k in range(3)]) for m in range(3)]
    return OneForm(*comps)


def christoffel_table(f: ScalarField, gram: MetricGram = IDENTITY_GRAM) -> ChristoffelTable:
    """All 27 connection coefficients of the curl-form bivector of `f`."""
    pi = bivector_from_potential(f)
    table = []
    for i in range(3):
        row = []
        for j in range(3):
            row.append(koszul_connection(pi, COFRAME[i], COFRAME[j], gram).components)
        table.append(tuple(row))
    return ChristoffelTable(tuple(table))


def modular_field(pi: Bivector, gram: MetricGram = IDENTITY_GRAM) -> VectorField:
    """The derivation f -> sum_i <D_{dx_i} df, dx_i> as a vector field;
    its k-th coordinate is sum_i <D_{dx_i} dx_k, dx_i>."""
    comps = []
    for k in range(3):
        terms = []
        for i in range(3):
            d = koszul_connection(pi, COFRAME[i], COFRAME[k], gram)
            terms.append(gram.inner(d, COFRAME[i]))
        comps.append(add(*terms))
    return VectorField(*comps)


_WEDGE_PAIRS = ((0, 1), (0, 2), (1, 2))


def dpi_components(f: ScalarField):
    """(D_{dx} pi, D_{dy} pi, D_{dz} pi) of the curl-form bivector,
    by Leibniz expansion over the wedge basis with the connection
    coefficients of `f`; all three vanish iff the pair is compatible."""
    pi = bivector_from_potential(f)
    gamma = christoffel_table(f).gamma
    coeff = dict(zip(_WEDGE_PAIRS, pi.components))
    out = []
    for i in range(3):
        x_i = sharp(pi, COFRAME[i])
        acc = {pair: [] for pair in _WEDGE_PAIRS}

        def put(a, b, field):
            if a == b:
                return
            if a < b:
                acc[(a, b)].append(field)
            else:
                acc[(b, a)].append(mul(-1, field))

        for (j, k), w in coeff.items():
            put(j, k, x_i.apply_to(w))
            # identity metric identifies D_{dx_i} d/dx_j with the dx_j row
            for m in range(3):
                put(m, k, mul(w, gamma[i][j][m]))
                put(j, m, mul(w, gamma[i][k][m]))
        out.append(Bivector(*[add(*acc[pair]) if acc[pair] else _ZERO
                              for pair in _WEDGE_PAIRS]))
    return tuple(out)


def equation_e_residual(f: ScalarField) -> OneForm:
    """d(<df,df>) - Laplacian(f) df; identically zero exactly when the
    curl-form bivector of f is compatible with the canonical metric."""
    grad = gradient(f)
    norm2 = add(*[mul(g, g) for g in grad])
    lap = laplacian(f)
    return OneForm(*[add(partial(norm2, k), mul(-1, lap, grad[k])) for k in range(3)])


def jacobiator(pi: Bivector) -> Trivector:
    """Schouten self-bracket coefficient on d/dx^d/dy^d/dz; zero iff the
    bivector satisfies the Jacobi identity.  Sign convention fixed by
    the cyclic expansion below."""
    a, b, c = pi.components
    j = add(
        mul(a, partial(c, "y")),
        mul(b, partial(c, "z")),
        mul(a, partial(b, "x")),
        mul(-1, c, partial(b, "z")),
        mul(-1, b, partial(a, "x")),
        mul(-1, c, partial(a, "y")),
    )
    return Trivector(j)


def casimir_field(f: ScalarField) -> VectorField:
    """pi(df) for the curl-form bivector of f; identically zero, i.e. f
    is a Casimir function of its own bivector."""
    return sharp(bivector_from_potential(f), differential(f))


def scaled_koszul(g: ScalarField, pi: Bivector, alpha: OneForm, beta: OneForm,
                  gram: MetricGram = IDENTITY_GRAM) -> OneForm:
    """Connection of the rescaled bivector g*pi in closed form:
    g D_alpha beta + (1/2) pi(alpha,beta) dg - (1/2)<dg,beta> J alpha
    - (1/2)<dg,alpha> J beta.  Agrees with koszul_connection(g*pi, ...)."""
    base = koszul_connection(pi, alpha, beta, gram).scaled(g)
    dg = differential(g)
    t2 = dg.scaled(mul(_HALF, pairing(pi, alpha, beta)))
    t3 = j_map(pi, alpha).scaled(mul(-1, _HALF, gram.inner(dg, beta)))
    t4 = j_map(pi, beta).scaled(mul(-1, _HALF, gram.inner(dg, alpha)))
    return base + t2 + t3 + t4


def quadratic_family(a, b, c) -> ScalarField:
    """The degree-2 solution family
    (a+c)x^2 + (a+b)y^2 + (b+c)z^2 - 2 sqrt(bc) xy + 2 sqrt(ab) xz + 2 sqrt(ac) yz,
    defined when ab, ac, bc are all nonnegative.  sqrt constants are kept
    exact so residuals expand to literal zero."""
    fa, fb, fc = Fraction(a), Fraction(b), Fraction(c)
    for name, prod in (("ab", fa * fb), ("ac", fa * fc), ("bc", fb * fc)):
        if prod < 0:
            raise ConstraintError(f"pairwise product {name} = {prod} is negative")
    x, y, z = COORDS
    return add(
        mul(const(fa + fc), power(x, 2)),
        mul(const(fa + fb), power(y, 2)),
        mul(const(fb + fc), power(z, 2)),
        mul(-2, sqrt_of(const(fb * fc)), x, y),
        mul(2, sqrt_of(const(fa * fb)), x, z),
        mul(2, sqrt_of(const(fa * fc)), y, z),
    )


def so3_potential() -> ScalarField:
    """(x^2+y^2+z^2)^(3/2): its curl-form bivector is the radius-scaled
    so(3) structure, compatible with the canonical metric away from 0."""
    x, y, z = COORDS
    return power(add(mul(x, x), mul(y, y), mul(z, z)), Fraction(3, 2))


def so3_bivector() -> Bivector:
    """The linear so(3) structure (z, -y, x)."""
    x, y, z = COORDS
    return Bivector(z, mul(-1, y), x)


class QuadratureField:
    """Potential reconstructed by a straight-segment line integral from
    the origin; supports evaluation only (no symbolic derivatives)."""

    _NODES = 64

    def __init__(self, pi: Bivector):
        self.pi = pi
        u, w = np.polynomial.legendre.leggauss(self._NODES)
        self._t = 0.5 * (u + 1.0)
        self._w = 0.5 * w

    def evaluate(self, p) -> float:
        x, y, z = as_point(p).as_tuple()
        pts = self._t[:, None] * np.array([[x, y, z]])
        total = np.zeros(self._NODES)
        for sign_coord, comp in ((x, self.pi.p23), (-y, self.pi.p13), (z, self.pi.p12)):
            vals, errs = evaluate_many(comp, pts)
            if errs.any():
                raise QuadratureDomainError(
                    f"segment from origin to {(x, y, z)} leaves the validity domain")
            total += sign_coord * vals
        return float(np.dot(self._w, total))


def potential_from_bivector(pi: Bivector, spec: SampleSpec | None = None):
    """Reconstruct f with grad f = (p23, -p13, p12) and f(0,0,0) = 0.

    Polynomial bivectors integrate term by term (exact); other closed
    bivectors yield a QuadratureField.  Raises NotClosedError when the
    divergence residuals do not vanish on `spec`.
    """
    if spec is None:
        spec = SampleSpec()
    residuals = divergence_residuals(pi)
    if not all(is_identically_zero(r, spec) for r in residuals):
        raise NotClosedError("bivector is not closed: divergence residuals do not vanish",
                             residuals)
    w = (pi.p23, mul(-1, pi.p13), pi.p12)
    polys = [to_polynomial(c) for c in w]
    if any(p is None for p in polys):
        return QuadratureField(pi)
    g1 = polys[0].integrate(0)
    r2 = polys[1] - g1.derivative(1)
    if r2.involves_axis(0):
        raise NotClosedError("exact closedness check failed during integration", residuals)
    g2 = r2.integrate(1)
    r3 = polys[2] - (g1 + g2).derivative(2)
    if r3.involves_axis(0) or r3.involves_axis(1):
        raise NotClosedError("exact closedness check failed during integration", residuals)
    g3 = r3.integrate(2)
    return (g1 + g2 + g3).to_field()
