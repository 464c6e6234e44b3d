"""Exact polynomial expansion for the two-tier zero test.

Coefficients live in Q extended by square roots of positive rationals:
a `Radical` is a finite sum  sum_r  q_r * sqrt(r)  with squarefree
integer radicands r (r = 1 is the rational part).  This is exactly what
the degree-2 family needs: its sqrt(ab)-style constants multiply out
exactly (sqrt(6)*sqrt(10) = 2*sqrt(15)) so residuals can be tested for
literal zero with no tolerance.

Fields that do not expand (fractional powers of non-constants, exotic
quotients) report None from `to_polynomial` and fall back to sampling.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from . import expr
from .expr import ScalarField

_RADICAND_LIMIT = 10**12

Mono = tuple[int, int, int]


class _NotPolynomial(Exception):
    pass


def _split_square(n: int) -> tuple[int, int]:
    """n = m^2 * r with r squarefree; n must be >= 1 and desk-scale."""
    if n > _RADICAND_LIMIT:
        raise _NotPolynomial("radicand too large for exact reduction")
    m, r, d = 1, 1, 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            m *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    if n > 1:
        r *= n
    return m, r


class Radical:
    """Exact element of Q(sqrt(r1), sqrt(r2), ...)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction]):
        self.terms = {r: q for r, q in terms.items() if q != 0}

    @classmethod
    def from_fraction(cls, q) -> "Radical":
        return cls({1: Fraction(q)})

    @classmethod
    def from_sqrt(cls, c: Fraction) -> "Radical":
        """sqrt(c) for rational c >= 0."""
        if c < 0:
            raise _NotPolynomial("sqrt of a negative constant")
        if c == 0:
            return cls({})
        m, r = _split_square(c.numerator * c.denominator)
        return cls({r: Fraction(m, c.denominator)})

    def __add__(self, other: "Radical") -> "Radical":
        out = dict(self.terms)
        for r, q in other.terms.items():
            out[r] = out.get(r, Fraction(0)) + q
        return Radical(out)

    def __neg__(self) -> "Radical":
        return Radical({r: -q for r, q in self.terms.items()})

    def __sub__(self, other: "Radical") -> "Radical":
        return self + (-other)

    def __mul__(self, other: "Radical") -> "Radical":
        out: dict[int, Fraction] = {}
        for r1, q1 in self.terms.items():
            for r2, q2 in other.terms.items():
                g = gcd(r1, r2)
                rad = (r1 // g) * (r2 // g)
                out[rad] = out.get(rad, Fraction(0)) + q1 * q2 * g
        return Radical(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Radical) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return set(self.terms) <= {1}

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise _NotPolynomial("irrational constant where a rational is required")
        return self.terms.get(1, Fraction(0))

    def invert(self) -> "Radical":
        """Reciprocal; only single-term radicals are supported."""
        if len(self.terms) != 1:
            raise _NotPolynomial("cannot invert a multi-term radical constant")
        ((r, q),) = self.terms.items()
        # 1/(q*sqrt(r)) = sqrt(r)/(q*r)
        return Radical({r: Fraction(1) / (q * r)})

    def pow_int(self, n: int) -> "Radical":
        base = self if n >= 0 else self.invert()
        n = abs(n)
        out = Radical.from_fraction(1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self) -> "Radical":
        c = self.as_fraction()
        return Radical.from_sqrt(c)

    def to_field(self) -> ScalarField:
        if not self.terms:
            return expr.const(0)
        parts = []
        for r in sorted(self.terms):
            q = self.terms[r]
            if r == 1:
                parts.append(expr.const(q))
            else:
                parts.append(expr.mul(expr.const(q), expr.sqrt_of(expr.const(r))))
        return expr.add(*parts)

    def __repr__(self):
        return f"Radical({self.terms!r})"


_RAD_ZERO = Radical({})
_RAD_ONE = Radical.from_fraction(1)


class Polynomial:
    """Sparse polynomial in (x, y, z) with Radical coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Mono, Radical]):
        self.coeffs = {m: c for m, c in coeffs.items() if not c.is_zero()}

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls({})

    @classmethod
    def constant(cls, c: Radical) -> "Polynomial":
        return cls({(0, 0, 0): c})

    @classmethod
    def coordinate(cls, axis: int) -> "Polynomial":
        mono = tuple(1 if k == axis else 0 for k in range(3))
        return cls({mono: _RAD_ONE})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, _RAD_ZERO) + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Mono, Radical] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                prod = c1 * c2
                out[m] = out.get(m, _RAD_ZERO) + prod
        return Polynomial(out)

    def scale(self, c: Radical) -> "Polynomial":
        return Polynomial({m: c * q for m, q in self.coeffs.items()})

    def pow_int(self, n: int) -> "Polynomial":
        if n < 0:
            raise _NotPolynomial("negative power of a non-constant polynomial")
        out = Polynomial.constant(_RAD_ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return set(self.coeffs) <= {(0, 0, 0)}

    def constant_radical(self) -> Radical:
        if not self.is_constant():
            raise _NotPolynomial("non-constant polynomial where a constant is required")
        return self.coeffs.get((0, 0, 0), _RAD_ZERO)

    def degree(self) -> int:
        return max((sum(m) for m in self.coeffs), default=0)

    def involves_axis(self, axis: int) -> bool:
        return any(m[axis] > 0 for m in self.coeffs)

    def derivative(self, axis: int) -> "Polynomial":
        out: dict[Mono, Radical] = {}
        for m, c in self.coeffs.items():
            if m[axis] == 0:
                continue
            lowered = list(m)
            lowered[axis] -= 1
            out[tuple(lowered)] = c * Radical.from_fraction(m[axis])
        return Polynomial(out)

    def integrate(self, axis: int) -> "Polynomial":
        out: dict[Mono, Radical] = {}
        for m, c in self.coeffs.items():
            raised = list(m)
            raised[axis] += 1
            out[tuple(raised)] = c * Radical.from_fraction(Fraction(1, m[axis] + 1))
        return Polynomial(out)

    def sorted_monomials(self) -> list[Mono]:
        # descending total degree, ties by descending (x, y, z) exponents
        return sorted(self.coeffs, key=lambda m: (-sum(m), -m[0], -m[1], -m[2]))

    def to_field(self) -> ScalarField:
        """Rebuild an expression tree in canonical monomial order."""
        terms = []
        for m in self.sorted_monomials():
            factors = [self.coeffs[m].to_field()]
            for axis in range(3):
                if m[axis]:
                    factors.append(expr.power(expr.COORDS[axis], m[axis]))
            terms.append(expr.mul(*factors))
        return expr.add(*terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"


def _expand(f: ScalarField) -> Polynomial:
    if isinstance(f, expr.Const):
        return Polynomial.constant(Radical.from_fraction(f.value))
    if isinstance(f, expr.Var):
        return Polynomial.coordinate(f.axis)
    if isinstance(f, expr.Add):
        out = Polynomial.zero()
        for t in f.terms:
            out = out + _expand(t)
        return out
    if isinstance(f, expr.Mul):
        out = Polynomial.constant(_RAD_ONE)
        for g in f.factors:
            out = out * _expand(g)
        return out
    if isinstance(f, expr.Div):
        num = _expand(f.num)
        den = _expand(f.den).constant_radical()
        if den.is_zero():
            raise _NotPolynomial("division by the zero constant")
        return num.scale(den.invert())
    if isinstance(f, expr.Pow):
        base = _expand(f.base)
        e = f.exponent
        if e.denominator == 1:
            n = e.numerator
            if n >= 0:
                return base.pow_int(n)
            return Polynomial.constant(base.constant_radical().invert().pow_int(-n))
        # fractional power: only exact constants survive
        c = base.constant_radical()
        if e.denominator == 2:
            root = c.sqrt()
        else:
            exact = expr._fraction_pow_exact(c.as_fraction(), Fraction(1, e.denominator))
            if exact is None:
                raise _NotPolynomial("constant has no exact rational root")
            root = Radical.from_fraction(exact)
        return Polynomial.constant(root.pow_int(e.numerator))
    if isinstance(f, expr.Sqrt):
        return Polynomial.constant(_expand(f.arg).constant_radical().sqrt())
    raise _NotPolynomial(f"cannot expand {type(f).__name__}")


def to_polynomial(f: ScalarField):
    """Exact expansion of `f`, or None when `f` is not recognized as
    a polynomial (with radical constants)."""
    try:
        return _expand(f)
    except _NotPolynomial:
        return None


def canonical_str(f: ScalarField) -> str:
    """Canonical text: expanded monomial form for polynomials, the
    simplified tree otherwise."""
    p = to_polynomial(f)
    if p is None:
        return expr.emit(f)
    return expr.emit(p.to_field())
