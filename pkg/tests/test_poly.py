"""Exact expansion tier: radical arithmetic and the polynomial zero test."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from poiscompat.scalarfield import (
    SampleSpec,
    X,
    Y,
    add,
    canonical_str,
    const,
    div,
    evaluate,
    is_identically_zero,
    mul,
    parse,
    power,
    sqrt_of,
    to_polynomial,
)
from poiscompat.scalarfield.poly import Radical

from .conftest import polynomial_fields


class TestRadical:
    def test_sqrt_reduction(self):
        assert Radical.from_sqrt(Fraction(8)) == Radical({2: Fraction(2)})
        assert Radical.from_sqrt(Fraction(4, 9)) == Radical({1: Fraction(2, 3)})
        assert Radical.from_sqrt(Fraction(1, 2)) == Radical({2: Fraction(1, 2)})

    def test_product_reduces_common_factor(self):
        # sqrt(6)*sqrt(10) = 2*sqrt(15)
        a = Radical.from_sqrt(Fraction(6))
        b = Radical.from_sqrt(Fraction(10))
        assert a * b == Radical({15: Fraction(2)})

    def test_square_is_rational(self):
        s = Radical.from_sqrt(Fraction(2))
        assert (s * s).as_fraction() == 2

    def test_invert_single_term(self):
        s = Radical({2: Fraction(3)})  # 3*sqrt(2)
        inv = s.invert()
        assert (s * inv).as_fraction() == 1


class TestExpansion:
    def test_binomial_identity(self):
        f = parse("(x+y)^2 - x^2 - 2*x*y - y^2")
        p = to_polynomial(f)
        assert p is not None and p.is_zero()

    def test_coordinate_is_not_zero(self):
        assert not to_polynomial(X).is_zero()

    def test_constant_denominators(self):
        p = to_polynomial(parse("(x^2+y^2+z^2)/2"))
        assert p is not None
        assert p.coeffs[(2, 0, 0)] == Radical.from_fraction(Fraction(1, 2))

    def test_sqrt_constant_coefficients(self):
        p = to_polynomial(mul(sqrt_of(const(2)), X))
        assert p is not None
        assert p.coeffs[(1, 0, 0)] == Radical.from_sqrt(Fraction(2))

    def test_fractional_power_of_variable_base_bails(self):
        assert to_polynomial(parse("(x^2+y^2+z^2)^(3/2)")) is None

    def test_quotient_by_field_bails(self):
        assert to_polynomial(div(X, Y)) is None

    def test_constant_three_halves_power(self):
        # 4^(3/2) = 8 via the radical route
        p = to_polynomial(power(const(4), Fraction(3, 2)))
        assert p.constant_radical().as_fraction() == 8

    @settings(max_examples=40, deadline=None)
    @given(polynomial_fields())
    def test_expansion_matches_evaluation(self, f):
        p = to_polynomial(f)
        assert p is not None
        g = p.to_field()
        rng = random.Random(5)
        for _ in range(5):
            pt = tuple(rng.uniform(-2, 2) for _ in range(3))
            assert evaluate(f, pt) == pytest.approx(evaluate(g, pt), rel=1e-9, abs=1e-9)


class TestZeroTest:
    def test_exact_tier(self, spec):
        f = parse("(x+y)^2 - x^2 - 2*x*y - y^2")
        assert is_identically_zero(f, spec)

    def test_nonzero_coordinate(self, spec):
        assert not is_identically_zero(X, spec)

    def test_sampled_tier_radial_identity(self, spec):
        # d(|grad g|^2)_x - Lap(g) dg/dx for g = (x^2+y^2+z^2)^(3/2)
        from poiscompat.scalarfield import gradient, laplacian, partial

        g = parse("(x^2+y^2+z^2)^(3/2)")
        gx, gy, gz = gradient(g)
        norm2 = add(mul(gx, gx), mul(gy, gy), mul(gz, gz))
        residual = partial(norm2, "x") - mul(laplacian(g), gx)
        assert to_polynomial(residual) is None  # really exercises sampling
        assert is_identically_zero(residual, spec)

    def test_sampled_tier_rejects_tiny_but_nonzero(self):
        spec = SampleSpec(abs_tol=1e-12, rel_tol=1e-12)
        assert not is_identically_zero(mul(const(1e-6), X), spec)


class TestCanonicalForm:
    def test_monomial_order(self):
        f = parse("z^2 + x*y + 1 + x^2 + y")
        assert canonical_str(f) == "x^2+x*y+z^2+y+1"

    def test_single_monomial(self):
        assert canonical_str(parse("z*y*x")) == "x*y*z"

    def test_negative_leading_coefficient(self):
        assert canonical_str(parse("-y")) == "-y"

    def test_rational_coefficients(self):
        assert canonical_str(parse("(x^2+y^2+z^2)/2")) == "1/2*x^2+1/2*y^2+1/2*z^2"

    def test_radical_coefficients_reparse(self):
        f = parse("sqrt(2)*x*z - sqrt(8)*y")
        s = canonical_str(f)
        assert is_identically_zero(parse(s) - f)

    def test_non_polynomial_echoes_tree(self):
        assert canonical_str(parse("(x^2+y^2+z^2)^(3/2)")) == "(x^2+y^2+z^2)^(3/2)"

    def test_zero(self):
        assert canonical_str(parse("x-x")) == "0"
