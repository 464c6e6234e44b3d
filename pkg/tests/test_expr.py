"""Symbolic engine: derivatives, laplacian, local simplification, emit."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from poiscompat.scalarfield import (
    X,
    Y,
    Z,
    add,
    const,
    div,
    emit,
    evaluate,
    fd_partial,
    gradient,
    is_identically_zero,
    laplacian,
    mul,
    parse,
    partial,
    power,
    sqrt_of,
)
from poiscompat.scalarfield.expr import Mul

from .conftest import polynomial_fields


def random_points(n, seed=0, lo=-2.0, hi=2.0):
    rng = random.Random(seed)
    return [(rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi))
            for _ in range(n)]


class TestSimplification:
    def test_zero_sum_dropped(self):
        assert add(X, const(0)) == X

    def test_one_factor_dropped(self):
        assert mul(const(1), Y) == Y

    def test_zero_annihilates_product(self):
        assert mul(const(0), X, Y) == const(0)

    def test_constant_folding(self):
        assert add(const(2), const(3)) == const(5)
        assert mul(const(2), const(Fraction(3, 2))) == const(3)
        assert div(const(3), const(2)) == const(Fraction(3, 2))

    def test_power_collapsing(self):
        assert power(power(X, 2), 3) == power(X, 6)
        assert power(power(X, Fraction(3, 2)), 2) == power(X, 3)

    def test_power_trivia(self):
        assert power(X, 0) == const(1)
        assert power(X, 1) == X
        assert power(const(4), Fraction(1, 2)) == const(2)

    def test_sqrt_of_perfect_square(self):
        assert sqrt_of(const(Fraction(4, 9))) == const(Fraction(2, 3))
        assert emit(sqrt_of(const(2))) == "sqrt(2)"

    def test_no_global_canonicalization(self):
        # x*x is not rewritten to x^2; identity questions go to the zero test
        assert isinstance(mul(X, X), Mul)


class TestPartial:
    def test_power_rule(self):
        f = mul(power(X, 2), Y)
        assert partial(f, "x") == mul(const(2), X, Y)

    def test_constant_rule(self):
        assert partial(const(7), "x") == const(0)

    def test_chain_rule_radial_cubed(self):
        # oracle: central differences at 100 random points
        f = power(add(power(X, 2), power(Y, 2), power(Z, 2)), Fraction(3, 2))
        fx = partial(f, "x")
        for p in random_points(100, seed=3):
            sym = evaluate(fx, p)
            fd = fd_partial(f, p, "x", 1e-4)
            assert sym == pytest.approx(fd, rel=1e-6, abs=1e-6)

    def test_chain_rule_closed_form(self):
        # 3*x*(x^2+y^2+z^2)^(1/2), checked as an identity
        f = power(add(power(X, 2), power(Y, 2), power(Z, 2)), Fraction(3, 2))
        expected = mul(const(3), X,
                       power(add(power(X, 2), power(Y, 2), power(Z, 2)), Fraction(1, 2)))
        assert is_identically_zero(partial(f, "x") - expected)

    def test_quotient_rule(self):
        f = div(X, Y)
        for p in random_points(50, seed=4):
            if abs(p[1]) < 1e-3:
                continue
            assert evaluate(partial(f, "y"), p) == pytest.approx(
                fd_partial(f, p, "y", 1e-5), rel=1e-5, abs=1e-8)

    @settings(max_examples=40, deadline=None)
    @given(polynomial_fields())
    def test_partials_commute(self, f):
        mixed = partial(partial(f, "x"), "y") - partial(partial(f, "y"), "x")
        assert is_identically_zero(mixed)


class TestGradientLaplacian:
    def test_gradient_simple(self):
        assert gradient(add(power(X, 2), power(Y, 2))) == (mul(const(2), X),
                                                           mul(const(2), Y), const(0))
        assert gradient(mul(X, Y, Z)) == (mul(Y, Z), mul(X, Z), mul(X, Y))

    def test_gradient_radial(self):
        f = div(add(power(X, 2), power(Y, 2), power(Z, 2)), const(2))
        gx, gy, gz = gradient(f)
        assert is_identically_zero(gx - X)
        assert is_identically_zero(gy - Y)
        assert is_identically_zero(gz - Z)

    def test_laplacian_values(self):
        assert is_identically_zero(laplacian(add(power(X, 2), power(Y, 2))) - const(4))
        r2_half = div(add(power(X, 2), power(Y, 2), power(Z, 2)), const(2))
        assert is_identically_zero(laplacian(r2_half) - const(3))

    def test_laplacian_radial_cubed(self):
        # hand expansion: 12*(x^2+y^2+z^2)^(1/2); fd second differences agree
        r2 = add(power(X, 2), power(Y, 2), power(Z, 2))
        f = power(r2, Fraction(3, 2))
        expected = mul(const(12), power(r2, Fraction(1, 2)))
        assert is_identically_zero(laplacian(f) - expected)
        h = 1e-4
        for p in random_points(10, seed=9, lo=0.5, hi=2.0):
            fd2 = sum(
                (evaluate(f, _shift(p, k, h)) - 2 * evaluate(f, p)
                 + evaluate(f, _shift(p, k, -h))) / h**2
                for k in range(3))
            assert evaluate(laplacian(f), p) == pytest.approx(fd2, rel=1e-5)

    @settings(max_examples=30, deadline=None)
    @given(polynomial_fields())
    def test_laplacian_is_sum_of_iterated_partials(self, f):
        explicit = add(*[partial(partial(f, k), k) for k in range(3)])
        assert is_identically_zero(laplacian(f) - explicit)


def _shift(p, axis, h):
    q = list(p)
    q[axis] += h
    return tuple(q)


class TestFdOracle:
    def test_exact_for_quadratics(self):
        f = power(X, 2)
        assert fd_partial(f, (1, 0, 0), "x", 1e-4) == pytest.approx(2.0, abs=1e-7)

    def test_cubic_taylor_remainder(self):
        # (f(1+h)-f(1-h))/2h = 3 + h^2 exactly for x^3
        f = power(X, 3)
        h = 1e-3
        got = fd_partial(f, (1, 0, 0), "x", h)
        assert got - 3.0 == pytest.approx(h * h, rel=1e-4)

    def test_domain_error_at_stencil(self):
        from poiscompat.errors import EvalDomainError

        with pytest.raises(EvalDomainError):
            fd_partial(sqrt_of(X), (1e-9, 0, 0), "x", 1e-4)

    def test_rejects_nonpositive_step(self):
        with pytest.raises(ValueError):
            fd_partial(X, (0, 0, 0), "x", 0.0)

    def test_convergence_order(self):
        # |symbolic - fd| ~ C h^2: halving-style step drop 1e-3 -> 1e-4
        # must show observed order >= 1.9 on fields with nonzero f'''
        for f in (power(X, 3), power(add(power(X, 2), power(Y, 2), power(Z, 2)),
                                     Fraction(3, 2))):
            errs = {}
            for h in (1e-3, 1e-4):
                worst = 0.0
                for p in random_points(100, seed=11, lo=0.5, hi=2.0):
                    for axis in range(3):
                        sym = evaluate(partial(f, axis), p)
                        worst = max(worst, abs(sym - fd_partial(f, p, axis, h)))
                errs[h] = worst
            order = math.log10(errs[1e-3] / errs[1e-4])
            assert order >= 1.9


class TestEvaluate:
    def test_arithmetic(self):
        assert evaluate(parse("x^2+y^2"), (1, 2, 0)) == 5.0

    def test_unit_radius(self):
        assert evaluate(parse("(x^2+y^2+z^2)^(3/2)"), (1, 0, 0)) == 1.0

    def test_division_by_zero(self):
        from poiscompat.errors import EvalDomainError

        with pytest.raises(EvalDomainError) as exc:
            evaluate(div(const(1), X), (0, 0, 0))
        assert "division by zero" in str(exc.value)

    def test_negative_sqrt_reports_subexpression(self):
        from poiscompat.errors import EvalDomainError

        f = add(const(1), sqrt_of(X))
        with pytest.raises(EvalDomainError) as exc:
            evaluate(f, (-1, 0, 0))
        assert "sqrt(x)" in str(exc.value)

    def test_nonfinite_point_rejected(self):
        with pytest.raises(ValueError):
            evaluate(X, (float("nan"), 0, 0))
