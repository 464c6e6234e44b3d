"""Shared test helpers: seeded random polynomials and expression strategies."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from poiscompat.scalarfield import SampleSpec, X, Y, Z, add, const, mul, power


def random_polynomial(rng: random.Random, degree: int = 4, terms: int = 6,
                      coeff_range: int = 3):
    """Seeded random polynomial with small integer coefficients."""
    parts = []
    for _ in range(terms):
        exps = [rng.randint(0, degree) for _ in range(3)]
        while sum(exps) > degree:
            exps = [rng.randint(0, degree) for _ in range(3)]
        c = rng.randint(-coeff_range, coeff_range)
        parts.append(mul(const(c), power(X, exps[0]), power(Y, exps[1]), power(Z, exps[2])))
    return add(*parts)


def seeded_polynomials(seed: int, n: int, degree: int = 4):
    rng = random.Random(seed)
    return [random_polynomial(rng, degree) for _ in range(n)]


@pytest.fixture
def spec():
    return SampleSpec()


@pytest.fixture
def small_spec():
    return SampleSpec(count=100)


# --- hypothesis strategies ---------------------------------------------------

_coords = st.sampled_from([X, Y, Z])
_consts = st.integers(min_value=-4, max_value=4).map(const)
_rational_consts = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6).map(const)


def polynomial_fields(max_leaves: int = 12):
    """Trees built from +, *, small integer powers: always expandable."""
    leaves = st.one_of(_coords, _consts)
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.tuples(sub, sub).map(lambda ab: add(*ab)),
            st.tuples(sub, sub).map(lambda ab: mul(*ab)),
            st.tuples(sub, st.integers(min_value=0, max_value=3)).map(
                lambda be: power(be[0], be[1])),
        ),
        max_leaves=max_leaves,
    )


def general_fields(max_leaves: int = 10):
    """Trees over the full grammar (quotients, rational powers, sqrt);
    suited to parse/emit round trips, not to evaluation."""
    from poiscompat.scalarfield import div, sqrt_of

    leaves = st.one_of(_coords, _rational_consts)
    exponents = st.fractions(
        min_value=Fraction(-3), max_value=Fraction(3), max_denominator=3)
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            st.tuples(sub, sub).map(lambda ab: add(*ab)),
            st.tuples(sub, sub).map(lambda ab: mul(*ab)),
            st.tuples(sub, sub).map(lambda ab: div(*ab)),
            st.tuples(sub, exponents).map(lambda be: power(be[0], be[1])),
            sub.map(sqrt_of),
        ),
        max_leaves=max_leaves,
    )
