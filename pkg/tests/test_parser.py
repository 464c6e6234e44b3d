"""Grammar, offsets in diagnostics, and the parse/emit round trip."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from poiscompat.errors import (
    MalformedExponentError,
    ParseError,
    UnknownIdentifierError,
)
from poiscompat.scalarfield import X, Y, add, const, emit, evaluate, mul, parse, power
from poiscompat.scalarfield.expr import Pow, Sqrt

from .conftest import general_fields


class TestGrammar:
    def test_sum_of_squares(self):
        assert parse("x^2+y^2") == add(power(X, 2), power(Y, 2))

    def test_rational_power(self):
        f = parse("(x^2+y^2+z^2)^(3/2)")
        assert isinstance(f, Pow)
        assert f.exponent == Fraction(3, 2)

    def test_whitespace_insensitive(self):
        assert parse(" x ^ 2 + y\t* z ") == parse("x^2+y*z")

    def test_unary_minus_binds_conventionally(self):
        assert evaluate(parse("-x^2"), (2, 0, 0)) == -4.0
        assert parse("--x") == X

    def test_subtraction(self):
        assert parse("x-y") == add(X, mul(const(-1), Y))

    def test_division_folds_rationals(self):
        assert parse("3/2") == const(Fraction(3, 2))

    def test_decimal_literal_is_exact(self):
        assert parse("0.5") == const(Fraction(1, 2))

    def test_sqrt_atom(self):
        assert parse("sqrt(x+1)") == Sqrt(add(X, const(1)))

    def test_right_associative_exponent_tower(self):
        assert parse("x^2^3") == power(X, 8)

    def test_negative_exponent(self):
        assert parse("x^-2") == power(X, -2)
        assert parse("x^(-1/2)") == power(X, Fraction(-1, 2))

    def test_precedence(self):
        assert evaluate(parse("1+2*3^2"), (0, 0, 0)) == 19.0


class TestErrors:
    def test_incomplete_expression_offset(self):
        with pytest.raises(ParseError) as exc:
            parse("x+")
        assert exc.value.offset == 2

    def test_unknown_identifier(self):
        with pytest.raises(UnknownIdentifierError) as exc:
            parse("x + w")
        assert exc.value.offset == 4

    def test_malformed_exponent(self):
        with pytest.raises(MalformedExponentError):
            parse("x^y")
        with pytest.raises(MalformedExponentError):
            parse("x^2.5")
        with pytest.raises(MalformedExponentError):
            parse("x^(1/0)")

    def test_irrational_tower(self):
        with pytest.raises(MalformedExponentError):
            parse("x^2^(1/2)")

    def test_unbalanced_parens(self):
        with pytest.raises(ParseError):
            parse("(x+y")

    def test_stray_character(self):
        with pytest.raises(ParseError) as exc:
            parse("x + $")
        assert exc.value.offset == 4

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse("")


class TestRoundTrip:
    @settings(max_examples=120, deadline=None)
    @given(general_fields())
    def test_parse_emit_identity(self, f):
        assert parse(emit(f)) == f

    @pytest.mark.parametrize("text", [
        "x^2+y^2",
        "(x^2+y^2+z^2)^(3/2)",
        "2*x^2+2*y^2+2*z^2-2*x*y+2*x*z+2*y*z",
        "sqrt(2)*x-1/2*y",
        "x/(y*z)",
        "-(x*z)",
    ])
    def test_reparse_fixed_points(self, text):
        f = parse(text)
        assert parse(emit(f)) == f
