"""Grammar, error codes with positions, structured input, and round-trips."""

from __future__ import annotations

import random

import pytest

from multmon import (
    MAX_EXPONENT,
    ParseError,
    format_ideal,
    ideal_from_maps,
    parse_ideal,
    parse_ideal_detailed,
)
from multmon.generate import random_ideal


def test_parses_block_example():
    ideal = parse_ideal("a^2*b*c, b^3*c, c^4, d^2*e^2, d*e*f, d*g^2")
    assert ideal.q == 6
    assert ideal.ring.names == ("a", "b", "c", "d", "e", "f", "g")


def test_whitespace_and_semicolons():
    assert parse_ideal("x y; z") == parse_ideal("x*y, z")
    assert parse_ideal("  x^2 ,\n y ") == parse_ideal("x^2, y")


def test_comments_are_stripped():
    assert parse_ideal("x^2, y # trailing comment") == parse_ideal("x^2, y")


def test_repeated_variables_multiply():
    assert parse_ideal("x*x^2") == parse_ideal("x^3")


def test_multi_character_variables():
    ideal = parse_ideal("alpha^2*beta, beta^3")
    assert ideal.ring.names == ("alpha", "beta")


def test_minimalization_notice():
    parsed = parse_ideal_detailed("x^2,x^3")
    assert parsed.ideal == parse_ideal("x^2")
    assert len(parsed.notices) == 1 and "x^3" in parsed.notices[0]


def test_zero_exponent_error():
    with pytest.raises(ParseError) as info:
        parse_ideal("x^0")
    assert info.value.code == "zero-exponent"
    assert (info.value.line, info.value.column) == (1, 3)


def test_syntax_errors():
    for text in ("x^", "x^2,", "x 2", "x+y", "a^2b"):
        with pytest.raises(ParseError) as info:
            parse_ideal(text)
        assert info.value.code == "syntax", text


def test_empty_ideal_error():
    for text in ("", "   ", "# nothing here"):
        with pytest.raises(ParseError) as info:
            parse_ideal(text)
        assert info.value.code == "empty-ideal"


def test_exponent_cap():
    with pytest.raises(ParseError) as info:
        parse_ideal(f"x^{MAX_EXPONENT + 1}")
    assert info.value.code == "exponent-too-large"
    assert parse_ideal(f"x^{MAX_EXPONENT}").gens[0].degree == MAX_EXPONENT


def test_error_positions_on_later_lines():
    with pytest.raises(ParseError) as info:
        parse_ideal("x^2,\n y^0")
    assert (info.value.line, info.value.column) == (2, 4)


def test_explicit_variable_order():
    ideal = parse_ideal("b*a", var_names=("a", "b"))
    assert ideal.ring.names == ("a", "b")
    with pytest.raises(ParseError) as info:
        parse_ideal("c", var_names=("a", "b"))
    assert info.value.code == "unknown-variable"


def test_structured_input():
    ideal = ideal_from_maps([{"x": 2}, {"y": 3}])
    assert ideal == parse_ideal("x^2, y^3")
    with pytest.raises(ParseError) as info:
        ideal_from_maps([{}])
    assert info.value.code == "unit-generator"
    with pytest.raises(ParseError) as info:
        ideal_from_maps([{"x": 0}])
    assert info.value.code == "zero-exponent"
    with pytest.raises(ParseError) as info:
        ideal_from_maps([])
    assert info.value.code == "empty-ideal"


def test_round_trip_examples():
    for text in (
        "a^3*c, a*b*e^3, a^2*b^2, c^2, d^2*e^2",
        "x^2*y, x*y^2",
        "q_1^4*q_2, q_2^2",
    ):
        ideal = parse_ideal(text)
        assert parse_ideal(format_ideal(ideal)) == ideal


def test_round_trip_random():
    rng = random.Random(2718)
    for _ in range(200):
        ideal = random_ideal(rng)
        assert parse_ideal(format_ideal(ideal)) == ideal
