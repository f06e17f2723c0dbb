from fractions import Fraction

import pytest

from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.errors import ParseError
from schwarz.core.utils import (
    INF,
    fraction_to_str,
    parse_fraction,
    parse_fraction_list,
    parse_rational_expression,
    parse_signature_entries,
    signature_entry_to_str,
    split_input,
)

y = RatFunc.identity()


def test_split_input_offsets():
    assert split_input("1/2, 1/3,1/7") == [("1/2", 0), ("1/3", 5), ("1/7", 9)]


def test_parse_fraction():
    assert parse_fraction("3/4") == Fraction(3, 4)
    assert parse_fraction("-2") == Fraction(-2)
    with pytest.raises(ParseError):
        parse_fraction("0.5")
    with pytest.raises(ParseError):
        parse_fraction("1/0")


def test_parse_fraction_list_position():
    with pytest.raises(ParseError) as info:
        parse_fraction_list("1/2,1/3,x", 3)
    assert info.value.position == 8
    with pytest.raises(ParseError) as info:
        parse_fraction_list("1/2,1/3", 3)
    assert info.value.position == 0


def test_parse_signature_entries():
    assert parse_signature_entries("2, 3, inf") == [2, 3, INF]
    assert parse_signature_entries("7,3,2") == [7, 3, 2]
    with pytest.raises(ParseError) as info:
        parse_signature_entries("2,1,7")
    assert info.value.position == 2


def test_parse_rational_expression():
    assert parse_rational_expression("y^2") == y ** 2
    assert parse_rational_expression("(y-1)/(y+1)") == (y - 1) / (y + 1)
    assert parse_rational_expression("3") == RatFunc.constant(3)


def test_parse_rational_expression_errors():
    with pytest.raises(ParseError):
        parse_rational_expression("y^(1/2)")
    with pytest.raises(ParseError) as info:
        parse_rational_expression("sin(y)")
    assert info.value.position == 0
    with pytest.raises(ParseError):
        parse_rational_expression("   ")


@pytest.mark.parametrize("text", ["(y", "y+(1", "()", "(y, 1)"])
def test_parse_rational_expression_malformed(text):
    with pytest.raises(ParseError):
        parse_rational_expression(text)


def test_serialization():
    assert fraction_to_str(Fraction(6, 4)) == "3/2"
    assert fraction_to_str(Fraction(4, 2)) == "2"
    assert signature_entry_to_str(INF) == "inf"
    assert signature_entry_to_str(7) == "7"
