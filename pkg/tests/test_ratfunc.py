from fractions import Fraction

import pytest

from schwarz.algebra.mobius import MobiusMap, mobius_apply
from schwarz.algebra.ratfunc import RatFunc
from schwarz.core.errors import ParseError, PoleError, SchwarzError, ZeroDivisionRatFuncError

y = RatFunc.identity()


def rf(num, den=(1,)):
    return RatFunc.from_coefficients(num, den)


def test_sum_over_common_denominator():
    assert 1 / y + 1 / (y - 1) == rf([-1, 2], [0, -1, 1])


def test_product_with_reciprocal_is_one():
    f = y * y + 3
    assert f * (1 / f) == 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionRatFuncError):
        (y / (y - 1)) / 0


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionRatFuncError):
        rf([1], [0])


def test_canonical_form():
    f = rf([2, 2], [-2, 0, 2])
    assert f.num_coefficients == (Fraction(1),)
    assert f.den_coefficients == (Fraction(-1), Fraction(1))
    assert f == 1 / (y - 1)
    assert hash(f) == hash(1 / (y - 1))


def test_zero_is_normalized():
    zero = (y - 1) * 0
    assert zero.is_zero
    assert zero.den_coefficients == (Fraction(1),)


@pytest.mark.parametrize("f, expected", [
    (y * y, 2 * y),
    (1 / y, rf([-1], [0, 0, 1])),
    (RatFunc.constant(5), RatFunc.constant(0)),
])
def test_derivative(f, expected):
    assert f.derivative() == expected


def test_compose():
    assert (1 / y).compose(y - 1) == 1 / (y - 1)


def test_compose_with_identity():
    f = (3 * y ** 3 - y + Fraction(1, 2)) / (y ** 2 + 7)
    assert f.compose(y) == f


def test_compose_onto_pole():
    with pytest.raises(PoleError):
        (1 / (y - 2)).compose(RatFunc.constant(2))


def test_exact_evaluation():
    f = (y + 1) / (y - 2)
    assert f(Fraction(1, 2)) == Fraction(-1)
    with pytest.raises(PoleError):
        f(2)


def test_pole_orders():
    f = 1 / (y * y * (y - 1))
    assert f.pole_order(0) == 2
    assert f.pole_order(1) == 1
    assert f.pole_order(Fraction(1, 2)) == 0
    assert f.order_at_infinity() == 3
    assert f.distance_to_poles(0.5) == pytest.approx(0.5)


def test_polynomial_has_no_poles():
    assert (y * y + 1).distance_to_poles(0) == float("inf")
    assert (y * y + 1).is_polynomial


def test_numeric_evaluation_matches_exact():
    f = (y ** 2 - 3) / (2 * y + 5)
    assert f.evaluate(0.25) == pytest.approx(float(f(Fraction(1, 4))))


def test_text_codec():
    f = (y ** 2 - Fraction(3, 4)) / (2 * y + 5)
    assert f.to_text() == "[-3/8, 0, 1/2]/[5/2, 1]"
    assert RatFunc.from_text(f.to_text()) == f
    assert RatFunc.from_text("[]/[1]").is_zero


def test_text_codec_reports_position():
    with pytest.raises(ParseError) as info:
        RatFunc.from_text("[1, x]/[1]")
    assert info.value.position == 3

    with pytest.raises(ParseError):
        RatFunc.from_text("1/[1]")


def test_text_codec_zero_denominator_is_a_parse_error():
    with pytest.raises(ParseError) as info:
        RatFunc.from_text("[1]/[0, 0]")
    assert info.value.position == 5


def test_mobius_identity():
    f = (y ** 2 + 1) / (y - 3)
    assert mobius_apply(MobiusMap(1, 0, 0, 1), f) == f


@pytest.mark.parametrize("m, expected", [
    (MobiusMap(0, -1, 1, 0), -1 / y),
    (MobiusMap(1, 1, 0, 1), y + 1),
])
def test_mobius_apply(m, expected):
    assert mobius_apply(m, y) == expected


def test_mobius_composition_and_inverse():
    m = MobiusMap(2, 1, 1, 3)
    n = MobiusMap(0, 1, 1, 0)
    assert mobius_apply(m @ n, y) == m.as_ratfunc().compose(n.as_ratfunc())
    assert mobius_apply(m.inverse(), m.as_ratfunc()) == y


def test_degenerate_mobius():
    with pytest.raises(SchwarzError):
        MobiusMap(1, 2, 2, 4)
