import itertools
from fractions import Fraction

import pytest

from sobranch import (
    GENERIC,
    MINUS,
    PLUS,
    DomainError,
    GroupDescriptor,
    Sign,
    exact,
    format_scalar,
    parse_scalar,
    scalar_equals_integer,
    scalar_is_integer,
)


def test_sign_product_table_is_group_of_order_two():
    assert PLUS * PLUS is PLUS
    assert PLUS * MINUS is MINUS
    assert MINUS * PLUS is MINUS
    assert MINUS * MINUS is PLUS
    for a in (PLUS, MINUS):
        assert PLUS * a is a
        assert a * a is PLUS
        for b, c in itertools.product((PLUS, MINUS), repeat=2):
            assert (a * b) * c is a * (b * c)


def test_sign_negation_and_parity():
    assert -PLUS is MINUS
    assert Sign.from_parity(0) is PLUS
    assert Sign.from_parity(-3) is MINUS
    assert Sign.from_parity(4) is PLUS


def test_sign_parse_and_str():
    assert Sign.parse("+") is PLUS
    assert Sign.parse("-") is MINUS
    assert str(PLUS) == "+"
    assert str(MINUS) == "-"
    with pytest.raises(ValueError):
        Sign.parse("0")


def test_scalar_is_integer():
    assert scalar_is_integer(exact(-3))
    assert not scalar_is_integer(exact(Fraction(1, 2)))
    assert not scalar_is_integer(GENERIC)
    assert not scalar_is_integer(exact(3, 1))


def test_scalar_equals_integer():
    assert scalar_equals_integer(exact(3), 3)
    assert not scalar_equals_integer(exact(3, 1), 3)
    assert not scalar_equals_integer(GENERIC, 0)
    # equality to an integer implies integrality
    for value in (exact(0), exact(-7), exact(Fraction(5, 3)), GENERIC):
        for k in range(-3, 4):
            if scalar_equals_integer(value, k):
                assert scalar_is_integer(value)


def test_generic_is_a_singleton_unequal_to_everything_exact():
    assert GENERIC is parse_scalar("generic")
    assert GENERIC != exact(0)
    assert GENERIC != exact(Fraction(1, 2))


@pytest.mark.parametrize(
    "text",
    ["0", "3", "-3", "1/2", "-7/3", "2+1/2*i", "-1/2-3*i", "0+1*i", "5/6+7/8*i", "generic"],
)
def test_scalar_text_round_trip(text):
    assert format_scalar(parse_scalar(text)) == text


def test_scalar_round_trip_over_value_grid():
    values = [Fraction(a, b) for a in range(-6, 7) for b in (1, 2, 3, 5)]
    for re_part in values:
        for im_part in (Fraction(0), Fraction(1, 2), Fraction(-3, 4)):
            s = exact(re_part, im_part)
            assert parse_scalar(format_scalar(s)) == s


def test_scalar_rejects_floats_and_junk():
    with pytest.raises(TypeError):
        exact(0.5)
    for text in ("", "x", "1.5", "1/2/3", "i", "1+i"):
        with pytest.raises(ValueError):
            parse_scalar(text)


def test_fractions_stored_in_lowest_terms():
    s = parse_scalar("2/4")
    assert s.re == Fraction(1, 2)
    assert format_scalar(s) == "1/2"


def test_group_descriptor():
    g = GroupDescriptor(4, 1)
    assert str(g) == "SO(4,1)"
    assert g.signature == (4, 1)
    assert GroupDescriptor(0, 1).signature == (0, 1)
    with pytest.raises(DomainError):
        GroupDescriptor(0, 0)
    with pytest.raises(DomainError):
        GroupDescriptor(-1, 2)
