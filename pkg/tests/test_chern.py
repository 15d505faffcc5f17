from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from p3walls.chern import (
    ChernCharacter,
    ChernTruncation,
    curve_ideal_ch,
    euler_pairing,
    format_chern,
    from_resolution,
    line_bundle_ch,
    parse_chern,
    product,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def characters(draw) -> ChernCharacter:
    return ChernCharacter(*(draw(rationals) for _ in range(4)))


@st.composite
def integral_characters(draw) -> ChernCharacter:
    """Integral classes via the coordinates (rank, degree, twisted ch2, chi)."""
    r = draw(small_ints)
    c = draw(small_ints)
    k = draw(small_ints)
    t = draw(small_ints)
    d = Fraction(c, 2) + k
    e = t - 2 * d - Fraction(11, 6) * c - r
    return ChernCharacter(r, c, d, e)


def test_complete_intersection_class():
    ch = from_resolution([(-2, 1), (-3, 1), (-5, -1)])
    assert ch == curve_ideal_ch(6, 4)
    assert ch == ChernCharacter(1, 0, -6, 15)
    assert format_chern(ch) == "1,0,-6,15"


def test_line_bundle_values():
    assert line_bundle_ch(0) == ChernCharacter(1, 0, 0, 0)
    assert line_bundle_ch(-2) == ChernCharacter(1, -2, 2, Fraction(-4, 3))
    assert line_bundle_ch(-1) == ChernCharacter(1, -1, Fraction(1, 2), Fraction(-1, 6))


def test_known_twist():
    assert format_chern(parse_chern("1,0,-6,15").twist(-4)) == "1,4,2,5/3"


def test_twist_of_line_bundle_is_line_bundle():
    for t in range(-6, 7):
        for b in range(-4, 5):
            assert line_bundle_ch(t).twist(b) == line_bundle_ch(t - b)


def test_product_of_line_bundles():
    for a in range(-5, 6):
        for b in range(-5, 6):
            assert product(line_bundle_ch(a), line_bundle_ch(b)) == line_bundle_ch(a + b)


@given(characters(), rationals, rationals)
def test_twist_additivity(ch, b1, b2):
    assert ch.twist(b1).twist(b2) == ch.twist(b1 + b2)


@given(characters(), rationals)
def test_discriminant_twist_invariant(ch, beta):
    assert ch.twist(beta).discriminant() == ch.discriminant()


@given(characters())
def test_dual_involution(ch):
    assert ch.dual().dual() == ch


@given(characters(), rationals)
def test_dual_reverses_twist(ch, beta):
    assert ch.twist(beta).dual() == ch.dual().twist(-beta)


@given(characters(), characters(), characters())
def test_euler_pairing_biadditive(a, b, c):
    assert euler_pairing(a + b, c) == euler_pairing(a, c) + euler_pairing(b, c)
    assert euler_pairing(a, b + c) == euler_pairing(a, b) + euler_pairing(a, c)


@given(integral_characters(), integral_characters())
def test_euler_pairing_integral_on_lattice(a, b):
    assert a.is_integral() and b.is_integral()
    assert euler_pairing(a, b).denominator == 1


@given(integral_characters(), integral_characters())
def test_euler_pairing_serre_symmetry(a, b):
    twisted = product(b, line_bundle_ch(-4))
    assert euler_pairing(b, a) == -euler_pairing(a, twisted)


def test_sections_of_line_bundles():
    for t, expected in [(0, 1), (1, 4), (2, 10), (3, 20), (-1, 0), (-3, 0), (-4, -1)]:
        assert euler_pairing(line_bundle_ch(0), line_bundle_ch(t)) == expected


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=-3, max_value=10))
def test_curve_ideal_euler_characteristic_is_genus(degree, genus):
    ch = curve_ideal_ch(degree, genus)
    assert euler_pairing(line_bundle_ch(0), ch) == genus


def test_truncation_lattice_coords():
    tr = ChernTruncation(1, -1, Fraction(1, 2))
    assert tr.is_lattice()
    assert tr.lattice_coords() == (1, -1, 1)
    assert tr.is_primitive()
    assert not ChernTruncation(2, -2, 1).is_primitive()
    with pytest.raises(ValueError):
        ChernTruncation(1, 1, Fraction(1, 3)).lattice_coords()


def test_truncation_parity():
    assert not ChernTruncation(0, 1, 1).is_lattice()  # 2*ch2 must match ch1 mod 2
    assert ChernTruncation(0, 1, Fraction(-11, 2)).is_lattice()


def test_with_ch3_round_trip():
    tr = ChernTruncation(0, 1, Fraction(-11, 2))
    assert tr.with_ch3(Fraction(79, 6)) == ChernCharacter(0, 1, Fraction(-11, 2), Fraction(79, 6))


@given(integral_characters())
def test_parse_format_round_trip(ch):
    assert parse_chern(format_chern(ch)) == ch


def test_parse_rejects_wrong_arity():
    with pytest.raises(ValueError, match="4 comma-separated"):
        parse_chern("1,0,-6")


def test_parse_reports_bad_component_position():
    with pytest.raises(ValueError, match="component 3.*'x'"):
        parse_chern("1,0,x,15")


def test_parse_rejects_decimals():
    with pytest.raises(ValueError, match="component 4"):
        parse_chern("1,0,-6,1.5")


def test_integrality_predicate():
    assert ChernCharacter(1, 0, -6, 15).is_integral()
    assert ChernCharacter(0, 1, Fraction(-11, 2), Fraction(79, 6)).is_integral()
    # chi against the structure sheaf must be an integer
    assert not ChernCharacter(1, 0, -6, Fraction(1, 2)).is_integral()
    # half-integer ch2 requires odd ch1
    assert not ChernCharacter(1, 0, Fraction(1, 2), 0).is_integral()


def test_arithmetic_and_scalar_multiple():
    a = curve_ideal_ch(1, 0).twist(1)
    b = ChernCharacter(1, 0, -6, 15) - a
    assert a + b == ChernCharacter(1, 0, -6, 15)
    assert 2 * a == a + a
    assert -a == a * -1
