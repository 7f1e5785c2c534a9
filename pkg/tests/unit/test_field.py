"""Tests for `src.algebra.field`: p-adic valuation, |.| and the scalar codecs."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from src.algebra.field import (
    ONE,
    PLUS_INFINITY,
    ZERO,
    AbsValue,
    FieldConfig,
    InvalidFieldConfig,
    ScalarSyntaxError,
    ZeroInversionError,
    abs_value,
    format_abs,
    format_scalar,
    invert,
    parse_abs,
    parse_scalar,
    residue,
    uniformizer_power,
    unit_part,
    valuation,
)
from src.errors import PreconditionError


def _random_scalar(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-500, 500), rng.randint(1, 500))


# ----------------------------------------------------------------------
# FieldConfig
# ----------------------------------------------------------------------
class TestFieldConfig:
    @pytest.mark.parametrize("p", [2, 3, 5, 7, 101])
    def test_accepts_primes(self, p):
        assert FieldConfig(p).p == p

    @pytest.mark.parametrize("p", [0, 1, 4, 9, -3, 2**61 + 1])
    def test_rejects_non_primes(self, p):
        with pytest.raises(InvalidFieldConfig):
            FieldConfig(p)

    def test_large_prime(self):
        assert FieldConfig(2**61 - 1).p == 2**61 - 1


# ----------------------------------------------------------------------
# Valuation and absolute value
# ----------------------------------------------------------------------
class TestValuation:
    def test_integers_and_fractions(self):
        p2 = FieldConfig(2)
        assert valuation(12, p2) == 2
        assert valuation(Fraction(3, 8), p2) == -3
        assert valuation(Fraction(5, 7), p2) == 0
        assert valuation(-40, FieldConfig(5)) == 1

    def test_zero_is_plus_infinity(self):
        assert valuation(0, FieldConfig(3)) == PLUS_INFINITY

    def test_abs_value(self):
        p2 = FieldConfig(2)
        assert abs_value(12, p2) == AbsValue(-2)
        assert abs_value(Fraction(1, 4), p2) == AbsValue(2)
        assert abs_value(0, p2) == ZERO

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_multiplicative_and_ultrametric(self, p):
        cfg = FieldConfig(p)
        rng = random.Random(p)
        for _ in range(1000):
            x, y = _random_scalar(rng), _random_scalar(rng)
            ax, ay = abs_value(x, cfg), abs_value(y, cfg)
            assert abs_value(x * y, cfg) == ax * ay
            assert abs_value(x + y, cfg) <= max(ax, ay)
            if ax != ay:
                assert abs_value(x + y, cfg) == max(ax, ay)

    def test_ordering_puts_zero_first(self):
        assert ZERO < AbsValue(-100) < ONE < AbsValue(3)
        assert not ZERO < ZERO

    def test_zero_absorbs(self):
        assert (ZERO * AbsValue(4)).is_zero
        assert AbsValue(2) * AbsValue(-5) == AbsValue(-3)


# ----------------------------------------------------------------------
# Units, residues, uniformizer
# ----------------------------------------------------------------------
class TestUnitsAndResidues:
    def test_unit_part(self):
        p2 = FieldConfig(2)
        assert unit_part(12, p2) == 3
        assert unit_part(Fraction(3, 8), p2) == 3
        assert valuation(unit_part(Fraction(50, 3), FieldConfig(5)), FieldConfig(5)) == 0

    def test_unit_part_of_zero_raises(self):
        with pytest.raises(ZeroInversionError):
            unit_part(0, FieldConfig(2))

    def test_residue(self):
        p5 = FieldConfig(5)
        assert residue(7, p5) == 2
        assert residue(Fraction(1, 3), p5) == 2  # 3 * 2 = 6 = 1 mod 5
        assert residue(10, p5) == 0

    def test_residue_needs_integral_input(self):
        with pytest.raises(PreconditionError):
            residue(Fraction(1, 2), FieldConfig(2))

    def test_uniformizer_power(self):
        p5 = FieldConfig(5)
        assert uniformizer_power(2, p5) == 25
        assert uniformizer_power(-2, p5) == Fraction(1, 25)
        assert abs_value(uniformizer_power(3, p5), p5) == AbsValue(-3)

    def test_invert(self):
        assert invert(Fraction(-3, 4)) == Fraction(-4, 3)
        with pytest.raises(ZeroInversionError):
            invert(0)


# ----------------------------------------------------------------------
# Codecs
# ----------------------------------------------------------------------
class TestCodecs:
    def test_parse_scalar(self):
        assert parse_scalar("-3/4") == Fraction(-3, 4)
        assert parse_scalar(" 6 / 8 ") == Fraction(3, 4)
        assert parse_scalar("17") == 17

    @pytest.mark.parametrize("text", ["1/0", "abc", "", "1.5", "1/-2"])
    def test_parse_scalar_rejects(self, text):
        with pytest.raises(ScalarSyntaxError):
            parse_scalar(text)

    def test_format_scalar_always_has_denominator(self):
        assert format_scalar(Fraction(6, 8)) == "3/4"
        assert format_scalar(5) == "5/1"
        assert format_scalar(Fraction(-1, 3)) == "-1/3"

    def test_abs_codec(self):
        assert parse_abs("g^-3") == AbsValue(-3)
        assert parse_abs("0") is ZERO
        assert format_abs(AbsValue(4)) == "g^4"
        assert format_abs(ZERO) == "0"
        with pytest.raises(ScalarSyntaxError):
            parse_abs("h^2")
