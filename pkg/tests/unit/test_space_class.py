"""Tests for `src.classify.space_class`: the orbit census and c0 detection."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.algebra.chains import ChainMembershipError, FiniteChain, OrdinalChain, RationalIntervalChain
from src.algebra.gmodule import XElement
from src.algebra.ordinals import Ordinal
from src.classify.space_class import (
    INFINITE,
    InconsistentDescriptor,
    InsufficientEqualNormVectors,
    SpaceClass,
    c0_witness,
    check_consistency,
    contains_c0,
    equal_norm_indices,
    orbit_census,
    rescale_to,
    space_class_from_space,
)
from src.errors import PreconditionError
from src.space.orthogonality import is_orthogonal_system
from src.space.vectors import Vector, norm
from tests.unit.conftest import make_space


@pytest.mark.parametrize(
    "multiplicity, default, expected",
    [
        ({}, 0, False),
        ({0: 3, 1: 2}, 0, False),
        ({0: 3, 1: INFINITE}, 0, True),
        ({}, INFINITE, True),
    ],
)
def test_contains_c0(multiplicity, default, expected):
    sc = SpaceClass(FiniteChain(2), multiplicity, default=default)
    assert contains_c0(sc) is expected


def test_invalid_multiplicities():
    with pytest.raises(PreconditionError):
        SpaceClass(FiniteChain(2), {0: -1})
    with pytest.raises(PreconditionError):
        SpaceClass(FiniteChain(2), {}, default="many")


def test_keys_must_belong_to_the_chain():
    with pytest.raises(ChainMembershipError):
        SpaceClass(FiniteChain(2), {5: 1})


def test_multiplicity_of_falls_back_to_the_default():
    sc = SpaceClass(OrdinalChain(), {}, default=1)
    assert sc.multiplicity_of(Ordinal.parse("w^2+3")) == 1


# ----------------------------------------------------------------------
# Census
# ----------------------------------------------------------------------
def test_census_ignores_the_exponent(rational_space):
    assert orbit_census(rational_space.units(), rational_space) == {Fraction(1, 2): 2, Fraction(1): 2}


def test_census_rejects_zero(flat5):
    with pytest.raises(PreconditionError):
        orbit_census([Vector()], flat5)


def test_space_class_from_space(flat5):
    sc = space_class_from_space(flat5)
    assert sc.multiplicity == {0: 3}
    assert not contains_c0(sc)
    assert sc.completeness_assumed


# ----------------------------------------------------------------------
# Equal-norm systems
# ----------------------------------------------------------------------
def test_rescale_to(rational_space):
    s = XElement(Fraction(1, 2), 3)
    v = rescale_to(rational_space, "e3", s)
    assert v == Vector({"e3": Fraction(1, 4)})
    assert norm(v, rational_space) == s
    with pytest.raises(PreconditionError):
        rescale_to(rational_space, "e2", s)


def test_equal_norm_indices(rational_space):
    assert equal_norm_indices(rational_space, XElement(Fraction(1), 7)) == ["e2", "e4"]


def test_c0_witness_has_a_common_norm():
    sp = make_space(FiniteChain(1), 5, [(0, 0), (0, 2), (0, -1), (0, 1)])
    witness = c0_witness(sp, 0, 4)
    assert {norm(v, sp) for v in witness} == {XElement(0, 0)}
    assert is_orthogonal_system(witness, sp)
    assert {norm(v, sp) for v in c0_witness(sp, 0, 2, m=-3)} == {XElement(0, -3)}


def test_c0_witness_needs_enough_vectors(rational_space):
    with pytest.raises(InsufficientEqualNormVectors):
        c0_witness(rational_space, Fraction(1, 2), 3)


# ----------------------------------------------------------------------
# Consistency of a finite truncation with its class
# ----------------------------------------------------------------------
class TestConsistency:
    def test_census_is_consistent(self, flat5):
        check_consistency(flat5, space_class_from_space(flat5))

    def test_infinite_class_accepts_any_positive_count(self, flat5):
        check_consistency(flat5, SpaceClass(FiniteChain(1), {0: INFINITE}))

    def test_count_mismatch(self, flat5):
        with pytest.raises(InconsistentDescriptor):
            check_consistency(flat5, SpaceClass(FiniteChain(1), {0: 2}))

    def test_infinite_class_without_vectors(self):
        sp = make_space(FiniteChain(2), 2, [(0, 0)])
        with pytest.raises(InconsistentDescriptor):
            check_consistency(sp, SpaceClass(FiniteChain(2), {0: 1, 1: INFINITE}))

    def test_chain_mismatch(self, flat5):
        with pytest.raises(InconsistentDescriptor):
            check_consistency(flat5, SpaceClass(RationalIntervalChain(), {}))
