"""Shared fixtures for unit tests.

Everything here is exact and deterministic: random inputs always come from a
seeded `random.Random`, never from the global generator.
"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from src.algebra.chains import (
    DescendingOmegaChain,
    FiniteChain,
    LexProductChain,
    OrdinalChain,
    RationalIntervalChain,
)
from src.algebra.field import FieldConfig
from src.algebra.gmodule import GModule, XElement
from src.space.vectors import SpaceDescriptor, Vector

SPACES_DIR = Path(__file__).resolve().parents[2] / "spaces"


def make_space(chain, p: int, norms) -> SpaceDescriptor:
    """Space with indices e1, e2, ... and the given (b, m) norms."""
    names = [f"e{k}" for k in range(1, len(norms) + 1)]
    return SpaceDescriptor(
        index_set=tuple(names),
        nu={n: XElement(b, m) for n, (b, m) in zip(names, norms)},
        field_cfg=FieldConfig(p),
        module=GModule(chain),
    )


def chain_zoo():
    """One chain of every class, well ordered and not."""
    return [
        FiniteChain(1),
        FiniteChain(4),
        OrdinalChain(),
        RationalIntervalChain(),
        DescendingOmegaChain(),
        LexProductChain([FiniteChain(2), OrdinalChain()]),
        LexProductChain([FiniteChain(2), RationalIntervalChain()]),
    ]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1234)


@pytest.fixture(params=chain_zoo(), ids=lambda c: c.descriptor)
def any_chain(request):
    return request.param


@pytest.fixture
def p5() -> FieldConfig:
    return FieldConfig(5)


@pytest.fixture
def flat5() -> SpaceDescriptor:
    """Three base vectors of norm (b@0, g^0) over Q_5: a piece of c0."""
    return make_space(FiniteChain(1), 5, [(0, 0), (0, 0), (0, 0)])


@pytest.fixture
def e(flat5):
    """Unit vectors e1, e2, e3 of `flat5`, 1-based."""
    return {k: Vector.unit(f"e{k}") for k in range(1, flat5.dim + 1)}


@pytest.fixture
def rational_space() -> SpaceDescriptor:
    """Base vectors over qinterval01, two orbit classes, p = 2."""
    half, one = Fraction(1, 2), Fraction(1)
    return make_space(RationalIntervalChain(), 2, [(half, 0), (one, 0), (half, 1), (one, -1)])


@pytest.fixture
def spaces_dir() -> Path:
    return SPACES_DIR
