"""Symbolic space classes and the orbit-class census.

A `SpaceClass` records, for each orbit class Gb of X, how many base vectors
have their norm in that class. That census is all the c0 question needs: E
contains c0 iff some class is hit infinitely often.
"""

from __future__ import annotations

import enum
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Union

from src.algebra.chains import Chain, Ordering
from src.algebra.field import uniformizer_power
from src.algebra.gmodule import ZERO_NORM, GModule, XElement
from src.errors import PreconditionError
from src.space.orthogonality import is_orthogonal_system
from src.space.vectors import SpaceDescriptor, Vector, norm

logger = logging.getLogger(__name__)


class _Infinite(enum.Enum):
    INFINITE = "infinite"

    def __str__(self) -> str:
        return "infinite"


INFINITE = _Infinite.INFINITE
Multiplicity = Union[int, _Infinite]


class InsufficientEqualNormVectors(PreconditionError):
    """Raised when an orbit class has too few base vectors for a constant-norm system."""


class InconsistentDescriptor(PreconditionError):
    """Raised when a finite space does not match its declared space class."""


@dataclass(frozen=True)
class SpaceClass:
    """Chain of the convex base plus the orbit-class census of an orthogonal base."""

    chain: Chain
    multiplicity: Mapping[Any, Multiplicity] = field(default_factory=dict)
    default: Multiplicity = 0
    completeness_assumed: bool = True

    def __post_init__(self) -> None:
        self.chain.check(*self.multiplicity.keys())
        for m in list(self.multiplicity.values()) + [self.default]:
            if m is not INFINITE and (not isinstance(m, int) or m < 0):
                raise PreconditionError(f"multiplicity must be a natural number or INFINITE, got {m!r}")
        object.__setattr__(self, "multiplicity", dict(self.multiplicity))

    @property
    def module(self) -> GModule:
        return GModule(self.chain)

    def multiplicity_of(self, b: Any) -> Multiplicity:
        self.chain.check(b)
        return self.multiplicity.get(b, self.default)


def contains_c0(sc: SpaceClass) -> bool:
    """True iff some orbit class carries infinitely many base vectors."""
    return sc.default is INFINITE or any(m is INFINITE for m in sc.multiplicity.values())


def orbit_census(vectors: Sequence[Vector], sp: SpaceDescriptor) -> Dict[Any, int]:
    """Number of vectors whose norm lies in each orbit class Gb (keyed by b)."""
    census: Counter = Counter()
    for v in vectors:
        x = norm(v, sp)
        if x is ZERO_NORM:
            raise PreconditionError("the zero vector has no orbit class")
        census[x.b] += 1
    return dict(census)


def space_class_from_space(sp: SpaceDescriptor, completeness_assumed: bool = True) -> SpaceClass:
    """The census of a finite descriptor as a space class (all counts finite)."""
    return SpaceClass(
        chain=sp.module.chain,
        multiplicity=orbit_census(sp.units(), sp),
        default=0,
        completeness_assumed=completeness_assumed,
    )


def equal_norm_indices(sp: SpaceDescriptor, s: XElement) -> List[str]:
    """Base indices whose norm is in the orbit of s, in index order."""
    return [i for i in sp.index_set if sp.module.orbit_equivalent(sp.nu[i], s)]


def rescale_to(sp: SpaceDescriptor, index: str, s: XElement) -> Vector:
    """p^t e_i with ||p^t e_i|| = s; ν(i) must be orbit-equivalent to s."""
    nu = sp.nu[index]
    if not sp.module.orbit_equivalent(nu, s):
        raise PreconditionError(f"{index} has no multiple of norm {sp.module.format_x(s)}")
    return Vector.unit(index).scale(uniformizer_power(nu.m - s.m, sp.field_cfg))


def c0_witness(sp: SpaceDescriptor, b: Any, k: int, m: Optional[int] = None) -> List[Vector]:
    """k orthogonal vectors of one common norm (b, g0^m) built from base vectors in Gb."""
    sp.module.chain.check(b)
    if m is None:
        first = next((sp.nu[i] for i in sp.index_set if sp.module.chain.compare(sp.nu[i].b, b) is Ordering.EQ), None)
        m = first.m if first is not None else 0
    s = XElement(b, m)
    indices = equal_norm_indices(sp, s)
    if len(indices) < k:
        raise InsufficientEqualNormVectors(
            f"orbit class of b@{sp.module.chain.format_element(b)} has {len(indices)} base vectors, need {k}"
        )
    witness = [rescale_to(sp, i, s) for i in indices[:k]]
    if not is_orthogonal_system(witness, sp):
        raise PreconditionError("rescaled base vectors are not orthogonal")
    return witness


def check_consistency(sp: SpaceDescriptor, sc: SpaceClass) -> None:
    """Raise InconsistentDescriptor unless the finite space truncates the class."""
    if sp.module.chain != sc.chain:
        raise InconsistentDescriptor(
            f"space chain {sp.module.chain.descriptor} differs from class chain {sc.chain.descriptor}"
        )
    census = orbit_census(sp.units(), sp)
    for b, count in census.items():
        declared = sc.multiplicity_of(b)
        if declared is not INFINITE and declared != count:
            raise InconsistentDescriptor(
                f"orbit class b@{sc.chain.format_element(b)}: space has {count} base vectors, class declares {declared}"
            )
    for b, declared in sc.multiplicity.items():
        present = census.get(b, 0)
        if declared is INFINITE and present == 0:
            raise InconsistentDescriptor(
                f"orbit class b@{sc.chain.format_element(b)} is declared infinite but the space has none"
            )
        if declared is not INFINITE and declared != present:
            raise InconsistentDescriptor(
                f"orbit class b@{sc.chain.format_element(b)}: space has {present} base vectors, class declares {declared}"
            )
    logger.debug("space of dimension %d is consistent with %s", sp.dim, sc.chain.descriptor)
