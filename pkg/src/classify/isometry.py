"""Finite-stage isometry checks and the shift on a constant-norm system."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebra.gmodule import XElement
from src.config import settings
from src.errors import PreconditionError
from src.space.orthogonality import coordinates_in
from src.space.vectors import SpaceDescriptor, Vector, format_vector, norm
from src.classify.space_class import InsufficientEqualNormVectors, equal_norm_indices, rescale_to

logger = logging.getLogger(__name__)


class DimensionMismatch(PreconditionError):
    """Raised when a matrix is not square over the space's index set."""


@dataclass(frozen=True)
class Matrix:
    """A linear map given by its columns: column j is the image of e_j."""

    indices: Tuple[str, ...]
    columns: Mapping[str, Vector]

    def __post_init__(self) -> None:
        if set(self.columns) - set(self.indices):
            raise DimensionMismatch(f"columns for undeclared indices {sorted(set(self.columns) - set(self.indices))}")
        object.__setattr__(self, "indices", tuple(self.indices))
        object.__setattr__(self, "columns", {i: self.columns.get(i, Vector()) for i in self.indices})

    @classmethod
    def identity(cls, indices: Sequence[str]) -> "Matrix":
        return cls(tuple(indices), {i: Vector.unit(i) for i in indices})

    def apply(self, v: Vector) -> Vector:
        out = Vector()
        for j, c in v.items():
            if j not in self.columns:
                raise DimensionMismatch(f"{j} is not a column index of the matrix")
            out = out + self.columns[j].scale(c)
        return out

    def entry(self, i: str, j: str) -> Fraction:
        return self.columns[j][i]

    def rows(self) -> List[List[str]]:
        return [[str(self.entry(i, j)) for j in self.indices] for i in self.indices]


def _check_square(T: Matrix, sp: SpaceDescriptor) -> None:
    if T.indices != sp.index_set:
        raise DimensionMismatch(f"matrix is {len(T.indices)}x{len(T.indices)} over a space of dimension {sp.dim}")
    sp.check(*T.columns.values())


def is_isometry(
    T: Matrix,
    sp: SpaceDescriptor,
    samples: Optional[int] = None,
    rng: Optional[random.Random] = None,
    domain: Optional[Sequence[str]] = None,
) -> bool:
    """Falsification check of ||Tv|| = ||v||.

    Tests the base vectors, their pairwise sums and differences, and random
    vectors, all supported on `domain` (default: every index). False is
    conclusive; True is evidence only.
    """
    _check_square(T, sp)
    samples = settings.ULTRANORM_ISOMETRY_SAMPLES if samples is None else samples
    rng = rng or random.Random(settings.ULTRANORM_DEFAULT_SEED)
    pool = list(domain if domain is not None else sp.index_set)
    for i in pool:
        sp.position(i)

    def preserved(v: Vector) -> bool:
        if norm(T.apply(v), sp) != norm(v, sp):
            logger.debug("norm not preserved on %s", format_vector(v, sp))
            return False
        return True

    units = [Vector.unit(i) for i in pool]
    if not all(preserved(u) for u in units):
        return False
    for k, u in enumerate(units):
        for w in units[k + 1:]:
            if not (preserved(u + w) and preserved(u - w)):
                return False
    if pool:
        for _ in range(samples):
            if not preserved(sp.random_vector(rng, indices=pool)):
                return False
    return True


def is_surjective(T: Matrix, sp: SpaceDescriptor) -> bool:
    """Exact: every base vector lies in the span of the columns."""
    _check_square(T, sp)
    image = [c for c in T.columns.values() if not c.is_zero()]
    return all(coordinates_in(image, Vector.unit(i), sp) is not None for i in sp.index_set)


@dataclass
class ShiftDemo:
    n: int
    norm: XElement
    # a_1, ..., a_{n+1}: base vectors of the orbit class rescaled to `norm`
    system: List[Vector]
    matrix: Matrix
    domain: List[str]
    is_isometry: bool
    is_surjective_on_truncation: bool

    def describe(self, sp: SpaceDescriptor) -> Dict[str, object]:
        return {
            "n": self.n,
            "norm": sp.module.format_x(self.norm),
            "system": [format_vector(a, sp) for a in self.system],
            "images": {j: format_vector(c, sp) for j, c in self.matrix.columns.items()},
            "is_isometry": self.is_isometry,
            "is_surjective_on_truncation": self.is_surjective_on_truncation,
        }


def shift_isometry_demo(
    n: int,
    s: XElement,
    sp: SpaceDescriptor,
    samples: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> ShiftDemo:
    """a_k -> a_{k+1} on a_1..a_n, identity off the system, a_{n+1} -> 0.

    Needs n+1 base vectors orbit-equivalent to s. The map is isometric on
    span(a_1, ..., a_n) plus the other base vectors and misses a_1.
    """
    if n < 0:
        raise PreconditionError(f"shift length must be non-negative, got {n}")
    sp.module.check(s)
    indices = equal_norm_indices(sp, s)
    if len(indices) < n + 1:
        raise InsufficientEqualNormVectors(
            f"need {n + 1} base vectors with norm in the orbit of {sp.module.format_x(s)}, found {len(indices)}"
        )
    chosen = indices[: n + 1]
    system = [rescale_to(sp, i, s) for i in chosen]
    columns: Dict[str, Vector] = {i: Vector.unit(i) for i in sp.index_set}
    for k in range(n):
        # T a_k = a_{k+1} and a_k = c_k e_{i_k}
        columns[chosen[k]] = system[k + 1].scale(1 / system[k][chosen[k]])
    columns[chosen[n]] = Vector()
    T = Matrix(sp.index_set, columns)
    domain = [i for i in sp.index_set if i != chosen[n]]
    isometric = is_isometry(T, sp, samples=samples, rng=rng, domain=domain)
    surjective = is_surjective(T, sp)
    logger.info("shift of length %d on %s: isometry=%s surjective=%s", n, sp.module.format_x(s), isometric, surjective)
    return ShiftDemo(
        n=n,
        norm=s,
        system=system,
        matrix=T,
        domain=domain,
        is_isometry=isometric,
        is_surjective_on_truncation=surjective,
    )
