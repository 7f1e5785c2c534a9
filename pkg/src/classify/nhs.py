"""NHS classification, sequence probes and rigidity.

Under the Banach hypothesis, E is a Norm Hilbert space iff its convex base B
is well ordered; equivalently iff [a, g0 a) is well ordered for any a ∈ X.
A strictly decreasing norm sequence tends to 0 iff it leaves every copy
g0^m B after finitely many terms, which is what `probe_sequence` watches.
"""

from __future__ import annotations

import enum
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from src.algebra.chains import Ordering, Side, Verdict
from src.algebra.field import FieldConfig
from src.algebra.gmodule import XElement
from src.config import settings
from src.errors import InvariantViolation, PreconditionError
from src.space.orthogonality import NotDecreasingError
from src.space.vectors import SpaceDescriptor, Vector, norm, norms_strictly_decreasing, standard_space
from src.classify.space_class import SpaceClass, contains_c0

logger = logging.getLogger(__name__)


class CompletenessNotAssumed(PreconditionError):
    """Raised when an NHS question is asked without the Banach hypothesis."""


def _require_complete(sc: SpaceClass) -> None:
    if not sc.completeness_assumed:
        raise CompletenessNotAssumed("NHS is defined for Banach spaces; set completeness_assumed")


def is_nhs(sc: SpaceClass) -> bool:
    _require_complete(sc)
    return sc.chain.is_well_ordered() is Verdict.YES


def is_nhs_from_point(sc: SpaceClass, a: XElement) -> bool:
    """Decide well-orderedness of [a, g0 a) = {b >= a.b} × {m} + {b < a.b} × {m+1}."""
    _require_complete(sc)
    sc.module.check(a)
    upper = sc.chain.segment(a.b, Side.ABOVE)
    lower = sc.chain.segment(a.b, Side.BELOW)
    return upper.verdict is Verdict.YES and lower.verdict is Verdict.YES


# ----------------------------------------------------------------------
# Sequence probes
# ----------------------------------------------------------------------
class ProbeVerdict(str, enum.Enum):
    DRIFT = "drift"
    STAGNATION = "stagnation"
    FINITE = "finite"


@dataclass
class SequenceProbe:
    """A single-consumer stream of norm values, read at most `max_steps` times."""

    generator: Iterable[XElement]
    max_steps: int
    stagnation_bound: Optional[int] = None

    def __post_init__(self) -> None:
        if self.max_steps < 1:
            raise PreconditionError(f"max_steps must be positive, got {self.max_steps}")


@dataclass
class ProbeReport:
    steps: int
    occupancy: Dict[int, int]
    verdict: ProbeVerdict
    stagnant_classes: List[int] = field(default_factory=list)
    first_class: Optional[int] = None
    last_class: Optional[int] = None
    bound: int = 0
    contradicts_chain_verdict: bool = False

    @property
    def stagnation(self) -> bool:
        return self.verdict is ProbeVerdict.STAGNATION

    def table(self) -> List[Tuple[int, int]]:
        """Occupancy rows (exponent class, count), highest class first."""
        return sorted(self.occupancy.items(), reverse=True)


def probe_sequence(sc: SpaceClass, probe: SequenceProbe) -> ProbeReport:
    module = sc.module
    bound = probe.stagnation_bound if probe.stagnation_bound is not None else settings.ULTRANORM_STAGNATION_BOUND
    occupancy: Counter = Counter()
    previous: Optional[XElement] = None
    steps = 0
    for index, x in enumerate(itertools.islice(probe.generator, probe.max_steps)):
        module.check(x)
        if previous is not None and module.x_compare(previous, x) is not Ordering.GT:
            raise NotDecreasingError(index)
        occupancy[x.m] += 1
        previous = x
        steps += 1
    classes = [m for m, c in occupancy.items() if c > bound]
    if classes:
        verdict = ProbeVerdict.STAGNATION
    elif steps < probe.max_steps:
        verdict = ProbeVerdict.FINITE
    else:
        verdict = ProbeVerdict.DRIFT
    report = ProbeReport(
        steps=steps,
        occupancy=dict(occupancy),
        verdict=verdict,
        stagnant_classes=sorted(classes),
        first_class=max(occupancy) if occupancy else None,
        last_class=min(occupancy) if occupancy else None,
        bound=bound,
    )
    if report.stagnation and sc.chain.is_well_ordered() is Verdict.YES:
        report.contradicts_chain_verdict = True
        logger.warning(
            "probe stagnated in classes %s although %s is well ordered (bound %d too small?)",
            classes,
            sc.chain.descriptor,
            bound,
        )
    return report


# ----------------------------------------------------------------------
# Witnesses
# ----------------------------------------------------------------------
@dataclass
class NonNhsWitness:
    space: SpaceDescriptor
    vectors: List[Vector]
    norms: List[XElement]
    exponent_class: int


def non_nhs_witness(sc: SpaceClass, k: int, field_cfg: Optional[FieldConfig] = None) -> NonNhsWitness:
    """v_{b_1}, ..., v_{b_k} with b_1 > ... > b_k: decreasing norms stuck in one class."""
    descent = sc.chain.descending_witness(k)
    sp, vectors = standard_space(sc.module, descent, field_cfg or FieldConfig())
    norms = [norm(v, sp) for v in vectors]
    if not norms_strictly_decreasing(norms, sc.module) or len({x.m for x in norms}) != 1:
        raise InvariantViolation("lifted descent does not stay inside one exponent class")
    return NonNhsWitness(space=sp, vectors=vectors, norms=norms, exponent_class=norms[0].m)


@dataclass(frozen=True)
class RigidityVerdict:
    rigid: bool
    nhs: bool
    contains_c0: bool
    reason: str


def rigidity_verdict(sc: SpaceClass) -> RigidityVerdict:
    """Rigidity of a Banach space with an orthogonal base described by `sc`.

    Rigid iff NHS and not containing c0. A space that is not an NHS is never
    rigid; neither is one that contains c0 (the shift on a constant-norm
    orthogonal sequence is a non-surjective isometry).
    """
    nhs = is_nhs(sc)
    c0 = contains_c0(sc)
    if not nhs:
        reason = "not an NHS: a strictly decreasing norm sequence fails to tend to 0"
    elif c0:
        reason = "contains c0: shifting a constant-norm orthogonal sequence is a non-surjective isometry"
    else:
        reason = "NHS without c0"
    return RigidityVerdict(rigid=nhs and not c0, nhs=nhs, contains_c0=c0, reason=reason)
