"""Distances, orthogonality and orthogonalization in X-normed spaces.

u ⟂ v means ||αu + βv|| = max(||αu||, ||βv||) for all scalars; equivalently
dist(u, Kv) = ||u||. For a system, each member must sit at full distance
from the span of the ones before it.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.algebra.chains import Ordering
from src.algebra.field import uniformizer_power
from src.algebra.gmodule import ZERO_NORM, GModule, NormValue, XElement
from src.errors import InvariantViolation, PreconditionError
from src.space.linalg import solve_mod_p, solve_rational
from src.space.vectors import (
    SpaceDescriptor,
    Vector,
    combination,
    leading_form,
    norm,
    norms_strictly_decreasing,
)

logger = logging.getLogger(__name__)


class ZeroVectorError(PreconditionError):
    """Raised when an operation needs a nonzero vector."""


class NotOrthogonalError(PreconditionError):
    """Raised when a list that must be an orthogonal system is not."""


class LinearlyDependentError(PreconditionError):
    """Raised by Gram-Schmidt; `index` is the first dependent input."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"input vector {index} lies in the span of the previous ones")


class NotDecreasingError(PreconditionError):
    """Raised when a sequence that must strictly decrease does not; `index` is the offender."""

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"sequence is not strictly decreasing at position {index}")


def _lt(module: GModule, a: NormValue, b: NormValue) -> bool:
    return module.norm_compare(a, b) is Ordering.LT


# ----------------------------------------------------------------------
# Distance to a line
# ----------------------------------------------------------------------
def distance_to_line(u: Vector, v: Vector, sp: SpaceDescriptor) -> Tuple[NormValue, Fraction]:
    """min over λ of ||u - λv|| and the first minimizing λ.

    The minimum is attained on {0} ∪ {u_i / v_i}: moving λ to the candidate
    nearest to it can only shrink every coordinate term.
    """
    sp.check(u, v)
    if v.is_zero():
        raise ZeroVectorError("distance to the line through 0 is undefined")
    candidates: List[Fraction] = [Fraction(0)]
    for i in sp.ordered_support(v):
        if u[i] != 0:
            r = u[i] / v[i]
            if r not in candidates:
                candidates.append(r)
    best_lambda = candidates[0]
    best = norm(u, sp)
    for lam in candidates[1:]:
        d = norm(u - v.scale(lam), sp)
        if _lt(sp.module, d, best):
            best, best_lambda = d, lam
    return best, best_lambda


def is_orthogonal_pair(u: Vector, v: Vector, sp: SpaceDescriptor) -> bool:
    if u.is_zero() or v.is_zero():
        raise ZeroVectorError("orthogonality is only decided for nonzero vectors")
    forward = distance_to_line(u, v, sp)[0] == norm(u, sp)
    backward = distance_to_line(v, u, sp)[0] == norm(v, sp)
    if forward != backward:
        raise InvariantViolation("orthogonality is not symmetric on this pair")
    return forward


# ----------------------------------------------------------------------
# Distance to the span of an orthogonal system
# ----------------------------------------------------------------------
def _cancel_leading_form(r: Vector, ds: Sequence[Vector], sp: SpaceDescriptor) -> Vector | None:
    """A combination d of `ds` with ||r - d|| < ||r||, or None if none exists.

    At level x = ||r|| only the d_j in the orbit of x can cancel anything;
    rescaled to norm x their leading forms must reproduce that of r modulo p.
    """
    level = norm(r, sp)
    p = sp.field_cfg.p
    scaled: List[Vector] = []
    for d in ds:
        nd = norm(d, sp)
        if sp.module.orbit_equivalent(nd, level):
            scaled.append(d.scale(uniformizer_power(nd.m - level.m, sp.field_cfg)))
    if not scaled:
        return None
    target = leading_form(r, level, sp)
    columns = [leading_form(d, level, sp) for d in scaled]
    rows = sorted({i for c in columns for i in c} | set(target), key=sp.position)
    solution = solve_mod_p(columns, target, rows, p)
    if solution is None:
        return None
    return combination([Fraction(c) for c in solution], scaled)


def distance_to_subspace(v: Vector, D: Sequence[Vector], sp: SpaceDescriptor) -> Tuple[NormValue, Vector]:
    """min over d in span D of ||v - d|| and a minimizer; D must be orthogonal."""
    sp.check(v, *D)
    if not D:
        return norm(v, sp), Vector()
    if not is_orthogonal_system(D, sp):
        raise NotOrthogonalError("distance_to_subspace needs an orthogonal system")
    return _distance_to_orthogonal_span(v, D, sp)


def _distance_to_orthogonal_span(v: Vector, D: Sequence[Vector], sp: SpaceDescriptor) -> Tuple[NormValue, Vector]:
    if not D:
        return norm(v, sp), Vector()
    rows = sorted(set(v.support).union(*(d.support for d in D)), key=sp.position)
    if solve_rational([d.coords for d in D], v.coords, rows) is not None:
        return ZERO_NORM, v
    best = Vector()
    residual = v
    steps = 0
    while True:
        d = _cancel_leading_form(residual, D, sp)
        if d is None:
            break
        residual = residual - d
        best = best + d
        steps += 1
        logger.debug("leading-form step %d: residual norm %s", steps, sp.module.format_x(norm(residual, sp)))
    return norm(residual, sp), best


def is_orthogonal_system(vs: Sequence[Vector], sp: SpaceDescriptor) -> bool:
    sp.check(*vs)
    if any(v.is_zero() for v in vs):
        raise ZeroVectorError("an orthogonal system cannot contain the zero vector")
    for k in range(1, len(vs)):
        dist, _ = _distance_to_orthogonal_span(vs[k], vs[:k], sp)
        if dist != norm(vs[k], sp):
            return False
    return True


# ----------------------------------------------------------------------
# Gram-Schmidt
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class GramSchmidtResult:
    vectors: List[Vector]
    # change_of_basis[k][j]: coefficient of input j in output k (unit lower triangular)
    change_of_basis: List[List[Fraction]]


def gram_schmidt_with_basis(vs: Sequence[Vector], sp: SpaceDescriptor) -> GramSchmidtResult:
    sp.check(*vs)
    es: List[Vector] = []
    in_inputs: List[List[Fraction]] = []
    rows = sorted(set().union(*(v.support for v in vs)) if vs else set(), key=sp.position)
    for k, v in enumerate(vs):
        if v.is_zero():
            raise LinearlyDependentError(k)
        if es and solve_rational([e.coords for e in es], v.coords, rows) is not None:
            raise LinearlyDependentError(k)
        _, best = _distance_to_orthogonal_span(v, es, sp)
        e = v - best
        # best = Σ μ_j e_j; express e_k = v_k - Σ μ_j e_j in the inputs.
        mu = solve_rational([x.coords for x in es], best.coords, rows) if es else []
        row = [Fraction(0)] * len(vs)
        row[k] = Fraction(1)
        for j, m in enumerate(mu or []):
            if m:
                for t, c in enumerate(in_inputs[j]):
                    row[t] -= m * c
        es.append(e)
        in_inputs.append(row)
        logger.debug("gram-schmidt step %d: subtracted %s", k, best)
    return GramSchmidtResult(vectors=es, change_of_basis=in_inputs)


def gram_schmidt(vs: Sequence[Vector], sp: SpaceDescriptor) -> List[Vector]:
    return gram_schmidt_with_basis(vs, sp).vectors


# ----------------------------------------------------------------------
# Renormalization to strictly decreasing norms
# ----------------------------------------------------------------------
def geometric_targets(x: XElement, k: int) -> List[XElement]:
    """s_n = g0^-n x for n = 1..k: strictly decreasing and tending to 0."""
    return [XElement(x.b, x.m - n) for n in range(1, k + 1)]


def _least_exponent_below(x: XElement, bound: XElement, module: GModule) -> int:
    """Least n with g0^-n x < bound."""
    if module.chain.compare(x.b, bound.b) is Ordering.LT:
        return x.m - bound.m
    return x.m - bound.m + 1


def renormalize_decreasing(
    es: Sequence[Vector], s: Sequence[XElement], sp: SpaceDescriptor
) -> List[Vector]:
    """f_1 = e_1, f_{k+1} = p^n e_{k+1} with ||f_{k+1}|| < min(||f_k||, s_k).

    n is the least non-negative exponent meeting both strict bounds.
    """
    module = sp.module
    if not es:
        return []
    if len(s) < len(es) - 1:
        raise PreconditionError(f"need {len(es) - 1} target norms, got {len(s)}")
    for k in range(1, len(s)):
        if module.x_compare(s[k - 1], s[k]) is not Ordering.GT:
            raise NotDecreasingError(k, "target norms must strictly decrease")
    if any(e.is_zero() for e in es):
        raise ZeroVectorError("cannot renormalize the zero vector")
    fs = [es[0]]
    for k in range(1, len(es)):
        previous = norm(fs[-1], sp)
        bound = previous if _lt(module, previous, s[k - 1]) else s[k - 1]
        current = norm(es[k], sp)
        n = max(_least_exponent_below(current, bound, module), 0)
        fs.append(es[k].scale(uniformizer_power(n, sp.field_cfg)))
    if not norms_strictly_decreasing([norm(f, sp) for f in fs], module):
        raise InvariantViolation("renormalized norms are not strictly decreasing")
    return fs


# ----------------------------------------------------------------------
# Perturbation
# ----------------------------------------------------------------------
class PerturbationVerdict(str, enum.Enum):
    ORTHOGONAL = "orthogonal"
    NOT_ORTHOGONAL = "not_orthogonal"
    HYPOTHESIS_FAILED = "hypothesis_failed"


def perturb_check(a: Sequence[Vector], b: Sequence[Vector], sp: SpaceDescriptor) -> PerturbationVerdict:
    """If ||a_k - b_k|| < ||a_k|| for every k, the b_k stay orthogonal."""
    if len(a) != len(b):
        raise PreconditionError(f"length mismatch: {len(a)} vs {len(b)}")
    sp.check(*a, *b)
    for ak, bk in zip(a, b):
        if not _lt(sp.module, norm(ak - bk, sp), norm(ak, sp)):
            return PerturbationVerdict.HYPOTHESIS_FAILED
    if not is_orthogonal_system(b, sp):
        logger.warning("perturbation hypothesis held but the perturbed system is not orthogonal")
        return PerturbationVerdict.NOT_ORTHOGONAL
    return PerturbationVerdict.ORTHOGONAL


def coordinates_in(vs: Sequence[Vector], target: Vector, sp: SpaceDescriptor) -> List[Fraction] | None:
    """Coefficients of `target` in the span of `vs`, or None when it is outside."""
    rows = sorted(set(target.support).union(*(v.support for v in vs)), key=sp.position)
    return solve_rational([v.coords for v in vs], target.coords, rows)

