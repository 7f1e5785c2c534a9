"""Finitely supported vectors over an indexed orthogonal base.

A `SpaceDescriptor` fixes the base {e_i : i ∈ I} and the norms ν(i) ∈ X of the
base vectors; the norm of Σ λ_i e_i is max_i |λ_i| ν(i). Index order in the
descriptor is the tie-break order everywhere in this package.
"""

from __future__ import annotations

import logging
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from src.algebra.chains import Ordering
from src.algebra.field import FieldConfig, ScalarLike, abs_value, as_scalar, residue, unit_part, valuation
from src.algebra.gmodule import ZERO_NORM, GModule, NormValue, XElement
from src.errors import DescriptorError, PreconditionError

logger = logging.getLogger(__name__)


class UnknownIndexError(PreconditionError):
    """Raised when a vector uses an index the space does not declare."""


class VectorSyntaxError(DescriptorError):
    """Raised for malformed vector literals."""


class Vector:
    """An immutable finitely supported map I -> K; zero entries are dropped."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Optional[Mapping[str, ScalarLike]] = None):
        clean = {}
        for i, c in (coords or {}).items():
            c = as_scalar(c)
            if c != 0:
                clean[i] = c
        object.__setattr__(self, "_coords", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def unit(cls, index: str) -> "Vector":
        return cls({index: 1})

    @classmethod
    def zero(cls) -> "Vector":
        return cls()

    @property
    def coords(self) -> Dict[str, Fraction]:
        return dict(self._coords)

    @property
    def support(self) -> frozenset:
        return frozenset(self._coords)

    def is_zero(self) -> bool:
        return not self._coords

    def __getitem__(self, index: str) -> Fraction:
        return self._coords.get(index, Fraction(0))

    def items(self) -> Iterator[Tuple[str, Fraction]]:
        return iter(self._coords.items())

    def __add__(self, other: "Vector") -> "Vector":
        out = dict(self._coords)
        for i, c in other._coords.items():
            out[i] = out.get(i, 0) + c
        return Vector(out)

    def __neg__(self) -> "Vector":
        return Vector({i: -c for i, c in self._coords.items()})

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def scale(self, k: ScalarLike) -> "Vector":
        k = as_scalar(k)
        return Vector({i: k * c for i, c in self._coords.items()})

    def __rmul__(self, k: ScalarLike) -> "Vector":
        return self.scale(k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Vector) and self._coords == other._coords

    def __hash__(self) -> int:
        return hash(frozenset(self._coords.items()))

    def __repr__(self) -> str:
        return f"Vector({format_vector(self)!r})"


def combination(coefficients: Sequence[ScalarLike], vectors: Sequence[Vector]) -> Vector:
    """Σ c_j v_j."""
    out = Vector()
    for c, v in zip(coefficients, vectors):
        if c:
            out = out + v.scale(c)
    return out


@dataclass(frozen=True)
class SpaceDescriptor:
    """The space E spanned by an orthogonal base with norm assignment ν."""

    index_set: Tuple[str, ...]
    nu: Mapping[str, XElement]
    field_cfg: FieldConfig
    module: GModule
    _position: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(set(self.index_set)) != len(self.index_set):
            raise PreconditionError("duplicate index in space descriptor")
        missing = [i for i in self.index_set if i not in self.nu]
        if missing:
            raise PreconditionError(f"no norm assigned to {missing}")
        extra = [i for i in self.nu if i not in self.index_set]
        if extra:
            raise UnknownIndexError(f"norm assigned to undeclared indices {extra}")
        self.module.check(*self.nu.values())
        object.__setattr__(self, "index_set", tuple(self.index_set))
        object.__setattr__(self, "nu", dict(self.nu))
        object.__setattr__(self, "_position", {i: k for k, i in enumerate(self.index_set)})

    @property
    def dim(self) -> int:
        return len(self.index_set)

    def position(self, index: str) -> int:
        try:
            return self._position[index]
        except KeyError as exc:
            raise UnknownIndexError(f"unknown index {index!r}") from exc

    def ordered_support(self, v: Vector) -> List[str]:
        return sorted(v.support, key=self.position)

    def check(self, *vectors: Vector) -> None:
        for v in vectors:
            for i in v.support:
                self.position(i)

    def unit(self, index: str) -> Vector:
        self.position(index)
        return Vector.unit(index)

    def units(self) -> List[Vector]:
        return [Vector.unit(i) for i in self.index_set]

    def random_vector(
        self,
        rng: random.Random,
        valuation_range: Tuple[int, int] = (-3, 3),
        density: float = 0.7,
        indices: Optional[Sequence[str]] = None,
    ) -> Vector:
        """A random nonzero vector whose coordinates have valuations in range."""
        pool = list(indices if indices is not None else self.index_set)
        if not pool:
            raise PreconditionError("cannot sample a vector from an empty index set")
        p = self.field_cfg.p
        while True:
            coords = {}
            for i in pool:
                if rng.random() < density:
                    unit = rng.randint(1, p * p - 1)
                    while unit % p == 0:
                        unit = rng.randint(1, p * p - 1)
                    k = rng.randint(*valuation_range)
                    c = Fraction(unit) * (Fraction(p) ** k)
                    coords[i] = -c if rng.random() < 0.5 else c
            if coords:
                return Vector(coords)


# ----------------------------------------------------------------------
# Norm
# ----------------------------------------------------------------------
def term_norm(index: str, coefficient: ScalarLike, sp: SpaceDescriptor) -> NormValue:
    """||λ e_i|| = |λ| ν(i)."""
    return sp.module.scale_norm(abs_value(coefficient, sp.field_cfg), sp.nu[index])


def norm(v: Vector, sp: SpaceDescriptor) -> NormValue:
    """max over the support of |v_i| ν(i); ZERO_NORM for the zero vector."""
    sp.check(v)
    return sp.module.norm_max(term_norm(i, v[i], sp) for i in sp.ordered_support(v))


def dominant_indices(v: Vector, sp: SpaceDescriptor) -> List[str]:
    """Indices whose term attains ||v||, in index order."""
    top = norm(v, sp)
    return [i for i in sp.ordered_support(v) if term_norm(i, v[i], sp) == top]


def leading_form(w: Vector, level: XElement, sp: SpaceDescriptor) -> Dict[str, int]:
    """Residues mod p of the terms of w that sit exactly at `level`.

    Requires ||w|| <= level. The term λ e_i sits at level (b, m) when ν(i) is
    in the orbit of b and |λ| ν(i) = (b, m); its residue is that of
    λ / p^(ν(i).m - m).
    """
    cfg = sp.field_cfg
    out: Dict[str, int] = {}
    for i in sp.ordered_support(w):
        nu = sp.nu[i]
        if not sp.module.orbit_equivalent(nu, level):
            continue
        shift = nu.m - level.m
        if valuation(w[i], cfg) != shift:
            continue
        out[i] = residue(unit_part(w[i], cfg), cfg)
    return out


# ----------------------------------------------------------------------
# Standard construction
# ----------------------------------------------------------------------
def standard_space(
    module: GModule,
    elements: Iterable[object],
    field_cfg: FieldConfig,
    exponent: int = 1,
    prefix: str = "v",
) -> Tuple[SpaceDescriptor, List[Vector]]:
    """One base vector v_b per listed b with ||v_b|| = (b, g0^exponent)."""
    elements = list(elements)
    module.chain.check(*elements)
    names = [f"{prefix}{k}" for k in range(1, len(elements) + 1)]
    sp = SpaceDescriptor(
        index_set=tuple(names),
        nu={n: XElement(b, exponent) for n, b in zip(names, elements)},
        field_cfg=field_cfg,
        module=module,
    )
    return sp, [Vector.unit(n) for n in names]


# ----------------------------------------------------------------------
# Literals: `3*e1 + 1/5*e2`, `-e1`, `e1 - 5*e2`
# ----------------------------------------------------------------------
_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:\s*/\s*\d+)?)\s*\*\s*)?(?P<index>[A-Za-z_][A-Za-z0-9_]*)\s*"
)
_ZERO_RE = re.compile(r"^\s*0\s*$")


def parse_vector(text: str, sp: Optional[SpaceDescriptor] = None) -> Vector:
    """Parse a vector literal; with `sp`, every index must be declared."""
    if _ZERO_RE.match(text or ""):
        return Vector()
    pos = 0
    coords: Dict[str, Fraction] = {}
    body = (text or "").rstrip()
    first = True
    while pos < len(body):
        match = _TERM_RE.match(body, pos)
        if not match or (not first and not match.group("sign")):
            raise VectorSyntaxError(f"cannot parse vector literal {text!r} at position {pos}")
        coef = match.group("coef")
        try:
            c = Fraction(coef.replace(" ", "")) if coef else Fraction(1)
        except ZeroDivisionError as exc:
            raise VectorSyntaxError(f"zero denominator in {text!r}") from exc
        if match.group("sign") == "-":
            c = -c
        index = match.group("index")
        coords[index] = coords.get(index, Fraction(0)) + c
        pos = match.end()
        first = False
    if first:
        raise VectorSyntaxError(f"empty vector literal {text!r}")
    v = Vector(coords)
    if sp is not None:
        try:
            sp.check(v)
        except UnknownIndexError as exc:
            raise VectorSyntaxError(str(exc)) from exc
    return v


def format_vector(v: Vector, sp: Optional[SpaceDescriptor] = None) -> str:
    if v.is_zero():
        return "0"
    indices = sp.ordered_support(v) if sp is not None else sorted(v.support)
    parts: List[str] = []
    for k, i in enumerate(indices):
        c = v[i]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = i if mag == 1 else f"{mag}*{i}"
        if k == 0:
            parts.append(f"-{body}" if sign == "-" else body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def norms_strictly_decreasing(values: Sequence[NormValue], module: GModule) -> bool:
    return all(module.norm_compare(a, b) is Ordering.GT for a, b in zip(values, values[1:]))
