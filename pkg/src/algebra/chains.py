"""Totally ordered carriers B for the convex base of X = B × G.

Well-orderedness is a per-class verdict rather than a semi-decision on a
black-box comparator: every chain class knows whether it is well ordered and,
when it is not, how to produce an infinite descent on demand.

Descriptor grammar (used in descriptor files)::

    finite:<n>            {0 < 1 < ... < n-1}
    ordinal               ordinals below ε₀ (Cantor normal form)
    ordinal:<CNF>         ordinals below the given bound, e.g. ordinal:w^2*3+1
    qinterval01           the rationals of (0, 1]
    descending_omega      b_1 > b_2 > b_3 > ...   (element k is b_k)
    lex(<c1>,<c2>,...)    lexicographic product, first factor major
"""

from __future__ import annotations

import logging
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import cmp_to_key
from typing import Any, Hashable, List, Optional, Sequence, Tuple

from src.algebra.ordinals import Ordinal, OrdinalSyntaxError, ZERO_ORDINAL, random_ordinal
from src.errors import DescriptorError, InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)

ChainElement = Hashable


class Ordering(IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, k: int) -> "Ordering":
        return cls((k > 0) - (k < 0))


class Verdict(str, Enum):
    YES = "YES"
    NO = "NO"

    @classmethod
    def of(cls, flag: bool) -> "Verdict":
        return cls.YES if flag else cls.NO


class Side(str, Enum):
    BELOW = "below"
    ABOVE = "above"


@dataclass(frozen=True)
class Segment:
    """The strict part of a chain below or above a pivot."""

    empty: bool
    verdict: Verdict


class ChainMembershipError(PreconditionError):
    """Raised when an element does not belong to the chain it is used with."""


class WellOrderedChainError(PreconditionError):
    """Raised when a descent is requested from a well-ordered chain."""


class ChainSyntaxError(DescriptorError):
    """Raised for malformed chain descriptors or element literals."""


# ----------------------------------------------------------------------
# Base class
# ----------------------------------------------------------------------
class Chain(ABC):
    """A non-empty totally ordered set with a well-orderedness verdict."""

    @property
    @abstractmethod
    def descriptor(self) -> str:
        """Canonical descriptor string; `parse_chain(descriptor)` rebuilds it."""

    @abstractmethod
    def contains(self, e: Any) -> bool: ...

    @abstractmethod
    def _compare(self, a: Any, b: Any) -> int: ...

    @abstractmethod
    def is_well_ordered(self) -> Verdict: ...

    @abstractmethod
    def _descent(self, k: int) -> List[Any]: ...

    @abstractmethod
    def segment(self, pivot: Any, side: Side) -> Segment: ...

    @abstractmethod
    def anchor(self) -> Any:
        """Some fixed element of the chain."""

    @abstractmethod
    def sample(self, rng: random.Random) -> Any: ...

    @abstractmethod
    def parse_element(self, text: str) -> Any: ...

    @abstractmethod
    def format_element(self, e: Any) -> str: ...

    # ------------------------------------------------------------------
    # Shared behaviour
    # ------------------------------------------------------------------
    def check(self, *elements: Any) -> None:
        for e in elements:
            if not self.contains(e):
                raise ChainMembershipError(f"{e!r} is not an element of {self.descriptor}")

    def compare(self, a: Any, b: Any) -> Ordering:
        self.check(a, b)
        return Ordering.of(self._compare(a, b))

    def descending_witness(self, k: int) -> List[Any]:
        """b_1 > b_2 > ... > b_k; only for chains that are not well ordered."""
        if self.is_well_ordered() is Verdict.YES:
            raise WellOrderedChainError(f"{self.descriptor} is well ordered; it has no infinite descent")
        if k < 1:
            raise PreconditionError(f"descent length must be positive, got {k}")
        witness = self._descent(k)
        for hi, lo in zip(witness, witness[1:]):
            if self._compare(hi, lo) <= 0:
                raise InvariantViolation(f"descent of {self.descriptor} is not strictly decreasing")
        logger.debug("descent of %s: %d terms", self.descriptor, k)
        return witness

    def sort_key(self):
        """A sort key ordering elements of this chain."""
        return cmp_to_key(self._compare)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Chain) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.descriptor!r})"


# ----------------------------------------------------------------------
# Chain classes
# ----------------------------------------------------------------------
class FiniteChain(Chain):
    """{0 < 1 < ... < n-1}."""

    def __init__(self, n: int):
        if n < 1:
            raise ChainSyntaxError(f"a chain must be non-empty, got finite:{n}")
        self.n = n

    @property
    def descriptor(self) -> str:
        return f"finite:{self.n}"

    def contains(self, e: Any) -> bool:
        return isinstance(e, int) and not isinstance(e, bool) and 0 <= e < self.n

    def _compare(self, a: int, b: int) -> int:
        return (a > b) - (a < b)

    def is_well_ordered(self) -> Verdict:
        return Verdict.YES

    def _descent(self, k: int) -> List[Any]:  # pragma: no cover - unreachable
        raise WellOrderedChainError(self.descriptor)

    def segment(self, pivot: int, side: Side) -> Segment:
        self.check(pivot)
        empty = pivot == 0 if side is Side.BELOW else pivot == self.n - 1
        return Segment(empty=empty, verdict=Verdict.YES)

    def anchor(self) -> int:
        return 0

    def sample(self, rng: random.Random) -> int:
        return rng.randrange(self.n)

    def parse_element(self, text: str) -> int:
        try:
            e = int(text.strip())
        except ValueError as exc:
            raise ChainSyntaxError(f"{text!r} is not an element of {self.descriptor}") from exc
        if not self.contains(e):
            raise ChainSyntaxError(f"{e} is out of range for {self.descriptor}")
        return e

    def format_element(self, e: int) -> str:
        return str(e)


class OrdinalChain(Chain):
    """Ordinals below ε₀, or below `bound` when one is given."""

    def __init__(self, bound: Optional[Ordinal] = None):
        if bound is not None and bound.is_zero:
            raise ChainSyntaxError("ordinal:0 is the empty chain")
        self.bound = bound

    @property
    def descriptor(self) -> str:
        return "ordinal" if self.bound is None else f"ordinal:{self.bound}"

    def contains(self, e: Any) -> bool:
        return isinstance(e, Ordinal) and (self.bound is None or e < self.bound)

    def _compare(self, a: Ordinal, b: Ordinal) -> int:
        return a.compare(b)

    def is_well_ordered(self) -> Verdict:
        return Verdict.YES

    def _descent(self, k: int) -> List[Any]:  # pragma: no cover - unreachable
        raise WellOrderedChainError(self.descriptor)

    def segment(self, pivot: Ordinal, side: Side) -> Segment:
        self.check(pivot)
        if side is Side.BELOW:
            return Segment(empty=pivot.is_zero, verdict=Verdict.YES)
        empty = self.bound is not None and not pivot.successor() < self.bound
        return Segment(empty=empty, verdict=Verdict.YES)

    def anchor(self) -> Ordinal:
        return ZERO_ORDINAL

    def sample(self, rng: random.Random) -> Ordinal:
        if self.bound is not None and self.bound.is_finite:
            return Ordinal.finite(rng.randrange(self.bound.terms[0][1]))
        for _ in range(32):
            candidate = random_ordinal(rng)
            if self.contains(candidate):
                return candidate
        return ZERO_ORDINAL

    def parse_element(self, text: str) -> Ordinal:
        try:
            e = Ordinal.parse(text)
        except OrdinalSyntaxError as exc:
            raise ChainSyntaxError(exc.message) from exc
        if not self.contains(e):
            raise ChainSyntaxError(f"{e} is not below the bound of {self.descriptor}")
        return e

    def format_element(self, e: Ordinal) -> str:
        return str(e)


class RationalIntervalChain(Chain):
    """The rationals of (0, 1] in their natural order."""

    @property
    def descriptor(self) -> str:
        return "qinterval01"

    def contains(self, e: Any) -> bool:
        return isinstance(e, (Fraction, int)) and not isinstance(e, bool) and 0 < e <= 1

    def _compare(self, a: Fraction, b: Fraction) -> int:
        return (a > b) - (a < b)

    def is_well_ordered(self) -> Verdict:
        return Verdict.NO

    def _descent(self, k: int) -> List[Any]:
        return [Fraction(1, 2**i) for i in range(1, k + 1)]

    def segment(self, pivot: Fraction, side: Side) -> Segment:
        self.check(pivot)
        if side is Side.BELOW:
            return Segment(empty=False, verdict=Verdict.NO)
        if pivot == 1:
            return Segment(empty=True, verdict=Verdict.YES)
        return Segment(empty=False, verdict=Verdict.NO)

    def anchor(self) -> Fraction:
        return Fraction(1)

    def sample(self, rng: random.Random) -> Fraction:
        den = rng.randint(1, 64)
        return Fraction(rng.randint(1, den), den)

    def parse_element(self, text: str) -> Fraction:
        try:
            e = Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ChainSyntaxError(f"{text!r} is not a rational") from exc
        if not self.contains(e):
            raise ChainSyntaxError(f"{e} is not in (0, 1]")
        return e

    def format_element(self, e: Fraction) -> str:
        return str(Fraction(e))


class DescendingOmegaChain(Chain):
    """b_1 > b_2 > b_3 > ...; element k stands for b_k."""

    @property
    def descriptor(self) -> str:
        return "descending_omega"

    def contains(self, e: Any) -> bool:
        return isinstance(e, int) and not isinstance(e, bool) and e >= 1

    def _compare(self, a: int, b: int) -> int:
        return (a < b) - (a > b)

    def is_well_ordered(self) -> Verdict:
        return Verdict.NO

    def _descent(self, k: int) -> List[Any]:
        return list(range(1, k + 1))

    def segment(self, pivot: int, side: Side) -> Segment:
        self.check(pivot)
        if side is Side.BELOW:
            return Segment(empty=False, verdict=Verdict.NO)
        return Segment(empty=pivot == 1, verdict=Verdict.YES)

    def anchor(self) -> int:
        return 1

    def sample(self, rng: random.Random) -> int:
        return rng.randint(1, 256)

    def parse_element(self, text: str) -> int:
        try:
            e = int(text.strip())
        except ValueError as exc:
            raise ChainSyntaxError(f"{text!r} is not an index of {self.descriptor}") from exc
        if not self.contains(e):
            raise ChainSyntaxError(f"index {e} must be >= 1")
        return e

    def format_element(self, e: int) -> str:
        return str(e)


class LexProductChain(Chain):
    """Tuples ordered lexicographically, first factor most significant."""

    def __init__(self, factors: Sequence[Chain]):
        if len(factors) < 2:
            raise ChainSyntaxError("lex(...) needs at least two factors")
        self.factors: Tuple[Chain, ...] = tuple(factors)

    @property
    def descriptor(self) -> str:
        return "lex(" + ",".join(f.descriptor for f in self.factors) + ")"

    def contains(self, e: Any) -> bool:
        return (
            isinstance(e, tuple)
            and len(e) == len(self.factors)
            and all(f.contains(x) for f, x in zip(self.factors, e))
        )

    def _compare(self, a: tuple, b: tuple) -> int:
        for factor, x, y in zip(self.factors, a, b):
            k = factor._compare(x, y)
            if k:
                return k
        return 0

    def is_well_ordered(self) -> Verdict:
        return Verdict.of(all(f.is_well_ordered() is Verdict.YES for f in self.factors))

    def _descent(self, k: int) -> List[Any]:
        # Vary the first non-well-ordered factor, pin the others.
        pivot = next(i for i, f in enumerate(self.factors) if f.is_well_ordered() is Verdict.NO)
        anchors = [f.anchor() for f in self.factors]
        out = []
        for x in self.factors[pivot].descending_witness(k):
            element = list(anchors)
            element[pivot] = x
            out.append(tuple(element))
        return out

    def segment(self, pivot: tuple, side: Side) -> Segment:
        # {x <side> pivot} is the ordered union over i of the pieces
        # {x_<i = pivot_<i, x_i <side> pivot_i} × F_{i+1} × ... × F_n.
        self.check(pivot)
        empty = True
        well_ordered = True
        for i, (factor, x) in enumerate(zip(self.factors, pivot)):
            head = factor.segment(x, side)
            if head.empty:
                continue
            empty = False
            tail_ok = all(f.is_well_ordered() is Verdict.YES for f in self.factors[i + 1:])
            if head.verdict is Verdict.NO or not tail_ok:
                well_ordered = False
        return Segment(empty=empty, verdict=Verdict.of(well_ordered))

    def anchor(self) -> tuple:
        return tuple(f.anchor() for f in self.factors)

    def sample(self, rng: random.Random) -> tuple:
        return tuple(f.sample(rng) for f in self.factors)

    def parse_element(self, text: str) -> tuple:
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ChainSyntaxError(f"lex element must be parenthesised: {text!r}")
        parts = split_top_level(body[1:-1])
        if len(parts) != len(self.factors):
            raise ChainSyntaxError(
                f"lex element {text!r} has {len(parts)} components, expected {len(self.factors)}"
            )
        return tuple(f.parse_element(p) for f, p in zip(self.factors, parts))

    def format_element(self, e: tuple) -> str:
        return "(" + ", ".join(f.format_element(x) for f, x in zip(self.factors, e)) + ")"


# ----------------------------------------------------------------------
# Module-level operations
# ----------------------------------------------------------------------
def compare(chain: Chain, b1: Any, b2: Any) -> Ordering:
    return chain.compare(b1, b2)


def is_well_ordered(chain: Chain) -> Verdict:
    return chain.is_well_ordered()


def descending_witness(chain: Chain, k: int) -> List[Any]:
    return chain.descending_witness(k)


def split_top_level(text: str, sep: str = ",") -> List[str]:
    """Split on `sep` outside parentheses, stripping each part."""
    parts: List[str] = []
    depth = 0
    current: List[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ChainSyntaxError(f"unbalanced parentheses in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ChainSyntaxError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current).strip())
    return parts


def parse_chain(text: str) -> Chain:
    """Build a chain from its descriptor (see the module docstring)."""
    body = (text or "").strip()
    if body.startswith("finite:"):
        try:
            return FiniteChain(int(body[len("finite:"):]))
        except ValueError as exc:
            raise ChainSyntaxError(f"bad finite chain size in {text!r}") from exc
    if body == "ordinal":
        return OrdinalChain()
    if body.startswith("ordinal:"):
        try:
            return OrdinalChain(Ordinal.parse(body[len("ordinal:"):]))
        except OrdinalSyntaxError as exc:
            raise ChainSyntaxError(exc.message) from exc
    if body == "qinterval01":
        return RationalIntervalChain()
    if body == "descending_omega":
        return DescendingOmegaChain()
    if body.startswith("lex(") and body.endswith(")"):
        return LexProductChain([parse_chain(part) for part in split_top_level(body[4:-1])])
    raise ChainSyntaxError(f"unknown chain descriptor {text!r}")
