"""The G-module X = B × G over a cyclic group G = <g0>.

Points are pairs (b, m) meaning (b, g0^m). The order is exponent-major and
chain-minor, so that ... < g0^-1 B < B < g0 B < ... and every copy B × {m}
is convex. G acts on the exponent only: g0^k (b, m) = (b, m + k).

Norm values live in X ∪ {0}; the adjoined least element is `ZERO_NORM` and is
never an `XElement`.
"""

from __future__ import annotations

import enum
import logging
import random
import re
from dataclasses import dataclass
from functools import cmp_to_key, total_ordering
from typing import Any, Callable, Iterable, Tuple, Union

from src.algebra.chains import (
    Chain,
    ChainMembershipError,
    ChainSyntaxError,
    FiniteChain,
    Ordering,
    split_top_level,
)
from src.algebra.field import AbsValue
from src.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True)
class GroupElement:
    """g0^exponent."""

    exponent: int

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        return GroupElement(self.exponent + other.exponent)

    def inverse(self) -> "GroupElement":
        return GroupElement(-self.exponent)

    def __lt__(self, other: "GroupElement") -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.exponent < other.exponent

    @classmethod
    def from_abs(cls, a: AbsValue) -> "GroupElement":
        if a.is_zero:
            raise PreconditionError("0 is not an element of G")
        return cls(a.exponent)

    def __str__(self) -> str:
        return f"g^{self.exponent}"


IDENTITY = GroupElement(0)
G0 = GroupElement(1)


@dataclass(frozen=True)
class XElement:
    """The point (b, g0^m) of B × G."""

    b: Any
    m: int


class _ZeroNorm(enum.Enum):
    ZERO = "0"

    def __str__(self) -> str:
        return "0"


ZERO_NORM = _ZeroNorm.ZERO
NormValue = Union[XElement, _ZeroNorm]


@dataclass(frozen=True)
class BaseInterval:
    """[a, g0 a), or (a, g0 a] when `closed_right` is set."""

    module: "GModule"
    a: XElement
    closed_right: bool = False

    @property
    def upper(self) -> XElement:
        return self.module.act(G0, self.a)

    def contains(self, y: XElement) -> bool:
        lo = self.module.x_compare(self.a, y)
        hi = self.module.x_compare(y, self.upper)
        if self.closed_right:
            return lo is Ordering.LT and hi is not Ordering.GT
        return lo is not Ordering.GT and hi is Ordering.LT

    def __str__(self) -> str:
        fmt = self.module.format_x
        if self.closed_right:
            return f"({fmt(self.a)}, {fmt(self.upper)}]"
        return f"[{fmt(self.a)}, {fmt(self.upper)})"


_G_RE = re.compile(r"^\s*g\s*\^\s*([+-]?\d+)\s*$")


class GModule:
    """X = B × G for a fixed chain B."""

    def __init__(self, chain: Chain):
        self.chain = chain

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GModule) and self.chain == other.chain

    def __hash__(self) -> int:
        return hash(("GModule", self.chain))

    def __repr__(self) -> str:
        return f"GModule({self.chain.descriptor!r})"

    # ------------------------------------------------------------------
    # Order and action
    # ------------------------------------------------------------------
    def check(self, *xs: XElement) -> None:
        for x in xs:
            if not isinstance(x, XElement) or not self.chain.contains(x.b):
                raise ChainMembershipError(f"{x!r} is not a point of X over {self.chain.descriptor}")

    def x_compare(self, x: XElement, y: XElement) -> Ordering:
        self.check(x, y)
        if x.m != y.m:
            return Ordering.LT if x.m < y.m else Ordering.GT
        return self.chain.compare(x.b, y.b)

    def act(self, g: GroupElement, x: XElement) -> XElement:
        self.check(x)
        return XElement(x.b, x.m + g.exponent)

    def orbit_equivalent(self, x: XElement, y: XElement) -> bool:
        self.check(x, y)
        return self.chain.compare(x.b, y.b) is Ordering.EQ

    # ------------------------------------------------------------------
    # Convex base
    # ------------------------------------------------------------------
    def convex_base_interval(self, a: XElement, closed_right: bool = False) -> BaseInterval:
        self.check(a)
        return BaseInterval(self, a, closed_right)

    def canonical_rep(self, x: XElement, a: XElement | None = None) -> Tuple[XElement, int]:
        """The unique (rep, k) with rep in [a, g0 a) and g0^k rep = x.

        Without `a` the base is B × {0}: rep = (b, g0^0) and k = m.
        """
        self.check(x)
        if a is None:
            return XElement(x.b, 0), x.m
        self.check(a)
        if self.chain.compare(x.b, a.b) is Ordering.LT:
            rep = XElement(x.b, a.m + 1)
        else:
            rep = XElement(x.b, a.m)
        k = x.m - rep.m
        if not self.convex_base_interval(a).contains(rep) or self.act(GroupElement(k), rep) != x:
            raise InvariantViolation(f"canonical representative of {x!r} left [a, g0 a)")
        return rep, k

    def phi(self, x: XElement, x0: XElement) -> GroupElement:
        """max{g in G : g x0 <= x}; attained because G is discrete."""
        self.check(x, x0)
        m = x.m - x0.m
        if self.chain.compare(x0.b, x.b) is Ordering.GT:
            m -= 1
        return GroupElement(m)

    def descend_below(self, x: XElement, y: XElement) -> int:
        """An exponent m with g0^m x < y (the orbit of x is coinitial)."""
        self.check(x, y)
        return y.m - x.m - 1

    def ascend_above(self, x: XElement, y: XElement) -> int:
        """An exponent n with g0^n x > y (the orbit of x is cofinal)."""
        self.check(x, y)
        return y.m - x.m + 1

    # ------------------------------------------------------------------
    # X ∪ {0}
    # ------------------------------------------------------------------
    def norm_compare(self, x: NormValue, y: NormValue) -> Ordering:
        if x is ZERO_NORM or y is ZERO_NORM:
            return Ordering.of((x is not ZERO_NORM) - (y is not ZERO_NORM))
        return self.x_compare(x, y)

    def norm_max(self, values: Iterable[NormValue]) -> NormValue:
        best: NormValue = ZERO_NORM
        for v in values:
            if self.norm_compare(v, best) is Ordering.GT:
                best = v
        return best

    def norm_key(self) -> Callable[[NormValue], Any]:
        """Sort key for norm values (ZERO_NORM first)."""
        return cmp_to_key(lambda x, y: int(self.norm_compare(x, y)))

    def scale_norm(self, a: AbsValue, x: NormValue) -> NormValue:
        """|λ| · x with 0 absorbing."""
        if a.is_zero or x is ZERO_NORM:
            return ZERO_NORM
        return self.act(GroupElement.from_abs(a), x)

    # ------------------------------------------------------------------
    # Sampling and text
    # ------------------------------------------------------------------
    def sample(self, rng: random.Random, span: int = 6) -> XElement:
        return XElement(self.chain.sample(rng), rng.randint(-span, span))

    def parse_x(self, text: str) -> XElement:
        """Parse `(b@<element>, g^<m>)`."""
        body = (text or "").strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ChainSyntaxError(f"point literal must look like (b@<element>, g^<m>): {text!r}")
        parts = split_top_level(body[1:-1])
        if len(parts) != 2 or not parts[0].startswith("b@"):
            raise ChainSyntaxError(f"point literal must look like (b@<element>, g^<m>): {text!r}")
        match = _G_RE.match(parts[1])
        if not match:
            raise ChainSyntaxError(f"bad group exponent {parts[1]!r} in {text!r}")
        return XElement(self.chain.parse_element(parts[0][2:]), int(match.group(1)))

    def format_x(self, x: NormValue) -> str:
        if x is ZERO_NORM:
            return "0"
        return f"(b@{self.chain.format_element(x.b)}, g^{x.m})"


def trivial_module() -> GModule:
    """G itself as a G-module (B a single point)."""
    return GModule(FiniteChain(1))


def is_module_map(
    f: Callable[[XElement], XElement],
    source: GModule,
    target: GModule,
    samples: int = 200,
    rng: random.Random | None = None,
) -> bool:
    """Falsification check that f is increasing and G-equivariant."""
    rng = rng or random.Random(0)
    for _ in range(samples):
        x, y = source.sample(rng), source.sample(rng)
        g = GroupElement(rng.randint(-5, 5))
        if source.x_compare(x, y) is Ordering.GT:
            x, y = y, x
        if target.x_compare(f(x), f(y)) is Ordering.GT:
            logger.debug("module map not increasing at %r <= %r", x, y)
            return False
        if f(source.act(g, x)) != target.act(g, f(x)):
            logger.debug("module map not equivariant at %r, g=%s", x, g)
            return False
    return True
