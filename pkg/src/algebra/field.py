"""Exact arithmetic in ℚ with a p-adic valuation.

The value group is the cyclic group G = <g0> written through integer
exponents: |x| = g0^(-v_p(x)) with g0 > 1, so |p| = g0^-1 and exponent order
is group order. Scalars are `fractions.Fraction` values (always reduced,
positive denominator).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Union

from sympy import isprime

from src.config import settings
from src.errors import DescriptorError, PreconditionError, UltranormError

Scalar = Fraction
ScalarLike = Union[Fraction, int]

# v_p(0); compares above every integer valuation.
PLUS_INFINITY = math.inf


class InvalidFieldConfig(UltranormError):
    """Raised when the configured prime is not a prime >= 2."""


class ZeroInversionError(PreconditionError):
    """Raised when inverting the zero scalar."""


class ScalarSyntaxError(DescriptorError):
    """Raised for malformed scalar or absolute-value literals."""


@dataclass(frozen=True)
class FieldConfig:
    """The field K = ℚ with the p-adic valuation."""

    p: int = settings.ULTRANORM_DEFAULT_PRIME

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not isprime(self.p):
            raise InvalidFieldConfig(f"p must be a prime >= 2, got {self.p!r}")


@total_ordering
@dataclass(frozen=True)
class AbsValue:
    """An element of G ∪ {0}: g0^exponent, or ZERO when `exponent` is None."""

    exponent: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def __lt__(self, other: "AbsValue") -> bool:
        if not isinstance(other, AbsValue):
            return NotImplemented
        if self.exponent is None:
            return other.exponent is not None
        if other.exponent is None:
            return False
        return self.exponent < other.exponent

    def __mul__(self, other: "AbsValue") -> "AbsValue":
        if not isinstance(other, AbsValue):
            return NotImplemented
        if self.exponent is None or other.exponent is None:
            return ZERO
        return AbsValue(self.exponent + other.exponent)

    def __str__(self) -> str:
        return format_abs(self)


ZERO = AbsValue(None)
ONE = AbsValue(0)


def as_scalar(x: ScalarLike) -> Scalar:
    """Coerce ints (and Fractions) to a Scalar."""
    return x if isinstance(x, Fraction) else Fraction(x)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        v += 1
        n //= p
    return v


def valuation(x: ScalarLike, cfg: FieldConfig) -> Union[int, float]:
    """Return v_p(x), or PLUS_INFINITY for x = 0."""
    x = as_scalar(x)
    if x == 0:
        return PLUS_INFINITY
    return _int_valuation(x.numerator, cfg.p) - _int_valuation(x.denominator, cfg.p)


def abs_value(x: ScalarLike, cfg: FieldConfig) -> AbsValue:
    """|x| = g0^(-v_p(x)); ZERO for x = 0."""
    v = valuation(x, cfg)
    if v == PLUS_INFINITY:
        return ZERO
    return AbsValue(-int(v))


def unit_part(x: ScalarLike, cfg: FieldConfig) -> Scalar:
    """x / p^v_p(x), a p-adic unit. Requires x != 0."""
    x = as_scalar(x)
    if x == 0:
        raise ZeroInversionError("the zero scalar has no unit part")
    return x / uniformizer_power(int(valuation(x, cfg)), cfg)


def residue(x: ScalarLike, cfg: FieldConfig) -> int:
    """Reduction of a p-adic integer x modulo p, as 0..p-1."""
    x = as_scalar(x)
    if x != 0 and valuation(x, cfg) < 0:
        raise PreconditionError(f"{format_scalar(x)} is not a {cfg.p}-adic integer")
    return (x.numerator * pow(x.denominator, -1, cfg.p)) % cfg.p


def uniformizer_power(n: int, cfg: FieldConfig) -> Scalar:
    """p^n as an exact rational; |p^n| = g0^-n."""
    if n >= 0:
        return Fraction(cfg.p**n)
    return Fraction(1, cfg.p ** (-n))


def invert(x: ScalarLike) -> Scalar:
    x = as_scalar(x)
    if x == 0:
        raise ZeroInversionError("cannot invert the zero scalar")
    return 1 / x


# ----------------------------------------------------------------------
# Text codecs
# ----------------------------------------------------------------------
_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_ABS_RE = re.compile(r"^\s*g\s*\^\s*([+-]?\d+)\s*$")


def parse_scalar(text: str) -> Scalar:
    """Parse "num/den" or "num"."""
    match = _SCALAR_RE.match(text or "")
    if not match:
        raise ScalarSyntaxError(f"not a rational literal: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ScalarSyntaxError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_scalar(x: ScalarLike) -> str:
    x = as_scalar(x)
    return f"{x.numerator}/{x.denominator}"


def parse_abs(text: str) -> AbsValue:
    """Parse "g^m" or "0"."""
    if (text or "").strip() == "0":
        return ZERO
    match = _ABS_RE.match(text or "")
    if not match:
        raise ScalarSyntaxError(f"not an absolute value literal: {text!r}")
    return AbsValue(int(match.group(1)))


def format_abs(a: AbsValue) -> str:
    return "0" if a.exponent is None else f"g^{a.exponent}"
