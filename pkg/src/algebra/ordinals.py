"""Ordinals below ε₀ in Cantor normal form.

An `Ordinal` is a tuple of (exponent, coefficient) terms with strictly
decreasing exponents and positive coefficients; the empty tuple is 0.
Exponents are themselves ordinals. Only comparison and construction are
supported.

Literal grammar (`w` stands for ω)::

    ordinal  := term ('+' term)*  |  '0'
    term     := NUMBER | 'w' ['^' exponent] ['*' NUMBER]
    exponent := NUMBER | 'w' | '(' ordinal ')'
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import total_ordering
from typing import List, Tuple, Union

from src.errors import DescriptorError


class OrdinalSyntaxError(DescriptorError):
    """Raised for malformed or non-normal-form ordinal literals."""


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: Tuple[Tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        previous = None
        for exponent, coefficient in self.terms:
            if not isinstance(exponent, Ordinal):
                raise OrdinalSyntaxError(f"exponent {exponent!r} is not an Ordinal")
            if coefficient < 1:
                raise OrdinalSyntaxError(f"coefficient {coefficient} must be >= 1")
            if previous is not None and not exponent < previous:
                raise OrdinalSyntaxError("exponents must be strictly decreasing")
            previous = exponent

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    @classmethod
    def finite(cls, n: int) -> "Ordinal":
        if n < 0:
            raise OrdinalSyntaxError(f"natural number expected, got {n}")
        return cls(((ZERO_ORDINAL, n),)) if n else ZERO_ORDINAL

    @classmethod
    def omega_power(cls, exponent: Union["Ordinal", int], coefficient: int = 1) -> "Ordinal":
        if isinstance(exponent, int):
            exponent = cls.finite(exponent)
        return cls(((exponent, coefficient),))

    @classmethod
    def from_terms(cls, terms: List[Tuple[Union["Ordinal", int], int]]) -> "Ordinal":
        """Build from (exponent, coefficient) pairs; int exponents are shortcuts."""
        return cls(
            tuple(
                (cls.finite(e) if isinstance(e, int) else e, c) for e, c in terms
            )
        )

    def successor(self) -> "Ordinal":
        if self.terms and self.terms[-1][0] == ZERO_ORDINAL:
            head, (_, c) = self.terms[:-1], self.terms[-1]
            return Ordinal(head + ((ZERO_ORDINAL, c + 1),))
        return Ordinal(self.terms + ((ZERO_ORDINAL, 1),))

    # ------------------------------------------------------------------
    # Order
    # ------------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(e.is_zero for e, _ in self.terms)

    def compare(self, other: "Ordinal") -> int:
        """Lexicographic CNF comparison: -1, 0 or 1."""
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            k = e1.compare(e2)
            if k:
                return k
            if c1 != c2:
                return -1 if c1 < c2 else 1
        n1, n2 = len(self.terms), len(other.terms)
        return (n1 > n2) - (n1 < n2)

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.compare(other) < 0

    # ------------------------------------------------------------------
    # Text
    # ------------------------------------------------------------------
    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exponent, coefficient in self.terms:
            if exponent.is_zero:
                parts.append(str(coefficient))
                continue
            if exponent == ONE_ORDINAL:
                text = "w"
            elif exponent.is_finite or exponent == OMEGA:
                text = f"w^{exponent}"
            else:
                text = f"w^({exponent})"
            parts.append(f"{text}*{coefficient}" if coefficient != 1 else text)
        return "+".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Ordinal":
        parser = _OrdinalParser(text)
        value = parser.ordinal()
        parser.expect_end()
        return value


ZERO_ORDINAL = Ordinal()
ONE_ORDINAL = Ordinal(((ZERO_ORDINAL, 1),))
OMEGA = Ordinal(((ONE_ORDINAL, 1),))


_TOKEN_RE = re.compile(r"\s*(\d+|w|\^|\*|\+|\(|\))")


class _OrdinalParser:
    """Recursive-descent parser over the literal grammar in the module doc."""

    def __init__(self, text: str):
        self.text = text or ""
        self.tokens: List[str] = []
        pos = 0
        stripped = self.text.rstrip()
        while pos < len(stripped):
            match = _TOKEN_RE.match(stripped, pos)
            if not match:
                raise OrdinalSyntaxError(f"unexpected character in ordinal {text!r} at {pos}")
            self.tokens.append(match.group(1))
            pos = match.end()
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else ""

    def take(self) -> str:
        token = self.peek()
        if not token:
            raise OrdinalSyntaxError(f"unexpected end of ordinal {self.text!r}")
        self.pos += 1
        return token

    def expect(self, token: str) -> None:
        got = self.take()
        if got != token:
            raise OrdinalSyntaxError(f"expected {token!r}, got {got!r} in {self.text!r}")

    def expect_end(self) -> None:
        if self.peek():
            raise OrdinalSyntaxError(f"trailing {self.peek()!r} in ordinal {self.text!r}")

    def ordinal(self) -> Ordinal:
        terms = [self.term()]
        while self.peek() == "+":
            self.take()
            terms.append(self.term())
        terms = [t for t in terms if t[1] > 0]
        if not terms:
            return ZERO_ORDINAL
        try:
            return Ordinal(tuple(terms))
        except OrdinalSyntaxError as exc:
            raise OrdinalSyntaxError(f"{self.text!r} is not in Cantor normal form: {exc.message}") from exc

    def term(self) -> Tuple[Ordinal, int]:
        token = self.take()
        if token.isdigit():
            return ZERO_ORDINAL, int(token)
        if token != "w":
            raise OrdinalSyntaxError(f"unexpected {token!r} in ordinal {self.text!r}")
        exponent = ONE_ORDINAL
        if self.peek() == "^":
            self.take()
            exponent = self.exponent()
        coefficient = 1
        if self.peek() == "*":
            self.take()
            token = self.take()
            if not token.isdigit() or int(token) < 1:
                raise OrdinalSyntaxError(f"coefficient must be a positive integer in {self.text!r}")
            coefficient = int(token)
        return exponent, coefficient

    def exponent(self) -> Ordinal:
        token = self.take()
        if token.isdigit():
            return Ordinal.finite(int(token))
        if token == "w":
            return OMEGA
        if token == "(":
            value = self.ordinal()
            self.expect(")")
            return value
        raise OrdinalSyntaxError(f"bad exponent {token!r} in ordinal {self.text!r}")


def random_ordinal(rng: random.Random, depth: int = 2, max_terms: int = 3, max_coefficient: int = 9) -> Ordinal:
    """A random ordinal with nested exponents up to `depth` levels."""
    if depth <= 0:
        return Ordinal.finite(rng.randint(0, max_coefficient))
    exponents = {random_ordinal(rng, depth - 1, max_terms, max_coefficient) for _ in range(rng.randint(0, max_terms))}
    ordered = sorted(exponents, reverse=True)
    return Ordinal(tuple((e, rng.randint(1, max_coefficient)) for e in ordered))
