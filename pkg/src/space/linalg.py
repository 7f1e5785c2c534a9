"""Exact elimination over ℚ and over the residue field F_p.

Vectors here are plain dicts index -> coefficient; callers fix the index
order. Both solvers answer "is `target` a combination of `columns`, and with
which coefficients?" by reducing the augmented matrix with sympy's
`DomainMatrix`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, List, Mapping, Optional, Sequence

from sympy import GF, QQ
from sympy.polys.domains import Domain
from sympy.polys.matrices import DomainMatrix

Index = Hashable


def _solve(
    columns: Sequence[Mapping[Index, object]],
    target: Mapping[Index, object],
    rows: Sequence[Index],
    domain: Domain,
    lift: Callable[[object], object],
) -> Optional[List[object]]:
    n = len(columns)
    zero = domain.zero
    if not rows:
        return [zero] * n
    # Augmented matrix, one row per coordinate.
    entries = [[lift(col.get(r, 0)) for col in columns] + [lift(target.get(r, 0))] for r in rows]
    reduced, pivots = DomainMatrix(entries, (len(rows), n + 1), domain).rref()
    if n in pivots:
        return None
    solution: List[object] = [zero] * n
    for r, col in enumerate(pivots):
        solution[col] = reduced[r, n].element
    return solution


def solve_rational(
    columns: Sequence[Mapping[Index, Fraction]],
    target: Mapping[Index, Fraction],
    rows: Sequence[Index],
) -> Optional[List[Fraction]]:
    """Coefficients c with Σ c_j columns_j = target over ℚ, or None."""

    def lift(x) -> object:
        x = Fraction(x)
        return QQ(x.numerator, x.denominator)

    solution = _solve(columns, target, rows, QQ, lift)
    if solution is None:
        return None
    return [Fraction(int(c.numerator), int(c.denominator)) for c in solution]


def solve_mod_p(
    columns: Sequence[Mapping[Index, int]],
    target: Mapping[Index, int],
    rows: Sequence[Index],
    p: int,
) -> Optional[List[int]]:
    """Coefficients c in 0..p-1 with Σ c_j columns_j ≡ target (mod p), or None."""
    field = GF(p)
    solution = _solve(columns, target, rows, field, lambda v: field(int(v) % p))
    if solution is None:
        return None
    # GF(p) may print and convert in the symmetric range.
    return [int(c) % p for c in solution]
