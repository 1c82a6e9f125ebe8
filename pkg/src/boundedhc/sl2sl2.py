"""Bounded modules of sl(2)+sl(2) over the diagonal sl(2).

The simple bounded modules W_{a, a-n} are indexed by a complex (here rational)
number a and an integer n >= 0; all of them have k-character z^n / (1 - z^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import LaurentPoly, RationalChar, cg_product


@dataclass(frozen=True)
class SctParams:
    a: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))


def sct_is_valid(p: SctParams) -> bool:
    a, n = p.a, p.n
    if a.denominator != 1:
        return True
    return a >= 0 and a - n <= 0


def sct_char(n: int) -> RationalChar:
    if n < 0:
        raise ValueError("n must be non-negative")
    return RationalChar.monomial_over(n, 2)


def finite_dim_char(a: int, n: int) -> LaurentPoly:
    """k-character of V_{a-1} (x) V_{n-a-1}: z^(n-2) + z^(n-4) + ... + z^|n-2a|."""
    if int(a) != a or int(n) != n:
        raise ValueError("finite-dimensional case needs integer a and n")
    a, n = int(a), int(n)
    if not 1 <= a < n:
        raise ValueError(f"need 1 <= a < n for a finite-dimensional module, got a={a}, n={n}")
    lo = abs(n - 2 * a)
    return LaurentPoly((e, 1) for e in range(lo, n - 1, 2))


def finite_dim_char_cg(a: int, n: int) -> LaurentPoly:
    """The same character straight from the Clebsch-Gordan rule."""
    return cg_product(int(a) - 1, int(n) - int(a) - 1)
