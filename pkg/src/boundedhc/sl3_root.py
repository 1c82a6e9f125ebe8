"""Bounded sl(3)-modules over a root sl(2).

Simple bounded modules L^+_{a,b} and L^-_{a,b} are labelled by a sign, an
integer a >= 0 and a rational b.  Their characters are partial sums
1 + 2z + ... capped at a plateau, written here as numerator / (1 - z).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import KCharacter, LaurentPoly, RationalChar, cg_product


@dataclass(frozen=True)
class RootCaseParams:
    sign: str
    a: int
    b: Fraction

    def __post_init__(self):
        if self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        if int(self.a) != self.a or self.a < 0:
            raise ValueError(f"a must be a non-negative integer, got {self.a}")
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", Fraction(self.b))


def _nonneg_int(x: Fraction) -> bool:
    return x.denominator == 1 and x >= 0


def root_is_valid(p: RootCaseParams) -> bool:
    if p.sign == "+":
        return not _nonneg_int(p.b)
    return not _nonneg_int(-p.a - p.b)


def _plus_b(p: RootCaseParams) -> Fraction:
    """b for the + family; the - family is the + one with b -> -a-b."""
    return p.b if p.sign == "+" else -p.a - p.b


def staircase(lo: int, hi: int) -> RationalChar:
    """(z^lo + ... + z^hi) / (1 - z): steps 1, 2, ... then a plateau."""
    return RationalChar(LaurentPoly((e, 1) for e in range(lo, hi + 1)), (1,))


def generic_root_char(a: int) -> RationalChar:
    """1 + 2z + ... + a z^(a-1) + (a+1)(z^a + z^(a+1) + ...)."""
    return staircase(0, a)


def root_branch(p: RootCaseParams) -> str:
    """'generic' or 'truncated' character shape."""
    if not root_is_valid(p):
        raise ValueError(f"L^{p.sign}_{{{p.a},{p.b}}} is not a valid parameter")
    b = _plus_b(p)
    if b.denominator == 1 and -b >= 2 and p.a + b >= -1:
        return "truncated"
    return "generic"


def root_char(p: RootCaseParams) -> RationalChar:
    b = _plus_b(p)
    if root_branch(p) == "truncated":
        return staircase(int(-b) - 1, p.a)
    return generic_root_char(p.a)


def induced_char_oracle(a: int, order: int) -> KCharacter:
    """sum_n V_n (x) V_a truncated at ``order``."""
    if a < 0:
        raise ValueError("a must be non-negative")
    total = LaurentPoly()
    for n in range(order + a + 1):
        total = total + cg_product(n, a)
    return KCharacter.from_poly(total.truncate(order), order)


@dataclass(frozen=True)
class RootTypeInfo:
    minimal_type: int
    multiplicity: int
    multiplicity_free: bool


def root_minimal_type_and_mfree(p: RootCaseParams) -> RootTypeInfo:
    r = root_char(p)
    lo = r.numerator.valuation
    plateau = len(r.numerator)
    return RootTypeInfo(lo, 1, plateau == 1)


def root_mfree_listed(p: RootCaseParams) -> bool:
    """Membership in the list of multiplicity-free modules."""
    if not root_is_valid(p):
        raise ValueError("invalid parameter")
    b, a = p.b, p.a
    if a == 0:
        return True
    if p.sign == "+":
        return a + b == -1 and b.denominator == 1 and -b >= 2
    return b == 1 and (a + b).denominator == 1 and a + b >= 2
