"""Bounded sp(4)-modules over a short-root sl(2).

The modules L_{a,b} (and their duals L'_{-a,-b}) are labelled by half-integers
a > |b|.  Half-integers are stored doubled: ``a2 = 2a``, ``b2 = 2b``, both odd.

The k-character is (a+b)/2 * (z^(a-b-1) (x) 1/(1 - z^2)).  The independent
check expands the two-variable h-character

    (x^(a-b) - x^(b-a)) (y^(a+b) - y^(-a-b))
    ---------------------------------------------------------------
    (x - 1/x)(y - 1/y)(xy - 1/(xy))(y/x - x/y)

in powers of 1/y, splits each y-weight space into sl(2)-characters in x and
adds the multiplicities over all y-weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import KCharacter, LaurentPoly, RationalChar, sl2_weights, tensor_rational


@dataclass(frozen=True)
class RootSp4Params:
    a2: int
    b2: int
    dual: bool = False

    def __post_init__(self):
        for v in (self.a2, self.b2):
            if int(v) != v or v % 2 == 0:
                raise ValueError(f"a, b must be half-odd-integers; doubled value {v} is not odd")
        object.__setattr__(self, "a2", int(self.a2))
        object.__setattr__(self, "b2", int(self.b2))

    @property
    def a(self) -> Fraction:
        return Fraction(self.a2, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.b2, 2)

    def __str__(self):
        name = "L'" if self.dual else "L"
        return f"{name}[{self.a}, {self.b}]"


def sp4_root_is_valid(p: RootSp4Params) -> bool:
    return p.a2 > abs(p.b2)


def _require(p: RootSp4Params):
    if not sp4_root_is_valid(p):
        raise ValueError(f"{p}: need a > |b|")


def sp4_root_char(p: RootSp4Params) -> RationalChar:
    _require(p)
    m = (p.a2 - p.b2) // 2 - 1
    scale = Fraction(p.a2 + p.b2, 4)
    return tensor_rational(RationalChar.monomial_over(0, 2), LaurentPoly.monomial(m)) * scale


def sp4_root_plateau(p: RootSp4Params) -> tuple[int, Fraction]:
    """(parity, value): eventual multiplicity on exponents of that parity."""
    _require(p)
    return ((p.a2 - p.b2) // 2 - 1) % 2, (p.a * p.a - p.b * p.b) / 2


@dataclass
class TwoVarSeries:
    """y-weight -> x-Laurent polynomial, exact for y-weights >= ``lowest``."""

    layers: dict[int, LaurentPoly]
    lowest: int

    def k_character(self, order: int) -> KCharacter:
        """Specialise y = 1 after splitting each y-weight space into k-types."""
        totals = [Fraction(0)] * (order + 1)
        for w, px in self.layers.items():
            if w < self.lowest:
                continue
            for e in range(order + 1):
                totals[e] += px.coeff(e) - px.coeff(e + 2)
        return KCharacter(tuple(totals))


def weyl_h_char_oracle(p: RootSp4Params, order: int) -> TwoVarSeries:
    """Expansion of the h-character in 1/y deep enough for k-types <= order."""
    _require(p)
    a2, b2 = p.a2, p.b2
    x_part = sl2_weights((a2 - b2) // 2 - 1)
    y_part = sl2_weights((a2 + b2) // 2 - 1)
    depth = order + (a2 + abs(b2)) + 4
    layers: dict[int, LaurentPoly] = {}
    for k in range(depth + 1):
        # y^(-2-2k) (x^2k + x^(2k-4) + ... + x^-2k)
        xs = LaurentPoly((2 * k - 4 * i, 1) for i in range(k + 1)) * x_part
        for wy, cy in y_part.items():
            w = wy - 2 - 2 * k
            layers[w] = layers.get(w, LaurentPoly()) + xs * cy
    top = max(y_part.support())
    return TwoVarSeries(layers, top - 2 - 2 * depth)


def sp4_root_weyl_char(p: RootSp4Params, order: int) -> KCharacter:
    return weyl_h_char_oracle(p, order).k_character(order)


def sp4_root_minimal_type(p: RootSp4Params) -> tuple[int, Fraction]:
    _require(p)
    if (p.a2 - p.b2) // 2 % 2 == 0:
        return 1, p.a + p.b
    return 0, (p.a + p.b) / 2


def sp4_root_mfree(p: RootSp4Params) -> bool:
    _require(p)
    return p.a2 == 3
