"""Bounded sp(4)-modules over a principal sl(2).

Simple bounded modules M^s_{a,b} have half-integer a > |b| and a parity
s in {0, 1}.  Half-integers are stored doubled (``a2``, ``b2`` odd).  Every
character is the reflection of a rational function psi^s_{a,b} with
denominator (1 - z^2)^2 (1 - z^4)(1 - z^6).  psi is given in closed form and,
independently, by a recursion driven by tensoring with the 4- and
5-dimensional sp(4)-modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .series import DEFAULT_ORDER, KCharacter, LaurentPoly, RationalChar, pi_project

PSI_DENOMINATOR = (2, 2, 4, 6)
# V_{1,0} restricts to V_3, V_{1,1} to V_4.
WEIGHTS_V10 = LaurentPoly({3: 1, 1: 1, -1: 1, -3: 1})
WEIGHTS_V11 = LaurentPoly({4: 1, 2: 1, 0: 1, -2: 1, -4: 1})


@dataclass(frozen=True)
class PrincipalSp4Id:
    a2: int
    b2: int
    s: int

    def __post_init__(self):
        for v in (self.a2, self.b2):
            if int(v) != v or v % 2 == 0:
                raise ValueError(f"a, b must be half-odd-integers; doubled value {v} is not odd")
        if self.s not in (0, 1):
            raise ValueError(f"s must be 0 or 1, got {self.s}")
        object.__setattr__(self, "a2", int(self.a2))
        object.__setattr__(self, "b2", int(self.b2))

    @property
    def a(self) -> Fraction:
        return Fraction(self.a2, 2)

    @property
    def b(self) -> Fraction:
        return Fraction(self.b2, 2)

    @property
    def is_module(self) -> bool:
        return self.a2 > abs(self.b2)

    @property
    def parity(self) -> int:
        """0 for an even module (types V_{2j}), 1 for odd."""
        return ((self.a2 + self.b2) // 2 + self.s) % 2

    def __str__(self):
        return f"M{self.s}[{self.a}, {self.b}]"


def grid(a2_max: int) -> list[PrincipalSp4Id]:
    """All module labels with 2a <= a2_max."""
    return [PrincipalSp4Id(a2, b2, s)
            for a2 in range(3, a2_max + 1, 2)
            for b2 in range(-a2 + 2, a2, 2)
            for s in (0, 1)]


def _require_module(m: PrincipalSp4Id):
    if not m.is_module:
        raise ValueError(f"{m}: need a > |b|")


def _numerator_terms(a2: int, b2: int, s: int) -> list[tuple[int, int]]:
    """(exponent, sign) of the closed-form numerator."""
    def h(x):  # x is a doubled value with even total
        return x // 2
    return [
        (5 + s + h(3 * a2 + b2), 1), (5 + s + h(a2 + 3 * b2), -1),
        (5 + s + h(-a2 - 3 * b2), -1), (5 + s + h(-3 * a2 - b2), 1),
        (6 + s + h(3 * a2 - b2), -1), (6 + s + h(-a2 + 3 * b2), 1),
        (6 + s + h(a2 - 3 * b2), 1), (6 + s + h(-3 * a2 + b2), -1),
    ]


def psi_closed(a2: int, b2: int, s: int) -> RationalChar:
    """The rational function psi^s_{a,b}, for any half-integers a, b."""
    PrincipalSp4Id(a2, b2, s)
    num: dict[int, int] = {}
    for e, sign in _numerator_terms(a2, b2, s):
        num[e] = num.get(e, 0) + sign
    return RationalChar(LaurentPoly(num), PSI_DENOMINATOR)


def _fundamental_label(a2: int, b2: int) -> tuple[int, int, int]:
    """(a2', b2', sign) with a' >= |b'| and psi_{a,b} = sign * psi_{a',b'}."""
    sign = 1
    if abs(b2) > abs(a2):
        a2, b2, sign = b2, a2, -sign
    if a2 < 0:
        a2, b2 = -a2, -b2
    return a2, b2, sign


def psi_recursive(a2: int, b2: int, s: int) -> RationalChar:
    """psi^s_{a,b} from the two base cases, the symmetries and the two tensor rules."""
    PrincipalSp4Id(a2, b2, s)
    return _psi_rec(a2, b2, s)


@lru_cache(maxsize=None)
def _psi_rec(a2: int, b2: int, s: int) -> RationalChar:
    a2, b2, sign = _fundamental_label(a2, b2)
    if a2 == abs(b2):
        return RationalChar(LaurentPoly(), (6,))
    if a2 == 3:
        return RationalChar.monomial_over(s if b2 == 1 else 3 + s, 6, coeff=sign)
    if abs(b2) <= a2 - 4:
        # tensoring with V_{1,0} at (a-1, b)
        c = a2 - 2
        out = (_psi_rec(c, b2, s) * WEIGHTS_V10 - _psi_rec(c - 2, b2, s)
               - _psi_rec(c, b2 + 2, s) - _psi_rec(c, b2 - 2, s))
    else:
        # b = +-(a-1): tensoring with V_{1,1} at (a-1, b -+ 1)
        c = a2 - 2
        d = b2 - 2 if b2 > 0 else b2 + 2
        e = 2 if b2 > 0 else -2
        out = (_psi_rec(c, d, s) * WEIGHTS_V11 - _psi_rec(c + 2, d - e, s)
               - _psi_rec(c - 2, d + e, s) - _psi_rec(c - 2, d - e, s) - _psi_rec(c, d, s))
    return out * sign


def phi(m: PrincipalSp4Id, order: int = DEFAULT_ORDER) -> KCharacter:
    """k-character: the reflection of psi."""
    _require_module(m)
    return pi_project(psi_closed(m.a2, m.b2, m.s), order)


# -- coefficient formulas ----------------------------------------------------

def _alt(n: int) -> int:
    return -1 if n % 2 else 1


def _as_int(x) -> int | None:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else None


def gamma(n) -> Fraction:
    """Coefficient of z^(2n) in 1 / ((1-z^2)^2 (1-z^4)(1-z^6)); zero off Z>=0."""
    n = _as_int(n)
    if n is None or n < 0:
        return Fraction(0)
    return gamma_quasi(n)


def gamma_quasi(n: int) -> Fraction:
    """The quasi-polynomial behind ``gamma``, for any integer n."""
    def c3(m):
        return Fraction(m * (m - 1) * (m - 2), 6)
    beta = {0: 1, 1: 0, 2: -1}[n % 3]
    return (Fraction(119 * c3(n + 3) - 179 * c3(n + 2) + 109 * c3(n + 1) - 25 * c3(n), 144)
            + Fraction(_alt(n), 16) + Fraction(beta, 9))


def delta(n: int, a2: int, b2: int, s: int) -> Fraction:
    """Coefficient of z^n in psi^s_{a,b}."""
    return sum((sign * gamma(Fraction(n - e, 2)) for e, sign in _numerator_terms(a2, b2, s)),
               Fraction(0))


def coeff_c(m: PrincipalSp4Id, i: int) -> Fraction:
    """Multiplicity of V_i in M."""
    _require_module(m)
    return delta(i, m.a2, m.b2, m.s) - delta(-i - 2, m.a2, m.b2, m.s)


def sigma(m: PrincipalSp4Id) -> int:
    a3, b3 = m.a2 % 3 == 0, m.b2 % 3 == 0
    if a3 and not b3:
        return 1
    if b3 and not a3:
        return -1
    return 0


def asymptotic_c6(m: PrincipalSp4Id) -> dict[int, Fraction]:
    """Eventual multiplicity of V_i by residue of i mod 6."""
    _require_module(m)
    q = (m.a * m.a - m.b * m.b) / 2
    sg = sigma(m)
    even = 1 + _alt((m.a2 + m.b2) // 2)
    odd = 1 - _alt((m.a2 + m.b2) // 2)
    sixth = Fraction(1, 6)
    vals = {0: sixth * even * (q + 2 * sg), 1: sixth * odd * (q - sg),
            2: sixth * even * (q - sg), 3: sixth * odd * (q + 2 * sg),
            4: sixth * even * (q - sg), 5: sixth * odd * (q - sg)}
    return {(r + m.s) % 6: v for r, v in vals.items()}


def periodicity_threshold(m: PrincipalSp4Id) -> int:
    """An index past every exponent of the numerator of psi."""
    return max(e for e, _ in _numerator_terms(m.a2, m.b2, m.s)) + 1


def minimal_type(m: PrincipalSp4Id) -> tuple[int, Fraction]:
    """(i, c_i) for the lowest k-type, read from the coefficient formula."""
    _require_module(m)
    i = 0
    while True:
        c = coeff_c(m, i)
        if c:
            return i, c
        i += 1


def _sgn(s: int) -> int:
    return -1 if s else 1


def dval(m: PrincipalSp4Id) -> Fraction:
    """c_1 + c_3 for an odd module, closed form."""
    _require_module(m)
    if m.parity != 1:
        raise ValueError(f"{m} is even; d is defined for odd modules")
    a, b, e = m.a, m.b, _sgn(m.s)
    if a + e * 3 * b >= 0:
        return (a - e * b) / 2
    return a + e * b


def eval_e(m: PrincipalSp4Id) -> Fraction:
    """c_0 + c_2 + c_4 for an even module, closed form."""
    _require_module(m)
    if m.parity != 0:
        raise ValueError(f"{m} is odd; e is defined for even modules")
    a, b, e = m.a, m.b, _sgn(m.s)
    if a + e * 3 * b >= 0:
        t = a - e * b
        return Fraction(3, 4) * t + Fraction(_alt(int((t - 1) / 2)), 4)
    return Fraction(3, 2) * (a + e * b)


def _binom2(x) -> Fraction:
    n = _as_int(x)
    return Fraction(comb(n, 2)) if n is not None and n >= 0 else Fraction(0)


def _theta(x) -> Fraction:
    n = _as_int(x)
    if n is None or n < 0:
        return Fraction(0)
    return Fraction(3, 4) * n * n + Fraction(3, 2) * n + Fraction(7, 8) + Fraction(_alt(n), 8)


def _eight_term(fn, m: PrincipalSp4Id, shift: int) -> Fraction:
    """sum sign * fn((shift - exponent) / 2) over the numerator of psi."""
    return sum((sign * fn(Fraction(shift - e, 2))
                for e, sign in _numerator_terms(m.a2, m.b2, m.s)), Fraction(0))


def dval_binomial(m: PrincipalSp4Id) -> Fraction:
    """c_1 + c_3 as a signed sum of binomials."""
    _require_module(m)
    return _eight_term(_binom2, m, 7)


def eval_e_theta(m: PrincipalSp4Id) -> Fraction:
    """c_0 + c_2 + c_4 as a signed sum of theta values."""
    _require_module(m)
    return _eight_term(_theta, m, 4)


def _gamma_prime(x) -> Fraction:
    n = _as_int(x)
    if n is None or n < 0:
        return Fraction(0)
    sp = 2 if n % 3 == 0 else -1
    return (Fraction(n * n, 12) + Fraction(n, 2) + Fraction(94, 144)
            + Fraction(_alt(n), 8) + Fraction(sp, 9))


def _gamma_second(x) -> Fraction:
    n = _as_int(x)
    if n is None or n < 0:
        return Fraction(0)
    ss = -2 if n % 3 == 2 else 1
    return Fraction(n * n, 6) + Fraction(5 * n, 6) + Fraction(8, 9) + Fraction(ss, 9)


def c0_exact(m: PrincipalSp4Id) -> Fraction:
    _require_module(m)
    return _eight_term(_gamma_prime, m, 0)


def c1_exact(m: PrincipalSp4Id) -> Fraction:
    _require_module(m)
    return _eight_term(_gamma_second, m, 1)


def low_type_estimate(m: PrincipalSp4Id) -> tuple[int, Fraction]:
    """(i, estimate) of c_0 (even module) or c_1 (odd), accurate to within 1."""
    _require_module(m)
    a, b, e = m.a, m.b, _sgn(m.s)
    branch = a + e * 3 * b
    if m.parity == 0:
        return 0, (a + e * b) / 6 if branch < 0 else (a - e * b) / 12
    return 1, (a - e * b) / 6 if branch >= 0 else (a + e * b) / 3


@dataclass(frozen=True)
class Summand:
    a2: int
    b2: int

    @property
    def is_zero(self) -> bool:
        return self.a2 <= abs(self.b2)


def tensor_decomp(which: str, a2: int, b2: int) -> list[Summand]:
    """Summands of V (x) M_{a,b} for V = V_{1,0} ('10') or V_{1,1} ('11')."""
    if a2 <= abs(b2):
        raise ValueError("need a > |b|")
    if which == "10":
        return [Summand(a2 + 2, b2), Summand(a2, b2 + 2),
                Summand(a2 - 2, b2), Summand(a2, b2 - 2)]
    if which != "11":
        raise ValueError("which must be '10' or '11'")
    if a2 == b2 + 2 and b2 > 0:
        return [Summand(a2 + 2, b2 + 2), Summand(a2 + 2, b2 - 2), Summand(a2 - 2, b2 - 2)]
    if a2 == -b2 + 2 and b2 < 0:
        return [Summand(a2 + 2, b2 + 2), Summand(a2 + 2, b2 - 2), Summand(a2 - 2, b2 + 2)]
    return [Summand(a2 + 2, b2 + 2), Summand(a2, b2), Summand(a2 - 2, b2 + 2),
            Summand(a2 + 2, b2 - 2), Summand(a2 - 2, b2 - 2)]


def sp4_principal_mfree_scan(a2_max: int) -> list[PrincipalSp4Id]:
    """Modules with every multiplicity at most 1, for 2a <= a2_max."""
    out = []
    for m in grid(a2_max):
        if max(asymptotic_c6(m).values()) > 1:
            continue
        horizon = periodicity_threshold(m) + 12
        if phi(m, horizon).max_multiplicity() <= 1:
            out.append(m)
    return out
