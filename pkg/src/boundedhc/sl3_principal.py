"""Bounded sl(3)-modules over a principal sl(2).

Modules come in families I+, I-, J and the twisted I+tau, I-tau, labelled by a
rational u and an integer n >= 0.  The n = 0 modules have characters of the
form z^e / (1 - z^4).  Translation by the symmetric powers V_{n,0} produces the
rest; their characters are the two-parameter series kappa_n(a) and mu_n(a)
below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import KCharacter, LaurentPoly, RationalChar, tensor_with

FAMILIES = ("I+", "I-", "J", "I+tau", "I-tau")


@dataclass(frozen=True)
class PrincipalSl3Id:
    family: str
    u: Fraction
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        object.__setattr__(self, "u", Fraction(self.u))
        if int(self.n) != self.n or self.n < 0:
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    def __str__(self):
        return f"{self.family}[u={self.u}, n={self.n}]"


def _is_half_odd(u: Fraction) -> bool:
    return u.denominator == 2


def invalid_reason(m: PrincipalSl3Id) -> str | None:
    u, n = m.u, m.n
    if m.family == "J" and not _is_half_odd(u):
        return "J needs u in 1/2 + Z"
    if m.family.endswith("tau") and u != -2:
        return "twisted families exist only for u = -2"
    if n > 0 and u.denominator == 1 and -1 <= u <= n - 1:
        return f"translation undefined for u in {{-1, ..., {n - 1}}}"
    return None


def is_valid(m: PrincipalSl3Id) -> bool:
    return invalid_reason(m) is None


def _require(m: PrincipalSl3Id):
    reason = invalid_reason(m)
    if reason:
        raise ValueError(f"{m}: {reason}")


@lru_cache(maxsize=None)
def sym_power_weights(n: int) -> LaurentPoly:
    """Weights of S^n(V_2) by brute force over monomials x^i y^j w^k."""
    c: dict[int, int] = {}
    for i in range(n + 1):
        for k in range(n - i + 1):
            e = 2 * i - 2 * k
            c[e] = c.get(e, 0) + 1
    return LaurentPoly(c)


@lru_cache(maxsize=None)
def restrict_sym_v2(n: int) -> LaurentPoly:
    """k-character of V_{n,0} = S^n(V_2) under the principal sl(2)."""
    if n < 0:
        return LaurentPoly()
    w = sym_power_weights(n)
    return LaurentPoly((e, w[e] - w[e + 2]) for e in range(0, 2 * n + 1))


def _over4(e: int) -> RationalChar:
    return RationalChar.monomial_over(e, 4)


def _over2(exps) -> RationalChar:
    return RationalChar(LaurentPoly((e, 1) for e in exps), (2,))


def mu(n: int, a: int) -> RationalChar:
    """z^a/(1-z^4) (x) V_{n,0} - z^(a-2)/(1-z^4) (x) V_{n-1,0}, closed form."""
    if a < 2:
        raise ValueError(f"mu_n(a) needs a >= 2, got {a}")
    p, odd = divmod(n, 2)
    if odd:
        return _over2(a + 4 * i for i in range(p + 1))
    return _over4(a) + _over2(a - 2 + 4 * i for i in range(1, p + 1))


def kappa(n: int, a: int) -> RationalChar:
    """z^a/(1-z^4) (x) V_{n,0} - z^(a+2)/(1-z^4) (x) V_{n-1,0}, closed form."""
    if a < 0:
        raise ValueError(f"kappa_n(a) needs a >= 0, got {a}")
    p, odd = divmod(n, 2)
    if odd:
        return _over2(abs(a - 4 * i - 2) for i in range(p + 1))
    return _over4(a) + _over2(abs(a - 4 * i) for i in range(1, p + 1))


def _translate(first: RationalChar, second: RationalChar, n: int, order: int) -> KCharacter:
    """first (x) V_{n,0} - second (x) V_{n-1,0}, by the tensor calculus."""
    pad = 2 * n
    head = tensor_with(first.expand(order + pad), restrict_sym_v2(n))
    if n == 0:
        return head
    tail = tensor_with(second.expand(order + pad), restrict_sym_v2(n - 1))
    return head.truncate(order) - tail.truncate(order)


def mu_defining(n: int, a: int, order: int) -> KCharacter:
    return _translate(_over4(a), _over4(a - 2), n, order)


def kappa_defining(n: int, a: int, order: int) -> KCharacter:
    return _translate(_over4(a), _over4(a + 2), n, order)


def base_case(family: str, u) -> str:
    """Which description of the n = 0 module applies."""
    u = Fraction(u)
    if family == "J":
        if not _is_half_odd(u):
            raise ValueError("J needs u in 1/2 + Z")
        return "half-integer, u >= -1/2" if u >= Fraction(-1, 2) else "half-integer, u <= -3/2"
    if family.endswith("tau"):
        if u != -2:
            raise ValueError("twisted families exist only for u = -2")
        return "u = -2"
    if u.denominator != 1:
        return "non-integral"
    if u >= 0:
        return "even, u >= 0" if u % 2 == 0 else "odd, u >= 1"
    if u == -1:
        return "u = -1"
    return "even, u <= -2" if u % 2 == 0 else "odd, u <= -3"


def base_char(family: str, u) -> RationalChar:
    """Character of the n = 0 module."""
    u = Fraction(u)
    case = base_case(family, u)
    plus = family.startswith("I+")
    if family == "J":
        e = 4 + 2 * u if u >= Fraction(-1, 2) else 2 - 2 * u
        return _over4(int(e))
    if case == "even, u >= 0":
        return _over4(int(2 * u + 4)) if plus else _over4(2)
    if case == "odd, u >= 1":
        return _over4(0) if plus else _over4(int(2 * u + 4))
    if case == "even, u <= -2" or case == "u = -2":
        return _over4(0) if plus else _over4(int(-2 - 2 * u))
    if case == "odd, u <= -3":
        return _over4(int(-2 - 2 * u)) if plus else _over4(2)
    return _over4(0) if plus else _over4(2)


def principal_char(m: PrincipalSl3Id) -> RationalChar:
    """Closed-form character."""
    _require(m)
    u, n = m.u, m.n
    if n == 0:
        return base_char(m.family, u)
    if m.family == "J":
        if u >= Fraction(-1, 2):
            return kappa(n, int(4 + 2 * u))
        return mu(n, int(2 - 2 * u))
    plus = m.family.startswith("I+")
    case = base_case(m.family, u)
    if case == "even, u >= 0":
        return kappa(n, int(2 * u + 4)) if plus else mu(n, 2)
    if case == "odd, u >= 1":
        return kappa(n, 0) if plus else kappa(n, int(2 * u + 4))
    if case in ("even, u <= -2", "u = -2"):
        return kappa(n, 0) if plus else mu(n, int(-2 - 2 * u))
    if case == "odd, u <= -3":
        return mu(n, int(-2 - 2 * u)) if plus else mu(n, 2)
    return kappa(n, 0) if plus else mu(n, 2)


def _partner(family: str) -> str:
    """The family whose u+1 base module is subtracted in the translation step."""
    return {"I+": "I-", "I-": "I+", "J": "J", "I+tau": "I-", "I-tau": "I+"}[family]


def recursion_oracle(m: PrincipalSl3Id, order: int) -> KCharacter:
    """c(M_{u,0} (x) V_{n,0}) - c(M'_{u+1,0} (x) V_{n-1,0}) by the tensor calculus."""
    _require(m)
    first = base_char(m.family, m.u)
    if m.n == 0:
        return first.expand(order)
    second = base_char(_partner(m.family), m.u + 1)
    return _translate(first, second, m.n, order)


def classify_chi(u, n: int) -> list[PrincipalSl3Id]:
    """Simple bounded modules with central character chi(u+1-n, n+1)."""
    u = Fraction(u)
    if int(n) != n or n < 0:
        raise ValueError("n must be a non-negative integer")
    n = int(n)
    if u.denominator == 1 and u < n - 1 and u != -2:
        raise ValueError(f"no bounded modules: u = {u} is an integer below n - 1 = {n - 1}")
    if u.denominator != 1:
        out = [PrincipalSl3Id("I+", u, n), PrincipalSl3Id("I-", u, n)]
        if _is_half_odd(u):
            out.append(PrincipalSl3Id("J", u, n))
        return out
    if u >= n:
        return [PrincipalSl3Id("I+", u, n), PrincipalSl3Id("I-", u, n),
                PrincipalSl3Id("I+", -n - 3, u - n), PrincipalSl3Id("I-", -n - 3, u - n)]
    if u == -2:
        return [PrincipalSl3Id("I+", -2, n), PrincipalSl3Id("I-", -2, n)]
    return [PrincipalSl3Id("I+tau", -2, n), PrincipalSl3Id("I-tau", -2, n)]


def asymptotic_mults(m: PrincipalSl3Id) -> dict[int, int]:
    """Eventual multiplicity of z^i by residue of i mod 4."""
    _require(m)
    p, odd = divmod(m.n, 2)
    if m.family == "J":
        r = int(2 * m.u) % 4
        if odd:
            return {r: p + 1, (r + 2) % 4: p + 1, (r + 1) % 4: 0, (r + 3) % 4: 0}
        return {r: p + 1, (r + 2) % 4: p, (r + 1) % 4: 0, (r + 3) % 4: 0}
    if odd:
        return {0: p + 1, 2: p + 1, 1: 0, 3: 0}
    if m.family.startswith("I+"):
        return {0: p + 1, 2: p, 1: 0, 3: 0}
    return {0: p, 2: p + 1, 1: 0, 3: 0}


def sl3_principal_mfree(m: PrincipalSl3Id) -> bool:
    """Multiplicity free exactly for n <= 1."""
    _require(m)
    return m.n <= 1
