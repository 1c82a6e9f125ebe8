"""Formal characters of sl(2)-modules.

A k-character is a formal power series sum_i c_i z^i where z^i stands for the
class of the (i+1)-dimensional irreducible sl(2)-module V_i.  Three
representations are used throughout the package:

LaurentPoly
    finite sums with exact rational coefficients, negative exponents allowed.
RationalChar
    numerator / prod_m (1 - z^m).  Closed forms live here.
KCharacter
    the truncated coefficient list c_0..c_N of an honest k-character.

The reflection ``pi_project`` sends a formal Laurent series in z to the
k-character it represents: z^j is kept for j >= 0, z^-1 is dropped and
z^j becomes -z^(-j-2) for j <= -2.  With it, tensoring by V_i is
multiplication by the weight character z^i + z^(i-2) + ... + z^-i followed by
the reflection.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

DEFAULT_ORDER = 128


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


class LaurentPoly:
    """Finite Laurent polynomial in z with Fraction coefficients.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        c: dict[int, Fraction] = {}
        for e, v in items:
            if int(e) != e:
                raise ValueError(f"non-integer exponent {e!r}")
            e = int(e)
            c[e] = c.get(e, Fraction(0)) + _frac(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def from_dense(cls, coeffs: Iterable, start: int = 0) -> LaurentPoly:
        return cls((start + i, v) for i, v in enumerate(coeffs))

    # -- access -------------------------------------------------------------
    def coeff(self, e: int) -> Fraction:
        return self._c.get(e, Fraction(0))

    __getitem__ = coeff

    def items(self) -> list[tuple[int, Fraction]]:
        return sorted(self._c.items())

    def support(self) -> list[int]:
        return sorted(self._c)

    @property
    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    @property
    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, Fraction(0)) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            s = _frac(other)
            return LaurentPoly({e: v * s for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, Fraction(0)) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by z^k."""
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def truncate(self, max_exponent: int) -> LaurentPoly:
        return LaurentPoly({e: v for e, v in self._c.items() if e <= max_exponent})

    def evaluate(self, z) -> Fraction:
        z = _frac(z)
        return sum((v * z**e for e, v in self._c.items()), Fraction(0))

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, v in sorted(self._c.items(), reverse=True):
            mono = "1" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}" if e == 0 else f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ONE = LaurentPoly({0: 1})


def sl2_weights(i: int) -> LaurentPoly:
    """Weight character z^i + z^(i-2) + ... + z^-i of V_i."""
    if i < 0:
        raise ValueError(f"no irreducible module V_{i}")
    return LaurentPoly((i - 2 * k, 1) for k in range(i + 1))


def cg_product(p: int, q: int) -> LaurentPoly:
    """Clebsch-Gordan rule: V_p (x) V_q as a sum of k-types."""
    if p < 0 or q < 0:
        raise ValueError(f"cg_product needs non-negative types, got ({p}, {q})")
    return LaurentPoly((p + q - 2 * k, 1) for k in range(min(p, q) + 1))


def cg_multiply(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Bilinear extension of cg_product to finite k-characters."""
    out = LaurentPoly()
    for p, a in f.items():
        for q, b in g.items():
            out = out + cg_product(p, q) * (a * b)
    return out


def _reflect_poly(f: LaurentPoly) -> LaurentPoly:
    c: dict[int, Fraction] = {}
    for e, v in f.items():
        if e >= 0:
            c[e] = c.get(e, Fraction(0)) + v
        elif e <= -2:
            c[-e - 2] = c.get(-e - 2, Fraction(0)) - v
    return LaurentPoly(c)


def _negative_part(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly((e, v) for e, v in f.items() if e < 0)


@dataclass(frozen=True, eq=False)
class RationalChar:
    """numerator / prod (1 - z^m) for m in ``denominator`` (sorted, m >= 1)."""

    numerator: LaurentPoly
    denominator: tuple[int, ...] = ()

    def __post_init__(self):
        num = self.numerator
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly(num) if isinstance(num, Mapping) else LaurentPoly({0: num})
        den = tuple(sorted(int(m) for m in self.denominator))
        if any(m < 1 for m in den):
            raise ValueError(f"denominator factors must be positive, got {den}")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def monomial_over(cls, exponent: int, *factors: int, coeff=1) -> RationalChar:
        """coeff * z^exponent / prod (1 - z^m)."""
        return cls(LaurentPoly.monomial(exponent, coeff), factors)

    def denominator_poly(self) -> LaurentPoly:
        out = ONE
        for m in self.denominator:
            out = out * LaurentPoly({0: 1, m: -1})
        return out

    # -- arithmetic ---------------------------------------------------------
    def _lift(self, den: tuple[int, ...]) -> LaurentPoly:
        """Numerator over the larger denominator ``den``."""
        extra = Counter(den) - Counter(self.denominator)
        num = self.numerator
        for m, k in extra.items():
            for _ in range(k):
                num = num * LaurentPoly({0: 1, m: -1})
        return num

    def _coerce(self, other) -> RationalChar | None:
        if isinstance(other, RationalChar):
            return other
        if isinstance(other, LaurentPoly):
            return RationalChar(other)
        if isinstance(other, (int, Rational)):
            return RationalChar(LaurentPoly({0: other}))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        den = tuple(sorted((Counter(self.denominator) | Counter(other.denominator)).elements()))
        return RationalChar(self._lift(den) + other._lift(den), den)

    __radd__ = __add__

    def __neg__(self):
        return RationalChar(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational, LaurentPoly)):
            return RationalChar(self.numerator * other, self.denominator)
        if isinstance(other, RationalChar):
            return RationalChar(self.numerator * other.numerator,
                                self.denominator + other.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> RationalChar:
        return RationalChar(self.numerator.shift(k), self.denominator)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.numerator * other.denominator_poly()
                == other.numerator * self.denominator_poly())

    __hash__ = None

    def reduced(self) -> RationalChar:
        """Cancel every denominator factor that divides the numerator."""
        num, den = self.numerator, list(self.denominator)
        changed = True
        while changed and num:
            changed = False
            for m in sorted(set(den), reverse=True):
                q = _divide_one_minus(num, m)
                if q is not None:
                    num = q
                    den.remove(m)
                    changed = True
                    break
        return RationalChar(num, tuple(den))

    # -- expansion ----------------------------------------------------------
    def expand_laurent(self, order: int) -> LaurentPoly:
        """All terms of the z-adic expansion with exponent <= order."""
        if not self.numerator:
            return LaurentPoly()
        lo = self.numerator.valuation
        if order < lo:
            return LaurentPoly()
        arr = [self.numerator.coeff(lo + i) for i in range(order - lo + 1)]
        for m in self.denominator:
            for i in range(m, len(arr)):
                arr[i] += arr[i - m]
        return LaurentPoly.from_dense(arr, lo)

    def expand(self, order: int = DEFAULT_ORDER) -> KCharacter:
        """Coefficients c_0..c_order; the expansion must have no negative terms."""
        if self.numerator and self.numerator.valuation < 0:
            raise ValueError("expansion has negative exponents; use expand_laurent "
                             "or pi_project")
        return KCharacter.from_poly(self.expand_laurent(order), order)

    def pi(self) -> RationalChar:
        """Exact reflection of the expansion, again as a rational function."""
        neg = _negative_part(self.expand_laurent(-1))
        if not neg:
            return self
        return self + RationalChar(_reflect_poly(neg) - neg)

    def __repr__(self):
        if not self.denominator:
            return f"RationalChar({self.numerator!r})"
        den = "".join(f"(1 - z^{m})" for m in self.denominator)
        return f"RationalChar(({self.numerator!r}) / {den})"


def _divide_one_minus(num: LaurentPoly, m: int) -> LaurentPoly | None:
    """num / (1 - z^m) if it is a Laurent polynomial, else None."""
    if not num:
        return LaurentPoly()
    lo, hi = num.valuation, num.degree
    if hi - lo < m:
        return None
    q: dict[int, Fraction] = {}
    for e in range(lo, hi - m + 1):
        q[e] = num.coeff(e) + q.get(e - m, Fraction(0))
    quot = LaurentPoly(q)
    return quot if quot * LaurentPoly({0: 1, m: -1}) == num else None


@dataclass(frozen=True)
class KCharacter:
    """Truncated k-character: ``coeffs[i]`` is the multiplicity of V_i."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a KCharacter needs at least c_0")

    @classmethod
    def from_poly(cls, f: LaurentPoly, order: int) -> KCharacter:
        if f and f.valuation < 0:
            raise ValueError("KCharacter cannot hold negative exponents")
        return cls(tuple(f.coeff(i) for i in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            return Fraction(0)
        if i > self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> KCharacter:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return KCharacter(self.coeffs[: order + 1])

    def to_poly(self) -> LaurentPoly:
        return LaurentPoly.from_dense(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def minimal_type(self) -> tuple[int, Fraction] | None:
        """(i, c_i) for the smallest i with c_i != 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i, c
        return None

    def max_multiplicity(self) -> Fraction:
        return max(self.coeffs)

    def is_module_character(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.coeffs)

    def _check_same(self, other) -> KCharacter:
        if not isinstance(other, KCharacter):
            raise TypeError("KCharacter arithmetic needs another KCharacter")
        return other

    def __add__(self, other):
        other = self._check_same(other)
        n = min(self.order, other.order)
        return KCharacter(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other):
        other = self._check_same(other)
        n = min(self.order, other.order)
        return KCharacter(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __mul__(self, s):
        if not isinstance(s, (int, Rational)):
            return NotImplemented
        return KCharacter(tuple(c * s for c in self.coeffs))

    __rmul__ = __mul__

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:12])
        more = ", ..." if self.order >= 12 else ""
        return f"KCharacter([{shown}{more}], order={self.order})"


def pi_project(f, order: int | None = None):
    """Reflect a formal Laurent series onto the k-character it represents.

    LaurentPoly in, LaurentPoly out (truncated at ``order`` if given).
    RationalChar in, KCharacter out to ``order`` (default DEFAULT_ORDER).
    """
    if isinstance(f, KCharacter):
        return f if order is None else f.truncate(order)
    if isinstance(f, LaurentPoly):
        out = _reflect_poly(f)
        return out if order is None else out.truncate(order)
    if isinstance(f, RationalChar):
        n = DEFAULT_ORDER if order is None else order
        if n < 0:
            raise ValueError("order must be non-negative")
        return KCharacter.from_poly(_reflect_poly(f.expand_laurent(n)), n)
    raise TypeError(f"cannot reflect a {type(f).__name__}: negative part unknown")


def tensor_with(c: KCharacter, finite: LaurentPoly) -> KCharacter:
    """c(M (x) F) where F is the finite k-character ``finite``.

    Valid to order N - deg(finite); that is the order of the result.
    """
    if finite and finite.valuation < 0:
        raise ValueError("finite factor must be a k-character (exponents >= 0)")
    top = finite.degree if finite else 0
    n = c.order - top
    if n < 0:
        raise ValueError(f"order {c.order} too small to tensor with V_{top}")
    weights = LaurentPoly()
    for j, m in finite.items():
        weights = weights + sl2_weights(j) * m
    return KCharacter.from_poly(_reflect_poly(c.to_poly() * weights).truncate(n), n)


def tensor_char(c: KCharacter, i: int) -> KCharacter:
    """c(M (x) V_i), valid to order N - i."""
    return tensor_with(c, LaurentPoly.monomial(i))


def tensor_rational(r: RationalChar, finite: LaurentPoly) -> RationalChar:
    """Exact c(M (x) F) for a rational character with non-negative expansion."""
    weights = LaurentPoly()
    for j, m in finite.items():
        if j < 0:
            raise ValueError("finite factor must be a k-character (exponents >= 0)")
        weights = weights + sl2_weights(j) * m
    return (r * weights).pi()


def expand(r: RationalChar, order: int = DEFAULT_ORDER) -> KCharacter:
    return r.expand(order)
