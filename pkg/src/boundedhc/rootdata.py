"""Root systems of the simple Lie algebras, Weyl dimensions, dominant weights.

Nodes follow Bourbaki numbering.  Long roots have squared length 2.  Roots are
stored by their coordinates in the simple-root basis and weights by their
coordinates in the fundamental-weight basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

Weight = tuple[int, ...]


def _gram(family: str, rank: int) -> list[list[Fraction]]:
    n = rank
    g = [[Fraction(0)] * n for _ in range(n)]
    half = Fraction(1, 2)

    def link(i, j, v):
        g[i][j] = g[j][i] = Fraction(v)

    if family == "A":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "B":
        for i in range(n):
            g[i][i] = Fraction(2) if i < n - 1 else Fraction(1)
        for i in range(n - 1):
            link(i, i + 1, -1)
    elif family == "C":
        for i in range(n):
            g[i][i] = Fraction(1) if i < n - 1 else Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -half)
        link(n - 2, n - 1, -1)
    elif family == "D":
        for i in range(n):
            g[i][i] = Fraction(2)
        for i in range(n - 2):
            link(i, i + 1, -1)
        link(n - 3, n - 1, -1)
    elif family == "E":
        for i in range(n):
            g[i][i] = Fraction(2)
        # Bourbaki: 1-3-4-5-...-n chain, node 2 attached to 4
        link(0, 2, -1)
        link(1, 3, -1)
        for i in range(2, n - 1):
            link(i, i + 1, -1)
    elif family == "F":
        for i, v in enumerate((2, 2, 1, 1)):
            g[i][i] = Fraction(v)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, -half)
    elif family == "G":
        g[0][0], g[1][1] = Fraction(2, 3), Fraction(2)
        link(0, 1, -1)
    return g


_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int

    def __post_init__(self):
        check = _VALID_RANKS.get(self.family)
        if check is None or not check(self.rank):
            raise ValueError(f"no simple Lie algebra of type {self.family}{self.rank}")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """(alpha_i, alpha_j) for simple roots."""
        return tuple(tuple(row) for row in _gram(self.family, self.rank))

    def pairing(self, u, v) -> Fraction:
        """Symmetric form on vectors in simple-root coordinates."""
        g = self.gram
        return sum((u[i] * g[i][j] * v[j]
                    for i in range(self.rank) for j in range(self.rank) if u[i] and v[j]),
                   Fraction(0))

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """cartan[i][j] = <alpha_i, alpha_j coroot>."""
        g = self.gram
        return tuple(tuple(int(2 * g[i][j] / g[j][j]) for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for beta in layer:
                for i in range(n):
                    p = 0
                    while True:
                        down = tuple(b - (p + 1) * (k == i) for k, b in enumerate(beta))
                        if down not in roots:
                            break
                        p += 1
                    beta_i = sum(beta[j] * self.cartan[j][i] for j in range(n))
                    if p - beta_i > 0:
                        up = tuple(b + (k == i) for k, b in enumerate(beta))
                        if up not in roots:
                            roots.add(up)
                            nxt.append(up)
            layer = nxt
        return tuple(sorted(roots, key=lambda r: (sum(r), r)))

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        """Half-sum of positive roots, in simple-root coordinates."""
        return tuple(Fraction(sum(r[i] for r in self.positive_roots), 2)
                     for i in range(self.rank))

    def coroot_pairing(self, weight, root) -> Fraction:
        """(weight, root coroot) for a weight in fundamental-weight coordinates."""
        length = self.pairing(root, root)
        return sum((Fraction(root[j]) * weight[j] * self.gram[j][j] / length
                    for j in range(self.rank)), Fraction(0))

    @cached_property
    def _coroot_weights(self):
        # coefficient vectors w with (lambda, alpha coroot) = sum w_j lambda_j
        out = []
        for r in self.positive_roots:
            length = self.pairing(r, r)
            out.append(tuple(r[j] * self.gram[j][j] / length for j in range(self.rank)))
        return tuple(out)

    def weyl_dim(self, weight) -> int:
        lam = _dominant(weight, self.rank)
        num, den = Fraction(1), Fraction(1)
        for w in self._coroot_weights:
            rho_pair = sum(w)
            num *= sum((wj * (lj + 1) for wj, lj in zip(w, lam)), Fraction(0))
            den *= rho_pair
        d = num / den
        assert d.denominator == 1
        return int(d)

    def diagram_involution(self) -> tuple[int, ...]:
        """Node permutation induced by -w0 (0-based)."""
        n = self.rank
        perm = list(range(n))
        if self.family == "A":
            perm = list(reversed(perm))
        elif self.family == "D" and n % 2 == 1:
            perm[n - 2], perm[n - 1] = n - 1, n - 2
        elif self.family == "E" and n == 6:
            perm = [5, 1, 4, 3, 2, 0]
        return tuple(perm)

    def dual_weight(self, weight) -> Weight:
        lam = _dominant(weight, self.rank)
        perm = self.diagram_involution()
        out = [0] * self.rank
        for i, v in enumerate(lam):
            out[perm[i]] = v
        return tuple(out)

    def is_self_dual(self, weight) -> bool:
        return self.dual_weight(weight) == _dominant(weight, self.rank)


def _dominant(weight, rank: int) -> Weight:
    lam = tuple(weight)
    if len(lam) != rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected {rank}")
    out = []
    for v in lam:
        if Fraction(v).denominator != 1 or v < 0:
            raise ValueError(f"weight {lam} is not dominant integral")
        out.append(int(v))
    return tuple(out)


@lru_cache(maxsize=None)
def root_datum(family: str, rank: int) -> RootDatum:
    return RootDatum(family, rank)


_NAME = re.compile(r"^(sl|so|sp|[A-G])(\d+)$")


def algebra(name: str) -> RootDatum:
    """Root datum from 'sl3', 'so9', 'sp4', 'G2', 'E6', 'B4', ..."""
    m = _NAME.match(name.strip())
    if not m:
        raise ValueError(f"unrecognised simple Lie algebra {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind in "ABCDEFG":
        return root_datum(kind, n)
    if kind == "sl":
        if n < 2:
            raise ValueError(f"{name} is not simple")
        return root_datum("A", n - 1)
    if kind == "sp":
        if n < 2 or n % 2:
            raise ValueError(f"{name}: sp(n) needs even n >= 2")
        return root_datum("A", 1) if n == 2 else root_datum("C", n // 2)
    if n == 3:
        return root_datum("A", 1)
    if n < 5:
        raise ValueError(f"{name} is not simple")
    return root_datum("B", n // 2) if n % 2 else root_datum("D", n // 2)


def weyl_dim(datum: RootDatum, weight) -> int:
    return datum.weyl_dim(weight)


def enumerate_dominant_dim_at_most(datum: RootDatum, bound: int) -> list[tuple[Weight, int]]:
    """All dominant integral weights with dim V <= bound, sorted by (dim, weight).

    Depth-first over coordinates; the Weyl dimension is increasing in every
    coordinate, so a branch stops at the first value that overshoots.
    """
    if bound < 1:
        raise ValueError("dimension bound must be at least 1")
    n = datum.rank
    found: list[tuple[Weight, int]] = []

    def walk(prefix: list[int]):
        i = len(prefix)
        if i == n:
            lam = tuple(prefix)
            found.append((lam, datum.weyl_dim(lam)))
            return
        v = 0
        while True:
            trial = prefix + [v] + [0] * (n - i - 1)
            if datum.weyl_dim(trial) > bound:
                break
            walk(prefix + [v])
            v += 1

    walk([])
    return sorted(found, key=lambda t: (t[1], t[0]))


def fundamental(datum: RootDatum, i: int, times: int = 1) -> Weight:
    """times * omega_i with 1-based node index i."""
    if not 1 <= i <= datum.rank:
        raise ValueError(f"{datum.name} has no node {i}")
    return tuple(times * (j == i - 1) for j in range(datum.rank))


def r_g(datum: RootDatum) -> int:
    """Half the dimension of the minimal nonzero nilpotent orbit."""
    if not isinstance(datum, RootDatum):
        raise TypeError("r_g is defined for one simple Lie algebra at a time")
    n = datum.rank
    return {
        "A": lambda: n,
        "C": lambda: n,
        "B": lambda: 2 * n - 2,
        "D": lambda: 2 * n - 3,
        "G": lambda: 3,
        "F": lambda: 8,
        "E": lambda: {6: 11, 7: 17, 8: 29}[n],
    }[datum.family]()
