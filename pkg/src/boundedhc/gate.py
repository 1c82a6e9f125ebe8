"""Necessary conditions for a reductive subalgebra k of g to be bounded.

A subalgebra is described by its simple summands plus the dimension of its
centre.  The quantity b_k = (dim k + rank k) / 2 is the dimension of a Borel
subalgebra of k; r_g is half the dimension of the minimal nilpotent orbit of g.
If g has a bounded (g, k)-module then r_g <= b_k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .rootdata import RootDatum, Weight, algebra, enumerate_dominant_dim_at_most, r_g, root_datum


@dataclass(frozen=True)
class SubalgebraDescriptor:
    summands: tuple[tuple[str, int], ...]
    central_dim: int = 0
    embedding_tag: str = ""

    def __post_init__(self):
        summands = tuple((f, int(n)) for f, n in self.summands)
        for f, n in summands:
            root_datum(f, n)
        if self.central_dim < 0:
            raise ValueError("central dimension must be non-negative")
        object.__setattr__(self, "summands", summands)

    @property
    def data(self) -> list[RootDatum]:
        return [root_datum(f, n) for f, n in self.summands]

    @property
    def dim(self) -> int:
        return sum(d.dim for d in self.data) + self.central_dim

    @property
    def rank(self) -> int:
        return sum(d.rank for d in self.data) + self.central_dim

    @property
    def b(self) -> Fraction:
        return Fraction(self.dim + self.rank, 2)

    def simple(self) -> RootDatum:
        if len(self.summands) != 1 or self.central_dim:
            raise ValueError(f"{self.label()} is not simple")
        return self.data[0]

    def label(self) -> str:
        parts = [f"{f}{n}" for f, n in self.summands]
        if self.central_dim:
            parts.append(f"t{self.central_dim}")
        return "+".join(parts) or "0"


_TORUS = re.compile(r"^(?:t|u)(\d*)$")
_GL = re.compile(r"^gl(\d+)$")


def parse_reductive(text: str, tag: str = "") -> SubalgebraDescriptor:
    """'sl2', 'gl2', 'sl2+sl2', 'so7', 'G2+t1', 't2' (a 2-dim torus)."""
    summands, central = [], 0
    for part in text.replace(" ", "").split("+"):
        if not part:
            raise ValueError(f"empty summand in {text!r}")
        m = _TORUS.match(part)
        if m:
            central += int(m.group(1) or 1)
            continue
        m = _GL.match(part)
        if m:
            n = int(m.group(1))
            central += 1
            if n >= 2:
                summands.append(("A", n - 1))
            continue
        d = algebra(part)
        summands.append((d.family, d.rank))
    return SubalgebraDescriptor(tuple(summands), central, tag)


def parse_semisimple(text: str) -> list[RootDatum]:
    k = parse_reductive(text)
    if k.central_dim:
        raise ValueError(f"{text!r} has a centre; g must be semisimple")
    if not k.summands:
        raise ValueError("empty Lie algebra")
    return k.data


def r_g_total(g: list[RootDatum], strict: bool = False) -> int:
    """Minimum of r over simple ideals, or their sum when ``strict``."""
    values = [r_g(d) for d in g]
    return sum(values) if strict else min(values)


def necessary_condition(g: list[RootDatum] | RootDatum, k: SubalgebraDescriptor,
                        strict: bool = False) -> bool:
    """r_g <= b_k (with r summed over ideals of g when ``strict``)."""
    if isinstance(g, RootDatum):
        g = [g]
    return r_g_total(g, strict) <= k.b


def rank2_semisimple() -> list[list[RootDatum]]:
    return [[root_datum("A", 1), root_datum("A", 1)], [root_datum("A", 2)],
            [root_datum("C", 2)], [root_datum("G", 2)]]


def sl2_strictly_admissible_rank2() -> list[str]:
    """Rank-two semisimple g passing the strict test for k = sl(2)."""
    k = parse_reductive("sl2")
    names = {"A1+A1": "sl2+sl2", "A2": "sl3", "C2": "sp4", "G2": "G2"}
    return [names["+".join(d.name for d in g)] for g in rank2_semisimple()
            if necessary_condition(g, k, strict=True)]


@dataclass(frozen=True)
class PairRecord:
    g: str
    k: str
    bounded: bool
    reason: str = ""
    tags: tuple[str, ...] = field(default=())


# Complete list of reductive root subalgebras k of rank-two g with bounded modules.
RANK2_BOUNDED_PAIRS: tuple[PairRecord, ...] = (
    PairRecord("sl2+sl2", "gl2", True),
    PairRecord("sl2+sl2", "sl2-diagonal", True),
    PairRecord("sl2+sl2", "toral", True),
    PairRecord("sl2+sl2", "cartan", True),
    PairRecord("sl3", "sl2-root", True),
    PairRecord("sl3", "gl2", True),
    PairRecord("sl3", "sl2-principal", True),
    PairRecord("sl3", "cartan", True),
    PairRecord("sp4", "sl2+sl2", True),
    PairRecord("sp4", "gl2", True),
    PairRecord("sp4", "sl2-short-root", True),
    PairRecord("sp4", "sl2-principal", True),
    PairRecord("sp4", "cartan", True),
    PairRecord("G2", "sl3", True),
    PairRecord("G2", "sl2+sl2", True),
    PairRecord("G2", "gl2", True),
)

RANK2_EXCLUDED_PAIRS: tuple[PairRecord, ...] = (
    PairRecord("G2", "cartan", False, "r_g > b_k"),
    PairRecord("G2", "sl2-root", False, "r_g > b_k"),
    PairRecord("G2", "sl2-short-root", False, "r_g > b_k"),
    PairRecord("G2", "sl2-principal", False, "r_g > b_k"),
    PairRecord("G2", "toral", False, "r_g > b_k"),
    PairRecord("sp4", "sl2-long-root", False, "centralizer is not abelian"),
    PairRecord("sl2+sl2", "sl2-ideal", False, "k is an ideal"),
    PairRecord("sl3", "toral", False, "r_g > b_k"),
    PairRecord("sp4", "toral", False, "r_g > b_k"),
)

_PAIR_SUBALGEBRA = {
    "gl2": "gl2", "sl2-diagonal": "sl2", "toral": "t1", "cartan": "t2",
    "sl2-root": "sl2", "sl2-principal": "sl2", "sl2+sl2": "sl2+sl2",
    "sl2-short-root": "sl2", "sl2-long-root": "sl2", "sl2-ideal": "sl2", "sl3": "sl3",
}


def pair_descriptor(record: PairRecord) -> SubalgebraDescriptor:
    return parse_reductive(_PAIR_SUBALGEBRA[record.k], tag=record.k)


def rank2_bounded_pairs() -> tuple[PairRecord, ...]:
    return RANK2_BOUNDED_PAIRS


def rank2_is_bounded(g: str, k: str) -> bool:
    if g not in {"sl2+sl2", "sl3", "sp4", "G2"}:
        raise ValueError(f"{g!r} is not a rank-two semisimple Lie algebra")
    if k not in _PAIR_SUBALGEBRA:
        raise ValueError(f"unknown subalgebra label {k!r}")
    return any(p.g == g and p.k == k for p in RANK2_BOUNDED_PAIRS)


def small_module_candidates(k: RootDatum) -> list[Weight]:
    """Nontrivial dominant weights with dim V - 1 <= b_k."""
    b = Fraction(k.dim + k.rank, 2)
    bound = int(b) + 1
    return [lam for lam, _ in enumerate_dominant_dim_at_most(k, bound) if any(lam)]


def non_self_dual_candidates(k: RootDatum) -> list[Weight]:
    """The candidates whose module is not self-dual."""
    return [lam for lam in small_module_candidates(k) if not k.is_self_dual(lam)]


# Names used by the command line and older callers.
thA_candidates = small_module_candidates
le52_filter = non_self_dual_candidates


def sl_n_maximal_bounded(k: SubalgebraDescriptor, n: int) -> bool:
    """For k maximal in sl(n): bounded iff b_k >= n - 1."""
    if n < 2:
        raise ValueError("sl(n) needs n >= 2")
    return k.b >= n - 1


def so_descriptor(n: int) -> SubalgebraDescriptor:
    if n < 3:
        raise ValueError("so(n) with n < 3 is abelian")
    if n == 4:
        return SubalgebraDescriptor((("A", 1), ("A", 1)), 0, "so4")
    d = algebra(f"so{n}")
    return SubalgebraDescriptor(((d.family, d.rank),), 0, f"so{n}")


def sp_descriptor(n: int) -> SubalgebraDescriptor:
    d = algebra(f"sp{n}")
    return SubalgebraDescriptor(((d.family, d.rank),), 0, f"sp{n}")


def sl_product_descriptor(r: int, s: int) -> SubalgebraDescriptor:
    """sl(r) + sl(s) inside sl(rs) via the tensor product."""
    if r < 2 or s < 2:
        raise ValueError("both factors need size at least 2")
    return SubalgebraDescriptor((("A", r - 1), ("A", s - 1)), 0, f"sl{r}+sl{s}")


# Bounded subalgebras of sl(n) that are not maximal.
SL_N_NONMAXIMAL_EXAMPLES = (
    ("sl(k+1) via V(omega_1) + V(omega_k)", lambda k: (SubalgebraDescriptor((("A", k),), 0), 2 * k + 2)),
    ("so7 via the spin module", lambda _: (SubalgebraDescriptor((("B", 3),), 0), 8)),
    ("G2 via V(omega_1)", lambda _: (SubalgebraDescriptor((("G", 2),), 0), 7)),
)
