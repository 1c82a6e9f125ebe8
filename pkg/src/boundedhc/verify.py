"""Named verification suites: each pits a closed form against an independent route.

A suite yields ``(params, produced, expected)`` triples over a parameter grid.
``run_suite`` compares them exactly and stops at the first counterexample.  A
``fault`` hook may rewrite the produced value before comparison, which is how
the suites are shown to catch a corrupted coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import sl2sl2, sl3_principal, sl3_root, sp4_principal, sp4_root
from .series import LaurentPoly, RationalChar, cg_product

Triple = tuple[dict, object, object]


@dataclass
class Report:
    suite: str
    grid: dict
    checked: int
    passed: bool
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {"suite": self.suite, "grid": self.grid, "checked": self.checked,
                "passed": self.passed, "counterexample": self.counterexample}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.suite}: {self.checked} checks"
        if self.counterexample:
            ce = self.counterexample
            where = f" coefficient {ce['index']}" if "index" in ce else ""
            text += (f"; first counterexample at {ce['params']}{where}: "
                     f"expected {ce['expected']}, produced {ce['produced']}")
        return text


def cg_dimension_audit(limit: int, product: Callable[[int, int], LaurentPoly] = cg_product
                       ) -> Iterator[Triple]:
    """dim(V_p (x) V_q) = (p+1)(q+1) and symmetry in p, q."""
    for p in range(limit + 1):
        for q in range(limit + 1):
            f = product(p, q)
            dim = sum(((e + 1) * c for e, c in f.items()), Fraction(0))
            yield {"p": p, "q": q}, (dim, f), ((p + 1) * (q + 1), product(q, p))


def _sl2sl2(g) -> Iterator[Triple]:
    for n in range(2, g["n_max"] + 1):
        for a in range(1, n):
            yield ({"a": a, "n": n}, sl2sl2.finite_dim_char(a, n),
                   sl2sl2.finite_dim_char_cg(a, n))


def _sl3_root_induced(g) -> Iterator[Triple]:
    order = g["order"]
    for a in range(g["a_max"] + 1):
        yield ({"a": a}, sl3_root.generic_root_char(a).expand(order),
               sl3_root.induced_char_oracle(a, order))


def _sl3_root_quotient(g) -> Iterator[Triple]:
    order = g["order"]
    for m in range(2, g["neg_b_max"] + 1):
        for a in range(max(0, m - 1), g["a_max"] + 1):
            p = sl3_root.RootCaseParams("+", a, -m)
            expected = (sl3_root.generic_root_char(a).expand(order)
                        - sl3_root.generic_root_char(m - 2).expand(order))
            yield {"a": a, "b": -m}, sl3_root.root_char(p).expand(order), expected


SL3_PRINCIPAL_U = (Fraction(1, 3), Fraction(1, 2), Fraction(3, 2), Fraction(-3, 2),
                   0, 1, 2, 3, -2, -3, -4, 5)


def _sl3_principal(g) -> Iterator[Triple]:
    order = g["order"]
    for u in g.get("u", SL3_PRINCIPAL_U):
        for n in range(g["n_max"] + 1):
            for fam in sl3_principal.FAMILIES:
                m = sl3_principal.PrincipalSl3Id(fam, u, n)
                if not sl3_principal.is_valid(m):
                    continue
                yield ({"family": fam, "u": str(m.u), "n": n},
                       sl3_principal.principal_char(m).expand(order),
                       sl3_principal.recursion_oracle(m, order))


def _sp4_root(g) -> Iterator[Triple]:
    order = g["order"]
    for a2 in range(3, g["a2_max"] + 1, 2):
        for b2 in range(-a2 + 2, a2, 2):
            p = sp4_root.RootSp4Params(a2, b2)
            yield ({"a": str(p.a), "b": str(p.b)}, sp4_root.sp4_root_char(p).expand(order),
                   sp4_root.sp4_root_weyl_char(p, order))


def _half_grid(lim: int):
    return [v for v in range(-lim, lim + 1) if v % 2]


def _sp4_recursion(g) -> Iterator[Triple]:
    vals = _half_grid(g["a2_max"])
    for a2 in vals:
        for b2 in vals:
            for s in (0, 1):
                yield ({"a2": a2, "b2": b2, "s": s}, sp4_principal.psi_closed(a2, b2, s),
                       sp4_principal.psi_recursive(a2, b2, s))


def _sp4_identities(g) -> Iterator[Triple]:
    psi = sp4_principal.psi_closed
    w10, w11 = sp4_principal.WEIGHTS_V10, sp4_principal.WEIGHTS_V11
    vals = _half_grid(g["a2_max"])
    for a2 in vals:
        for b2 in vals:
            for s in (0, 1):
                here = psi(a2, b2, s)
                key = {"a2": a2, "b2": b2, "s": s}
                yield ({**key, "rule": "V10"}, here * w10,
                       psi(a2 + 2, b2, s) + psi(a2 - 2, b2, s)
                       + psi(a2, b2 + 2, s) + psi(a2, b2 - 2, s))
                yield ({**key, "rule": "V11"}, here * w11,
                       psi(a2 + 2, b2 + 2, s) + psi(a2 + 2, b2 - 2, s)
                       + psi(a2 - 2, b2 + 2, s) + psi(a2 - 2, b2 - 2, s) + here)
                yield ({**key, "rule": "swap"}, here, -psi(b2, a2, s))
                yield ({**key, "rule": "negate-swap"}, here, -psi(-b2, -a2, s))
                yield ({**key, "rule": "negate"}, here, psi(-a2, -b2, s))
    for s in (0, 1):
        yield ({"a2": 3, "b2": 1, "s": s, "rule": "base"}, psi(3, 1, s),
               RationalChar.monomial_over(s, 6))
        yield ({"a2": 3, "b2": -1, "s": s, "rule": "base"}, psi(3, -1, s),
               RationalChar.monomial_over(3 + s, 6))


def _sp4_coefficients(g) -> Iterator[Triple]:
    order = g["order"]
    for m in sp4_principal.grid(g["a2_max"]):
        series = sp4_principal.phi(m, order)
        formula = tuple(sp4_principal.coeff_c(m, i) for i in range(order + 1))
        yield {"a2": m.a2, "b2": m.b2, "s": m.s}, series.coeffs, formula


def _sp4_asymptotics(g) -> Iterator[Triple]:
    for m in sp4_principal.grid(g["a2_max"]):
        start = g.get("start") or sp4_principal.periodicity_threshold
        t = start(m)
        series = sp4_principal.phi(m, t + 12)
        table = sp4_principal.asymptotic_c6(m)
        yield ({"a2": m.a2, "b2": m.b2, "s": m.s, "from": t},
               tuple(series[i] for i in range(t, t + 13)),
               tuple(table[i % 6] for i in range(t, t + 13)))


def _gamma(g) -> Iterator[Triple]:
    series = RationalChar.monomial_over(0, *sp4_principal.PSI_DENOMINATOR).expand(2 * g["n_max"])
    for n in range(g["n_max"] + 1):
        yield {"n": n}, sp4_principal.gamma(n), series[2 * n]


def _cg(g) -> Iterator[Triple]:
    yield from cg_dimension_audit(g["limit"])


SUITES: dict[str, tuple[Callable[[dict], Iterator[Triple]], dict]] = {
    "cg-dimension": (_cg, {"limit": 20}),
    "sl2sl2-finite": (_sl2sl2, {"n_max": 12}),
    "sl3-root-induced": (_sl3_root_induced, {"a_max": 8, "order": 64}),
    "sl3-root-quotient": (_sl3_root_quotient, {"a_max": 8, "neg_b_max": 8, "order": 64}),
    "sl3-principal-recursion": (_sl3_principal, {"n_max": 10, "order": 80}),
    "sp4-root-weyl": (_sp4_root, {"a2_max": 9, "order": 40}),
    "sp4-principal-recursion": (_sp4_recursion, {"a2_max": 21}),
    "sp4-principal-identities": (_sp4_identities, {"a2_max": 21}),
    "sp4-principal-coefficients": (_sp4_coefficients, {"a2_max": 21, "order": 100}),
    "sp4-principal-gamma": (_gamma, {"n_max": 60}),
    "sp4-principal-asymptotics": (_sp4_asymptotics, {"a2_max": 21}),
}


def _coefficients(x):
    if hasattr(x, "coeffs"):
        return tuple(x.coeffs)
    if isinstance(x, tuple) and all(isinstance(v, (int, Fraction)) for v in x):
        return x
    return None


def _difference(produced, expected) -> dict:
    a, b = _coefficients(produced), _coefficients(expected)
    if a is not None and b is not None:
        for i, (u, v) in enumerate(zip(a, b)):
            if u != v:
                return {"index": i, "expected": str(v), "produced": str(u)}
        return {"index": min(len(a), len(b)), "expected": f"length {len(b)}",
                "produced": f"length {len(a)}"}
    return {"expected": str(expected), "produced": str(produced)}


def run_suite(name: str, grid: dict | None = None,
              fault: Callable[[dict, object], object] | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn, defaults = SUITES[name]
    g = {**defaults, **(grid or {})}
    checked = 0
    for params, produced, expected in fn(g):
        if fault is not None:
            produced = fault(params, produced)
        checked += 1
        if produced != expected:
            return Report(name, _plain(g), checked, False,
                          {"params": params, **_difference(produced, expected)})
    return Report(name, _plain(g), checked, True)


def _plain(g: dict) -> dict:
    return {k: (v if isinstance(v, (int, str)) else str(v)) for k, v in g.items()}


def run_all(grid: dict | None = None) -> list[Report]:
    return [run_suite(name, grid) for name in SUITES]


def corrupt_coefficient(target: dict, index: int, delta=1) -> Callable[[dict, object], object]:
    """Fault hook adding ``delta`` to coefficient ``index`` of one produced series."""
    def hook(params, produced):
        if any(params.get(k) != v for k, v in target.items()):
            return produced
        if isinstance(produced, tuple):
            vals = list(produced)
            vals[index] += delta
            return tuple(vals)
        if hasattr(produced, "coeffs"):
            vals = list(produced.coeffs)
            vals[index] += delta
            return type(produced)(tuple(vals))
        if isinstance(produced, RationalChar):
            return produced + LaurentPoly.monomial(index, delta)
        return produced
    return hook
