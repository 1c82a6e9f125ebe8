"""Command-line front end.

    boundedhc char --case sp4-principal --a 3/2 --b 1/2 --s 0 --order 60
    boundedhc classify --case sl3-principal --u 5 --n 1
    boundedhc gate --g sl3 --k sl2 --strict
    boundedhc enumerate --algebra so9 --candidates
    boundedhc mfree --case sp4-principal --max-a 21/2
    boundedhc verify --suite all

Exit status: 0 on success, 1 when a verification suite fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import gate, sl2sl2, sl3_principal, sl3_root, sp4_principal, sp4_root, verify
from .rootdata import algebra
from .series import DEFAULT_ORDER, LaurentPoly, RationalChar

CASES = ("sl2sl2", "sl3-root", "sl3-principal", "sp4-root", "sp4-principal")


class UsageError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"--case {args.case} needs " + ", ".join(f"--{m}" for m in missing))


def _doubled_half(x: Fraction, name: str) -> int:
    if (2 * x).denominator != 1 or (2 * x) % 2 == 0:
        raise UsageError(f"{name} must be a half-odd-integer such as 3/2, got {x}")
    return int(2 * x)


def _integer(x: Fraction, name: str) -> int:
    if x.denominator != 1:
        raise UsageError(f"{name} must be an integer, got {x}")
    return int(x)


# -- serialization ---------------------------------------------------------------

def closed_form_dict(r: RationalChar) -> dict:
    return {"numerator": [[e, str(c)] for e, c in r.numerator.items()],
            "denominator_factors": list(r.denominator)}


def closed_form_from_dict(d: dict) -> RationalChar:
    num = LaurentPoly((int(e), Fraction(c)) for e, c in d["numerator"])
    return RationalChar(num, tuple(int(m) for m in d["denominator_factors"]))


def character_document(module: dict, closed: RationalChar, order: int) -> dict:
    series = closed.expand(order)
    return {"module": module, "order": order,
            "coeffs": [[i, str(c)] for i, c in enumerate(series.coeffs)],
            "closed_form": closed_form_dict(closed)}


def _emit_character(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(doc, out)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["exponent", "multiplicity"])
        w.writerows(doc["coeffs"])
    else:
        closed = closed_form_from_dict(doc["closed_form"])
        params = ", ".join(f"{k}={v}" for k, v in doc["module"].items())
        out.write(f"{params}\n{closed!r}\n")
        for i, c in doc["coeffs"]:
            if c != "0":
                out.write(f"  V_{i}: {c}\n")


# -- subcommands ------------------------------------------------------------------

def _character(args) -> tuple[dict, RationalChar]:
    case = args.case
    if case == "sl2sl2":
        _need(args, "n")
        n = _integer(args.n, "n")
        if args.a is not None and not sl2sl2.sct_is_valid(sl2sl2.SctParams(args.a, n)):
            raise UsageError(f"W(a={args.a}, n={n}) is not a valid parameter")
        module = {"case": case, "n": str(n)}
        if args.a is not None:
            module["a"] = str(args.a)
        return module, sl2sl2.sct_char(n)
    if case == "sl3-root":
        _need(args, "a", "b")
        p = sl3_root.RootCaseParams(args.sign, _integer(args.a, "a"), args.b)
        if not sl3_root.root_is_valid(p):
            raise UsageError(f"L^{p.sign}(a={p.a}, b={p.b}) is not a valid parameter")
        return ({"case": case, "sign": p.sign, "a": str(p.a), "b": str(p.b)},
                sl3_root.root_char(p))
    if case == "sl3-principal":
        _need(args, "u", "n")
        m = sl3_principal.PrincipalSl3Id(args.family, args.u, _integer(args.n, "n"))
        reason = sl3_principal.invalid_reason(m)
        if reason:
            raise UsageError(f"{m}: {reason}")
        return ({"case": case, "family": m.family, "u": str(m.u), "n": str(m.n)},
                sl3_principal.principal_char(m))
    if case == "sp4-root":
        _need(args, "a", "b")
        p = sp4_root.RootSp4Params(_doubled_half(args.a, "a"), _doubled_half(args.b, "b"),
                                   args.dual)
        if not sp4_root.sp4_root_is_valid(p):
            raise UsageError(f"{p}: need a > |b|")
        return ({"case": case, "a": str(p.a), "b": str(p.b), "dual": p.dual},
                sp4_root.sp4_root_char(p).reduced())
    _need(args, "a", "b")
    m = sp4_principal.PrincipalSp4Id(_doubled_half(args.a, "a"), _doubled_half(args.b, "b"),
                                     args.s)
    if not m.is_module:
        raise UsageError(f"{m}: need a > |b|")
    closed = sp4_principal.psi_closed(m.a2, m.b2, m.s).pi().reduced()
    return {"case": case, "a": str(m.a), "b": str(m.b), "s": str(m.s)}, closed


def cmd_char(args, out) -> int:
    module, closed = _character(args)
    _emit_character(character_document(module, closed, args.order), args.format, out)
    return 0


def _classify(args) -> list[dict]:
    case = args.case
    if case == "sl3-principal":
        _need(args, "u", "n")
        ids = sl3_principal.classify_chi(args.u, _integer(args.n, "n"))
        return [{"family": m.family, "u": str(m.u), "n": m.n} for m in ids]
    if case == "sp4-root":
        _need(args, "a", "b")
        a2, b2 = _doubled_half(args.a, "a"), _doubled_half(args.b, "b")
        if a2 <= abs(b2):
            raise UsageError("need a > |b|")
        return [{"module": "L", "a": str(args.a), "b": str(args.b)},
                {"module": "L'", "a": str(-args.a), "b": str(-args.b)}]
    if case == "sp4-principal":
        _need(args, "a", "b")
        a2, b2 = _doubled_half(args.a, "a"), _doubled_half(args.b, "b")
        if a2 <= abs(b2):
            raise UsageError("need a > |b|")
        return [{"module": f"M{s}", "a": str(args.a), "b": str(b), "s": s}
                for b in (args.b, -args.b) for s in (0, 1)]
    if case == "sl2sl2":
        _need(args, "a", "n")
        p = sl2sl2.SctParams(args.a, _integer(args.n, "n"))
        if not sl2sl2.sct_is_valid(p):
            raise UsageError(f"no bounded module for a={p.a}, n={p.n}")
        return [{"module": "W", "a": str(p.a), "second": str(p.a - p.n)}]
    _need(args, "a", "b")
    out = []
    for sign in "+-":
        p = sl3_root.RootCaseParams(sign, _integer(args.a, "a"), args.b)
        if sl3_root.root_is_valid(p):
            info = sl3_root.root_minimal_type_and_mfree(p)
            out.append({"module": f"L{sign}", "a": str(p.a), "b": str(p.b),
                        "shape": sl3_root.root_branch(p),
                        "multiplicity_free": info.multiplicity_free})
    if not out:
        raise UsageError(f"neither L+ nor L- is defined at a={args.a}, b={args.b}")
    return out


def cmd_classify(args, out) -> int:
    rows = _classify(args)
    if args.format == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        for row in rows:
            out.write(" ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    return 0


def cmd_gate(args, out) -> int:
    g = gate.parse_semisimple(args.g)
    k = gate.parse_reductive(args.k)
    r = gate.r_g_total(g, args.strict)
    ok = gate.necessary_condition(g, k, args.strict)
    rel = "<=" if ok else ">"
    if args.format == "json":
        json.dump({"g": args.g, "k": args.k, "strict": args.strict, "r_g": r,
                   "b_k": str(k.b), "passes": ok}, out)
        out.write("\n")
    else:
        out.write(f"{'PASS' if ok else 'FAIL'} ({r} {rel} {k.b})\n")
    return 0


def cmd_enumerate(args, out) -> int:
    d = algebra(args.algebra)
    if args.non_self_dual:
        weights = gate.non_self_dual_candidates(d)
    elif args.candidates:
        weights = gate.small_module_candidates(d)
    else:
        if args.max_dim is None:
            raise UsageError("give --max-dim, --candidates or --non-self-dual")
        from .rootdata import enumerate_dominant_dim_at_most
        weights = [lam for lam, _ in enumerate_dominant_dim_at_most(d, args.max_dim)]
    rows = [{"weight": list(lam), "dim": d.weyl_dim(lam), "self_dual": d.is_self_dual(lam)}
            for lam in weights]
    if args.format == "json":
        json.dump({"algebra": d.name, "weights": rows}, out, indent=2)
        out.write("\n")
    else:
        for row in rows:
            label = " + ".join(f"{c}w{i + 1}" if c > 1 else f"w{i + 1}"
                               for i, c in enumerate(row["weight"]) if c) or "0"
            out.write(f"{label}\tdim {row['dim']}\t{'self-dual' if row['self_dual'] else ''}\n")
    return 0


def cmd_mfree(args, out) -> int:
    a2_max = int(2 * args.max_a)
    if args.case == "sp4-principal":
        rows = [{"a": str(m.a), "b": str(m.b), "s": m.s}
                for m in sp4_principal.sp4_principal_mfree_scan(a2_max)]
    elif args.case == "sp4-root":
        rows = [{"a": str(p.a), "b": str(p.b)}
                for a2 in range(3, a2_max + 1, 2) for b2 in range(-a2 + 2, a2, 2)
                for p in [sp4_root.RootSp4Params(a2, b2)] if sp4_root.sp4_root_mfree(p)]
    else:
        raise UsageError("mfree supports --case sp4-principal and sp4-root")
    if args.format == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        for row in rows:
            out.write(" ".join(f"{k}={v}" for k, v in row.items()) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    grid = json.loads(args.grid) if args.grid else None
    if grid is not None and (not isinstance(grid, dict)
                             or not all(type(v) is int for v in grid.values())):
        raise UsageError("--grid must be a JSON object of integer parameters")
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = [verify.run_suite(n, grid) for n in names]
    if args.format == "json":
        json.dump([r.to_dict() for r in reports], out, indent=2)
        out.write("\n")
    else:
        for r in reports:
            out.write(r.line() + "\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boundedhc",
                                     description="k-characters of bounded (g, k)-modules")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, choices=("text", "json")):
        p.add_argument("--format", choices=choices, default="text")

    def with_params(p):
        p.add_argument("--case", choices=CASES, required=True)
        p.add_argument("--a", type=_rational)
        p.add_argument("--b", type=_rational)
        p.add_argument("--n", type=_rational)
        p.add_argument("--u", type=_rational)
        p.add_argument("--s", type=int, choices=(0, 1), default=0)
        p.add_argument("--sign", choices=("+", "-"), default="+")
        p.add_argument("--family", choices=sl3_principal.FAMILIES, default="I+")
        p.add_argument("--dual", action="store_true")

    p = sub.add_parser("char", help="k-character of one module")
    with_params(p)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    with_format(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("classify", help="simple bounded modules for given parameters")
    with_params(p)
    with_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gate", help="necessary condition r_g <= b_k")
    p.add_argument("--g", required=True, help="semisimple g, e.g. sl3 or sl2+sl2")
    p.add_argument("--k", required=True, help="reductive k, e.g. sl2, gl2, so7+t1")
    p.add_argument("--strict", action="store_true", help="sum r over the simple ideals of g")
    with_format(p)
    p.set_defaults(func=cmd_gate)

    p = sub.add_parser("enumerate", help="dominant weights of small dimension")
    p.add_argument("--algebra", required=True)
    p.add_argument("--max-dim", type=int)
    p.add_argument("--candidates", "--thA", dest="candidates", action="store_true",
                   help="nontrivial weights with dim V - 1 <= b_k")
    p.add_argument("--non-self-dual", action="store_true",
                   help="candidates whose module is not self-dual")
    with_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("mfree", help="multiplicity-free modules up to a bound on a")
    p.add_argument("--case", choices=("sp4-principal", "sp4-root"), required=True)
    p.add_argument("--max-a", type=_rational, required=True)
    with_format(p)
    p.set_defaults(func=cmd_mfree)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--grid", help="JSON object overriding grid parameters")
    with_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


_NEGATIVE = re.compile(r"^-\d+(/\d+)?$")


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Turn '--b -1/2' into '--b=-1/2'; argparse would read '-1/2' as an option."""
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEGATIVE.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    args = parser.parse_args(_attach_negative_values(list(argv)))
    try:
        return args.func(args, out)
    except (UsageError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"boundedhc {args.command}: {exc}", file=sys.stderr)
        return 2


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """main() with captured output, for tests and notebooks."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()
