"""Which reductive subalgebras can carry bounded modules?

A bounded (g, k)-module needs r_g <= b_k.  This script checks the rank-two
algebras against k = sl(2), then lists the small modules that drive the
classification of bounded maximal subalgebras of sl(n).
"""
from boundedhc import gate
from boundedhc.rootdata import algebra, r_g

sl2 = gate.parse_reductive("sl2")
for name in ("sl2+sl2", "sl3", "sp4", "G2"):
    g = gate.parse_semisimple(name)
    total = gate.r_g_total(g, strict=True)
    verdict = "passes" if gate.necessary_condition(g, sl2, strict=True) else "fails"
    print(f"{name:8s} r = {total}, b(sl2) = {sl2.b}: {verdict}")

print()
for name in ("sl4", "so10", "sp6", "G2", "E6"):
    d = algebra(name)
    cands = gate.small_module_candidates(d)
    dual = set(gate.non_self_dual_candidates(d))
    print(f"{name}: r_g = {r_g(d)}")
    for w in cands:
        tag = "" if w in dual else " (self-dual)"
        print(f"    {w}  dim {d.weyl_dim(w)}{tag}")
