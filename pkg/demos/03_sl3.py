"""sl(3) over its root and principal sl(2)-subalgebras.

For the root subalgebra the multiplicities climb 1, 2, ..., a+1 and stay
there.  For the principal subalgebra the modules come in families indexed by
u and n, and the eventual multiplicities repeat with period 4.
"""
from fractions import Fraction

from boundedhc.sl3_principal import (PrincipalSl3Id, asymptotic_mults, classify_chi,
                                     principal_char, recursion_oracle)
from boundedhc.sl3_root import RootCaseParams, root_char

for p in (RootCaseParams("+", 3, Fraction(1, 2)), RootCaseParams("+", 3, -4)):
    c = root_char(p).expand(10)
    print(f"L{p.sign}(a={p.a}, b={p.b}):", [int(v) for v in c.coeffs])

print()
u = Fraction(1, 2)
for m in classify_chi(u, 2):
    closed = principal_char(m).expand(24)
    assert closed == recursion_oracle(m, 24)  # the translation recursion agrees
    print(f"{m}: {[int(v) for v in closed.coeffs]}")
    print("    eventual multiplicity by i mod 4:", dict(sorted(asymptotic_mults(m).items())))
