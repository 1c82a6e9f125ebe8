"""sp(4): the short-root case and the principal case.

The principal characters come from a single rational function with
denominator (1-z^2)^2 (1-z^4)(1-z^6).  Reflecting it gives the k-character;
the eventual multiplicities repeat with period 6, and only sixteen modules
are multiplicity free.
"""
from boundedhc import sp4_principal as sp
from boundedhc.sp4_root import RootSp4Params, sp4_root_char, sp4_root_weyl_char

p = RootSp4Params(7, 1)   # a = 7/2, b = 1/2
print(f"{p}:", [int(c) for c in sp4_root_char(p).expand(12).coeffs])
print("   from the Weyl character:", [int(c) for c in sp4_root_weyl_char(p, 12).coeffs])

m = sp.PrincipalSp4Id(9, -3, 1)  # a = 9/2, b = -3/2, s = 1
print(f"\n{m}: psi = {sp.psi_closed(m.a2, m.b2, m.s)}")
series = sp.phi(m, 40)
print("   multiplicities:", [int(c) for c in series.coeffs])
print("   from the gamma formula:", [int(sp.coeff_c(m, i)) for i in range(41)])
print("   residues mod 6:", {r: int(v) for r, v in sorted(sp.asymptotic_c6(m).items())})
print("   minimal type V_%d with multiplicity %d" % sp.minimal_type(m))

print("\nmultiplicity free for a <= 21/2:")
for x in sp.sp4_principal_mfree_scan(21):
    print("  ", x)
