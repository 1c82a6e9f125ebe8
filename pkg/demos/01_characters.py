"""Working with k-characters: Clebsch-Gordan products, the reflection, tensoring.

Run: python demos/01_characters.py
"""
from boundedhc.series import LaurentPoly, RationalChar, cg_product, pi_project, tensor_rational

# V_3 (x) V_2 splits as V_5 + V_3 + V_1.
print("V_3 (x) V_2 =", cg_product(3, 2))

# A weight-space character with negative exponents is folded back onto
# honest k-types: z^-1 disappears, z^-5 cancels against z^3.
f = LaurentPoly({3: 1, -1: 2, -5: 1})
print("reflect", f, "->", pi_project(f))

# Infinite characters are kept as rational functions.  Tensoring the
# character 1 + z^2 + z^4 + ... with V_1 gives 2z + 2z^3 + ...
even = RationalChar.monomial_over(0, 2)
print("(1/(1-z^2)) (x) V_1 =", tensor_rational(even, LaurentPoly.monomial(1)).reduced())
print("first coefficients:", [int(c) for c in even.expand(8).coeffs])
