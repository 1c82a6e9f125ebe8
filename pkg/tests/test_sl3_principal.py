from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from boundedhc.series import LaurentPoly, RationalChar
from boundedhc.sl3_principal import (
    FAMILIES, PrincipalSl3Id, asymptotic_mults, base_char, classify_chi, is_valid, kappa,
    kappa_defining, mu, mu_defining, principal_char, recursion_oracle, restrict_sym_v2,
    sl3_principal_mfree, sym_power_weights,
)

Id = PrincipalSl3Id
THIRD, HALF = Fraction(1, 3), Fraction(1, 2)
U_VALUES = (THIRD, HALF, Fraction(3, 2), Fraction(-3, 2), 0, 1, 2, 3, -2, -3, -4, 5)


def valid_ids(n_max):
    return [m for u in U_VALUES for n in range(n_max + 1) for f in FAMILIES
            for m in [Id(f, u, n)] if is_valid(m)]


def test_symmetric_powers():
    assert restrict_sym_v2(0) == LaurentPoly.monomial(0)
    assert restrict_sym_v2(2) == LaurentPoly({0: 1, 4: 1})
    assert restrict_sym_v2(3) == LaurentPoly({2: 1, 6: 1})


@given(st.integers(0, 14))
def test_symmetric_power_dimension_and_top(n):
    r = restrict_sym_v2(n)
    assert sum((e + 1) * c for e, c in r.items()) == (n + 1) * (n + 2) // 2
    assert r.degree == 2 * n
    assert sum(sym_power_weights(n).coeff(e) for e in range(-2 * n, 2 * n + 1)) == \
        (n + 1) * (n + 2) // 2


def test_building_block_examples():
    assert mu(1, 2) == RationalChar.monomial_over(2, 2)
    assert kappa(0, 0) == RationalChar.monomial_over(0, 4)
    assert kappa(2, 0) == RationalChar.monomial_over(0, 4) + \
        RationalChar(LaurentPoly({4: 1}), (2,))
    with pytest.raises(ValueError):
        mu(2, 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(2, 14))
def test_mu_closed_form_against_definition(n, a):
    assert mu(n, a).expand(40) == mu_defining(n, a, 40)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 14))
def test_kappa_closed_form_against_definition(n, a):
    assert kappa(n, a).expand(40) == kappa_defining(n, a, 40)


def test_base_examples():
    assert base_char("I+", THIRD) == RationalChar.monomial_over(0, 4)
    assert base_char("J", Fraction(3, 2)) == RationalChar.monomial_over(7, 4)
    assert base_char("I-", 2) == RationalChar.monomial_over(2, 4)


def test_character_examples():
    assert principal_char(Id("I+", THIRD, 2)) == kappa(2, 0)
    assert principal_char(Id("I-", -2, 3)) == mu(3, 2)
    assert principal_char(Id("J", Fraction(-3, 2), 1)) == mu(1, 5)
    assert recursion_oracle(Id("I+", THIRD, 0), 30) == base_char("I+", THIRD).expand(30)
    assert recursion_oracle(Id("J", HALF, 1), 60) == kappa(1, 5).expand(60)


def test_classification_examples():
    assert classify_chi(THIRD, 2) == [Id("I+", THIRD, 2), Id("I-", THIRD, 2)]
    assert [m.family for m in classify_chi(HALF, 0)] == ["I+", "I-", "J"]
    assert classify_chi(5, 1) == [Id("I+", 5, 1), Id("I-", 5, 1), Id("I+", -4, 4), Id("I-", -4, 4)]
    assert [m.family for m in classify_chi(2, 3)] == ["I+tau", "I-tau"]
    with pytest.raises(ValueError):
        classify_chi(-3, 0)


def test_invalid_ids():
    assert not is_valid(Id("J", 1, 0))
    assert not is_valid(Id("I+tau", 1, 0))
    assert not is_valid(Id("I+", 1, 2))
    with pytest.raises(ValueError):
        principal_char(Id("I+", 0, 1))


@pytest.mark.parametrize("m", valid_ids(6), ids=str)
def test_closed_form_against_recursion(m):
    assert principal_char(m).expand(48) == recursion_oracle(m, 48)


@pytest.mark.parametrize("n", range(0, 8))
def test_twisted_characters_equal_untwisted(n):
    for sign in "+-":
        assert principal_char(Id(f"I{sign}tau", -2, n)) == principal_char(Id(f"I{sign}", -2, n))


@pytest.mark.parametrize("m", valid_ids(8), ids=str)
def test_structure_of_each_character(m):
    c = principal_char(m).expand(120)
    assert all(v >= 0 and v.denominator == 1 for v in c.coeffs)
    assert c.minimal_type()[1] == 1
    table = asymptotic_mults(m)
    for i in range(100, 117):
        assert c[i] == c[i + 4] == table[i % 4]
    assert sl3_principal_mfree(m) == (c.max_multiplicity() <= 1)


def test_asymptotic_examples():
    assert asymptotic_mults(Id("I+", THIRD, 3))[0] == 2
    assert asymptotic_mults(Id("I+", THIRD, 3))[2] == 2
    t = asymptotic_mults(Id("I+", THIRD, 4))
    assert (t[0], t[2]) == (3, 2)


def test_mfree_examples():
    assert sl3_principal_mfree(Id("I+", THIRD, 1))
    assert not sl3_principal_mfree(Id("I+", THIRD, 2))
    assert sl3_principal_mfree(Id("I-tau", -2, 1))
