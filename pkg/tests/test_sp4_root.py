from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boundedhc.series import RationalChar
from boundedhc.sp4_root import (
    RootSp4Params, sp4_root_char, sp4_root_is_valid, sp4_root_mfree, sp4_root_minimal_type,
    sp4_root_plateau, sp4_root_weyl_char,
)

P = RootSp4Params
GRID = [P(a2, b2) for a2 in range(3, 10, 2) for b2 in range(-a2 + 2, a2, 2)]


def test_validity():
    assert sp4_root_is_valid(P(3, 1))
    assert not sp4_root_is_valid(P(1, 1))
    assert sp4_root_is_valid(P(5, -3))
    with pytest.raises(ValueError):
        P(4, 1)
    with pytest.raises(ValueError):
        sp4_root_char(P(3, 5))


def test_character_examples():
    assert sp4_root_char(P(3, 1)) == RationalChar.monomial_over(0, 2)
    assert sp4_root_char(P(5, 3)) == RationalChar.monomial_over(0, 2, coeff=2)
    assert sp4_root_char(P(3, 1, dual=True)) == sp4_root_char(P(3, 1))


def test_oracle_examples():
    assert list(sp4_root_weyl_char(P(3, 1), 10).coeffs) == [1, 0] * 5 + [1]
    assert list(sp4_root_weyl_char(P(3, -1), 10).coeffs) == [0, 1] * 5 + [0]


@pytest.mark.parametrize("p", GRID, ids=str)
def test_closed_form_against_weyl_character(p):
    assert sp4_root_char(p).expand(24) == sp4_root_weyl_char(p, 24)


def test_minimal_type_examples():
    assert sp4_root_minimal_type(P(3, 1)) == (0, 1)
    assert sp4_root_minimal_type(P(5, 1)) == (1, 3)
    assert sp4_root_minimal_type(P(5, -3)) == (1, 1)


def test_mfree_examples():
    assert sp4_root_mfree(P(3, 1)) and sp4_root_mfree(P(3, -1))
    assert not sp4_root_mfree(P(5, 1))
    assert not sp4_root_mfree(P(5, 3))


params = st.integers(1, 12).flatmap(
    lambda k: st.builds(P, st.just(2 * k + 1),
                        st.integers(-k, k - 1).map(lambda j: 2 * j + 1)))


@given(params)
def test_series_properties(p):
    c = sp4_root_char(p).expand(3 * p.a2 + 10)
    parity, plateau = sp4_root_plateau(p)
    assert all(c[i] == 0 for i in range(c.order + 1) if i % 2 != parity)
    top = c.order - (c.order - parity) % 2
    assert c[top] == c[top - 2] == plateau
    assert c.minimal_type() == sp4_root_minimal_type(p)
    assert sp4_root_mfree(p) == (c.max_multiplicity() <= 1)


@given(params)
def test_plateau_is_difference_of_squares(p):
    assert sp4_root_plateau(p)[1] == (p.a ** 2 - p.b ** 2) / 2
    assert sp4_root_plateau(p)[1] != (p.a ** 2 + p.b ** 2) / 2
