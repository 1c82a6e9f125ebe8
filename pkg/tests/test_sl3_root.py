from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boundedhc.series import RationalChar
from boundedhc.sl3_root import (
    RootCaseParams, generic_root_char, induced_char_oracle, root_branch, root_char,
    root_is_valid, root_mfree_listed, root_minimal_type_and_mfree,
)

HALF = Fraction(1, 2)


def test_character_examples():
    assert root_char(RootCaseParams("+", 0, HALF)) == RationalChar.monomial_over(0, 1)
    c = root_char(RootCaseParams("+", 2, -HALF)).expand(6)
    assert list(c.coeffs) == [1, 2, 3, 3, 3, 3, 3]
    # truncated branch at a = 1, b = -2: generic character at a = 1 minus the one at a = 0
    c = root_char(RootCaseParams("+", 1, -2)).expand(6)
    assert list(c.coeffs) == [0, 1, 1, 1, 1, 1, 1]


def test_oracle_examples():
    assert list(induced_char_oracle(0, 5).coeffs) == [1] * 6
    assert list(induced_char_oracle(1, 4).coeffs) == [1, 2, 2, 2, 2]


def test_minimal_type_examples():
    info = root_minimal_type_and_mfree(RootCaseParams("+", 0, HALF))
    assert (info.minimal_type, info.multiplicity, info.multiplicity_free) == (0, 1, True)
    info = root_minimal_type_and_mfree(RootCaseParams("+", 2, -HALF))
    assert (info.minimal_type, info.multiplicity, info.multiplicity_free) == (0, 1, False)
    p = RootCaseParams("+", 3, -4)
    info = root_minimal_type_and_mfree(p)
    assert (info.minimal_type, info.multiplicity_free) == (3, True)
    assert root_mfree_listed(p)


def test_invalid_parameters():
    assert not root_is_valid(RootCaseParams("+", 2, 3))
    assert not root_is_valid(RootCaseParams("-", 2, -3))
    with pytest.raises(ValueError):
        root_char(RootCaseParams("+", 1, 0))
    with pytest.raises(ValueError):
        RootCaseParams("*", 1, HALF)


@pytest.mark.parametrize("a", range(9))
def test_generic_branch_against_induced_module(a):
    assert generic_root_char(a).expand(64) == induced_char_oracle(a, 64)


@pytest.mark.parametrize("neg_b", range(2, 9))
def test_quotient_identity(neg_b):
    for a in range(neg_b - 1, 9):
        p = RootCaseParams("+", a, -neg_b)
        assert root_branch(p) == "truncated"
        assert root_char(p).expand(64) + induced_char_oracle(neg_b - 2, 64) == \
            induced_char_oracle(a, 64)


params = st.builds(
    RootCaseParams, st.sampled_from("+-"), st.integers(0, 8),
    st.fractions(min_value=-12, max_value=12, max_denominator=3),
).filter(root_is_valid)


@given(params)
def test_plateau_and_non_negativity(p):
    c = root_char(p).expand(40)
    assert all(v >= 0 for v in c.coeffs)
    b = p.b if p.sign == "+" else -p.a - p.b
    plateau = p.a + b + 2 if root_branch(p) == "truncated" else p.a + 1
    assert c[40] == c[39] == plateau


@given(params)
def test_multiplicity_free_list_agrees_with_series(p):
    assert root_mfree_listed(p) == (root_char(p).expand(40).max_multiplicity() <= 1)
    assert root_mfree_listed(p) == root_minimal_type_and_mfree(p).multiplicity_free


@given(params)
def test_minus_family_is_the_substituted_plus_family(p):
    if p.sign == "-":
        twin = RootCaseParams("+", p.a, -p.a - p.b)
        assert root_char(p) == root_char(twin)
