from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from boundedhc.series import LaurentPoly, RationalChar, tensor_char
from boundedhc.sp4_principal import (
    PSI_DENOMINATOR, PrincipalSp4Id, Summand, asymptotic_c6, c0_exact, c1_exact, coeff_c,
    dval, dval_binomial, eval_e, eval_e_theta, gamma, gamma_quasi, grid, low_type_estimate,
    minimal_type, periodicity_threshold, phi, psi_closed, psi_recursive, sigma,
    sp4_principal_mfree_scan, tensor_decomp,
)

M = PrincipalSp4Id
odd = st.integers(-11, 10).map(lambda k: 2 * k + 1)
modules = st.integers(1, 8).flatmap(
    lambda k: st.builds(M, st.just(2 * k + 1), st.integers(-k, k - 1).map(lambda j: 2 * j + 1),
                        st.sampled_from((0, 1))))


def ones_at(order, exps):
    return tuple(int(i in exps) for i in range(order + 1))


def test_psi_examples():
    assert psi_closed(3, 1, 0) == RationalChar.monomial_over(0, 6)
    assert psi_closed(1, 1, 0) == RationalChar(LaurentPoly(), (6,))
    assert psi_closed(3, -1, 1) == RationalChar.monomial_over(4, 6)
    assert psi_recursive(5, 1, 0) == RationalChar(LaurentPoly({1: 1, -1: 1, -3: 1}), (6,))
    with pytest.raises(ValueError):
        psi_closed(2, 1, 0)


def test_phi_examples():
    assert phi(M(3, 1, 0), 18).coeffs == ones_at(18, {0, 6, 12, 18})
    assert phi(M(5, 1, 0), 21).coeffs == ones_at(21, set(range(3, 22, 2)))
    assert phi(M(3, -1, 1), 22).coeffs == ones_at(22, {4, 10, 16, 22})


def test_gamma_examples():
    assert [gamma(n) for n in (0, 1, 3)] == [1, 2, 7]
    assert gamma(-1) == gamma(Fraction(1, 2)) == 0
    assert all(gamma_quasi(n) == 0 for n in range(-6, 0))


def test_gamma_against_expansion():
    series = RationalChar.monomial_over(0, *PSI_DENOMINATOR).expand(120)
    assert all(gamma(n) == series[2 * n] for n in range(61))


def test_coefficient_examples():
    assert coeff_c(M(3, 1, 0), 0) == 1
    assert coeff_c(M(3, 1, 0), 2) == 0
    assert coeff_c(M(5, 1, 0), 3) == 1


def test_residue_table_examples():
    assert sigma(M(3, 1, 0)) == 1
    assert asymptotic_c6(M(3, 1, 0))[0] == 1
    t = asymptotic_c6(M(5, 1, 0))
    assert sigma(M(5, 1, 0)) == 0
    assert [t[r] for r in range(6)] == [0, 1, 0, 1, 0, 1]
    m = M(5, 3, 1)
    series = phi(m, 200)
    assert all(series[i] == asymptotic_c6(m)[i % 6] for i in range(150, 201))


def test_minimal_type_examples():
    m = M(5, 1, 0)
    assert dval(m) == 1 and coeff_c(m, 1) == 0 and coeff_c(m, 3) == 1
    assert eval_e(M(3, 1, 0)) == 1
    assert eval_e(M(3, -1, 1)) == 1
    assert minimal_type(M(3, -1, 1)) == (4, 1)
    with pytest.raises(ValueError):
        dval(M(3, 1, 0))


def test_tensor_decomposition_examples():
    out = tensor_decomp("10", 3, 1)
    assert out == [Summand(5, 1), Summand(3, 3), Summand(1, 1), Summand(3, -1)]
    assert [s.is_zero for s in out] == [False, True, True, False]
    assert len(tensor_decomp("11", 5, 3)) == 3
    assert len(tensor_decomp("11", 5, -3)) == 3
    assert len(tensor_decomp("11", 7, 1)) == 5


@given(odd, odd, st.sampled_from((0, 1)))
def test_symmetries(a2, b2, s):
    here = psi_closed(a2, b2, s)
    assert here == -psi_closed(b2, a2, s) == -psi_closed(-b2, -a2, s) == psi_closed(-a2, -b2, s)
    assert psi_closed(a2, a2, s) == psi_closed(a2, -a2, s) == RationalChar(LaurentPoly(), (6,))


@settings(max_examples=60, deadline=None)
@given(odd, odd, st.sampled_from((0, 1)))
def test_closed_form_against_recursion(a2, b2, s):
    assert psi_closed(a2, b2, s) == psi_recursive(a2, b2, s)


@settings(max_examples=60, deadline=None)
@given(modules)
def test_coefficients_parity_and_period(m):
    series = phi(m, 80)
    assert tuple(coeff_c(m, i) for i in range(81)) == series.coeffs
    assert all(series[i] == 0 for i in range(81) if i % 2 != m.parity)
    t = periodicity_threshold(m)
    longer = phi(m, t + 18)
    table = asymptotic_c6(m)
    assert all(longer[i] == longer[i + 6] == table[i % 6] for i in range(t, t + 13))


@settings(max_examples=60, deadline=None)
@given(modules)
def test_low_types(m):
    c = phi(m, 6)
    i, _ = minimal_type(m)
    assert i in ((0, 2, 4) if m.parity == 0 else (1, 3))
    assert c0_exact(m) == c[0] and c1_exact(m) == c[1]
    if m.parity == 1:
        assert dval(m) == dval_binomial(m) == c[1] + c[3]
    else:
        assert eval_e(m) == eval_e_theta(m) == c[0] + c[2] + c[4]
    j, estimate = low_type_estimate(m)
    assert j == m.parity and abs(c[j] - estimate) < 1


@settings(max_examples=40, deadline=None)
@given(modules, st.sampled_from(("10", "11")))
def test_tensor_decomposition_matches_characters(m, which):
    top = 3 if which == "10" else 4
    lhs = tensor_char(phi(m, 40 + top), top)
    rhs = phi(m, 40) * 0
    for part in tensor_decomp(which, m.a2, m.b2):
        if not part.is_zero:
            rhs = rhs + phi(M(part.a2, part.b2, m.s), 40)
    assert lhs == rhs


def test_grid_size():
    assert len(grid(21)) == 220


def test_mfree_scan():
    found = set(sp4_principal_mfree_scan(21))
    assert len(found) == 16
    assert {M(7, 5, 0), M(7, 5, 1)} <= found
    assert M(7, 1, 0) not in found and M(7, 1, 1) not in found
