from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from boundedhc.rootdata import (
    algebra, enumerate_dominant_dim_at_most, fundamental, r_g, root_datum, weyl_dim,
)

ALL_TYPES = [("A", n) for n in range(1, 7)] + [("B", n) for n in range(2, 6)] + \
    [("C", n) for n in range(2, 6)] + [("D", n) for n in range(3, 7)] + \
    [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]

ADJOINT_DIM = {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}


def classical_dim(family, n):
    return {"A": n * (n + 2), "B": n * (2 * n + 1), "C": n * (2 * n + 1),
            "D": n * (2 * n - 1)}[family]


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_dimension_from_root_strings(family, rank):
    d = root_datum(family, rank)
    expected = ADJOINT_DIM.get((family, rank)) or classical_dim(family, rank)
    assert d.dim == expected


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_r_g_is_dual_coxeter_minus_one(family, rank):
    d = root_datum(family, rank)
    highest = d.positive_roots[-1]
    # long roots have squared length 2, so (rho, theta) is the pairing with the coroot
    rho_weight = tuple(1 for _ in range(rank))
    assert r_g(d) == d.coroot_pairing(rho_weight, highest)


def test_r_g_table_rows():
    assert [r_g(algebra(x)) for x in ("sl3", "G2", "E8")] == [2, 3, 29]


def test_weyl_dimensions():
    assert weyl_dim(root_datum("A", 2), (1, 0)) == 3
    assert weyl_dim(root_datum("G", 2), (1, 0)) == 7
    assert weyl_dim(root_datum("E", 8), (1, 0, 0, 0, 0, 0, 0, 0)) == 3875
    assert weyl_dim(root_datum("F", 4), fundamental(root_datum("F", 4), 4)) == 26
    assert weyl_dim(root_datum("E", 7), fundamental(root_datum("E", 7), 7)) == 56
    assert weyl_dim(root_datum("E", 6), fundamental(root_datum("E", 6), 1)) == 27


@pytest.mark.parametrize("m", range(2, 9))
def test_sl_m_symmetric_square_and_exterior_powers(m):
    d = algebra(f"sl{m}")
    assert d.weyl_dim(fundamental(d, 1, 2)) == m * (m + 1) // 2
    for k in range(1, m):
        assert d.weyl_dim(fundamental(d, k)) == comb(m, k)


def test_enumeration_examples():
    a1 = enumerate_dominant_dim_at_most(root_datum("A", 1), 3)
    assert [w for w, _ in a1] == [(0,), (1,), (2,)]
    a2 = enumerate_dominant_dim_at_most(root_datum("A", 2), 3)
    assert sorted(w for w, _ in a2) == [(0, 0), (0, 1), (1, 0)]
    c2 = enumerate_dominant_dim_at_most(root_datum("C", 2), 5)
    assert c2 == [((0, 0), 1), ((1, 0), 4), ((0, 1), 5)]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([("A", 2), ("A", 3), ("B", 2), ("C", 3), ("G", 2)]),
       st.integers(1, 60))
def test_enumeration_against_box_search(kind, bound):
    d = root_datum(*kind)
    found = {w for w, _ in enumerate_dominant_dim_at_most(d, bound)}
    # dim(k omega_i) > 60 once k >= 10 in these types
    box = set()

    def walk(prefix):
        if len(prefix) == d.rank:
            if d.weyl_dim(prefix) <= bound:
                box.add(tuple(prefix))
            return
        for v in range(0, 11):
            walk(prefix + [v])
    walk([])
    assert found == {w for w in box}


def test_self_duality():
    assert not root_datum("A", 2).is_self_dual((1, 0))
    assert root_datum("C", 2).is_self_dual((1, 0))
    assert not root_datum("D", 5).is_self_dual((0, 0, 0, 0, 1))
    assert root_datum("D", 4).is_self_dual((0, 0, 0, 1))
    assert not root_datum("E", 6).is_self_dual((1, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_dual_module_has_same_dimension(family, rank):
    d = root_datum(family, rank)
    for i in range(1, rank + 1):
        w = fundamental(d, i)
        assert d.weyl_dim(d.dual_weight(w)) == d.weyl_dim(w)
        assert d.dual_weight(d.dual_weight(w)) == w


def test_algebra_names_and_errors():
    assert algebra("so3").name == "A1"
    assert algebra("so6").name == "D3"
    assert algebra("sp2").name == "A1"
    assert algebra("so9").name == "B4"
    for bad in ("so4", "sl1", "sp3", "H3", "E9"):
        with pytest.raises(ValueError):
            algebra(bad)
    with pytest.raises(TypeError):
        r_g("sl3")
    with pytest.raises(ValueError):
        weyl_dim(root_datum("A", 2), (1, -1))
