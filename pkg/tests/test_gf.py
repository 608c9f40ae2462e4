import itertools

import pytest
from hypothesis import given, strategies as st

from blockfuse.gf import (Poly, factor, factor_over_subfield, frobenius_power,
                          make_tower)
from oracles import polynomial_roots_brute


def test_trivial_tower_f2():
    t = make_tower(2, 1, 1)
    assert t.q == 2 and t.gamma_order == 1
    assert t.add(1, 1) == 0 and t.mul(1, 1) == 1


def test_f4_over_f2():
    t = make_tower(2, 1, 2)
    assert t.gamma_order == 2
    assert t.modulus == (1, 1, 1)  # x^2 + x + 1
    w = 2  # the class of x
    assert t.mul(w, w) == t.add(w, 1)  # w^2 = w + 1


def test_f9_frobenius_order_two():
    t = make_tower(3, 1, 2)
    assert t.q == 9 and t.gamma_order == 2
    for a in range(9):
        assert t.frob_power(a, 2) == a
    assert any(t.frob_power(a, 1) != a for a in range(9))


def test_make_tower_errors():
    with pytest.raises(ValueError):
        make_tower(4, 1, 1)
    with pytest.raises(ValueError):
        make_tower(2, 2, 3)


def test_frobenius_fixed_field_and_identity():
    t = make_tower(2, 1, 2)
    w = t.element(2)
    assert frobenius_power(w, 1).code == t.add(2, 1)  # w^2 = w + 1
    assert frobenius_power(w, 0) == w
    for a in range(t.k_order):
        assert frobenius_power(t.element(a), 1) == t.element(a)


@pytest.mark.parametrize("p,m,n", [(2, 1, 2), (2, 2, 4), (3, 1, 2), (2, 1, 8), (2, 2, 8)])
def test_frobenius_fixed_point_count(p, m, n):
    t = make_tower(p, m, n)
    fixed = sum(1 for a in range(t.q) if t.frob_power(a, 1) == a)
    assert fixed == p ** m
    for a in range(t.q):
        assert t.frob_power(a, t.gamma_order) == a


@pytest.mark.parametrize("p,m,n", [(2, 1, 2), (3, 1, 2), (5, 1, 2), (2, 1, 6), (3, 1, 3)])
def test_field_axioms_exhaustive(p, m, n):
    t = make_tower(p, m, n)
    assert t.q <= 64
    elems = range(t.q)
    for a, b in itertools.product(elems, repeat=2):
        assert t.add(a, b) == t.add(b, a)
        assert t.mul(a, b) == t.mul(b, a)
        if b:
            assert t.mul(t.div(a, b), b) == a
    for a, b, c in itertools.product(elems, repeat=3):
        assert t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c))
        assert t.mul(a, t.mul(b, c)) == t.mul(t.mul(a, b), c)
    for a in elems:
        assert t.add(a, 0) == a and t.mul(a, 1) == a
        assert t.add(a, t.neg(a)) == 0
        if a:
            assert t.mul(a, t.inv(a)) == 1


def test_frobenius_is_field_automorphism():
    t = make_tower(2, 1, 4)
    for a, b in itertools.product(range(t.q), repeat=2):
        assert t.frob_power(t.add(a, b), 1) == t.add(t.frob_power(a, 1), t.frob_power(b, 1))
        assert t.frob_power(t.mul(a, b), 1) == t.mul(t.frob_power(a, 1), t.frob_power(b, 1))


def test_poly_normalization():
    t = make_tower(2, 1, 2)
    f = Poly.make(t, [1, 2, 0, 0])
    assert f.codes == (1, 2) and f.degree == 1
    z = Poly.make(t, [0, 0])
    assert z.is_zero and z.codes == () and z.degree == -1
    w = t.element(2)
    assert Poly.from_elements([w, t.element(1)]).codes == (2, 1)


def test_factor_x2_plus_x_over_f2():
    t = make_tower(2, 1, 1)
    f = Poly.make(t, [0, 1, 1])  # x^2 + x
    fac = factor(f)
    assert fac.unit.code == 1
    assert {(p.codes, m) for p, m in fac.factors} == {((0, 1), 1), ((1, 1), 1)}


def test_factor_x3_plus_1_over_f2():
    t = make_tower(2, 1, 1)
    f = Poly.make(t, [1, 0, 0, 1])
    fac = factor(f)
    # oracle: the only degree-1 monic divisors are found by root search
    assert polynomial_roots_brute(t, f.codes) == [1]
    assert {(p.codes, m) for p, m in fac.factors} == {((1, 1), 1), ((1, 1, 1), 1)}


def test_factor_x2_x_1_over_f4():
    t = make_tower(2, 1, 2)
    f = Poly.make(t, [1, 1, 1])
    # oracle: roots by exhaustive evaluation are the two cube roots of 1
    roots = polynomial_roots_brute(t, f.codes)
    assert roots == [2, 3]
    fac = factor(f)
    assert {(p.codes, m) for p, m in fac.factors} == {((2, 1), 1), ((3, 1), 1)}


def test_factor_zero_polynomial_rejected():
    t = make_tower(2, 1, 1)
    with pytest.raises(ValueError):
        factor(Poly.make(t, []))


def test_factor_over_subfield_merges_orbits():
    t = make_tower(2, 1, 2)
    f = Poly.make(t, [1, 0, 0, 1])  # x^3 + 1, fixed by Frobenius
    fac_l = factor(f)
    assert len(fac_l.factors) == 3  # splits completely over F4
    fac_k = factor_over_subfield(f)
    assert {(p.codes, m) for p, m in fac_k.factors} == {((1, 1), 1), ((1, 1, 1), 1)}


def test_factor_over_subfield_rejects_non_rational():
    t = make_tower(2, 1, 2)
    with pytest.raises(ValueError):
        factor_over_subfield(Poly.make(t, [2, 1]))


_TOWERS = [(2, 1, 1), (2, 1, 2), (3, 1, 1), (3, 1, 2), (5, 1, 1)]


@given(tower_key=st.sampled_from(_TOWERS),
       coeffs=st.lists(st.integers(min_value=0, max_value=10 ** 6), min_size=1, max_size=13),
       seed=st.integers(min_value=0, max_value=3))
def test_factor_product_roundtrip(tower_key, coeffs, seed):
    t = make_tower(*tower_key)
    f = Poly.make(t, [c % t.q for c in coeffs])
    if f.is_zero:
        return
    fac = factor(f, seed=seed)
    assert fac.expand() == f
    for poly, mult in fac.factors:
        assert mult >= 1
        assert poly.codes[-1] == 1  # monic
        if poly.degree >= 2:
            assert polynomial_roots_brute(t, poly.codes) == []


@given(tower_key=st.sampled_from([(2, 1, 2), (3, 1, 2)]),
       coeffs=st.lists(st.integers(min_value=0, max_value=10 ** 6), min_size=1, max_size=9))
def test_factor_over_subfield_roundtrip(tower_key, coeffs):
    t = make_tower(*tower_key)
    f = Poly.make(t, [c % t.k_order for c in coeffs])
    if f.is_zero:
        return
    fac = factor_over_subfield(f)
    assert fac.expand() == f
    for poly, _ in fac.factors:
        assert all(t.is_k_rational(c) for c in poly.codes)
