import pytest
from hypothesis import given, strategies as st

from cm_degrees.cartan_oracle import CartanAction, cartan_order, min_orbit
from cm_degrees.degree_formulas import (Base, DegreeAnswer, PrimePowerLevel, level_parts,
                                        t_kf, t_kf_small, t_kf_value, t_tilde, t_tilde_parts)
from cm_degrees.orders import (CapExceeded, InvalidInput, all_orders, divisors, kronecker,
                               make_order, order_from_discriminant)
from strategies import orders

PRIME_POWERS_27 = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2),
                   (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1)]


def test_types_validate():
    with pytest.raises(InvalidInput):
        PrimePowerLevel(4, 0, 1)
    with pytest.raises(InvalidInput):
        PrimePowerLevel(2, 3, 2)
    with pytest.raises(CapExceeded):
        PrimePowerLevel(2, 0, 20)
    with pytest.raises(ValueError):
        DegreeAnswer(0, Base.KF, True)
    with pytest.raises(ValueError):
        DegreeAnswer(3, Base.KF, False)


def test_level_parts():
    assert level_parts(2, 12) == [PrimePowerLevel(2, 1, 2), PrimePowerLevel(3, 0, 1)]
    assert level_parts(1, 1) == []
    with pytest.raises(InvalidInput):
        level_parts(5, 12)


@pytest.mark.parametrize("delta,ell,a,b,value", [
    (-3, 2, 0, 1, 3),     # full C_2
    (-7, 2, 0, 2, 2),     # split, a = 0
    (-16, 2, 1, 3, 8),    # ramified, c = 1
    (-4, 3, 0, 1, 8),     # inert
    (-4, 2, 1, 2, 4),     # ramified, b > 2c + 1
    (-23, 5, 0, 1, 24),   # inert at 5
])
def test_t_tilde_values(delta, ell, a, b, value):
    assert t_tilde(order_from_discriminant(delta), PrimePowerLevel(ell, a, b)) == value


@pytest.mark.parametrize("delta,m,n,value", [
    (-3, 1, 2, 1), (-7, 1, 4, 1), (-4, 2, 2, 1), (-3, 1, 9, 3),
    (-16, 2, 8, 4), (-4, 2, 12, 8), (-23, 1, 5, 12), (-8, 1, 8, 8),
])
def test_t_kf_values(delta, m, n, value):
    ans = t_kf(order_from_discriminant(delta), m, n)
    assert ans.value == value and ans.base is Base.KF and ans.multiples_closed


def test_t_tilde_matches_oracle_small():
    for o in all_orders(48):
        for ell, b in PRIME_POWERS_27:
            n = ell**b
            act = CartanAction(o, n)
            for a in range(b + 1):
                assert t_tilde(o, PrimePowerLevel(ell, a, b)) == act.orbits(ell**a).min_size, (o, ell, a, b)


def test_small_rows_match_oracle():
    for o in all_orders(120):
        for n in (2, 3):
            for m in (1, n):
                assert t_kf_small(o, m, n) == min_orbit(o, m, n)[1], (o, m, n)


def test_t_kf_matches_oracle_composite():
    for o in all_orders(40):
        for n in (4, 6, 10, 12, 15, 18, 20):
            act = CartanAction(o, n)
            for m in divisors(n):
                assert t_kf_value(o, m, n) == act.orbits(m).min_reduced_size, (o, m, n)


@given(orders)
def test_special_row_2_2(o):
    chi = kronecker(o.delta, 2)
    assert t_kf_value(o, 2, 2) * o.w == 2 * (2 - chi)
    assert t_kf_value(o, 2, 2) * o.w == 2 * cartan_order(o, 2)
    assert t_tilde(o, PrimePowerLevel(2, 1, 1)) == cartan_order(o, 2)


@given(orders, st.sampled_from([2, 3, 5, 7]), st.integers(0, 3), st.integers(1, 4))
def test_monotone_in_b(o, ell, a, b):
    if a > b or ell ** (b + 1) > 10**4:
        return
    lo = t_tilde(o, PrimePowerLevel(ell, a, b))
    hi = t_tilde(o, PrimePowerLevel(ell, a, b + 1))
    assert hi > lo


@given(orders, st.sampled_from([3, 5, 7, 11]), st.integers(1, 3))
def test_inert_independent_of_a(o, ell, b):
    if kronecker(o.delta, ell) != -1:
        return
    vals = {t_tilde(o, PrimePowerLevel(ell, a, b)) for a in range(b + 1)}
    assert len(vals) == 1


@given(orders, st.integers(4, 400), st.data())
def test_product_formula(o, n, data):
    m = data.draw(st.sampled_from(divisors(n)))
    prod = 1
    for _, t in t_tilde_parts(o, m, n):
        prod *= t
    assert t_kf_value(o, m, n) * o.w == prod


@given(orders, st.integers(1, 400), st.data())
def test_t_kf_divides_into_larger_levels(o, n, data):
    # a point of level (M, N) also has level (M', N') for M' | M, N' | N
    m = data.draw(st.sampled_from(divisors(n)))
    n2 = data.draw(st.sampled_from(divisors(n)))
    m2 = data.draw(st.sampled_from(divisors(n2)))
    if m % m2 == 0:
        assert t_kf_value(o, m, n) >= t_kf_value(o, m2, n2)


def test_t_kf_rejects_bad_levels():
    o = make_order(-7, 1)
    with pytest.raises(InvalidInput):
        t_kf(o, 3, 4)
    with pytest.raises(CapExceeded):
        t_kf(o, 1, 10**4 + 1)
