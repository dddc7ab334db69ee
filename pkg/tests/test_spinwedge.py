import pytest
from hypothesis import given
from hypothesis import strategies as st

from affadm.spinwedge import (a_operator, a_values, e_set, e_set_dual, perp,
                              self_dual, sigma_sign, wedge_ok_at,
                              wedge_spin_data)
from affadm.unitary import Signature, _p_conditions, gu_pool, mu_bar
from affadm.weyl import identity, mu_vector, translation


def test_a_operator_examples():
    assert a_operator(1, {1, 2}) == (frozenset({1, 2}), 1)
    assert a_operator(1, {1, 3}) == (frozenset({1, 3}), -1)
    assert a_operator(2, {1, 2, 3, 6})[0] == frozenset({1, 2, 4, 5})
    assert perp(1, {2, 4}) == frozenset({2, 4})


def test_a_operator_rejects_bad_sets():
    with pytest.raises(ValueError):
        a_operator(1, {1})
    with pytest.raises(ValueError):
        a_operator(1, {1, 5})


@st.composite
def subsets(draw):
    m = draw(st.integers(1, 4))
    E = draw(st.sets(st.integers(1, 4 * m), min_size=2 * m, max_size=2 * m))
    return m, frozenset(E)


@given(subsets())
def test_a_operator_squares_to_identity_with_equal_signs(args):
    m, E = args
    F, sgn = a_operator(m, E)
    G, sgn2 = a_operator(m, F)
    assert G == E
    assert sgn == sgn2
    assert len(F) == 2 * m


def _wedge_cases(m):
    n = 2 * m
    for w in gu_pool(m):
        mus = [mu_vector(w, k) for k in range(n)]
        for i in range(m + 1):
            for s in range(m + 1):
                if wedge_ok_at(m, w, i, s):
                    yield w, mus, i, s


CASES = {m: list(_wedge_cases(m)) for m in (1, 2)}


@pytest.mark.parametrize("m", [1, 2])
def test_dual_e_set_is_perp(m):
    n = 2 * m
    for w, mus, i, s in CASES[m]:
        assert e_set_dual(m, mus[(n - i) % n], i) == perp(m, e_set(m, mus[i], i))


@pytest.mark.parametrize("m", [1, 2])
def test_a_value_differences(m):
    n = 2 * m
    for w, mus, i, s in CASES[m]:
        a, ap, b, bp = a_values(m, mus[i], mus[(n - i) % n], i)
        assert a - b == m - i
        assert ap - bp == m - i
        assert a >= ap


@pytest.mark.parametrize("m", [1, 2])
def test_perp_fixed_characterisations(m):
    n = 2 * m
    for w, mus, i, s in CASES[m]:
        mu = mus[i]
        E = e_set(m, mu, i)
        a, ap, _, _ = a_values(m, mu, mus[(n - i) % n], i)
        middle_even = all(mu[j - 1] in (0, 2) for j in range(i + 1, n - i + 1))
        assert (E == perp(m, E)) == (a == ap) == middle_even
        if a == ap:
            assert self_dual(mu)
            assert sigma_sign(m, E) == (-1) ** mu.count(0)


@pytest.mark.parametrize("m", [1, 2])
def test_wedge_route_matches_direct_condition(m):
    assert len(CASES[m]) > 10
    for w, mus, i, s in CASES[m]:
        assert wedge_spin_data(w, i, s).spin_ok == _p_conditions(m, mus, i, s)[2]


def test_seed_translation():
    for s in range(3):
        t = translation(mu_bar(Signature(4 - s, s)))
        for i in range(3):
            d = wedge_spin_data(t, i, s)
            assert d.spin_ok and d.a >= d.a_perp


def test_preconditions():
    with pytest.raises(ValueError):
        wedge_spin_data(identity(4), 3, 1)
    with pytest.raises(ValueError):
        wedge_spin_data(translation((3, 1, 1, -1)), 0, 1)
