import pytest
from hypothesis import given
from hypothesis import strategies as st

from affadm import admset
from affadm.bruhat import length, min_coset_rep, parabolic_subgroup
from affadm.rootdata import TypeB, TypeGU, act_vector, weyl_orbit
from affadm.unitary import (Flags, Signature, b_levels, b_to_gu, delta,
                            gu_admissible_set, gu_flag_set, gu_permissibility_flags,
                            gu_pool, gu_spin_permissible_set, gu_to_b, mu_b,
                            mu_bar, signatures, z_element)
from affadm.weyl import (compose, conjugate, identity, kottwitz, mu_vector,
                         translation)

from helpers import elements


def levels(m):
    return admset.all_levels(TypeGU(m))


def test_signature_validation():
    assert Signature(3, 1).m == 2
    assert Signature.parse("4,0") == Signature(4, 0)
    for bad in [(1, 3), (2, 1), (-1, 1)]:
        with pytest.raises(ValueError):
            Signature(*bad)
    assert [s.s for s in signatures(3)] == [0, 1, 2, 3]


def test_cocharacters():
    assert mu_bar(Signature(3, 1)) == (2, 1, 1, 0)
    assert mu_b(Signature(3, 1)) == (2, 1, 1, 1, 0)
    assert mu_bar(Signature(2, 2)) == (2, 2, 0, 0)


# ---------------------------------------------------------------------------
# transport

@given(st.integers(1, 3).flatmap(lambda m: st.tuples(st.just(m), elements(TypeGU(m)), elements(TypeGU(m)))))
def test_transport_is_a_length_preserving_homomorphism(args):
    m, w, x = args
    assert gu_to_b(m, compose(w, x)) == compose(gu_to_b(m, w), gu_to_b(m, x))
    assert b_to_gu(m, gu_to_b(m, w)) == w
    assert length(TypeGU(m), w) == length(TypeB(m), gu_to_b(m, w))


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(st.just(m), elements(TypeGU(m)))), st.integers(-6, 6))
def test_transported_mu_vectors(args, i):
    m, w = args
    x = conjugate(z_element(m), w)
    assert mu_vector(x, i) == act_vector(delta(m), mu_vector(w, i + m))


def test_transport_examples():
    for m in (1, 2, 3):
        assert gu_to_b(m, identity(2 * m)) == identity(2 * m + 1)
        for sig in signatures(m):
            gu_orbit = weyl_orbit(TypeGU(m), mu_bar(sig))
            images = {gu_to_b(m, translation(lam)) for lam in gu_orbit}
            assert images == {translation(lam) for lam in weyl_orbit(TypeB(m), mu_b(sig))}
    assert gu_to_b(2, translation((2, 1, 1, 0))) == translation((1, 0, 1, 2, 1))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_parahoric_subgroups_correspond(m):
    for I in levels(m):
        WG = parabolic_subgroup(TypeGU(m), I)
        WB = parabolic_subgroup(TypeB(m), b_levels(m, I))
        assert {gu_to_b(m, w) for w in WG} == WB


@given(st.integers(1, 3).flatmap(lambda m: st.tuples(st.just(m), elements(TypeGU(m)))))
def test_kottwitz_compatibility(args):
    m, w = args
    for sig in signatures(m):
        t = translation(mu_bar(sig))
        gu_side = kottwitz(TypeGU(m), w) == kottwitz(TypeGU(m), t)
        b_side = kottwitz(TypeB(m), gu_to_b(m, w)) == kottwitz(TypeB(m), translation(mu_b(sig)))
        assert gu_side == b_side


# ---------------------------------------------------------------------------
# flags

@pytest.mark.parametrize("m", [1, 2, 3])
def test_flags_of_seed_translation(m):
    for sig in signatures(m):
        for I in levels(m):
            assert gu_permissibility_flags(translation(mu_bar(sig)), I, sig) == Flags(True, True, True)


@pytest.mark.parametrize("m", [1, 2])
def test_signature_s_zero_only_admits_the_central_translation(m):
    sig = Signature(2 * m, 0)
    t1 = translation((1,) * (2 * m))
    for I in levels(m):
        assert gu_flag_set(m, sig, I, flag="wedge") == {min_coset_rep(TypeGU(m), t1, I, I)}
        assert gu_admissible_set(m, sig, I).cardinality == 1


def test_flags_are_cumulative():
    m, sig = 2, Signature(3, 1)
    for w in gu_pool(m)[::7]:
        f = gu_permissibility_flags(w, ["0", "1", "2"], sig)
        assert f.naive >= f.wedge >= f.spin


def test_spin_set_transports_to_type_b():
    m, sig = 2, Signature(3, 1)
    I = ["0", "1", "2"]
    gu = gu_spin_permissible_set(m, sig, I).reps
    b = admset.spin_permissible_set(TypeB(m), mu_b(sig), b_levels(m, I)).reps
    assert {gu_to_b(m, w) for w in gu} == b


def test_adm_cardinality_via_type_b():
    rep = gu_admissible_set(2, Signature(3, 1), ["0", "1", "2"])
    assert rep.cardinality == admset.admissible_set(TypeB(2), (2, 1, 1, 1, 0)).cardinality
    assert "B2" in rep.transport


def test_full_signature_iwahori_equality():
    m, sig = 2, Signature(2, 2)
    I = ["0", "1", "2"]
    assert gu_admissible_set(m, sig, I).reps == gu_flag_set(m, sig, I)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_congruence_clause_is_automatic_when_m_in_level(m):
    for sig in signatures(m):
        for I in levels(m):
            if str(m) in I:
                assert gu_flag_set(m, sig, I, congruence=False) == gu_flag_set(m, sig, I)


@pytest.mark.parametrize("m", [2, 3])
def test_wedge_implies_spin_at_level_zero(m):
    for sig in signatures(m):
        assert gu_flag_set(m, sig, ["0"], flag="wedge") == gu_flag_set(m, sig, ["0"], flag="spin")


@pytest.mark.parametrize("m", [3])
def test_spin_equals_adm_rank_three(m):
    for sig in signatures(m):
        for I in levels(m):
            assert gu_admissible_set(m, sig, I).reps == gu_flag_set(m, sig, I)


def test_errors():
    with pytest.raises(ValueError):
        gu_to_b(2, identity(6))
    with pytest.raises(ValueError):
        b_to_gu(2, identity(4))
    with pytest.raises(ValueError):
        gu_admissible_set(2, Signature(4, 2), ["0", "1", "2"])
    with pytest.raises(admset.InvalidLevelError):
        gu_flag_set(3, Signature(5, 1), ["2"])
    with pytest.raises(admset.InvalidLevelError):
        gu_admissible_set(2, Signature(3, 1), ["1"])
