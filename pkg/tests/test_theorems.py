import math
from fractions import Fraction as F

import pytest

from cmslopes.cmtypes import validate_cm_type
from cmslopes.groups import cyclic, is_prime
from cmslopes.slopes import (
    enumerate_half_valued,
    enumerate_symmetric_integral,
    is_integral,
    is_ordinary,
    is_supersingular,
    is_symmetric,
    ordinary,
    supersingular,
)
from cmslopes.theorems import (
    SearchCapExceeded,
    achievable_set,
    check_beta_missing,
    construct_field_params,
    missing_sequences,
    standard_cm_type,
    survey,
    theorem23_beta,
    upper_bound_Mg,
)

from conftest import seq

H = F(1, 2)


def test_achievable_g2():
    ach = achievable_set(standard_cm_type(2))
    assert set(ach) == {1, 2, 4}
    assert is_ordinary(ach[1]) and is_supersingular(ach[2]) and is_supersingular(ach[4])
    assert len(set(ach.values())) == 2


def test_achievable_g3():
    ach = achievable_set(standard_cm_type(3))
    assert ach[1] == ordinary(3)
    assert ach[3] == seq(*[F(1, 3)] * 3, *[F(2, 3)] * 3)
    assert ach[2] == ach[6] == supersingular(3)
    assert len(set(ach.values())) == 3


def test_achievable_g1():
    ach = achievable_set(standard_cm_type(1))
    assert ach == {1: seq(0, 1), 2: seq(H, H)}


@pytest.mark.parametrize("g, bound", [(4, 2), (3, 3), (6, 3), (1, 2), (15, 5)])
def test_upper_bound(g, bound):
    assert upper_bound_Mg(g) == bound


def test_missing_g2_g3():
    assert missing_sequences(standard_cm_type(2)) == {seq(0, H, H, 1)}
    m3 = missing_sequences(standard_cm_type(3))
    assert seq(0, 0, H, H, 1, 1) in m3 and seq(0, H, H, H, H, 1) in m3
    assert len(m3) == 5 - 3


@pytest.mark.parametrize("g", range(2, 16))
def test_missing_nonempty_and_half_valued_count(g):
    missing = missing_sequences(standard_cm_type(g))
    assert missing
    assert len(enumerate_half_valued(g) & missing) == g - 1


@pytest.mark.parametrize("g, ell, m", [(1, 3, 1), (2, 5, 1), (3, 7, 1), (4, 41, 5)])
def test_construct_field_params(g, ell, m):
    fp = construct_field_params(g)
    assert (fp.ell, fp.m) == (ell, m)


@pytest.mark.parametrize("g", range(1, 51))
def test_construct_field_params_congruence(g):
    fp = construct_field_params(g)
    assert is_prime(fp.ell)
    assert fp.ell % (4 * g) == (1 + 2 * g) % (4 * g)
    assert (fp.ell - 1) % (2 * g) == 0 and fp.m % 2 == 1
    # minimality
    assert not any(is_prime(c) for c in range(1 + 2 * g, fp.ell, 4 * g))


def test_construct_search_cap():
    with pytest.raises(SearchCapExceeded, match="search cap exceeded"):
        construct_field_params(4, cap=2)


def test_theorem23_beta_examples():
    b5 = theorem23_beta(5)
    assert b5.f0 == 3
    assert b5.beta == seq(0, 0, *[F(1, 3)] * 3, *[F(2, 3)] * 3, 1, 1)
    b6 = theorem23_beta(6)
    assert b6.f0 == 5
    assert b6.beta == seq(0, *[F(1, 5)] * 5, *[F(4, 5)] * 5, 1)
    b2 = theorem23_beta(2)
    assert b2.f0 is None and b2.beta == seq(0, H, H, 1)
    assert theorem23_beta(3).beta == seq(0, 0, H, H, 1, 1)
    with pytest.raises(ValueError):
        theorem23_beta(1)


@pytest.mark.parametrize("g", range(2, 51))
def test_theorem23_beta_properties(g):
    b = theorem23_beta(g)
    assert is_symmetric(b.beta) and is_integral(b.beta)
    if g <= 12:
        assert b.beta in enumerate_symmetric_integral(g)
    if g >= 4:
        assert math.gcd(b.f0, 2 * g) == 1 and 1 < b.f0 < g
    assert check_beta_missing(b.beta, standard_cm_type(g))


def test_check_beta_missing_extremes():
    for g in (2, 3, 5, 8):
        cm = standard_cm_type(g)
        assert not check_beta_missing(ordinary(g), cm)
        assert not check_beta_missing(supersingular(g), cm)
    with pytest.raises(ValueError):
        check_beta_missing(ordinary(3), standard_cm_type(4))


def test_beta_missing_for_any_cm_type_g5():
    # the beta argument only uses that Z/10Z has no subgroup of order 3
    import itertools

    beta = theorem23_beta(5).beta
    for choice in itertools.product((0, 1), repeat=5):
        phi = [i + 5 * c for i, c in enumerate(choice)]
        assert check_beta_missing(beta, validate_cm_type(cyclic(10), phi))


@pytest.mark.parametrize("g", range(2, 65))
def test_achievable_bound_and_denominators(g):
    ach = achievable_set(standard_cm_type(g))
    values = set(ach.values())
    assert len(values) <= upper_bound_Mg(g) <= g
    for f, s in ach.items():
        assert is_symmetric(s) and is_integral(s)
        if f % 2:
            assert all(f % x.denominator == 0 for x in s.slopes)


@pytest.mark.parametrize("n", range(1, 7))
def test_powers_of_two_only_extremal(n):
    g = 2**n
    assert set(achievable_set(standard_cm_type(g)).values()) == {ordinary(g), supersingular(g)}


def test_survey_report_invariants():
    rep = survey(standard_cm_type(4))
    assert rep.m_count == 2 and rep.m_bound == 2 and rep.n_count == 8
    assert len(rep.missing) == 6
    achieved = set(rep.achievable.values())
    assert not (rep.missing & achieved)
    assert rep.missing | achieved <= enumerate_symmetric_integral(4)
    assert len(rep.half_valued_witnesses()) == 3


def test_non_cyclic_group_rejected():
    from cmslopes.groups import units_mod
    with pytest.raises(ValueError):
        achievable_set(validate_cm_type(units_mod(7), [1, 2, 3]))
