import pytest

from cmslopes.groups import (
    complex_conjugation,
    coset_partition,
    cyclic,
    divisors,
    element_order,
    frobenius_subgroup,
    is_prime,
    parse_group,
    subgroup_of_order,
    units_mod,
)


def test_is_prime_matches_sieve():
    N = 2000
    sieve = [True] * N
    sieve[0] = sieve[1] = False
    for i in range(2, N):
        if sieve[i]:
            for j in range(i * i, N, i):
                sieve[j] = False
    assert [n for n in range(N) if is_prime(n)] == [n for n in range(N) if sieve[n]]


@pytest.mark.parametrize("G, a, order", [(units_mod(5), 11 % 5, 1), (units_mod(7), 2, 3), (units_mod(5), 3, 4),
                                         (cyclic(6), 4, 3), (cyclic(6), 0, 1)])
def test_element_order(G, a, order):
    assert element_order(G, a) == order


def test_element_order_rejects_non_member():
    with pytest.raises(ValueError):
        element_order(units_mod(7), 0)
    with pytest.raises(ValueError):
        element_order(cyclic(6), 6)


@pytest.mark.parametrize("G, f, elements", [(cyclic(6), 3, (0, 2, 4)), (cyclic(4), 1, (0,)),
                                            (units_mod(7), 3, (1, 2, 4))])
def test_subgroup_of_order(G, f, elements):
    assert subgroup_of_order(G, f).elements == elements


def test_subgroup_of_order_requires_divisor():
    with pytest.raises(ValueError):
        subgroup_of_order(cyclic(6), 4)


@pytest.mark.parametrize("G", [cyclic(n) for n in (1, 2, 6, 12, 30)] + [units_mod(l) for l in (3, 7, 13, 31)])
def test_subgroups_have_right_size_and_close(G):
    for f in divisors(G.order):
        H = subgroup_of_order(G, f)
        assert len(H) == f
        assert all(G.op(a, b) in H for a in H.elements for b in H.elements)


@pytest.mark.parametrize("ell, p, elements", [(7, 2, (1, 2, 4)), (5, 11, (1,)), (5, 3, (1, 2, 3, 4))])
def test_frobenius_subgroup(ell, p, elements):
    assert frobenius_subgroup(ell, p).elements == elements


@pytest.mark.parametrize("ell, p", [(7, 7), (7, 9), (9, 2), (7, 1)])
def test_frobenius_subgroup_errors(ell, p):
    with pytest.raises(ValueError):
        frobenius_subgroup(ell, p)


@pytest.mark.parametrize("ell", [3, 5, 7, 11, 13, 29])
def test_frobenius_agrees_with_subgroup_of_order(ell):
    G = units_mod(ell)
    for p in (q for q in range(2, 200) if is_prime(q) and q != ell):
        assert frobenius_subgroup(ell, p) == subgroup_of_order(G, element_order(G, p % ell))


def test_coset_partitions():
    assert coset_partition(subgroup_of_order(cyclic(6), 2)).cosets == ((0, 3), (1, 4), (2, 5))
    assert coset_partition(subgroup_of_order(units_mod(7), 3)).cosets == ((1, 2, 4), (3, 5, 6))
    G = cyclic(10)
    assert coset_partition(subgroup_of_order(G, 10)).cosets == (tuple(range(10)),)


@pytest.mark.parametrize("G", [cyclic(12), cyclic(7), units_mod(13), units_mod(31)])
def test_coset_partition_covers_once(G):
    for f in divisors(G.order):
        P = coset_partition(subgroup_of_order(G, f))
        flat = [a for c in P for a in c]
        assert sorted(flat) == G.elements
        assert len(P) * f == G.order


def test_complex_conjugation():
    assert complex_conjugation(cyclic(6)) == 3
    assert complex_conjugation(units_mod(7)) == 6
    assert complex_conjugation(cyclic(4)) == 2
    with pytest.raises(ValueError):
        complex_conjugation(cyclic(5))


@pytest.mark.parametrize("G", [cyclic(2 * g) for g in range(1, 13)] + [units_mod(l) for l in (3, 5, 7, 11, 13, 17)])
def test_conjugation_in_subgroup_iff_even(G):
    c = complex_conjugation(G)
    for f in divisors(G.order):
        assert (c in subgroup_of_order(G, f)) == (f % 2 == 0)


def test_parse_group():
    assert parse_group("cyclic:6") == cyclic(6)
    assert parse_group("units:7") == units_mod(7)
    with pytest.raises(ValueError):
        parse_group("klein:4")
    with pytest.raises(ValueError):
        parse_group("units:9")
