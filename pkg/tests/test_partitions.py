from collections import Counter
from fractions import Fraction
from math import comb, factorial, prod

import pytest

from twoleg.partitions import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    hooks,
    intersection,
    kappa,
    n_stat,
    partitions_up_to,
    sign,
    splittings,
    sub_multisets,
    subdiagrams,
    union,
    z_order,
)

P = Partition


def test_enumerate_examples():
    assert enumerate_partitions(0) == [EMPTY]
    assert enumerate_partitions(3) == [P((3,)), P((2, 1)), P((1, 1, 1))]
    assert len(enumerate_partitions(8)) == 22


def test_enumerate_counts_match_recurrence():
    # Euler's pentagonal recurrence as an independent count
    counts = [1]
    for n in range(1, 16):
        total, k = 0, 1
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            s = 1 if k % 2 else -1
            total += s * counts[n - g1]
            if g2 <= n:
                total += s * counts[n - g2]
            k += 1
        counts.append(total)
    assert [len(enumerate_partitions(n)) for n in range(16)] == counts


def test_enumeration_order_descending():
    for d in range(1, 9):
        parts = enumerate_partitions(d)
        assert parts == sorted(parts, reverse=True)
        assert all(p.size == d for p in parts)


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert P.from_parts([1, 3, 2]) == P((3, 2, 1))
    assert P.parse("2,1") == P((2, 1))
    assert P.parse("") == EMPTY
    assert P((2, 1)).to_json() == [2, 1]


def test_statistics_examples():
    assert z_order(P((1,))) == 1
    assert z_order(P((2, 1))) == 2
    assert z_order(P((3,))) == 3
    assert kappa(P((1,))) == 0
    assert kappa(P((2,))) == 2
    assert kappa(P((1, 1))) == -2
    assert sorted(hooks(P((1,)))) == [1]
    assert sorted(hooks(P((2, 1)))) == [1, 1, 3]
    assert sorted(hooks(P((2,)))) == [1, 2]
    assert conjugate(P((2, 1))) == P((2, 1))
    assert conjugate(P((3,))) == P((1, 1, 1))
    assert conjugate(EMPTY) == EMPTY
    assert union(P((2,)), P((1,))) == P((2, 1))
    assert union(P((2, 1)), P((2,))) == P((2, 2, 1))
    assert union(EMPTY, P((3, 1))) == P((3, 1))


def test_hook_sum_identity():
    for mu in partitions_up_to(10):
        assert Fraction(sum(hooks(mu))) == Fraction(kappa(mu), 2) + 2 * n_stat(mu) + mu.size


def test_kappa_even_and_conjugate_antisymmetric():
    for mu in partitions_up_to(9):
        assert kappa(mu) % 2 == 0
        assert kappa(conjugate(mu)) == -kappa(mu)
        assert conjugate(conjugate(mu)) == mu


def test_hook_product_counts_tableaux():
    # d!/prod(hooks) equals the number of standard tableaux, counted recursively
    def tableaux(mu):
        if not mu:
            return 1
        total = 0
        for i in range(len(mu)):
            if i + 1 == len(mu) or mu[i] > mu[i + 1]:
                parts = list(mu)
                parts[i] -= 1
                total += tableaux(tuple(x for x in parts if x))
        return total

    for mu in partitions_up_to(7):
        assert factorial(mu.size) // prod(hooks(mu)) == tableaux(tuple(mu))


def test_class_sizes_sum_to_group_order():
    for d in range(9):
        assert sum(Fraction(factorial(d), z_order(mu)) for mu in enumerate_partitions(d)) == factorial(d)


def test_sign():
    assert sign(P((2,))) == -1
    assert sign(P((3,))) == 1
    assert sign(P((2, 2))) == 1
    assert sign(EMPTY) == 1


def test_splitting_identity():
    # sum over mu+ u mu- = mu of z_mu/(z_mu+ z_mu-) x^l(mu+) equals prod (x+1)^m_i
    for mu in partitions_up_to(6):
        lhs = Counter()
        for a, b in splittings(mu):
            assert union(a, b) == mu
            lhs[a.length] += Fraction(z_order(mu), z_order(a) * z_order(b))
        rhs = Counter({0: 1})
        for m in mu.multiplicities().values():
            nxt = Counter()
            for k, c in rhs.items():
                for j in range(m + 1):
                    nxt[k + j] += c * comb(m, j)
            rhs = nxt
        assert {k: v for k, v in lhs.items() if v} == dict(rhs)


def test_sub_multisets_and_subdiagrams():
    assert sub_multisets(P((2, 1, 1))) == sorted(sub_multisets(P((2, 1, 1))), key=lambda p: (p.size, p))
    assert set(sub_multisets(P((2, 1, 1)))) == {
        EMPTY, P((1,)), P((2,)), P((1, 1)), P((2, 1)), P((2, 1, 1))
    }
    subs = subdiagrams(P((2, 1)))
    assert set(subs) == {EMPTY, P((1,)), P((2,)), P((1, 1)), P((2, 1))}
    for mu in partitions_up_to(6):
        expected = [rho for rho in partitions_up_to(mu.size) if mu.contains(rho)]
        assert sorted(subdiagrams(mu)) == sorted(expected)


def test_intersection():
    assert intersection(P((3, 1)), P((2, 2))) == P((2, 1))
    assert intersection(P((1,)), EMPTY) == EMPTY
