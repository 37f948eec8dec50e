import pytest

from sumprod_avoid.exceptions import CapError, FeasibilityError
from sumprod_avoid.extremal import construct
from sumprod_avoid.oracle import (
    OracleMethod,
    count_optima,
    max_avoiding_componentwise,
    max_avoiding_subset_enum,
)
from sumprod_avoid.verify import check_avoidance

from conftest import primes_between

UP_TO_23 = primes_between(5, 23)


@pytest.mark.parametrize("p, target, expected", [(5, 1, 2), (13, 1, 6), (5, 0, 2)])
def test_subset_enum_examples(p, target, expected):
    r = max_avoiding_subset_enum(p, target)
    assert r.max_size == expected and r.method is OracleMethod.SubsetEnumeration
    assert len(r.witness_set) == expected


def test_subset_enum_witness_p5():
    assert max_avoiding_subset_enum(5, 1).witness_set == (0, 2)


def test_subset_enum_cap():
    with pytest.raises(FeasibilityError):
        max_avoiding_subset_enum(29, 1)


@pytest.mark.parametrize("p, expected", [(11, 5), (101, 50), (7, 3)])
def test_componentwise_examples(p, expected):
    assert max_avoiding_componentwise(p, 1).max_size == expected


# Per-component counts by hand: {0,1} -> 1 ({0}), {2,1/2,-1} -> 1 ({2}),
# root pair -> 2, each six-cycle -> 2. Enumeration confirms these.
@pytest.mark.parametrize("p, expected", [(5, 1), (7, 2), (11, 2), (13, 4), (23, 8)])
def test_count_optima(p, expected):
    assert count_optima(p, 1) == expected
    assert max_avoiding_subset_enum(p, 1).optimum_count == expected


@pytest.mark.parametrize("p", UP_TO_23)
def test_methods_agree_all_targets(p):
    for t in range(p):
        a = max_avoiding_subset_enum(p, t)
        b = max_avoiding_componentwise(p, t)
        assert (a.max_size, a.witness_set, a.optimum_count) == (b.max_size, b.witness_set, b.optimum_count)


def test_brute_force_subsets_tiny():
    # fully naive check of the search: all 2^p subsets
    for p in (5, 7, 11):
        for t in range(p):
            best, count = 0, 0
            for mask in range(1 << p):
                s = [x for x in range(p) if mask >> x & 1]
                if any((x + y) % p == t or x * y % p == t for x in s for y in s):
                    continue
                if len(s) > best:
                    best, count = len(s), 1
                elif len(s) == best:
                    count += 1
            r = max_avoiding_subset_enum(p, t)
            assert (r.max_size, r.optimum_count) == (best, count)


def test_witness_validity_and_upper_bound():
    for p in primes_between(5, 300):
        r = max_avoiding_componentwise(p, 1)
        assert check_avoidance(r.witness_set, p).ok
        assert r.max_size <= p // 2
        assert r.max_size == len(construct(p).elements)
    for p in UP_TO_23:
        for t in (0, 2, 3):
            r = max_avoiding_subset_enum(p, t)
            rep = check_avoidance(r.witness_set, p, t)
            assert rep.sum_avoids_target and rep.product_avoids_target


def test_component_cap():
    with pytest.raises(CapError):
        max_avoiding_componentwise(101, 3, component_cap=4)


def test_oracle_json():
    d = max_avoiding_componentwise(7, 1).to_dict()
    assert d == {"p": 7, "target": 1, "max_size": 3, "witness": [0, 2, 3], "method": "ComponentwiseMIS", "optimum_count": 2}
