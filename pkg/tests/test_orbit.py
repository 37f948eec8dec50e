import itertools

import pytest

from sumprod_avoid.exceptions import DomainError, NonGenericVertexError
from sumprod_avoid.orbit import (
    ComponentKind,
    GroupWord,
    apply_word,
    census,
    classify,
    compose,
    fixed_words,
    orbit_of,
)
from sumprod_avoid.relation_graph import RelationGraph

from conftest import SMALL_PRIMES, primes_between

W = GroupWord


@pytest.mark.parametrize("w, y, p, expected", [(W.S, 3, 11, 9), (W.Id, 5, 7, 5), (W.STS, 3, 11, 7), (W.T, 3, 11, 4), (W.ST, 3, 11, 8), (W.TS, 3, 11, 5)])
def test_apply_word_examples(w, y, p, expected):
    assert apply_word(w, y, p) == expected


@pytest.mark.parametrize("w, y", [(W.T, 0), (W.ST, 0), (W.TS, 1), (W.STS, 1)])
def test_apply_word_poles(w, y):
    with pytest.raises(DomainError):
        apply_word(w, y, 11)


def test_compose_examples():
    assert compose(W.S, W.S) is W.Id
    assert compose(W.S, W.T) is W.ST
    assert compose(W.ST, W.ST) is W.TS
    assert W.T @ W.S is W.TS


def test_group_relations():
    assert compose(W.T, W.T) is W.Id
    st = compose(W.S, W.T)
    assert compose(st, compose(st, st)) is W.Id and compose(st, st) is not W.Id
    assert compose(W.S, compose(W.T, W.S)) is W.STS
    for a, b, c in itertools.product(W, repeat=3):
        assert compose(a, compose(b, c)) is compose(compose(a, b), c)
    for a in W:
        assert compose(a, W.Id) is a is compose(W.Id, a)
        assert any(compose(a, b) is W.Id for b in W)
    # Latin square: each row of the table is a permutation
    for a in W:
        assert len({compose(a, b) for b in W}) == 6


def _defined(w, y, p):
    try:
        return apply_word(w, y, p)
    except DomainError:
        return None


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_compose_pointwise(p):
    for w1, w2 in itertools.product(W, repeat=2):
        w = compose(w1, w2)
        for y in range(p):
            inner = _defined(w2, y, p)
            if inner is None:
                continue
            outer = _defined(w1, inner, p)
            if outer is None:
                continue
            assert apply_word(w, y, p) == outer


@pytest.mark.parametrize(
    "y, p, expected",
    [(6, 11, {W.Id, W.S}), (3, 7, {W.Id, W.ST, W.TS}), (3, 11, {W.Id}), (0, 11, {W.Id, W.STS}), (1, 11, {W.Id, W.T})],
)
def test_fixed_words_examples(y, p, expected):
    assert fixed_words(y, p) == expected


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_fixed_words_match_evaluation(p):
    for y in range(p):
        brute = {w for w in W if _defined(w, y, p) == y}
        assert fixed_words(y, p) == brute


@pytest.mark.parametrize(
    "x, p, expected",
    [(3, 11, (3, 9, 5, 7, 8, 4)), (4, 11, (4, 8, 7, 5, 9, 3)), (3, 13, (3, 11, 6, 8, 5, 9))],
)
def test_orbit_examples(x, p, expected):
    assert orbit_of(x, p).members == expected
    # scan-based evaluation of x, 1-x, 1/(1-x), x/(x-1), 1-1/x, 1/x
    div = lambda a, b: next(z for z in range(p) if (b * z - a) % p == 0)
    assert expected == (x, (1 - x) % p, div(1, 1 - x), div(x, x - 1), (1 - div(1, x)) % p, div(1, x))


@pytest.mark.parametrize("x", [0, 1, 6, 10, 2])
def test_orbit_rejects_special(x):
    with pytest.raises(NonGenericVertexError):
        orbit_of(x, 11)


def test_orbit_rejects_root():
    with pytest.raises(NonGenericVertexError):
        orbit_of(4, 13)


def test_orbit_distinct_and_alternating():
    for p in primes_between(5, 1000):
        special = {0, 1, p - 1, (p + 1) // 2, 2}
        for x in range(p):
            if x in special or (x * x - x + 1) % p == 0:
                continue
            mem = orbit_of(x, p).members
            assert len(set(mem)) == 6
            for i in range(6):
                u, v = mem[i], mem[(i + 1) % 6]
                if i % 2 == 0:
                    assert (u + v) % p == 1
                else:
                    assert u * v % p == 1


def test_orbit_equals_word_images():
    p = 101
    for x in range(p):
        if x in {0, 1, 100, 51, 2} or (x * x - x + 1) % p == 0:
            continue
        assert set(orbit_of(x, p).members) == {apply_word(w, x, p) for w in W}


@pytest.mark.parametrize(
    "y, p, kind, members",
    [
        (0, 13, ComponentKind.ExceptionalPair, (0, 1)),
        (7, 13, ComponentKind.ExceptionalTriple, (2, 7, 12)),
        (10, 13, ComponentKind.RootPair, (4, 10)),
        (2, 5, ComponentKind.ExceptionalTriple, (2, 3, 4)),
        (9, 13, ComponentKind.SixCycle, (3, 5, 6, 8, 9, 11)),
    ],
)
def test_classify_examples(y, p, kind, members):
    c = classify(y, p)
    assert c.kind is kind and c.members == members and c.representative == members[0]
    assert c.delta_contribution == (2 if kind is ComponentKind.RootPair else 0)


def test_classify_partitions_and_matches_graph():
    for p in primes_between(5, 1000):
        g = RelationGraph(p, 1)
        covered = set()
        for y in range(p):
            c = classify(y, p)
            assert y in c.members
            if y != c.representative:
                continue
            cs = g.component_of(y)
            assert (c.members, c.edges, c.looped) == (cs.vertices, cs.edges, cs.looped)
            assert not covered & set(c.members)
            covered |= set(c.members)
        assert covered == set(range(p))


@pytest.mark.parametrize(
    "p, rootpair, sixcycles",
    [(5, 0, 0), (7, 1, 0), (13, 1, 1), (11, 0, 1)],
)
def test_census_examples(p, rootpair, sixcycles):
    c = census(p)
    assert (c.n_pair, c.n_triple, c.n_rootpair, c.n_sixcycles) == (1, 1, rootpair, sixcycles)
    assert c.to_dict()["sixcycles"] == sixcycles


def test_census_representatives():
    c = census(13)
    assert c.sixcycle_representatives == (3,) and c.checksum == 3
    reps = census(101).sixcycle_representatives
    assert list(reps) == sorted(reps)
    assert all(r == min(orbit_of(r, 101).members) for r in reps)


def test_census_identity_moderate():
    for p in primes_between(5, 2000):
        c = census(p)
        assert 2 + 3 + c.delta + 6 * c.n_sixcycles == p
        assert c.n_rootpair == c.delta // 2
