"""Anharmonic orbits and the component classification of G_1.

The involutions ``s(y) = 1 - y`` and ``t(y) = 1/y`` generate a copy of S_3
acting on F_p minus its poles. For t = 1 every component of the relation
graph is one of:

* the pair {0, 1},
* the triple {2, 1/2, -1},
* the two roots of X^2 - X + 1 (present iff p = 1 mod 3),
* a six-cycle ``x ~ 1-x ~ 1/(1-x) ~ x/(x-1) ~ 1-1/x ~ 1/x ~ x``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd

from .exceptions import DomainError, NonGenericVertexError
from .fp_arith import PrimeModulus, as_modulus

_U64 = (1 << 64) - 1


def _normalize(m: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    g = gcd(*m)
    m = tuple(x // g for x in m)
    lead = next(x for x in m if x != 0)
    return m if lead > 0 else tuple(-x for x in m)


def _matmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 + a1 * b2, a0 * b1 + a1 * b3, a2 * b0 + a3 * b2, a2 * b1 + a3 * b3)


class GroupWord(enum.Enum):
    """Reduced words in s, t. Values are Moebius matrices (a, b, c, d) for
    ``y -> (a*y + b) / (c*y + d)``; composition is matrix product up to sign.
    """

    Id = (1, 0, 0, 1)
    S = (1, -1, 0, -1)  # 1 - y
    T = (0, 1, 1, 0)  # 1 / y
    ST = (1, -1, 1, 0)  # 1 - 1/y
    TS = (0, 1, -1, 1)  # 1 / (1 - y)
    STS = (1, 0, 1, -1)  # y / (y - 1)

    def __matmul__(self, other: GroupWord) -> GroupWord:
        return compose(self, other)

    @property
    def is_even(self) -> bool:
        return self in (GroupWord.Id, GroupWord.ST, GroupWord.TS)


_BY_MATRIX = {_normalize(w.value): w for w in GroupWord}


def compose(w1: GroupWord, w2: GroupWord) -> GroupWord:
    """The reduced word for ``w1 o w2`` (apply ``w2`` first)."""
    return _BY_MATRIX[_normalize(_matmul(w1.value, w2.value))]


def apply_word(w: GroupWord, y: int, m: PrimeModulus | int) -> int:
    m = as_modulus(m)
    p = m.p
    a, b, c, d = w.value
    den = (c * y + d) % p
    if den == 0:
        raise DomainError(f"{y} is a pole of {w.name} mod {p}")
    return (a * y + b) * pow(den, -1, p) % p


def fixed_words(y: int, m: PrimeModulus | int) -> set[GroupWord]:
    """All words fixing ``y``, from the closed-form fixed-point conditions."""
    m = as_modulus(m)
    p = m.p
    y %= p
    out = {GroupWord.Id}
    if y == m.half:
        out.add(GroupWord.S)
    if y * y % p == 1:
        out.add(GroupWord.T)
    if (y * y - y + 1) % p == 0:
        out |= {GroupWord.ST, GroupWord.TS}
    if y in (0, 2):
        out.add(GroupWord.STS)
    return out


def is_generic(y: int, m: PrimeModulus) -> bool:
    return y not in m.special and (y * y - y + 1) % m.p != 0


@dataclass(frozen=True)
class Orbit:
    base: int
    members: tuple[int, int, int, int, int, int]


def _cycle(x: int, p: int) -> tuple[int, int, int, int, int, int]:
    ix = pow(x, -1, p)
    i1 = pow(1 - x, -1, p)
    # x/(x-1) = 1 - 1/(1-x)
    return (x, (1 - x) % p, i1, (1 - i1) % p, (1 - ix) % p, ix)


def orbit_of(x: int, m: PrimeModulus | int) -> Orbit:
    """The six-cycle through a generic ``x``, in adjacency order from ``x``."""
    m = as_modulus(m)
    x = m.element(x)
    if not is_generic(x, m):
        raise NonGenericVertexError(f"{x} is not a generic vertex mod {m.p}")
    return Orbit(base=x, members=_cycle(x, m.p))


class ComponentKind(enum.Enum):
    ExceptionalPair = "ExceptionalPair"
    ExceptionalTriple = "ExceptionalTriple"
    RootPair = "RootPair"
    SixCycle = "SixCycle"


@dataclass(frozen=True)
class Component:
    kind: ComponentKind
    members: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    looped: tuple[int, ...]
    # six-cycles only: the cycle read from the representative
    cycle: tuple[int, ...] | None = None

    @property
    def representative(self) -> int:
        return self.members[0]

    @property
    def delta_contribution(self) -> int:
        return 2 if self.kind is ComponentKind.RootPair else 0

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind.value,
            "representative": self.representative,
            "members": list(self.members),
            "edges": [list(e) for e in self.edges],
            "looped": list(self.looped),
            "delta_contribution": self.delta_contribution,
        }
        if self.cycle is not None:
            d["cycle"] = list(self.cycle)
        return d


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def classify(y: int, m: PrimeModulus | int) -> Component:
    """The component of ``y`` in G_1, without any graph search."""
    m = as_modulus(m)
    p = m.p
    y = m.element(y)
    half, neg1 = m.half, m.minus_one
    if y in (0, 1):
        return Component(ComponentKind.ExceptionalPair, (0, 1), ((0, 1),), (1,))
    if y in (2, half, neg1):
        return Component(
            ComponentKind.ExceptionalTriple,
            tuple(sorted((2, half, neg1))),
            tuple(sorted((_edge(2, half), _edge(2, neg1)))),
            tuple(sorted((half, neg1))),
        )
    if (y * y - y + 1) % p == 0:
        u, v = m.trinomial_roots
        return Component(ComponentKind.RootPair, (u, v), ((u, v),), ())
    cyc = _cycle(y, p)
    r = min(cyc)
    cyc = _cycle(r, p)
    return Component(
        ComponentKind.SixCycle,
        tuple(sorted(cyc)),
        tuple(sorted(_edge(cyc[i], cyc[(i + 1) % 6]) for i in range(6))),
        (),
        cycle=cyc,
    )


@dataclass(frozen=True)
class Census:
    p: int
    delta: int
    n_pair: int
    n_triple: int
    n_rootpair: int
    sixcycle_representatives: tuple[int, ...] = field(repr=False)

    @property
    def n_sixcycles(self) -> int:
        return len(self.sixcycle_representatives)

    @property
    def checksum(self) -> int:
        """Sum of six-cycle representatives mod 2**64."""
        return sum(self.sixcycle_representatives) & _U64

    def to_dict(self, with_representatives: bool = False) -> dict:
        d = {
            "p": self.p,
            "delta": self.delta,
            "pair": self.n_pair,
            "triple": self.n_triple,
            "rootpair": self.n_rootpair,
            "sixcycles": self.n_sixcycles,
            "checksum": self.checksum,
        }
        if with_representatives:
            d["representatives"] = list(self.sixcycle_representatives)
        return d


def census(m: PrimeModulus | int) -> Census:
    """Classify every vertex, scanning upward from the least unclassified one.

    Component counts come from the scan itself; delta is read independently
    from the root finder so callers can check the two against each other.
    """
    m = as_modulus(m)
    p = m.p
    seen = bytearray(p)
    counts = dict.fromkeys(ComponentKind, 0)
    reps = []
    for y in range(p):
        if seen[y]:
            continue
        comp = classify(y, m)
        counts[comp.kind] += 1
        for v in comp.members:
            seen[v] = 1
        if comp.kind is ComponentKind.SixCycle:
            reps.append(comp.representative)
    roots = m.trinomial_roots
    return Census(
        p=p,
        delta=0 if roots is None else 2,
        n_pair=counts[ComponentKind.ExceptionalPair],
        n_triple=counts[ComponentKind.ExceptionalTriple],
        n_rootpair=counts[ComponentKind.RootPair],
        sixcycle_representatives=tuple(reps),
    )
