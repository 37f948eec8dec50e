"""Brute-force ground truth for the largest set avoiding a target.

Two methods with disjoint assumptions:

``max_avoiding_subset_enum``
    include/exclude search over all of F_p, with the conflicts found by
    scanning every pair (a, b) for a + b = t or a * b = t. No graph code.

``max_avoiding_componentwise``
    splits G_t into connected components with
    :meth:`RelationGraph.component_of` and solves each exactly; the optimum
    is additive over components and optimum counts multiply.

Neither uses the orbit classification. Witnesses are the lexicographically
least maximum sets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import FeasibilityError
from .fp_arith import PrimeModulus, as_modulus
from .relation_graph import DEFAULT_SIZE_CAP, RelationGraph

SUBSET_ENUM_MAX_P = 25


class OracleMethod(enum.Enum):
    SubsetEnumeration = "SubsetEnumeration"
    ComponentwiseMIS = "ComponentwiseMIS"


@dataclass(frozen=True)
class OracleResult:
    p: int
    target: int
    max_size: int
    witness_set: tuple[int, ...]
    method: OracleMethod
    optimum_count: int | None = None

    def to_dict(self) -> dict:
        d = {
            "p": self.p,
            "target": self.target,
            "max_size": self.max_size,
            "witness": list(self.witness_set),
            "method": self.method.value,
        }
        if self.optimum_count is not None:
            d["optimum_count"] = self.optimum_count
        return d


def max_avoiding_subset_enum(m: PrimeModulus | int, target: int = 1) -> OracleResult:
    m = as_modulus(m)
    p = m.p
    if p > SUBSET_ENUM_MAX_P:
        raise FeasibilityError(
            f"subset enumeration is capped at p <= {SUBSET_ENUM_MAX_P}; use the componentwise method"
        )
    t = target % p
    allowed = [(a + a) % p != t and a * a % p != t for a in range(p)]
    # clash[a]: elements b > a that cannot sit beside a
    clash = [
        {b for b in range(a + 1, p) if (a + b) % p == t or a * b % p == t}
        for a in range(p)
    ]

    best: list[int] = []
    count = 0
    chosen: list[int] = []
    blocked = [0] * p

    def search(i: int) -> None:
        nonlocal best, count
        if len(chosen) + (p - i) < len(best):
            return
        if i == p:
            if len(chosen) > len(best):
                best, count = chosen.copy(), 1
            elif len(chosen) == len(best):
                count += 1
            return
        if allowed[i] and not blocked[i]:
            chosen.append(i)
            for b in clash[i]:
                blocked[b] += 1
            search(i + 1)
            for b in clash[i]:
                blocked[b] -= 1
            chosen.pop()
        search(i + 1)

    search(0)
    return OracleResult(p, t, len(best), tuple(best), OracleMethod.SubsetEnumeration, count)


def _component_optimum(
    vertices: frozenset[int], adj: dict[int, set[int]], looped: frozenset[int]
) -> tuple[int, int, tuple[int, ...]]:
    """(size, count, lex-least set) of maximum independent sets.

    Branches on the least vertex of each connected piece and recurses on the
    pieces left behind; on degree <= 2 graphs every piece is a path arc, so
    the memo stays polynomial.
    """

    @lru_cache(maxsize=None)
    def solve(rest: frozenset[int]) -> tuple[int, int, tuple[int, ...]]:
        size, count, chosen = 0, 1, []
        for piece in _pieces(rest, adj):
            s, c, w = solve_connected(piece)
            size, count = size + s, count * c
            chosen.extend(w)
        return size, count, tuple(sorted(chosen))

    @lru_cache(maxsize=None)
    def solve_connected(piece: frozenset[int]) -> tuple[int, int, tuple[int, ...]]:
        v = min(piece)
        out_size, out_count, out_set = solve(piece - {v})
        if v not in looped:
            s, c, w = solve(piece - {v} - adj[v])
            s += 1
            if s > out_size:
                return s, c, (v,) + w
            if s == out_size:
                return s, c + out_count, (v,) + w
        return out_size, out_count, out_set

    return solve(vertices)


def _pieces(rest: frozenset[int], adj: dict[int, set[int]]):
    left = set(rest)
    while left:
        start = min(left)
        stack, piece = [start], {start}
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v in left and v not in piece:
                    piece.add(v)
                    stack.append(v)
        left -= piece
        yield frozenset(piece)


def max_avoiding_componentwise(
    m: PrimeModulus | int, target: int = 1, component_cap: int = DEFAULT_SIZE_CAP
) -> OracleResult:
    g = RelationGraph(as_modulus(m), target)
    p = g.p
    seen = bytearray(p)
    total, count, witness = 0, 1, []
    for y in range(p):
        if seen[y]:
            continue
        comp = g.component_of(y, component_cap)
        for v in comp.vertices:
            seen[v] = 1
        adj = {v: set() for v in comp.vertices}
        for u, v in comp.edges:
            adj[u].add(v)
            adj[v].add(u)
        s, c, w = _component_optimum(frozenset(comp.vertices), adj, frozenset(comp.looped))
        total += s
        count *= c
        witness.extend(w)
    return OracleResult(p, g.target, total, tuple(sorted(witness)), OracleMethod.ComponentwiseMIS, count)


def count_optima(m: PrimeModulus | int, target: int = 1, component_cap: int = DEFAULT_SIZE_CAP) -> int:
    return max_avoiding_componentwise(m, target, component_cap).optimum_count
