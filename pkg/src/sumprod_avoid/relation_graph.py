"""The relation graph G_t on F_p.

Distinct u, v are adjacent when u + v = t or u * v = t; u carries a loop when
2u = t or u^2 = t. A set avoids t in both A+A and AA exactly when it is
independent in G_t (no looped member, no adjacent pair). The construction
only ever uses t = 1; other targets exist for the oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .exceptions import CapError, DomainError
from .fp_arith import PrimeModulus, as_modulus

DEFAULT_SIZE_CAP = 64


@dataclass(frozen=True)
class ComponentSet:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    looped: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "looped": list(self.looped),
        }


@dataclass(frozen=True)
class RelationGraph:
    modulus: PrimeModulus
    target: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", as_modulus(self.modulus))
        if not 0 <= self.target < self.modulus.p:
            raise DomainError(f"target {self.target} is not in [0, {self.modulus.p})")

    @property
    def p(self) -> int:
        return self.modulus.p

    def neighbors(self, y: int) -> set[int]:
        """Non-loop neighbours of ``y``: ``t - y`` and, for y != 0, ``t / y``.

        For t = 0 the product relation would join 0 to every vertex; those
        edges are dropped because 0 is looped there anyway, which keeps the
        relation symmetric with degree at most 2.
        """
        p, t = self.p, self.target
        out = {(t - y) % p}
        if y != 0 and t != 0:
            out.add(t * pow(y, -1, p) % p)
        out.discard(y)
        return out

    def is_looped(self, y: int) -> bool:
        p, t = self.p, self.target
        return (2 * y - t) % p == 0 or (y * y - t) % p == 0

    def component_of(self, y: int, size_cap: int = DEFAULT_SIZE_CAP) -> ComponentSet:
        """Breadth-first closure of ``y`` under :meth:`neighbors`."""
        if size_cap < 1:
            raise DomainError("size_cap must be >= 1")
        y = self.modulus.element(y)
        seen = {y}
        queue = deque([y])
        edges: set[tuple[int, int]] = set()
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                edges.add((min(u, v), max(u, v)))
                if v not in seen:
                    seen.add(v)
                    if len(seen) > size_cap:
                        raise CapError(
                            f"component of {y} exceeds {size_cap} vertices "
                            f"(p={self.p}, t={self.target})"
                        )
                    queue.append(v)
        vertices = tuple(sorted(seen))
        return ComponentSet(
            vertices=vertices,
            edges=tuple(sorted(edges)),
            looped=tuple(v for v in vertices if self.is_looped(v)),
        )

    def independent(self, s: Iterable[int]) -> bool:
        members = set(s)
        for a in members:
            if self.is_looped(a):
                return False
            if not members.isdisjoint(self.neighbors(a)):
                return False
        return True

