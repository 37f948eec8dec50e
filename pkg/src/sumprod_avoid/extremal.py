"""The extremal set A of size (p - 1)/2 with 1 not in A+A and 1 not in AA.

Choices per component of G_1:

* {0, 1}: take 0 (1 is looped);
* {2, 1/2, -1}: take 2 (the other two are looped);
* the root pair {u, v}, if present: take the lesser root u;
* each six-cycle with least member r: take r, 1/(1-r), 1-1/r, i.e. cycle
  positions 0, 2, 4. This is the orbit of r under the rotation subgroup
  {Id, ST, TS}, so it does not depend on where the cycle was entered.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .exceptions import SizeCeilingError
from .fp_arith import PrimeModulus, as_modulus, pow_vec

EXPLICIT_CEILING = 1 << 26
_BLOCK = 1 << 20


def cardinality_formula(m: PrimeModulus | int) -> int:
    """(p - 1)/2, evaluated as 1 + 1 + delta/2 + 3 * (p - 5 - delta)/6."""
    m = as_modulus(m)
    p = m.p
    delta = 0 if m.trinomial_roots is None else 2
    lhs = 1 + 1 + Fraction(delta, 2) + 3 * Fraction(p - 5 - delta, 6)
    if (p - 5 - delta) % 6 != 0 or lhs != Fraction(p - 1, 2):
        raise AssertionError(f"cardinality identity fails at p={p}, delta={delta}")
    return int(lhs)


def _alternating_picks(m: PrimeModulus) -> np.ndarray:
    """r, 1/(1-r), 1-1/r for every six-cycle with least member r."""
    p = m.p
    picks = []
    for lo in range(3, p, _BLOCK):
        y = np.arange(lo, min(lo + _BLOCK, p), dtype=np.int64)
        ix = pow_vec(y, p - 2, p)
        i1 = pow_vec(p + 1 - y, p - 2, p)
        generic = (y != m.minus_one) & (y != m.half) & ((y * y - y + 1) % p != 0)
        least = np.minimum.reduce([y, p + 1 - y, ix, p + 1 - i1, p + 1 - ix, i1])
        rep = generic & (least == y)
        picks += [y[rep], i1[rep], p + 1 - ix[rep]]
    return np.concatenate(picks) if picks else np.empty(0, dtype=np.int64)


def member(y: int, m: PrimeModulus | int) -> bool:
    """Decide ``y in construct(m)`` without materializing the set."""
    m = as_modulus(m)
    p = m.p
    y = m.element(y)
    if y == 0 or y == 2:
        return True
    if y == 1 or y == m.minus_one or y == m.half:
        return False
    if (y * y - y + 1) % p == 0:
        return y == m.trinomial_roots[0]
    ix = pow(y, -1, p)
    i1 = pow(1 - y, -1, p)
    r = min(y, p + 1 - y, ix, p + 1 - i1, p + 1 - ix, i1)
    return r == y or r == i1 or r == p + 1 - ix


@dataclass(frozen=True)
class ExtremalSet:
    """The constructed set, either materialized (``elements``) or implicit."""

    modulus: PrimeModulus
    elements: tuple[int, ...] | None = None
    target: int = 1

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def is_explicit(self) -> bool:
        return self.elements is not None

    @property
    def declared_size(self) -> int:
        return (self.p - 1) // 2

    def __contains__(self, y: int) -> bool:
        return member(y, self.modulus)

    def __len__(self) -> int:
        return self.declared_size

    def __iter__(self) -> Iterator[int]:
        if self.elements is None:
            raise SizeCeilingError("implicit sets cannot be iterated")
        return iter(self.elements)

    def to_text(self) -> str:
        lines = [f"p={self.p} size={self.declared_size} target={self.target}"]
        lines.extend(str(a) for a in self)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(list(self))


def construct(m: PrimeModulus | int) -> ExtremalSet:
    m = as_modulus(m)
    p = m.p
    if p > EXPLICIT_CEILING:
        raise SizeCeilingError(
            f"p={p} exceeds the explicit ceiling 2**26; use the implicit form (member)"
        )
    fixed = [0, 2]
    if m.trinomial_roots is not None:
        fixed.append(m.trinomial_roots[0])
    chosen = np.concatenate([np.array(fixed, dtype=np.int64), _alternating_picks(m)])
    chosen.sort()
    return ExtremalSet(m, tuple(chosen.tolist()))


def implicit(m: PrimeModulus | int) -> ExtremalSet:
    return ExtremalSet(as_modulus(m))
