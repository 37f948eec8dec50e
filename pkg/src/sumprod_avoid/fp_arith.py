"""Exact arithmetic in F_p for odd primes 5 <= p < 2**62.

Elements are plain Python ints in ``range(p)``. The modulus is carried by a
:class:`PrimeModulus`, which certifies primality once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exceptions import BoundError, DomainError

MODULUS_CEILING = 1 << 62

# Deterministic Miller-Rabin for every n < 3.3 * 10**24, which covers 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Return True iff ``n`` is prime (exact for all 64-bit inputs)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_at_least(n: int) -> int:
    """Return the least prime ``>= n``.

    Raises :class:`BoundError` if the search leaves the 62-bit range.
    """
    if n <= 2:
        return 2
    c = n | 1
    while c < MODULUS_CEILING:
        if is_prime(c):
            return c
        c += 2
    raise BoundError(f"no prime >= {n} below 2**62")


@dataclass(frozen=True)
class PrimeModulus:
    """A certified odd prime ``p >= 5`` with the special field constants.

    >>> m = PrimeModulus(11)
    >>> m.half, m.minus_one, m.residue_class_mod_3
    (6, 10, 2)
    """

    p: int
    residue_class_mod_3: int = field(init=False)
    half: int = field(init=False)
    minus_one: int = field(init=False)
    two: int = field(init=False, default=2)

    def __post_init__(self) -> None:
        p = self.p
        if isinstance(p, bool) or not isinstance(p, int):
            raise DomainError(f"modulus must be an integer, got {p!r}")
        if p >= MODULUS_CEILING:
            raise DomainError(f"p must be below 2**62, got {p}")
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if p < 5:
            raise DomainError(f"p must be >= 5, got {p}")
        object.__setattr__(self, "residue_class_mod_3", p % 3)
        object.__setattr__(self, "half", (p + 1) // 2)
        object.__setattr__(self, "minus_one", p - 1)

    @cached_property
    def trinomial_roots(self) -> tuple[int, int] | None:
        return roots_of_unit_trinomial(self)

    @property
    def special(self) -> frozenset[int]:
        """The five values 0, 1, -1, 1/2, 2."""
        return frozenset((0, 1, self.minus_one, self.half, 2))

    def element(self, value: int) -> int:
        """Validate ``value`` as an element of F_p."""
        if not 0 <= value < self.p:
            raise DomainError(f"{value} is not in [0, {self.p})")
        return value


def as_modulus(m: PrimeModulus | int) -> PrimeModulus:
    return m if isinstance(m, PrimeModulus) else PrimeModulus(m)


def inv(a: int, m: PrimeModulus | int) -> int:
    p = m.p if isinstance(m, PrimeModulus) else m
    a %= p
    if a == 0:
        raise DomainError("0 has no multiplicative inverse")
    return pow(a, -1, p)


def pow_vec(base: np.ndarray, e: int, p: int) -> np.ndarray:
    """Elementwise ``base**e mod p`` on int64 arrays; requires p < 2**31."""
    out = np.ones_like(base)
    b = base.copy()
    while e:
        if e & 1:
            out = out * b % p
        b = b * b % p
        e >>= 1
    return out


def sqrt_mod(a: int, m: PrimeModulus | int) -> tuple[int, int] | None:
    """Square roots of ``a`` mod p via Tonelli-Shanks.

    Returns ``(r, p - r)`` with ``r <= p - r`` for a nonzero residue,
    ``(0, 0)`` for ``a == 0`` and ``None`` for a non-residue.
    """
    p = m.p if isinstance(m, PrimeModulus) else m
    a %= p
    if a == 0:
        return (0, 0)
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
    else:
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        c = pow(z, q, p)
        r = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (s - i - 1), p)
            r = r * b % p
            c = b * b % p
            t = t * c % p
            s = i
    return (min(r, p - r), max(r, p - r))


def roots_of_unit_trinomial(m: PrimeModulus | int) -> tuple[int, int] | None:
    """The roots ``u < v`` of X^2 - X + 1 in F_p, or None.

    Computed as (1 +- sqrt(-3)) / 2; the roots satisfy u*v = u + v = 1.
    """
    m = as_modulus(m)
    p = m.p
    sq = sqrt_mod(p - 3, m)
    if sq is None:
        return None
    r = sq[0]
    u = (1 + r) * m.half % p
    v = (1 - r) * m.half % p
    return (min(u, v), max(u, v))
