"""Counterexamples for any claimed constants (c, p0) of the 1/2 - c threshold.

Given c > 0 and p0, pick a prime p > max(p0, 5, 1/(2c)); then c*p > 1/2, so
(p - 1)/2 > (1/2 - c) * p, while the extremal set of size (p - 1)/2 avoids 1
in both A+A and AA. Every inequality here is checked on Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .exceptions import DomainError
from .extremal import EXPLICIT_CEILING, construct
from .fp_arith import PrimeModulus, next_prime_at_least
from .verify import VerificationReport, check_avoidance, verify_implicit


@dataclass(frozen=True)
class RefutationWitness:
    c: Fraction
    p0: int
    p: int
    threshold: Fraction
    set_size: int
    verification: VerificationReport

    def to_dict(self) -> dict:
        return {
            "c": f"{self.c.numerator}/{self.c.denominator}",
            "p0": self.p0,
            "p": self.p,
            "threshold": f"{self.threshold.numerator}/{self.threshold.denominator}",
            "size": self.set_size,
            "verification": self.verification.to_dict(),
        }


def least_admissible(c: Fraction, p0: int) -> int:
    """The least integer strictly above max(p0, 5, 1/(2c))."""
    return max(p0, 5, floor(1 / (2 * c))) + 1


def refute(c: Fraction | str, p0: int, samples: int = 10_000, seed: int = 0) -> RefutationWitness:
    c = Fraction(c)
    if not 0 < c <= Fraction(1, 2):
        raise DomainError(f"c must satisfy 0 < c <= 1/2, got {c}")
    if p0 < 0:
        raise DomainError(f"p0 must be non-negative, got {p0}")
    p = next_prime_at_least(least_admissible(c, p0))
    m = PrimeModulus(p)
    if p <= EXPLICIT_CEILING:
        report = check_avoidance(construct(m).elements, m)
    else:
        report = verify_implicit(m, samples, seed)

    threshold = (Fraction(1, 2) - c) * p
    size = (p - 1) // 2
    if not (p > p0 and p >= 5 and c * p > Fraction(1, 2) and size > threshold):
        raise AssertionError(f"refutation inequalities fail for c={c}, p0={p0}, p={p}")
    return RefutationWitness(c, p0, p, threshold, size, report)
