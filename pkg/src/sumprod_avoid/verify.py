"""Direct checks of sumsets, productsets and the avoidance property."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from .extremal import cardinality_formula, member
from .fp_arith import PrimeModulus, as_modulus, pow_vec

# Dense indicators over [0, p) are used up to this p; beyond it sets are
# Python sets built pairwise.
DENSE_LIMIT = 1 << 26
EXHAUSTIVE_MAX_SIZE = 1 << 16
_CHUNK = 1 << 22  # pair evaluations per numpy block


class Method(enum.Enum):
    ExhaustivePairs = "ExhaustivePairs"
    NeighborExclusion = "NeighborExclusion"
    SampledNeighborExclusion = "SampledNeighborExclusion"


@dataclass(frozen=True)
class Witness:
    relation: str  # "sum", "product" or "fixed"
    pair: tuple[int, int]

    def to_dict(self) -> dict:
        return {"relation": self.relation, "pair": list(self.pair)}


@dataclass(frozen=True)
class VerificationReport:
    p: int
    set_size: int
    sum_avoids_target: bool
    product_avoids_target: bool
    size_matches_formula: bool
    method: Method
    target: int = 1
    samples: int | None = None
    witnesses: tuple[Witness, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.sum_avoids_target and self.product_avoids_target and self.size_matches_formula

    def to_dict(self) -> dict:
        d = {
            "p": self.p,
            "size": self.set_size,
            "target": self.target,
            "sum_ok": self.sum_avoids_target,
            "product_ok": self.product_avoids_target,
            "size_ok": self.size_matches_formula,
            "method": self.method.value,
        }
        if self.samples is not None:
            d["samples"] = self.samples
        if self.witnesses:
            d["witnesses"] = [w.to_dict() for w in self.witnesses]
        return d


def _pairwise_indicator(arr: np.ndarray, p: int, op) -> np.ndarray:
    hit = np.zeros(p, dtype=bool)
    if arr.size == 0:
        return hit
    arr = np.sort(arr)
    rows = max(1, _CHUNK // arr.size)
    for i in range(0, arr.size, rows):
        # pairs (a_i, a_j) with j >= i suffice: both operations commute
        block = op.outer(arr[i : i + rows], arr[i:])
        if op is np.add:
            block[block >= p] -= p
        else:
            block %= p
        hit[block] = True
    return hit


def _pairwise_set(values: list[int], p: int, op) -> set[int]:
    return {op(a, b) % p for i, a in enumerate(values) for b in values[i:]}


def sumset_indicator(a: Iterable[int], m: PrimeModulus | int) -> np.ndarray:
    """Boolean indicator of A+A over [0, p) (requires p <= 2**26)."""
    p = m.p if isinstance(m, PrimeModulus) else m
    return _pairwise_indicator(np.fromiter(set(a), dtype=np.int64), p, np.add)


def productset_indicator(a: Iterable[int], m: PrimeModulus | int) -> np.ndarray:
    p = m.p if isinstance(m, PrimeModulus) else m
    return _pairwise_indicator(np.fromiter(set(a), dtype=np.int64), p, np.multiply)


def sumset(a: Iterable[int], m: PrimeModulus | int) -> set[int]:
    p = m.p if isinstance(m, PrimeModulus) else m
    if p <= DENSE_LIMIT:
        return set(np.flatnonzero(sumset_indicator(a, p)).tolist())
    return _pairwise_set(sorted(set(a)), p, int.__add__)


def productset(a: Iterable[int], m: PrimeModulus | int) -> set[int]:
    p = m.p if isinstance(m, PrimeModulus) else m
    if p <= DENSE_LIMIT:
        return set(np.flatnonzero(productset_indicator(a, p)).tolist())
    return _pairwise_set(sorted(set(a)), p, int.__mul__)


def _least_sum_witness(members: list[int], s: set[int], t: int, p: int):
    for x in members:
        y = (t - x) % p
        if y >= x and y in s:
            return (x, y)
    return None


def _least_product_witness(members: list[int], s: set[int], t: int, p: int):
    for x in members:
        if x == 0:
            if t == 0:
                return (0, 0)
            continue
        if t == 0:
            continue
        y = t * pow(x, -1, p) % p
        if y >= x and y in s:
            return (x, y)
    return None


def _least_witnesses_dense(members: list[int], t: int, p: int):
    arr = np.asarray(members, dtype=np.int64)
    ind = np.zeros(p, dtype=bool)
    ind[arr] = True
    partner = (t - arr) % p
    hit = arr[ind[partner] & (partner >= arr)]
    sum_w = (int(hit[0]), (t - int(hit[0])) % p) if hit.size else None
    if t == 0:
        prod_w = (0, 0) if ind[0] else None
    else:
        nz = arr[arr != 0]
        partner = t * pow_vec(nz, p - 2, p) % p
        hit = nz[ind[partner] & (partner >= nz)]
        prod_w = (int(hit[0]), t * pow(int(hit[0]), -1, p) % p) if hit.size else None
    return sum_w, prod_w


def check_avoidance(
    a: Iterable[int],
    m: PrimeModulus | int,
    target: int = 1,
    method: Method | None = None,
) -> VerificationReport:
    """Check ``target not in A+A`` and ``target not in AA``.

    ``ExhaustivePairs`` computes the full sumset and productset; it is chosen
    automatically when ``|A| <= 2**16`` and p allows a dense indicator.
    ``NeighborExclusion`` checks, for each x in A, that ``target - x`` and
    ``target / x`` are absent, which is exact and O(|A| log p). Witnesses are
    the lexicographically least violating pairs (x <= y) of each kind.
    """
    m = as_modulus(m)
    p = m.p
    members = sorted(set(a))
    s = set(members)
    if method is None:
        exhaustive = len(members) <= EXHAUSTIVE_MAX_SIZE and p <= DENSE_LIMIT
        method = Method.ExhaustivePairs if exhaustive else Method.NeighborExclusion

    if p <= DENSE_LIMIT and len(members) > 64:
        sum_w, prod_w = _least_witnesses_dense(members, target, p)
    else:
        sum_w = _least_sum_witness(members, s, target, p)
        prod_w = _least_product_witness(members, s, target, p)
    if method is Method.ExhaustivePairs:
        if p <= DENSE_LIMIT:
            sum_ok = not sumset_indicator(members, p)[target]
            prod_ok = not productset_indicator(members, p)[target]
        else:
            sum_ok = target not in sumset(members, p)
            prod_ok = target not in productset(members, p)
    elif method is Method.NeighborExclusion:
        sum_ok, prod_ok = sum_w is None, prod_w is None
    else:
        raise ValueError(f"{method} is not an explicit-set method")

    witnesses = []
    if sum_w is not None:
        witnesses.append(Witness("sum", sum_w))
    if prod_w is not None:
        witnesses.append(Witness("product", prod_w))
    return VerificationReport(
        p=p,
        set_size=len(members),
        sum_avoids_target=sum_ok,
        product_avoids_target=prod_ok,
        size_matches_formula=len(members) == (p - 1) // 2,
        method=method,
        target=target,
        witnesses=tuple(witnesses),
    )


class Coverage(NamedTuple):
    covers: bool
    missing: int | None


def check_sumset_covers(a: Iterable[int], m: PrimeModulus | int) -> Coverage:
    """Whether A+A is all of F_p; otherwise the least missing residue."""
    p = m.p if isinstance(m, PrimeModulus) else m
    hit = sumset_indicator(a, p)
    missing = np.flatnonzero(~hit)
    if missing.size == 0:
        return Coverage(True, None)
    return Coverage(False, int(missing[0]))


def verify_implicit(m: PrimeModulus | int, samples: int, seed: int) -> VerificationReport:
    """Sampled neighbour-exclusion check of the implicit extremal set.

    Samples are drawn with ``numpy.random.default_rng(seed)`` (PCG64) as
    ``integers(0, p, size=samples)``, so a report is reproducible from
    ``(p, samples, seed)``.
    """
    m = as_modulus(m)
    p = m.p
    witnesses = []
    for y, expect in ((0, True), (2, True), (1, False), (m.minus_one, False), (m.half, False)):
        if member(y, m) is not expect:
            witnesses.append(Witness("fixed", (y, y)))
    sum_ok = prod_ok = True
    if samples > 0:
        draws = np.random.default_rng(seed).integers(0, p, size=samples, dtype=np.uint64)
        for y in map(int, draws):
            if not member(y, m):
                continue
            z = (1 - y) % p
            if member(z, m):
                sum_ok = False
                witnesses.append(Witness("sum", (min(y, z), max(y, z))))
            if y:
                z = pow(y, -1, p)
                if member(z, m):
                    prod_ok = False
                    witnesses.append(Witness("product", (min(y, z), max(y, z))))
    fixed_ok = not any(w.relation == "fixed" for w in witnesses)
    size = (p - 1) // 2
    return VerificationReport(
        p=p,
        set_size=size,
        sum_avoids_target=sum_ok and fixed_ok,
        product_avoids_target=prod_ok and fixed_ok,
        size_matches_formula=cardinality_formula(m) == size,
        method=Method.SampledNeighborExclusion,
        samples=samples,
        witnesses=tuple(sorted(set(witnesses), key=lambda w: (w.pair, w.relation))),
    )
