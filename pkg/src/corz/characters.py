"""Exact symmetric-group characters by border-strip removal.

Strips are manipulated through first-column hook lengths (beta numbers):
removing a strip of length k replaces a beta number b by b - k when b - k is
nonnegative and not already a beta number, and the strip height is the number
of beta numbers strictly between b - k and b.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .partitions import Partition, PartitionLike, hook_multiset


@dataclass(frozen=True)
class BorderStrip:
    """One removable rim strip: its length, height, and what remains."""

    length: int
    height: int
    remainder: Partition


def _beta_ascending(lam: Partition) -> tuple[int, ...]:
    s = len(lam.parts)
    return tuple(p + s - 1 - i for i, p in enumerate(lam.parts))[::-1]


def _partition_key(beta: tuple[int, ...]) -> tuple[int, ...]:
    # parts of the partition a beta tuple represents, zeros dropped
    out = []
    for i in range(len(beta) - 1, -1, -1):
        p = beta[i] - i
        if p > 0:
            out.append(p)
    return tuple(out)


def _removals(beta: tuple[int, ...], k: int) -> Iterator[tuple[tuple[int, ...], int]]:
    # (new beta tuple, strip height) for every length-k strip removal
    bset = set(beta)
    for pos, b in enumerate(beta):
        if b < k or (b - k) in bset:
            continue
        j = bisect_left(beta, b - k)
        new_beta = beta[:j] + (b - k,) + beta[j:pos] + beta[pos + 1 :]
        yield new_beta, pos - j


def border_strips(lam: PartitionLike, length: int) -> list[BorderStrip]:
    """All removable border strips of the given length, longest-beta first."""
    lam = Partition.of(lam)
    if length < 1:
        raise ValueError("strip length must be positive")
    beta = _beta_ascending(lam)
    out = []
    for new_beta, height in _removals(beta, length):
        out.append(
            BorderStrip(length, height, Partition._from_desc(_partition_key(new_beta)))
        )
    out.reverse()
    return out


class ColumnEvaluator:
    """Character evaluations against one fixed cycle type.

    Strips are removed for the parts of mu in the order given (a Partition
    supplies them largest first); the value is independent of that order.
    Results are memoized on (remaining partition, parts consumed), so one
    evaluator amortizes work across many row labels of the same column.
    Evaluators share nothing, which keeps per-column work independent.
    """

    def __init__(self, mu: PartitionLike | Sequence[int]):
        parts = tuple(mu.parts) if isinstance(mu, Partition) else tuple(mu)
        if any(p < 1 for p in parts):
            raise ValueError("cycle type parts must be positive")
        self.parts = parts
        self.size = sum(parts)
        self._memo: dict[tuple[tuple[int, ...], int], int] = {}

    def value(self, lam: PartitionLike) -> int:
        lam = Partition.of(lam)
        if lam.n != self.size:
            raise ValueError(
                f"size mismatch: partition of {lam.n} against cycle type of {self.size}"
            )
        return self._eval(_beta_ascending(lam), 0)

    def _eval(self, beta: tuple[int, ...], idx: int) -> int:
        if idx == len(self.parts):
            return 1
        key = (_partition_key(beta), idx)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        total = 0
        for new_beta, height in _removals(beta, self.parts[idx]):
            term = self._eval(new_beta, idx + 1)
            total += -term if height % 2 else term
        self._memo[key] = total
        return total


def mn_character(lam: PartitionLike, mu: PartitionLike) -> int:
    """Exact character value chi_lam(mu) for partitions of the same size."""
    return ColumnEvaluator(Partition.of(mu)).value(lam)


def quick_vanish(lam: PartitionLike, mu: PartitionLike) -> bool:
    """True when some part of mu is not a hook length of lam, which forces
    chi_lam(mu) = 0.  False promises nothing."""
    lam = Partition.of(lam)
    mu = Partition.of(mu)
    hooks = hook_multiset(lam)
    return not set(mu.parts) <= set(hooks.counts)


def dimension(lam: PartitionLike) -> int:
    """Degree of the irreducible labeled by lam: n! over the hook product."""
    lam = Partition.of(lam)
    return math.factorial(lam.n) // hook_multiset(lam).product()


def centralizer_order(mu: PartitionLike) -> int:
    """Order of the centralizer of a permutation of cycle type mu:
    prod_i i^{m_i} m_i! over part multiplicities m_i."""
    mu = Partition.of(mu)
    mult: dict[int, int] = {}
    for p in mu.parts:
        mult[p] = mult.get(p, 0) + 1
    out = 1
    for i, m in mult.items():
        out *= i**m * math.factorial(m)
    return out
