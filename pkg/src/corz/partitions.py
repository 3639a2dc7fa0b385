"""Integer partitions: hooks, cores, regularity, and exact counting series.

Everything that counts is exact (Python integers, truncated integer power
series); the two closed-form growth estimates at the bottom are advisory
floats and are never mixed into exact results.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field


class Partition:
    """A partition of a nonnegative integer: weakly decreasing positive parts.

    Parts may be given in any order; zeros are dropped.  Instances are
    immutable by convention (``parts`` is a tuple) and hashable.
    """

    __slots__ = ("parts", "n")

    parts: tuple[int, ...]
    n: int

    def __init__(self, parts: Iterable[int] = ()):
        cleaned = sorted(parts, reverse=True)
        if cleaned and cleaned[-1] < 0:
            raise ValueError("partition parts must be nonnegative integers")
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        for p in cleaned:
            if not isinstance(p, int):
                raise ValueError("partition parts must be nonnegative integers")
        self.parts = tuple(cleaned)
        self.n = sum(cleaned)

    @classmethod
    def _from_desc(cls, parts: tuple[int, ...]) -> "Partition":
        # fast path for internal callers that already hold a clean descending tuple
        obj = object.__new__(cls)
        obj.parts = parts
        obj.n = sum(parts)
        return obj

    @classmethod
    def of(cls, lam: "PartitionLike") -> "Partition":
        return lam if isinstance(lam, Partition) else cls(lam)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)!r})"


PartitionLike = Partition | Iterable[int]


@dataclass
class HookMultiset:
    """Multiset of hook lengths of a partition, with its total cell count."""

    counts: Counter = field(default_factory=Counter)
    total: int = 0

    def __contains__(self, h: int) -> bool:
        return h in self.counts

    def product(self) -> int:
        return math.prod(h ** m for h, m in self.counts.items())

    def sorted_values(self) -> list[int]:
        """All hook lengths, with multiplicity, in decreasing order."""
        out: list[int] = []
        for h in sorted(self.counts, reverse=True):
            out.extend([h] * self.counts[h])
        return out


def conjugate(lam: PartitionLike) -> Partition:
    """Transpose of the Young diagram (column lengths become parts)."""
    parts = Partition.of(lam).parts
    if not parts:
        return Partition._from_desc(())
    conj = [0] * parts[0]
    for p in parts:
        for j in range(p):
            conj[j] += 1
    return Partition._from_desc(tuple(conj))


def hook_multiset(lam: PartitionLike) -> HookMultiset:
    """Multiset of hook lengths h(k, j) = (lam_k - k) + (lam'_j - j) + 1."""
    lam = Partition.of(lam)
    parts = lam.parts
    conj = conjugate(lam).parts
    counts: Counter = Counter()
    for k, row in enumerate(parts, start=1):
        base = row - k
        for j in range(1, row + 1):
            counts[base + conj[j - 1] - j + 1] += 1
    return HookMultiset(counts, lam.n)


def _first_column_hooks(parts: tuple[int, ...] | list[int]) -> list[int]:
    # beta numbers lam_i - i + s for the s-row diagram, decreasing, all >= 1
    s = len(parts)
    return [p + s - 1 - i for i, p in enumerate(parts)]


def _is_core_parts(parts: tuple[int, ...] | list[int], ell: int) -> bool:
    # First-column hooks must be closed under subtracting ell: a beta number
    # b >= ell with b - ell missing exposes a hook of length ell, so this is
    # the no-hook-divisible-by-ell test.  Checked against the hook-multiset
    # definition exhaustively in tests.
    s = len(parts)
    beta = [p + s - 1 - i for i, p in enumerate(parts)]
    bs = set(beta)
    for b in beta:
        if b >= ell and b - ell not in bs:
            return False
    return True


def is_core(lam: PartitionLike, ell: int) -> bool:
    """True iff no hook length of lam is divisible by ell."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    return _is_core_parts(Partition.of(lam).parts, ell)


def is_regular(lam: PartitionLike, a: int) -> bool:
    """True iff no part of lam is divisible by a."""
    if a < 2:
        raise ValueError("a must be at least 2")
    return not any(p % a == 0 for p in Partition.of(lam).parts)


# ---------------------------------------------------------------------------
# exact counting

_P_CACHE: list[int] = [1]


def count_p(n: int) -> int:
    """Number of partitions of n, by the pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_P_CACHE) <= n:
        m = len(_P_CACHE)
        total = 0
        k = 1
        while True:
            g = k * (3 * k - 1) // 2
            if g > m:
                break
            sgn = 1 if k % 2 else -1
            total += sgn * _P_CACHE[m - g]
            g = k * (3 * k + 1) // 2
            if g <= m:
                total += sgn * _P_CACHE[m - g]
            k += 1
        _P_CACHE.append(total)
    return _P_CACHE[n]


def _divide_one_minus(coeffs: list[int], k: int) -> None:
    # multiply by 1/(1 - q^k), truncated
    for m in range(k, len(coeffs)):
        coeffs[m] += coeffs[m - k]


def _multiply_one_minus(coeffs: list[int], k: int) -> None:
    # multiply by (1 - q^k), truncated
    for m in range(len(coeffs) - 1, k - 1, -1):
        coeffs[m] -= coeffs[m - k]


def _regular_series(a: int, upto: int) -> list[int]:
    # coefficients of prod (1 - q^{a k}) / (1 - q^k) through q^upto
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for k in range(1, upto + 1):
        _divide_one_minus(coeffs, k)
    for k in range(a, upto + 1, a):
        _multiply_one_minus(coeffs, k)
    return coeffs


_REGULAR_CACHE: dict[int, list[int]] = {}


def count_p_regular(n: int, a: int) -> int:
    """Number of partitions of n with no part divisible by a.

    Coefficient of q^n in prod_{k>=1} (1 - q^{ak})/(1 - q^k), computed with
    truncated exact-integer power series.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if a < 2:
        raise ValueError("a must be at least 2")
    cached = _REGULAR_CACHE.get(a)
    if cached is None or len(cached) <= n:
        cached = _regular_series(a, max(n, 2 * len(cached or []) , 16))
        _REGULAR_CACHE[a] = cached
    return cached[n]


def _iter_partition_buffers(n: int) -> Iterator[list[int]]:
    # Reverse-lexicographic stream of partitions of n as a reused mutable
    # list; callers must copy anything they keep.
    if n == 0:
        yield []
        return
    a = [n]
    yield a
    while True:
        i = len(a) - 1
        while i >= 0 and a[i] == 1:
            i -= 1
        if i < 0:
            return
        v = a[i] - 1
        rem = len(a) - i
        a[i] = v
        del a[i + 1 :]
        while rem > 0:
            c = v if v < rem else rem
            a.append(c)
            rem -= c
        yield a


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order, largest first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for buf in _iter_partition_buffers(n):
        yield Partition._from_desc(tuple(buf))


# ---------------------------------------------------------------------------
# advisory growth estimates (floats; never used in exact counts)


def hr_estimate(n: int) -> float:
    """Leading-order partition growth exp(pi sqrt(2n/3)) / (4 n sqrt(3))."""
    if n < 1:
        raise ValueError("n must be positive")
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


def hagis_estimate(n: int, a: int) -> float:
    """Main-term size of count_p_regular(n, a) for large n.

    C_a (24 n - 1 + a)^(-3/4) exp(C sqrt((a-1)/a (n + (a-1)/24))) with
    C = pi sqrt(2/3) and C_a = sqrt(12) a^(-3/4) (a-1)^(1/4).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if a < 2:
        raise ValueError("a must be at least 2")
    c = math.pi * math.sqrt(2.0 / 3.0)
    c_a = math.sqrt(12.0) * a ** -0.75 * (a - 1) ** 0.25
    return (
        c_a
        * (24 * n - 1 + a) ** -0.75
        * math.exp(c * math.sqrt((a - 1) / a * (n + (a - 1) / 24)))
    )
