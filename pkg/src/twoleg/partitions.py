"""Integer partitions and their statistics."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator, List, Tuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Ordering is plain tuple (lexicographic) ordering; iteration over sets of
    partitions in this package is descending-lexicographic.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from unsorted parts, dropping zeros."""
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"2,1"``; the empty string or ``"0"`` gives the empty partition."""
        text = text.strip().strip("()[]")
        if not text or text in ("0", "-", "empty"):
            return cls()
        return cls(int(x) for x in text.split(","))

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def contains(self, other: "Partition") -> bool:
        """True when the Young diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def to_json(self) -> List[int]:
        return list(self)


EMPTY = Partition()


@lru_cache(maxsize=None)
def _enumerate(d: int, largest: int) -> Tuple[Partition, ...]:
    if d == 0:
        return (EMPTY,)
    out = []
    for first in range(min(d, largest), 0, -1):
        for rest in _enumerate(d - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def enumerate_partitions(d: int) -> List[Partition]:
    """All partitions of ``d`` in descending lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return list(_enumerate(d, d))


def partitions_up_to(n: int) -> List[Partition]:
    return [p for d in range(n + 1) for p in enumerate_partitions(d)]


def z_order(mu: Partition) -> int:
    """Centralizer order: prod over j of m_j! * j^m_j."""
    z = 1
    for j, m in Counter(mu).items():
        z *= factorial(m) * j ** m
    return z


def kappa(mu: Partition) -> int:
    return sum(m * (m - 2 * i + 1) for i, m in enumerate(mu, start=1))


def n_stat(mu: Partition) -> int:
    """Sum of (i-1)*mu_i."""
    return sum(i * m for i, m in enumerate(mu))


def conjugate(mu: Partition) -> Partition:
    if not mu:
        return EMPTY
    return Partition(sum(1 for m in mu if m >= i) for i in range(1, mu[0] + 1))


def hooks(mu: Partition) -> List[int]:
    """Hook lengths of all cells, row by row."""
    conj = conjugate(mu)
    return [mu[i] - j + conj[j] - i - 1 for i, j in Partition(mu).cells()]


def union(alpha: Partition, beta: Partition) -> Partition:
    return Partition(sorted(tuple(alpha) + tuple(beta), reverse=True))


def sign(mu: Partition) -> int:
    """Sign of a permutation of cycle type ``mu``."""
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def splittings(mu: Partition) -> List[Tuple[Partition, Partition]]:
    """All ordered pairs (a, b) of partitions with a ∪ b = mu, each once."""
    counts = sorted(Counter(mu).items(), reverse=True)
    out = []
    for picks in product(*(range(m + 1) for _, m in counts)):
        a = [part for (part, _), k in zip(counts, picks) for _ in range(k)]
        b = [part for (part, m), k in zip(counts, picks) for _ in range(m - k)]
        out.append((Partition(a), Partition(b)))
    return out


def sub_multisets(mu: Partition) -> List[Partition]:
    return [a for a, _ in splittings(mu)]


def subdiagrams(mu: Partition) -> List[Partition]:
    """All partitions whose Young diagram is contained in ``mu``."""
    out = []

    def rec(i: int, bound: int, acc: list):
        out.append(Partition(acc))
        if i >= len(mu):
            return
        for r in range(min(bound, mu[i]), 0, -1):
            rec(i + 1, r, acc + [r])

    rec(0, mu[0] if mu else 0, [])
    return sorted(set(out), key=lambda p: (p.size, p), reverse=False)


def intersection(alpha: Partition, beta: Partition) -> Partition:
    return Partition.from_parts(min(a, b) for a, b in zip(alpha, beta))
