"""Irreducible characters of the symmetric groups (Murnaghan–Nakayama)."""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .partitions import Partition, enumerate_partitions, z_order


class SizeMismatchError(ValueError):
    pass


@lru_cache(maxsize=None)
def _mn(beta: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    # beta: strictly decreasing beta-set of the shape; mu: remaining cycle lengths
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - k
        if target < 0 or target in occupied:
            continue
        # beads jumped over give the leg length of the removed rim hook
        leg = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted(beta[:idx] + (target,) + beta[idx + 1:], reverse=True))
        value = _mn(new_beta, rest)
        total += -value if leg % 2 else value
    return total


def chi(nu: Partition, mu: Partition) -> int:
    """Character value chi_nu on the conjugacy class of cycle type mu."""
    if sum(nu) != sum(mu):
        raise SizeMismatchError(f"|{nu}| != |{mu}|")
    n = len(nu)
    beta = tuple(part + n - 1 - i for i, part in enumerate(nu))
    return _mn(beta, tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def _table(d: int) -> Tuple[Tuple[Partition, ...], Tuple[Tuple[int, ...], ...]]:
    parts = tuple(enumerate_partitions(d))
    return parts, tuple(tuple(chi(nu, mu) for mu in parts) for nu in parts)


class CharacterTable:
    """Character table of S_d; rows are irreducibles, columns classes."""

    def __init__(self, d: int):
        self.degree = d
        self.partitions, self._rows = _table(d)
        self._index = {p: i for i, p in enumerate(self.partitions)}

    def __getitem__(self, key) -> int:
        nu, mu = key
        return self._rows[self._index[Partition(nu)]][self._index[Partition(mu)]]

    @property
    def values(self) -> Dict[Tuple[Partition, Partition], int]:
        return {
            (nu, mu): self._rows[i][j]
            for i, nu in enumerate(self.partitions)
            for j, mu in enumerate(self.partitions)
        }

    def row_inner(self, nu: Partition, eta: Partition) -> Fraction:
        return sum(
            (Fraction(self[nu, mu] * self[eta, mu], z_order(mu)) for mu in self.partitions),
            Fraction(0),
        )

    def column_inner(self, mu: Partition, rho: Partition) -> int:
        return sum(self[nu, mu] * self[nu, rho] for nu in self.partitions)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["nu\\mu"] + [str(mu) for mu in self.partitions])
        for nu, row in zip(self.partitions, self._rows):
            writer.writerow([str(nu)] + list(row))
        return buf.getvalue()

    def to_text(self) -> str:
        head = [f"S_{self.degree}"] + [str(mu) for mu in self.partitions]
        rows = [[str(nu)] + [str(v) for v in row] for nu, row in zip(self.partitions, self._rows)]
        widths = [max(len(r[k]) for r in [head] + rows) for k in range(len(head))]
        lines = ["  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in [head] + rows]
        return "\n".join(lines) + "\n"


def character_table(d: int) -> CharacterTable:
    return CharacterTable(d)
