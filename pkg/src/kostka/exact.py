"""Exact integer rank by fraction-free elimination."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


class EchelonBasis:
    """Integer row-echelon basis grown one row at a time.

    Rows are eliminated by cross-multiplication (no division) against the
    stored pivots and then scaled down by their content, so entries stay
    small and everything is exact.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: list[tuple[int, list[int]]] | None = None):
        self.rows = rows if rows is not None else []

    def __len__(self) -> int:
        return len(self.rows)

    def copy(self) -> "EchelonBasis":
        return EchelonBasis(list(self.rows))

    def reduce(self, raw: Sequence[int]) -> list[int]:
        v = list(raw)
        for piv, b in self.rows:
            x = v[piv]
            if x:
                y = b[piv]
                v = [y * s - x * t for s, t in zip(v, b)]
        return v

    def add(self, raw: Sequence[int]) -> bool:
        """Insert ``raw``; return False if it was already in the span."""
        v = self.reduce(raw)
        for j, x in enumerate(v):
            if x:
                self.rows.append((j, _primitive(v)))
                return True
        return False


def integer_rank(rows: Iterable[Sequence[int]], limit: int | None = None) -> int:
    """Rank over Q of integer ``rows``.

    With ``limit`` set, returns as soon as the rank is known to exceed it; the
    return value is then ``limit + 1``.
    """
    basis = EchelonBasis()
    for raw in rows:
        if basis.add(raw) and limit is not None and len(basis) > limit:
            break
    return len(basis)
