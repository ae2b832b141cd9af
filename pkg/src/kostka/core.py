"""Partitions, dominance order, Kostka numbers and integral points of the Kostka cone.

Partitions are plain tuples of ints with trailing zeros stripped.  The ambient
length ``r`` only matters for cone points, so it lives on :class:`ConePoint`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, zip_longest
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import ResourceLimitError, ValidationError

Partition = tuple[int, ...]

DEFAULT_KOSTKA_STATE_CAP = 10**7


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple without trailing zeros."""
    p = tuple(int(x) for x in parts)
    for x in p:
        if x < 0:
            raise ValidationError(f"negative part in {p}")
    for x, y in zip(p, p[1:]):
        if x < y:
            raise ValidationError(f"parts are not non-increasing: {p}")
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def pad(p: Sequence[int], r: int) -> tuple[int, ...]:
    if len(p) > r:
        raise ValidationError(f"{tuple(p)} has more than {r} parts")
    return tuple(p) + (0,) * (r - len(p))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``lam`` and ``mu`` have equal size and every prefix sum of
    ``lam`` is at least the matching prefix sum of ``mu``."""
    if sum(lam) != sum(mu):
        return False
    pl = accumulate(lam)
    pm = accumulate(mu)
    for x, y in zip_longest(pl, pm, fillvalue=None):
        # once one side runs out its prefix sum stays at the common total
        if x is None or y is None:
            break
        if x < y:
            return False
    return True


def conjugate(p: Sequence[int]) -> Partition:
    """Column heights of the Young diagram of ``p``."""
    p = as_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def partitions(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest: int, cap: int, slots: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        if slots == 0:
            return
        for x in range(min(rest, cap), 0, -1):
            if x * slots < rest:
                break
            yield from rec(rest - x, x, slots - 1, prefix + (x,))

    yield from rec(n, max_part, max_len, ())


def _horizontal_strips(lam: Partition, k: int) -> Iterator[Partition]:
    """All ``nu`` with ``lam / nu`` a horizontal strip of ``k`` boxes."""
    n = len(lam)

    def rec(i: int, left: int, prefix: tuple[int, ...]):
        if i == n:
            if left == 0:
                yield as_partition(prefix)
            return
        lower = lam[i + 1] if i + 1 < n else 0
        for take in range(min(left, lam[i] - lower), -1, -1):
            yield from rec(i + 1, left - take, prefix + (lam[i] - take,))

    yield from rec(0, k, ())


def kostka_number(lam: Sequence[int], mu: Sequence[int], state_cap: int = DEFAULT_KOSTKA_STATE_CAP) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``.

    The largest entry occupies a horizontal strip; peeling it off recursively
    gives a memoized recursion over (shape, content prefix) states.  Raises
    :class:`ResourceLimitError` once more than ``state_cap`` states are seen.
    """
    lam = as_partition(lam)
    content = tuple(int(x) for x in mu)
    if any(x < 0 for x in content):
        raise ValidationError(f"negative content in {content}")
    if sum(lam) != sum(content):
        return 0
    memo: dict[tuple[Partition, int], int] = {}

    def count(shape: Partition, m: int) -> int:
        if m == 0:
            return 1 if not shape else 0
        key = (shape, m)
        if key in memo:
            return memo[key]
        if len(memo) >= state_cap:
            raise ResourceLimitError(f"kostka_number exceeded {state_cap} states")
        if len(shape) > m:
            # column strictness: a shape with more rows than letters is unfillable
            memo[key] = 0
            return 0
        total = sum(count(nu, m - 1) for nu in _horizontal_strips(shape, content[m - 1]))
        memo[key] = total
        return total

    return count(lam, len(content))


@dataclass(frozen=True)
class ConePoint:
    """An integral point ``(lam, mu)`` of the ``r``-Kostka cone."""

    lam: Partition
    mu: Partition
    r: int

    def __post_init__(self) -> None:
        lam = as_partition(self.lam)
        mu = as_partition(self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if self.r < 1:
            raise ValidationError(f"ambient length must be positive, got {self.r}")
        if len(lam) > self.r or len(mu) > self.r:
            raise ValidationError(f"partitions {lam}, {mu} do not fit in r={self.r}")
        if sum(lam) != sum(mu):
            raise ValidationError(f"unequal sizes {sum(lam)} != {sum(mu)}")
        if not dominates(lam, mu):
            raise ValidationError(f"{lam} does not dominate {mu}")

    @property
    def size(self) -> int:
        return sum(self.lam)

    def is_zero(self) -> bool:
        return not self.lam

    def padded(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return pad(self.lam, self.r), pad(self.mu, self.r)

    def vector(self) -> tuple[int, ...]:
        """Coordinates ``(lam_1..lam_r, mu_1..mu_r)`` in R^{2r}."""
        lam, mu = self.padded()
        return lam + mu

    def content_gcd(self) -> int:
        g = 0
        for x in self.lam + self.mu:
            g = gcd(g, x)
        return g

    def to_json(self) -> dict:
        return {"r": self.r, "lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, obj: dict) -> "ConePoint":
        try:
            return cls(tuple(obj["lambda"]), tuple(obj["mu"]), int(obj["r"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"malformed cone point JSON: {obj!r}") from exc


def embed(p: ConePoint, r2: int) -> ConePoint:
    """Zero-pad ``p`` into the ``r2``-Kostka cone."""
    if r2 < p.r:
        raise ValidationError(f"cannot embed r={p.r} point into r={r2}")
    return ConePoint(p.lam, p.mu, r2)


def cone_points(r: int, n: int) -> Iterator[ConePoint]:
    """All integral cone points of size ``n`` in the ``r``-Kostka cone."""
    parts = list(partitions(n, max_len=r))
    for lam in parts:
        for mu in parts:
            if dominates(lam, mu):
                yield ConePoint(lam, mu, r)
